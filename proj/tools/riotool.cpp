// Command-line front end: encoding, decoding, verification sweeps, the
// permutation builders, and the sum-rate report.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rio/oracle.hpp"
#include "rio/rates.hpp"
#include "rio/wom.hpp"

using nlohmann::json;

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

bool g_json = false;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

json report_to_json(const rio::VerificationReport& rep) {
    json failures = json::array();
    for (const auto& f : rep.failures) {
        json syn = json::array();
        for (const auto& s : f.syndromes) syn.push_back(s.str());
        failures.push_back({{"syndromes", syn}, {"stage", f.stage}, {"detail", f.detail}});
    }
    return json{{"total", rep.instances_checked},
                {"passed", rep.instances_checked - rep.failures.size()},
                {"failed", rep.failures.size()},
                {"failures", failures},
                {"elapsed_seconds", rep.elapsed.count()}};
}

json wom_report_to_json(const rio::WomReport& rep) {
    json out{{"guaranteed", rep.guaranteed},
             {"states_explored", rep.states_explored},
             {"safe_states_per_round", rep.safe_states_per_round}};
    if (rep.counterexample) {
        out["counterexample"] = {{"state", rep.counterexample->state.str()},
                                 {"depth", rep.counterexample->depth},
                                 {"datum", rep.counterexample->datum.str()}};
    }
    return out;
}

void emit(const json& out) { std::cout << out.dump(2) << "\n"; }

int run_matrix_show(int r) {
    rio::ParityCheckMatrix H(r);
    if (g_json) {
        json rows = json::array();
        for (int i = 1; i <= H.r(); ++i) rows.push_back(H.row(i));
        emit(json{{"r", H.r()}, {"n", H.n()}, {"rows", rows}});
    } else {
        std::cout << "parity-check matrix, r=" << H.r() << ", n=" << H.n() << "\n";
        for (int i = 1; i <= H.r(); ++i) std::cout << "  " << H.row(i) << "\n";
    }
    return 0;
}

int run_wom_encode(int r, const std::string& data, const std::string& state) {
    rio::ParityCheckMatrix H(r);
    const auto d = rio::Syndrome::parse(data);
    const auto c = rio::BitVector::parse(state);
    const auto next = rio::wom_encode(H, d, c);
    if (g_json)
        emit(json{{"state", next.str()}, {"datum", d.str()}, {"previous", c.str()}});
    else
        std::cout << next.str() << "\n";
    return 0;
}

int run_wom_decode(int r, const std::string& state) {
    rio::ParityCheckMatrix H(r);
    const auto d = rio::wom_decode(H, rio::BitVector::parse(state));
    if (g_json)
        emit(json{{"datum", d.str()}});
    else
        std::cout << d.str() << "\n";
    return 0;
}

int run_wom_verify(int r, int writes) {
    rio::ParityCheckMatrix H(r);
    const auto rep = rio::verify_write_guarantee(H, writes);
    if (g_json) {
        emit(wom_report_to_json(rep));
    } else {
        std::cout << "write guarantee t=" << writes << " for r=" << r << ": "
                  << (rep.guaranteed ? "holds" : "fails") << "\n";
        std::cout << "states explored: " << rep.states_explored << "\n";
        for (std::size_t k = 0; k < rep.safe_states_per_round.size(); ++k)
            std::cout << "  safe states with " << k << " writes left: "
                      << rep.safe_states_per_round[k] << "\n";
        if (rep.counterexample)
            std::cout << "counterexample: state " << rep.counterexample->state.str()
                      << " after " << rep.counterexample->depth << " writes, datum "
                      << rep.counterexample->datum.str() << " cannot be written\n";
    }
    return rep.guaranteed ? 0 : kExitVerifyFailed;
}

std::vector<rio::Syndrome> parse_syndromes(const std::string& csv) {
    std::vector<rio::Syndrome> out;
    for (const auto& part : split_csv(csv)) out.push_back(rio::Syndrome::parse(part));
    return out;
}

json pattern_json(const rio::Permutation& sigma, const std::vector<rio::VPattern>& pats,
                  const std::vector<rio::Syndrome>& ss) {
    json families = json::array();
    for (std::size_t i = 0; i < pats.size(); ++i) {
        json members = json::array();
        if (pats[i].singleton)
            members.push_back(json::array({sigma(pats[i].singleton)}));
        for (auto [p, q] : pats[i].pairs)
            members.push_back(json::array({sigma(p), sigma(q)}));
        families.push_back({{"syndrome", ss[i].str()}, {"members", members}});
    }
    return families;
}

int run_sigma_show(int r, const std::string& csv) {
    rio::ParityCheckMatrix H(r);
    const auto ss = parse_syndromes(csv);
    rio::Permutation sigma;
    std::vector<rio::VPattern> pats;
    std::string kind = "-";
    json tau = json::array({1, 2, 3, 4});
    bool backtracked = false;
    bool valid = false;
    std::vector<rio::Syndrome> pattern_syndromes = ss;

    switch (ss.size()) {
        case 1: {
            auto res = rio::sigma_single(H, ss[0]);
            sigma = res.sigma;
            backtracked = res.backtracked;
            pats = rio::sigma_patterns_single(H.n());
            valid = rio::check_sigma_single(H, ss[0], sigma);
            break;
        }
        case 2: {
            auto res = rio::sigma_pair(H, ss[0], ss[1]);
            sigma = res.sigma;
            backtracked = res.backtracked;
            pats = rio::sigma_patterns_pair(H.n());
            valid = rio::check_sigma_pair(H, ss[0], ss[1], sigma);
            break;
        }
        case 3: {
            auto res = rio::sigma_triple(H, ss[0], ss[1], ss[2]);
            sigma = res.sigma;
            backtracked = res.backtracked;
            kind = rio::to_string(res.kind);
            pats = rio::sigma_patterns_triple(res.kind);
            valid = rio::check_sigma_triple(H, ss[0], ss[1], ss[2], res.kind, sigma);
            break;
        }
        case 4: {
            auto res = rio::sigma_quad(H, ss[0], ss[1], ss[2], ss[3]);
            sigma = res.sigma;
            backtracked = res.backtracked;
            kind = rio::to_string(res.kind);
            pats = rio::sigma_patterns_quad(res.kind);
            tau = json::array({res.tau[0], res.tau[1], res.tau[2], res.tau[3]});
            pattern_syndromes.clear();
            for (int k = 0; k < 4; ++k) pattern_syndromes.push_back(ss[res.tau[k] - 1]);
            valid = rio::check_sigma_quad(H, ss[0], ss[1], ss[2], ss[3], res.kind, res.tau,
                                          sigma);
            break;
        }
        default:
            throw UsageError("sigma show takes 1 to 4 comma-separated syndromes");
    }

    if (g_json) {
        emit(json{{"sigma", sigma.images()},
                  {"kind", kind},
                  {"tau", tau},
                  {"backtracked", backtracked},
                  {"valid", valid},
                  {"families", pattern_json(sigma, pats, pattern_syndromes)}});
    } else {
        std::cout << "sigma =";
        for (int v : sigma.images()) std::cout << " " << v;
        std::cout << "\nkind = " << kind << (backtracked ? "  (greedy choices revised)" : "")
                  << "\n";
        for (std::size_t i = 0; i < pats.size(); ++i) {
            std::cout << "V(" << pattern_syndromes[i].str() << ") =";
            if (pats[i].singleton) std::cout << " {" << sigma(pats[i].singleton) << "}";
            for (auto [p, q] : pats[i].pairs)
                std::cout << " {" << sigma(p) << "," << sigma(q) << "}";
            std::cout << "\n";
        }
        std::cout << "pattern check: " << (valid ? "ok" : "FAILED") << "\n";
    }
    return valid ? 0 : kExitVerifyFailed;
}

rio::PageSet parse_pages(const rio::PRioCode& code, const std::string& csv) {
    rio::PageSet pages;
    for (const auto& part : split_csv(csv)) pages.push_back(rio::BitVector::parse(part));
    if (static_cast<int>(pages.size()) != code.t)
        throw UsageError("expected " + std::to_string(code.t) + " pages, got " +
                         std::to_string(pages.size()));
    return pages;
}

int run_prio_encode(int r, const std::string& pages_csv) {
    const auto code = rio::PRioCode::make(r);
    const auto pages = parse_pages(code, pages_csv);
    const auto cell = rio::prio_encode(code, pages);
    bool roundtrip = true;
    for (int i = 1; i <= code.t; ++i)
        roundtrip = roundtrip && rio::prio_decode_page(code, cell, i) == pages[i - 1];
    if (g_json) {
        json decoded = json::array();
        for (int i = 1; i <= code.t; ++i)
            decoded.push_back(rio::prio_decode_page(code, cell, i).str());
        emit(json{{"cell", cell.str()}, {"decoded_pages", decoded}, {"roundtrip", roundtrip}});
    } else {
        std::cout << cell.str() << "\n";
        std::cout << "roundtrip: " << (roundtrip ? "ok" : "FAILED") << "\n";
    }
    return roundtrip ? 0 : kExitVerifyFailed;
}

int run_prio_decode(int r, const std::string& cell_str, int page) {
    const auto code = rio::PRioCode::make(r);
    const auto cell = rio::CellState::parse(cell_str, code.t + 1);
    if (cell.size() != code.n)
        throw UsageError("expected " + std::to_string(code.n) + " cells");
    const auto d = rio::prio_decode_page(code, cell, page);
    if (g_json)
        emit(json{{"page", page}, {"data", d.str()}});
    else
        std::cout << d.str() << "\n";
    return 0;
}

int run_prio_verify(int r, bool exhaustive, bool multisets, std::uint64_t random_count,
                    std::uint64_t seed, bool seed_given, int threads) {
    const auto code = rio::PRioCode::make(r);
    if (exhaustive == multisets && random_count == 0)
        throw UsageError("choose one of --exhaustive, --multisets, --random N");
    if (random_count > 0 && !seed_given)
        throw UsageError("--random requires an explicit --seed");

    json runs = json::array();
    bool ok = true;
    auto do_scope = [&](rio::Scope scope, const char* name) {
        const auto rep = rio::cross_validate(code, scope, threads);
        ok = ok && rep.ok();
        json j = report_to_json(rep);
        j["scope"] = name;
        runs.push_back(j);
        if (!g_json)
            std::cout << name << ": " << rep.instances_checked << " instances, "
                      << rep.failures.size() << " failures, " << rep.elapsed.count() << " s\n";
    };

    if (exhaustive) do_scope({rio::Scope::Exhaustive, 0, 0}, "exhaustive");
    if (multisets) do_scope({rio::Scope::Multisets, 0, 0}, "multisets");
    if (random_count > 0) do_scope({rio::Scope::Random, random_count, seed}, "random");

    if (g_json) emit(runs.size() == 1 ? runs[0] : json{{"runs", runs}});
    return ok ? 0 : kExitVerifyFailed;
}

int run_sumrates() {
    const auto rows = rio::sum_rate_table();
    if (g_json) {
        json out = json::array();
        for (const auto& r : rows)
            out.push_back({{"code", r.name},
                           {"n", r.n},
                           {"l", r.l},
                           {"t", r.t},
                           {"sum_rate", rio::format_rate(r.sum_rate)},
                           {"upper_bound", rio::format_rate(r.upper_bound)}});
        emit(out);
    } else {
        std::printf("%-16s %-10s %s\n", "code", "sum-rate", "upper bound");
        for (const auto& r : rows)
            std::printf("%-16s %-10s %s\n", r.name.c_str(),
                        rio::format_rate(r.sum_rate).c_str(),
                        rio::format_rate(r.upper_bound).c_str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"P-RIO / WOM coset-coding toolbox"};
    app.require_subcommand(1);
    app.add_flag("--json", g_json, "machine-readable output");

    int r = 3;
    std::string data, state, csv, cell;
    int page = 1, writes = 3, threads = 0;
    bool exhaustive = false, multisets = false;
    std::uint64_t random_count = 0, seed = 0;
    bool seed_given = false;

    auto* matrix = app.add_subcommand("matrix", "parity-check matrices");
    auto* matrix_show = matrix->add_subcommand("show", "print the matrix");
    matrix_show->add_option("--r", r, "matrix rows")->required();

    auto* wom = app.add_subcommand("wom", "sequential write-once coding");
    auto* wom_encode = wom->add_subcommand("encode", "one coset write");
    wom_encode->add_option("--r", r)->required();
    wom_encode->add_option("--data", data, "r-bit datum")->required();
    wom_encode->add_option("--state", state, "current cells")->required();
    auto* wom_decode = wom->add_subcommand("decode", "read the stored datum");
    wom_decode->add_option("--r", r)->required();
    wom_decode->add_option("--state", state, "current cells")->required();
    auto* wom_verify = wom->add_subcommand("verify", "check the write guarantee");
    wom_verify->add_option("--r", r)->required();
    wom_verify->add_option("--writes", writes, "guaranteed write count")->required();

    auto* sigma = app.add_subcommand("sigma", "constructive permutations");
    auto* sigma_show = sigma->add_subcommand("show", "build and decompose sigma");
    sigma_show->add_option("--r", r)->required();
    sigma_show->add_option("--syndromes", csv, "1 to 4 comma-separated syndromes")->required();

    auto* prio = app.add_subcommand("prio", "parallel page coding");
    auto* prio_encode = prio->add_subcommand("encode", "encode all pages at once");
    prio_encode->add_option("--r", r)->required();
    prio_encode->add_option("--pages", csv, "comma-separated pages")->required();
    auto* prio_decode = prio->add_subcommand("decode", "read one page");
    prio_decode->add_option("--r", r)->required();
    prio_decode->add_option("--cell", cell, "cell state digits")->required();
    prio_decode->add_option("--page", page, "page index")->required();
    auto* prio_verify = prio->add_subcommand("verify", "sweep the construction");
    prio_verify->add_option("--r", r)->required();
    prio_verify->add_flag("--exhaustive", exhaustive, "all ordered syndrome tuples");
    prio_verify->add_flag("--multisets", multisets, "all canonical syndrome multisets");
    prio_verify->add_option("--random", random_count, "seeded random ordered page sets");
    prio_verify->add_option("--seed", seed, "seed for --random")->each([&](const std::string&) {
        seed_given = true;
    });
    prio_verify->add_option("--threads", threads, "worker count (0 = hardware)");

    app.add_subcommand("sumrates", "sum-rate table with capacity bounds");

    // Let global flags such as --json appear after any subcommand.
    auto enable_fallthrough = [](auto&& self, CLI::App* node) -> void {
        for (CLI::App* sub : node->get_subcommands({})) {
            sub->fallthrough();
            self(self, sub);
        }
    };
    enable_fallthrough(enable_fallthrough, &app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        if (g_json) {
            emit(json{{"error", e.what()}});
            return kExitUsage;
        }
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (matrix_show->parsed()) return run_matrix_show(r);
        if (wom_encode->parsed()) return run_wom_encode(r, data, state);
        if (wom_decode->parsed()) return run_wom_decode(r, state);
        if (wom_verify->parsed()) return run_wom_verify(r, writes);
        if (sigma_show->parsed()) return run_sigma_show(r, csv);
        if (prio_encode->parsed()) return run_prio_encode(r, csv);
        if (prio_decode->parsed()) return run_prio_decode(r, cell, page);
        if (prio_verify->parsed())
            return run_prio_verify(r, exhaustive, multisets, random_count, seed, seed_given,
                                   threads);
        if (app.get_subcommand("sumrates")->parsed()) return run_sumrates();
        throw UsageError("missing subcommand");
    } catch (const rio::CapacityError& e) {
        if (g_json)
            emit(json{{"error", e.what()}, {"kind", "capacity"}});
        else
            std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFailed;
    } catch (const std::exception& e) {
        if (g_json)
            emit(json{{"error", e.what()}});
        else
            std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
