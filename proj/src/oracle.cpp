#include "rio/oracle.hpp"

#include <algorithm>
#include <thread>

namespace rio {

namespace {

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t out = 1;
    for (std::uint64_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::vector<Syndrome> to_syndromes(int r, const std::vector<unsigned>& vals) {
    std::vector<Syndrome> s;
    s.reserve(vals.size());
    for (unsigned v : vals) s.push_back(Syndrome(r, v));
    return s;
}

// Instance decoding for each scope, keyed by a global index so that worker
// partitioning cannot change the instance set.
std::vector<unsigned> instance_syndromes(const PRioCode& code, const Scope& scope,
                                         std::uint64_t idx) {
    const unsigned q = 1u << code.r;
    std::vector<unsigned> svals(static_cast<std::size_t>(code.t));
    switch (scope.kind) {
        case Scope::Exhaustive: {
            for (int i = code.t - 1; i >= 0; --i) {
                svals[i] = static_cast<unsigned>(idx % q);
                idx /= q;
            }
            break;
        }
        case Scope::Multisets: {
            auto tuple = unrank_syndrome_multiset(code.r, code.t, idx);
            std::copy(tuple.begin(), tuple.end(), svals.begin());
            break;
        }
        case Scope::Random: {
            // Random ordered page sets; the syndromes are their differences.
            std::uint64_t st = scope.seed ^ (0x9e3779b97f4a7c15ULL * (idx + 1));
            unsigned prev = 0;
            for (int i = 0; i < code.t; ++i) {
                st = splitmix64(st);
                const unsigned page = static_cast<unsigned>(st & (q - 1));
                svals[i] = page ^ prev;
                prev = page;
            }
            break;
        }
    }
    return svals;
}

std::optional<Failure> check_instance(const PRioCode& code, const std::vector<unsigned>& svals) {
    const std::vector<Syndrome> s = to_syndromes(code.r, svals);
    auto fail = [&](const char* stage, std::string detail) {
        return Failure{s, stage, std::move(detail)};
    };

    SupportAssignment a;
    try {
        a = solve_supports(code, s);
    } catch (const std::exception& e) {
        return fail("solve", e.what());
    }
    for (const SupportSet& sup : a.supports)
        if (sup.size() > 2) return fail("check", "support wider than a pair: " + sup.str());
    if (!check_solution(code.H, s, a))
        return fail("check", "constructive assignment fails the two conditions");

    auto witness = brute_force_supports(code.H, s);
    if (!witness)
        return fail("oracle", "infeasible within pairs, yet the solver succeeded");
    if (!check_solution(code.H, s, *witness))
        return fail("oracle", "oracle witness fails the two conditions");

    // Roundtrip through the cell state exactly as the encoder builds it.
    std::vector<BitVector> chain;
    std::uint64_t acc = 0;
    for (const SupportSet& sup : a.supports) {
        acc |= sup.mask();
        chain.push_back(BitVector(code.n, acc));
    }
    CellState cell = cell_from_chain(chain);
    unsigned want = 0;
    for (int i = 1; i <= code.t; ++i) {
        want ^= svals[i - 1];
        const BitVector got = prio_decode_page(code, cell, i);
        if (static_cast<unsigned>(got.mask()) != want)
            return fail("roundtrip", "page " + std::to_string(i) + " decoded to " + got.str());
    }
    return std::nullopt;
}

}  // namespace

std::optional<SupportAssignment> brute_force_supports(const ParityCheckMatrix& H,
                                                      const std::vector<Syndrome>& s) {
    const std::size_t t = s.size();
    std::vector<std::vector<SupportSet>> options(t);
    for (std::size_t i = 0; i < t; ++i) {
        if (s[i].r() != H.r())
            throw DimensionError("brute_force_supports: syndrome width must equal r");
        if (s[i].is_zero())
            options[i] = {SupportSet()};
        else
            options[i] = v_set(H, s[i]).members();
    }

    SupportAssignment out;
    out.supports.assign(t, SupportSet());
    auto rec = [&](auto&& self, std::size_t page, std::uint64_t used) -> bool {
        if (page == t) return true;
        for (const SupportSet& cand : options[page]) {
            const std::uint64_t m = cand.mask();
            if (m & used) continue;
            out.supports[page] = cand;
            if (self(self, page + 1, used | m)) return true;
        }
        out.supports[page] = SupportSet();
        return false;
    };
    if (rec(rec, 0, 0)) return out;
    return std::nullopt;
}

std::uint64_t count_syndrome_multisets(int r, int t) {
    return binom((std::uint64_t{1} << r) + t - 1, t);
}

void enumerate_syndrome_multisets(int r, int t,
                                  const std::function<void(const std::vector<unsigned>&)>& fn) {
    const unsigned q = 1u << r;
    std::vector<unsigned> tuple(static_cast<std::size_t>(t));
    auto rec = [&](auto&& self, int pos, unsigned lo) -> void {
        if (pos == t) {
            fn(tuple);
            return;
        }
        for (unsigned v = lo; v < q; ++v) {
            tuple[pos] = v;
            self(self, pos + 1, v);
        }
    };
    rec(rec, 0, 0);
}

std::vector<unsigned> unrank_syndrome_multiset(int r, int t, std::uint64_t rank) {
    const unsigned q = 1u << r;
    std::vector<unsigned> tuple;
    tuple.reserve(static_cast<std::size_t>(t));
    unsigned lo = 0;
    for (int left = t; left > 0; --left) {
        for (unsigned v = lo;; ++v) {
            // Multisets of size left-1 over values >= v.
            const std::uint64_t block = binom(q - v + left - 2, left - 1);
            if (rank < block) {
                tuple.push_back(v);
                lo = v;
                break;
            }
            rank -= block;
        }
    }
    return tuple;
}

VerificationReport cross_validate(const PRioCode& code, const Scope& scope, int threads) {
    const auto start = std::chrono::steady_clock::now();
    std::uint64_t total = 0;
    switch (scope.kind) {
        case Scope::Exhaustive: {
            total = 1;
            for (int i = 0; i < code.t; ++i) total *= (std::uint64_t{1} << code.r);
            break;
        }
        case Scope::Multisets:
            total = count_syndrome_multisets(code.r, code.t);
            break;
        case Scope::Random:
            total = scope.count;
            break;
    }

    int nworkers = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
    if (nworkers < 1) nworkers = 1;
    if (static_cast<std::uint64_t>(nworkers) > total && total > 0)
        nworkers = static_cast<int>(total);
    if (total == 0) nworkers = 1;

    std::vector<std::vector<Failure>> found(static_cast<std::size_t>(nworkers));
    auto run = [&](int w) {
        const std::uint64_t lo = total * w / nworkers;
        const std::uint64_t hi = total * (w + 1) / nworkers;
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            auto f = check_instance(code, instance_syndromes(code, scope, idx));
            if (f) found[static_cast<std::size_t>(w)].push_back(std::move(*f));
        }
    };

    if (nworkers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(nworkers));
        for (int w = 0; w < nworkers; ++w) pool.emplace_back(run, w);
        for (auto& th : pool) th.join();
    }

    VerificationReport report;
    report.instances_checked = total;
    for (auto& chunk : found)
        for (auto& f : chunk) report.failures.push_back(std::move(f));
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

}  // namespace rio
