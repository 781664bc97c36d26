#include "rio/prio.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace rio {

namespace {

std::string profile_string(const std::vector<unsigned>& svals) {
    std::string out = "(";
    for (std::size_t i = 0; i < svals.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(svals[i]);
    }
    return out + ")";
}

struct Group {
    unsigned value = 0;
    std::vector<int> pages;  // 0-based positions in the input list
};

// Builds supports in sigma-position space and converts to column indices.
class Assigner {
  public:
    Assigner(const Permutation& sigma, std::vector<SupportSet>& out) : sigma_(sigma), out_(out) {}

    void singleton_at(int page, int pos) { put(page, {sigma_(pos)}); }
    void pair_at(int page, int p, int q) { put(page, {sigma_(p), sigma_(q)}); }
    void column_singleton(int page, unsigned column) { put(page, {static_cast<int>(column)}); }

  private:
    void put(int page, std::initializer_list<int> cols) { out_[page] = SupportSet(cols); }

    const Permutation& sigma_;
    std::vector<SupportSet>& out_;
};

std::uint32_t block1(int a) { return (1u << a) | (1u << (a + 1)); }          // {a, a+1}
std::uint32_t block2(int a) { return (1u << a) | (1u << (a + 2)); }          // {a, a+2}
std::uint32_t block4(int a) { return (1u << a) | (1u << (a + 4)); }          // {a, a+4}
std::uint32_t blockrun(int a) { return 0b1111u << a; }                       // {a..a+3}

// Smallest domain element whose block avoids the given positions.
template <typename BlockFn>
int pick_one(std::initializer_list<int> domain, BlockFn block, std::uint32_t avoid,
             const char* what) {
    for (int a : domain)
        if ((block(a) & avoid) == 0) return a;
    throw DispatchError(std::string("no admissible choice for ") + what);
}

// Lexicographically smallest k-tuple of distinct domain elements whose
// blocks are mutually disjoint and avoid the given positions.
template <typename BlockFn>
std::vector<int> pick_many(std::initializer_list<int> domain, int k, BlockFn block,
                           std::uint32_t avoid, const char* what) {
    std::vector<int> dom(domain);
    std::vector<int> chosen;
    std::vector<std::uint32_t> masks;
    auto rec = [&](auto&& self, std::size_t from, std::uint32_t taken) -> bool {
        if (static_cast<int>(chosen.size()) == k) return true;
        for (std::size_t i = from; i < dom.size(); ++i) {
            std::uint32_t m = block(dom[i]);
            if (m & taken) continue;
            chosen.push_back(dom[i]);
            if (self(self, i + 1, taken | m)) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (!rec(rec, 0, avoid))
        throw DispatchError(std::string("no admissible choices for ") + what);
    return chosen;
}

// sigma-position pairs (a, b) with a in da, b in db whose columns form a
// member of vs, in lexicographic order.
std::vector<std::pair<int, int>> cross_members(std::initializer_list<int> da,
                                               std::initializer_list<int> db,
                                               const Permutation& sigma, const VSet& vs) {
    std::vector<std::pair<int, int>> out;
    for (int a : da)
        for (int b : db)
            if (vs.contains(SupportSet({sigma(a), sigma(b)}))) out.push_back({a, b});
    return out;
}

std::vector<std::pair<int, int>> pick_cross(const std::vector<std::pair<int, int>>& candidates,
                                            int k, std::uint32_t avoid, const char* what) {
    std::vector<std::pair<int, int>> chosen;
    auto rec = [&](auto&& self, std::size_t from, std::uint32_t taken) -> bool {
        if (static_cast<int>(chosen.size()) == k) return true;
        for (std::size_t i = from; i < candidates.size(); ++i) {
            std::uint32_t m = (1u << candidates[i].first) | (1u << candidates[i].second);
            if (m & taken) continue;
            chosen.push_back(candidates[i]);
            if (self(self, i + 1, taken | m)) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (!rec(rec, 0, avoid))
        throw DispatchError(std::string("no admissible cross pairs for ") + what);
    return chosen;
}

// ---- one repeated value -------------------------------------------------

void solve_one_repeat(const ParityCheckMatrix& H, const Group& rep,
                      const std::vector<Group>& singles, std::vector<SupportSet>& out) {
    const Permutation sigma = sigma_single(H, Syndrome(H.r(), rep.value)).sigma;
    Assigner asg(sigma, out);
    asg.singleton_at(rep.pages[0], 1);

    std::uint64_t single_cols = 0;
    for (const Group& g : singles) {
        asg.column_singleton(g.pages[0], g.value);
        single_cols |= std::uint64_t{1} << g.value;
    }
    std::size_t next = 1;
    for (int a = 2; a < H.n() && next < rep.pages.size(); a += 2) {
        const std::uint64_t cols =
            (std::uint64_t{1} << sigma(a)) | (std::uint64_t{1} << sigma(a + 1));
        if (cols & single_cols) continue;
        asg.pair_at(rep.pages[next++], a, a + 1);
    }
    if (next < rep.pages.size())
        throw DispatchError("one-repeat dispatch ran out of pair blocks, m=" +
                            std::to_string(rep.pages.size()) +
                            " singles=" + std::to_string(singles.size()));
}

// ---- two repeated values ------------------------------------------------

void solve_two_repeats(const ParityCheckMatrix& H, const Group& g1, const Group& g2,
                       const std::vector<Group>& singles, std::vector<SupportSet>& out) {
    const int m1 = static_cast<int>(g1.pages.size());
    const int m2 = static_cast<int>(g2.pages.size());
    const Permutation sigma =
        sigma_pair(H, Syndrome(H.r(), g1.value), Syndrome(H.r(), g2.value)).sigma;
    Assigner asg(sigma, out);

    if (H.r() == 3) {
        if (m1 != 2 || m2 != 2 || !singles.empty())
            throw DispatchError("two-repeat dispatch gap for r=3: m1=" + std::to_string(m1) +
                                " m2=" + std::to_string(m2));
        asg.singleton_at(g1.pages[0], 1);
        asg.pair_at(g1.pages[1], 2, 3);
        asg.pair_at(g2.pages[0], 4, 6);
        asg.pair_at(g2.pages[1], 5, 7);
        return;
    }

    // Where the leftover distinct singles landed under sigma: head positions
    // 3..7 versus tail positions 8..15. The two singleton positions 1 and 2
    // carry the repeated values themselves, so no single can sit there.
    std::vector<int> pos_of(16, 0);
    for (int k = 1; k <= 15; ++k) pos_of[sigma(k)] = k;
    std::uint32_t a1mask = 0, a2mask = 0;
    for (const Group& g : singles) {
        asg.column_singleton(g.pages[0], g.value);
        const int p = pos_of[g.value];
        if (p >= 3 && p <= 7)
            a1mask |= 1u << p;
        else
            a2mask |= 1u << p;
    }
    const int a1 = std::popcount(a1mask);

    auto gap = [&](const char* detail) {
        return DispatchError("two-repeat dispatch gap: m1=" + std::to_string(m1) +
                             " m2=" + std::to_string(m2) + " a1=" + std::to_string(a1) + " " +
                             detail);
    };

    const int key = m1 * 100 + m2 * 10 + a1;
    switch (key) {
        case 220: {
            asg.singleton_at(g1.pages[0], 1);
            asg.pair_at(g1.pages[1], 2, 3);
            asg.pair_at(g2.pages[0], 4, 6);
            asg.pair_at(g2.pages[1], 5, 7);
            break;
        }
        case 221: {
            asg.singleton_at(g1.pages[0], 1);
            int a = pick_one({4, 6}, block1, a1mask, "head pair");
            asg.pair_at(g1.pages[1], a, a + 1);
            asg.singleton_at(g2.pages[0], 2);
            int b = pick_one({8, 9, 12, 13}, block2, a2mask, "tail pair");
            asg.pair_at(g2.pages[1], b, b + 2);
            break;
        }
        case 222: {
            asg.singleton_at(g1.pages[0], 1);
            int a = pick_one({2, 4, 6}, block1, a1mask, "head pair");
            asg.pair_at(g1.pages[1], a, a + 1);
            auto bs = pick_many({8, 9, 12, 13}, 2, block2, a2mask, "tail pairs");
            asg.pair_at(g2.pages[0], bs[0], bs[0] + 2);
            asg.pair_at(g2.pages[1], bs[1], bs[1] + 2);
            break;
        }
        case 223: {
            asg.singleton_at(g1.pages[0], 1);
            int a = pick_one({8, 10}, block1, a2mask, "tail pair");
            asg.pair_at(g1.pages[1], a, a + 1);
            asg.singleton_at(g2.pages[0], 2);
            int b = pick_one({12, 13}, block2, a2mask, "tail pair");
            asg.pair_at(g2.pages[1], b, b + 2);
            break;
        }
        case 224: {
            asg.singleton_at(g1.pages[0], 1);
            asg.pair_at(g1.pages[1], 8, 9);
            asg.singleton_at(g2.pages[0], 2);
            asg.pair_at(g2.pages[1], 12, 14);
            break;
        }
        case 320: {
            asg.singleton_at(g1.pages[0], 1);
            asg.pair_at(g1.pages[1], 4, 5);
            asg.pair_at(g1.pages[2], 6, 7);
            asg.singleton_at(g2.pages[0], 2);
            int a = pick_one({8, 9, 12, 13}, block2, a2mask, "tail pair");
            asg.pair_at(g2.pages[1], a, a + 2);
            break;
        }
        case 321: {
            asg.singleton_at(g1.pages[0], 1);
            auto as = pick_many({2, 4, 6}, 2, block1, a1mask, "head pairs");
            asg.pair_at(g1.pages[1], as[0], as[0] + 1);
            asg.pair_at(g1.pages[2], as[1], as[1] + 1);
            auto bs = pick_many({8, 9, 12, 13}, 2, block2, a2mask, "tail pairs");
            asg.pair_at(g2.pages[0], bs[0], bs[0] + 2);
            asg.pair_at(g2.pages[1], bs[1], bs[1] + 2);
            break;
        }
        case 322: {
            asg.singleton_at(g1.pages[0], 1);
            int a = pick_one({8, 12}, blockrun, a2mask, "tail run");
            asg.pair_at(g1.pages[1], a, a + 1);
            asg.pair_at(g1.pages[2], a + 2, a + 3);
            asg.singleton_at(g2.pages[0], 2);
            int b = pick_one({8, 9, 12, 13}, block2, a2mask | blockrun(a), "tail pair");
            asg.pair_at(g2.pages[1], b, b + 2);
            break;
        }
        case 323: {
            asg.singleton_at(g1.pages[0], 1);
            asg.pair_at(g1.pages[1], 8, 9);
            asg.pair_at(g1.pages[2], 10, 11);
            asg.singleton_at(g2.pages[0], 2);
            asg.pair_at(g2.pages[1], 12, 14);
            break;
        }
        case 330: {
            asg.singleton_at(g1.pages[0], 1);
            asg.pair_at(g1.pages[1], 4, 5);
            asg.pair_at(g1.pages[2], 6, 7);
            asg.singleton_at(g2.pages[0], 2);
            auto as = pick_many({8, 9, 12, 13}, 2, block2, a2mask, "tail pairs");
            asg.pair_at(g2.pages[1], as[0], as[0] + 2);
            asg.pair_at(g2.pages[2], as[1], as[1] + 2);
            break;
        }
        case 331: {
            asg.singleton_at(g1.pages[0], 1);
            auto as = pick_many({2, 4, 6}, 2, block1, a1mask, "head pairs");
            asg.pair_at(g1.pages[1], as[0], as[0] + 1);
            asg.pair_at(g1.pages[2], as[1], as[1] + 1);
            auto bs = pick_many({8, 9, 12, 13}, 3, block2, a2mask, "tail pairs");
            asg.pair_at(g2.pages[0], bs[0], bs[0] + 2);
            asg.pair_at(g2.pages[1], bs[1], bs[1] + 2);
            asg.pair_at(g2.pages[2], bs[2], bs[2] + 2);
            break;
        }
        case 332: {
            asg.singleton_at(g1.pages[0], 1);
            asg.pair_at(g1.pages[1], 8, 9);
            asg.pair_at(g1.pages[2], 10, 11);
            asg.singleton_at(g2.pages[0], 2);
            asg.pair_at(g2.pages[1], 12, 14);
            asg.pair_at(g2.pages[2], 13, 15);
            break;
        }
        case 420: {
            asg.singleton_at(g1.pages[0], 1);
            asg.pair_at(g1.pages[1], 2, 3);
            asg.pair_at(g1.pages[2], 4, 5);
            asg.pair_at(g1.pages[3], 6, 7);
            auto as = pick_many({8, 9, 12, 13}, 2, block2, a2mask, "tail pairs");
            asg.pair_at(g2.pages[0], as[0], as[0] + 2);
            asg.pair_at(g2.pages[1], as[1], as[1] + 2);
            break;
        }
        case 421: {
            asg.singleton_at(g1.pages[0], 1);
            int a = pick_one({4, 6}, block1, a1mask, "head pair");
            asg.pair_at(g1.pages[1], a, a + 1);
            int b = pick_one({8, 12}, blockrun, a2mask, "tail run");
            asg.pair_at(g1.pages[2], b, b + 1);
            asg.pair_at(g1.pages[3], b + 2, b + 3);
            asg.singleton_at(g2.pages[0], 2);
            int c = pick_one({8, 9, 12, 13}, block2, a2mask | blockrun(b), "tail pair");
            asg.pair_at(g2.pages[1], c, c + 2);
            break;
        }
        case 422: {
            asg.singleton_at(g1.pages[0], 1);
            asg.pair_at(g1.pages[1], 8, 9);
            asg.pair_at(g1.pages[2], 10, 11);
            int a = pick_one({2, 4, 6}, block1, a1mask, "head pair");
            asg.pair_at(g1.pages[3], a, a + 1);
            asg.pair_at(g2.pages[0], 12, 14);
            asg.pair_at(g2.pages[1], 13, 15);
            break;
        }
        case 430: {
            asg.singleton_at(g1.pages[0], 1);
            asg.pair_at(g1.pages[1], 2, 3);
            asg.pair_at(g1.pages[2], 4, 5);
            asg.pair_at(g1.pages[3], 6, 7);
            auto as = pick_many({8, 9, 12, 13}, 3, block2, a2mask, "tail pairs");
            asg.pair_at(g2.pages[0], as[0], as[0] + 2);
            asg.pair_at(g2.pages[1], as[1], as[1] + 2);
            asg.pair_at(g2.pages[2], as[2], as[2] + 2);
            break;
        }
        case 431: {
            // The larger group takes the four tail pairs of its V-family and
            // its singleton position sigma(1) stays unused; this branch is
            // transcribed as-is even though its siblings lead with sigma(1).
            asg.pair_at(g1.pages[0], 8, 9);
            asg.pair_at(g1.pages[1], 10, 11);
            asg.pair_at(g1.pages[2], 12, 13);
            asg.pair_at(g1.pages[3], 14, 15);
            asg.singleton_at(g2.pages[0], 2);
            auto as = pick_many({1, 4, 5}, 2, block2, a1mask, "head pairs");
            asg.pair_at(g2.pages[1], as[0], as[0] + 2);
            asg.pair_at(g2.pages[2], as[1], as[1] + 2);
            break;
        }
        case 440: {
            asg.singleton_at(g1.pages[0], 1);
            asg.pair_at(g1.pages[1], 2, 3);
            asg.pair_at(g1.pages[2], 4, 5);
            asg.pair_at(g1.pages[3], 6, 7);
            asg.pair_at(g2.pages[0], 8, 10);
            asg.pair_at(g2.pages[1], 9, 11);
            asg.pair_at(g2.pages[2], 12, 14);
            asg.pair_at(g2.pages[3], 13, 15);
            break;
        }
        case 520: {
            asg.singleton_at(g1.pages[0], 1);
            asg.pair_at(g1.pages[1], 4, 5);
            asg.pair_at(g1.pages[2], 6, 7);
            int a = pick_one({8, 12}, blockrun, a2mask, "tail run");
            asg.pair_at(g1.pages[3], a, a + 1);
            asg.pair_at(g1.pages[4], a + 2, a + 3);
            asg.singleton_at(g2.pages[0], 2);
            int b = pick_one({8, 9, 12, 13}, block2, a2mask | blockrun(a), "tail pair");
            asg.pair_at(g2.pages[1], b, b + 2);
            break;
        }
        case 521: {
            asg.singleton_at(g1.pages[0], 1);
            asg.pair_at(g1.pages[1], 8, 9);
            asg.pair_at(g1.pages[2], 10, 11);
            asg.pair_at(g1.pages[3], 12, 13);
            asg.pair_at(g1.pages[4], 14, 15);
            asg.singleton_at(g2.pages[0], 2);
            int a = pick_one({4, 5}, block2, a1mask, "head pair");
            asg.pair_at(g2.pages[1], a, a + 2);
            break;
        }
        case 530: {
            asg.singleton_at(g1.pages[0], 1);
            asg.pair_at(g1.pages[1], 4, 5);
            asg.pair_at(g1.pages[2], 6, 7);
            asg.pair_at(g1.pages[3], 8, 9);
            asg.pair_at(g1.pages[4], 10, 11);
            asg.singleton_at(g2.pages[0], 2);
            asg.pair_at(g2.pages[1], 12, 14);
            asg.pair_at(g2.pages[2], 13, 15);
            break;
        }
        case 620: {
            asg.singleton_at(g1.pages[0], 1);
            asg.pair_at(g1.pages[1], 2, 3);
            asg.pair_at(g1.pages[2], 4, 5);
            asg.pair_at(g1.pages[3], 6, 7);
            asg.pair_at(g1.pages[4], 8, 9);
            asg.pair_at(g1.pages[5], 10, 11);
            asg.pair_at(g2.pages[0], 12, 14);
            asg.pair_at(g2.pages[1], 13, 15);
            break;
        }
        default:
            throw gap("no row");
    }
}

// ---- three repeated values ----------------------------------------------

void solve_three_repeats(const ParityCheckMatrix& H, const Group& g1, const Group& g2,
                         const Group& g3, const std::vector<Group>& singles,
                         std::vector<SupportSet>& out) {
    const int m1 = static_cast<int>(g1.pages.size());
    const int m2 = static_cast<int>(g2.pages.size());
    const int m3 = static_cast<int>(g3.pages.size());
    const TripleResult tri = sigma_triple(H, Syndrome(4, g1.value), Syndrome(4, g2.value),
                                          Syndrome(4, g3.value));
    const Permutation& sigma = tri.sigma;
    Assigner asg(sigma, out);

    std::vector<int> pos_of(16, 0);
    for (int k = 1; k <= 15; ++k) pos_of[sigma(k)] = k;

    // Head positions that can host a single: the three singleton slots are
    // excluded by distinctness (1, 2, 4 when the third value has its own
    // singleton; 1, 2, 3 when it equals the sum of the first two).
    const std::uint32_t head_slots =
        tri.kind == TripleKind::A ? (1u << 3) | (1u << 5) | (1u << 6) | (1u << 7)
                                  : (1u << 4) | (1u << 5) | (1u << 6) | (1u << 7);
    std::uint32_t a1mask = 0, a2mask = 0;
    for (const Group& g : singles) {
        asg.column_singleton(g.pages[0], g.value);
        const int p = pos_of[g.value];
        if ((1u << p) & head_slots)
            a1mask |= 1u << p;
        else
            a2mask |= 1u << p;
    }
    const int a1 = std::popcount(a1mask);

    auto gap = [&](const char* detail) {
        return DispatchError("three-repeat dispatch gap: kind=" +
                             std::string(to_string(tri.kind)) + " m=(" + std::to_string(m1) +
                             "," + std::to_string(m2) + "," + std::to_string(m3) +
                             ") a1=" + std::to_string(a1) + " " + detail);
    };

    const int key = m1 * 1000 + m2 * 100 + m3 * 10 + a1;
    if (tri.kind == TripleKind::A) {
        switch (key) {
            case 2220: {
                asg.singleton_at(g1.pages[0], 1);
                asg.pair_at(g1.pages[1], 2, 3);
                asg.pair_at(g2.pages[0], 4, 6);
                asg.pair_at(g2.pages[1], 5, 7);
                auto as = pick_many({8, 9, 10, 11}, 2, block4, a2mask, "tail cross pairs");
                asg.pair_at(g3.pages[0], as[0], as[0] + 4);
                asg.pair_at(g3.pages[1], as[1], as[1] + 4);
                break;
            }
            case 2221: {
                asg.singleton_at(g1.pages[0], 1);
                asg.singleton_at(g2.pages[0], 2);
                asg.singleton_at(g3.pages[0], 4);
                // Row keyed on where the tail single sits; with no tail
                // single the first row applies.
                struct Row { std::uint32_t key; int p1[2], p2[2], p3[2]; };
                static constexpr Row rows[] = {
                    {(1u << 8) | (1u << 15), {10, 11}, {12, 14}, {9, 13}},
                    {(1u << 9) | (1u << 14), {12, 13}, {8, 10}, {11, 15}},
                    {(1u << 10) | (1u << 13), {8, 9}, {12, 14}, {11, 15}},
                    {(1u << 11) | (1u << 12), {14, 15}, {8, 10}, {9, 13}},
                };
                const Row* row = &rows[0];
                for (const Row& r : rows)
                    if (a2mask & r.key) row = &r;
                asg.pair_at(g1.pages[1], row->p1[0], row->p1[1]);
                asg.pair_at(g2.pages[1], row->p2[0], row->p2[1]);
                asg.pair_at(g3.pages[1], row->p3[0], row->p3[1]);
                break;
            }
            case 2222: {
                asg.singleton_at(g1.pages[0], 1);
                asg.pair_at(g1.pages[1], 8, 9);
                asg.singleton_at(g2.pages[0], 2);
                asg.pair_at(g2.pages[1], 12, 14);
                asg.singleton_at(g3.pages[0], 4);
                asg.pair_at(g3.pages[1], 11, 15);
                break;
            }
            case 3220: {
                asg.singleton_at(g1.pages[0], 1);
                asg.pair_at(g1.pages[1], 4, 5);
                asg.pair_at(g1.pages[2], 6, 7);
                asg.singleton_at(g2.pages[0], 2);
                struct Row { std::uint32_t key; int p5[2], p6[2], p7[2]; };
                static constexpr Row rows[] = {
                    {(1u << 8) | (1u << 10), {12, 14}, {9, 13}, {11, 15}},
                    {(1u << 9) | (1u << 11), {13, 15}, {8, 12}, {10, 14}},
                    {(1u << 12) | (1u << 14), {8, 10}, {9, 13}, {11, 15}},
                    {(1u << 13) | (1u << 15), {9, 11}, {8, 12}, {10, 14}},
                };
                const Row* row = &rows[0];
                for (const Row& r : rows)
                    if (a2mask & r.key) row = &r;
                asg.pair_at(g2.pages[1], row->p5[0], row->p5[1]);
                asg.pair_at(g3.pages[0], row->p6[0], row->p6[1]);
                asg.pair_at(g3.pages[1], row->p7[0], row->p7[1]);
                break;
            }
            case 3221: {
                asg.singleton_at(g1.pages[0], 1);
                auto as = pick_many({2, 4, 6}, 2, block1, a1mask, "head pairs");
                asg.pair_at(g1.pages[1], as[0], as[0] + 1);
                asg.pair_at(g1.pages[2], as[1], as[1] + 1);
                asg.pair_at(g2.pages[0], 8, 10);
                asg.pair_at(g2.pages[1], 12, 14);
                asg.pair_at(g3.pages[0], 9, 13);
                asg.pair_at(g3.pages[1], 11, 15);
                break;
            }
            case 3320: {
                asg.singleton_at(g1.pages[0], 1);
                asg.pair_at(g1.pages[1], 4, 5);
                asg.pair_at(g1.pages[2], 6, 7);
                asg.singleton_at(g2.pages[0], 2);
                asg.pair_at(g2.pages[1], 8, 10);
                asg.pair_at(g2.pages[2], 12, 14);
                asg.pair_at(g3.pages[0], 9, 13);
                asg.pair_at(g3.pages[1], 11, 15);
                break;
            }
            case 4220: {
                asg.singleton_at(g1.pages[0], 1);
                asg.pair_at(g1.pages[1], 2, 3);
                asg.pair_at(g1.pages[2], 4, 5);
                asg.pair_at(g1.pages[3], 6, 7);
                asg.pair_at(g2.pages[0], 8, 10);
                asg.pair_at(g2.pages[1], 12, 14);
                asg.pair_at(g3.pages[0], 9, 13);
                asg.pair_at(g3.pages[1], 11, 15);
                break;
            }
            default:
                throw gap("no row");
        }
        return;
    }

    // Third value equals the sum of the first two.
    const VSet vs3 = v_set(H, Syndrome(4, g3.value));
    switch (key) {
        case 2220: {
            asg.singleton_at(g1.pages[0], 1);
            asg.pair_at(g1.pages[1], 2, 3);
            asg.pair_at(g2.pages[0], 4, 6);
            asg.pair_at(g2.pages[1], 5, 7);
            auto cands = cross_members({8, 9, 12, 13}, {10, 11, 14, 15}, sigma, vs3);
            auto cs = pick_cross(cands, 2, a2mask, "sum-family tail pairs");
            asg.pair_at(g3.pages[0], cs[0].first, cs[0].second);
            asg.pair_at(g3.pages[1], cs[1].first, cs[1].second);
            break;
        }
        case 2221: {
            asg.singleton_at(g1.pages[0], 1);
            int a = pick_one({4, 6}, block1, a1mask, "head pair");
            asg.pair_at(g1.pages[1], a, a + 1);
            asg.singleton_at(g2.pages[0], 2);
            int b = pick_one({8, 9, 12, 13}, block2, a2mask, "tail pair");
            asg.pair_at(g2.pages[1], b, b + 2);
            asg.singleton_at(g3.pages[0], 3);
            auto cands = cross_members({8, 9, 12, 13}, {10, 11, 14, 15}, sigma, vs3);
            auto cs = pick_cross(cands, 1, a2mask | block2(b), "sum-family tail pair");
            asg.pair_at(g3.pages[1], cs[0].first, cs[0].second);
            break;
        }
        case 2222: {
            asg.singleton_at(g1.pages[0], 1);
            asg.pair_at(g1.pages[1], 2, 3);
            asg.pair_at(g2.pages[0], 8, 10);
            asg.pair_at(g2.pages[1], 9, 11);
            asg.pair_at(g3.pages[0], 12, 15);
            asg.pair_at(g3.pages[1], 13, 14);
            break;
        }
        case 3220: {
            asg.singleton_at(g1.pages[0], 1);
            asg.pair_at(g1.pages[1], 4, 5);
            asg.pair_at(g1.pages[2], 6, 7);
            asg.singleton_at(g2.pages[0], 2);
            int a = pick_one({8, 9}, block2, a2mask, "tail pair");
            asg.pair_at(g2.pages[1], a, a + 2);
            asg.singleton_at(g3.pages[0], 3);
            auto cands = cross_members({12, 13}, {14, 15}, sigma, vs3);
            auto cs = pick_cross(cands, 1, a2mask, "sum-family tail pair");
            asg.pair_at(g3.pages[1], cs[0].first, cs[0].second);
            break;
        }
        case 3221: {
            asg.singleton_at(g1.pages[0], 1);
            asg.pair_at(g1.pages[1], 2, 3);
            int a = pick_one({4, 6}, block1, a1mask, "head pair");
            asg.pair_at(g1.pages[2], a, a + 1);
            asg.pair_at(g2.pages[0], 8, 10);
            asg.pair_at(g2.pages[1], 9, 11);
            asg.pair_at(g3.pages[0], 12, 15);
            asg.pair_at(g3.pages[1], 13, 14);
            break;
        }
        case 3320: {
            asg.singleton_at(g1.pages[0], 1);
            asg.pair_at(g1.pages[1], 4, 5);
            asg.pair_at(g1.pages[2], 6, 7);
            asg.singleton_at(g2.pages[0], 2);
            asg.pair_at(g2.pages[1], 8, 10);
            asg.pair_at(g2.pages[2], 9, 11);
            asg.singleton_at(g3.pages[0], 3);
            asg.pair_at(g3.pages[1], 12, 15);
            break;
        }
        case 4220: {
            asg.singleton_at(g1.pages[0], 1);
            asg.pair_at(g1.pages[1], 2, 3);
            asg.pair_at(g1.pages[2], 4, 5);
            asg.pair_at(g1.pages[3], 6, 7);
            asg.pair_at(g2.pages[0], 8, 10);
            asg.pair_at(g2.pages[1], 9, 11);
            asg.pair_at(g3.pages[0], 12, 15);
            asg.pair_at(g3.pages[1], 13, 14);
            break;
        }
        default:
            throw gap("no row");
    }
}

// ---- four values, each twice ----------------------------------------------

void solve_four_pairs(const ParityCheckMatrix& H, const std::vector<Group>& groups,
                      std::vector<SupportSet>& out) {
    const QuadResult quad =
        sigma_quad(H, Syndrome(4, groups[0].value), Syndrome(4, groups[1].value),
                   Syndrome(4, groups[2].value), Syndrome(4, groups[3].value));
    const Permutation& sigma = quad.sigma;
    Assigner asg(sigma, out);

    // In the B variant the patterns are keyed to the reordering tau; realign
    // the groups so group k follows pattern k.
    const Group* G[4];
    for (int k = 0; k < 4; ++k) G[k] = &groups[quad.tau[k] - 1];

    switch (quad.kind) {
        case QuadKind::A: {
            asg.singleton_at(G[0]->pages[0], 1);
            asg.pair_at(G[0]->pages[1], 2, 3);
            asg.pair_at(G[1]->pages[0], 4, 6);
            asg.pair_at(G[1]->pages[1], 9, 11);
            asg.pair_at(G[2]->pages[0], 8, 12);
            asg.pair_at(G[2]->pages[1], 10, 14);
            asg.pair_at(G[3]->pages[0], 5, 13);
            asg.pair_at(G[3]->pages[1], 7, 15);
            break;
        }
        case QuadKind::B: {
            asg.singleton_at(G[0]->pages[0], 1);
            asg.pair_at(G[0]->pages[1], 2, 3);
            asg.pair_at(G[1]->pages[0], 4, 6);
            asg.pair_at(G[1]->pages[1], 5, 7);
            asg.pair_at(G[2]->pages[0], 8, 11);
            asg.pair_at(G[2]->pages[1], 12, 15);
            asg.pair_at(G[3]->pages[0], 9, 13);
            asg.pair_at(G[3]->pages[1], 10, 14);
            break;
        }
        case QuadKind::C: {
            asg.singleton_at(G[0]->pages[0], 1);
            asg.pair_at(G[0]->pages[1], 2, 3);
            asg.pair_at(G[1]->pages[0], 4, 6);
            asg.pair_at(G[1]->pages[1], 5, 7);
            asg.pair_at(G[2]->pages[0], 8, 12);
            asg.pair_at(G[2]->pages[1], 11, 15);
            asg.pair_at(G[3]->pages[0], 9, 14);
            asg.pair_at(G[3]->pages[1], 10, 13);
            break;
        }
    }
}

SupportAssignment solve_any(const ParityCheckMatrix& H, const std::vector<Syndrome>& s) {
    std::vector<unsigned> svals;
    svals.reserve(s.size());
    for (const Syndrome& si : s) {
        if (si.r() != H.r())
            throw DimensionError("solver: syndrome width must equal r");
        svals.push_back(si.value());
    }

    SupportAssignment result;
    result.supports.assign(s.size(), SupportSet());

    // Zero syndromes take the empty support; the rest form the subproblem.
    std::vector<Group> groups;
    for (std::size_t i = 0; i < svals.size(); ++i) {
        if (svals[i] == 0) continue;
        auto it = std::find_if(groups.begin(), groups.end(),
                               [&](const Group& g) { return g.value == svals[i]; });
        if (it == groups.end())
            groups.push_back({svals[i], {static_cast<int>(i)}});
        else
            it->pages.push_back(static_cast<int>(i));
    }
    std::stable_sort(groups.begin(), groups.end(), [](const Group& a, const Group& b) {
        return a.pages.size() > b.pages.size();
    });

    std::vector<Group> reps, singles;
    for (const Group& g : groups)
        (g.pages.size() >= 2 ? reps : singles).push_back(g);

    switch (reps.size()) {
        case 0:
            for (const Group& g : singles) result.supports[g.pages[0]] = SupportSet({static_cast<int>(g.value)});
            break;
        case 1:
            solve_one_repeat(H, reps[0], singles, result.supports);
            break;
        case 2:
            solve_two_repeats(H, reps[0], reps[1], singles, result.supports);
            break;
        case 3:
            if (H.r() != 4)
                throw DispatchError("three repeated values need r=4: " + profile_string(svals));
            solve_three_repeats(H, reps[0], reps[1], reps[2], singles, result.supports);
            break;
        case 4:
            if (H.r() != 4 || !singles.empty() ||
                std::any_of(reps.begin(), reps.end(),
                            [](const Group& g) { return g.pages.size() != 2; }))
                throw DispatchError("four-group dispatch gap: " + profile_string(svals));
            solve_four_pairs(H, reps, result.supports);
            break;
        default:
            throw DispatchError("unhandled multiplicity profile: " + profile_string(svals));
    }

    if (!check_solution(H, s, result))
        throw DispatchError("solver produced an invalid assignment for " + profile_string(svals));
    return result;
}

}  // namespace

PRioCode PRioCode::make(int r) {
    if (r != 3 && r != 4)
        throw ParameterError("P-RIO codes are built for r = 3 or r = 4");
    return PRioCode{r, (1 << r) - 1, r, r == 3 ? 4 : 8, ParityCheckMatrix(r)};
}

std::vector<Syndrome> syndromes_from_pages(const PRioCode& code, const PageSet& pages) {
    if (static_cast<int>(pages.size()) != code.t)
        throw DimensionError("page count must equal t");
    std::vector<Syndrome> s;
    s.reserve(pages.size());
    unsigned prev = 0;
    for (const BitVector& d : pages) {
        if (d.length() != code.l)
            throw DimensionError("page width must equal l");
        const unsigned cur = static_cast<unsigned>(d.mask());
        s.push_back(Syndrome(code.r, cur ^ prev));
        prev = cur;
    }
    return s;
}

bool check_solution(const ParityCheckMatrix& H, const std::vector<Syndrome>& s,
                    const SupportAssignment& a) {
    if (s.size() != a.supports.size())
        throw DimensionError("check_solution: one support per syndrome required");
    std::uint64_t seen = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const SupportSet& sup = a.supports[i];
        if (!sup.empty() && sup.indices().back() > H.n()) return false;
        if (H.syndrome_of_mask(sup.mask()) != s[i].value()) return false;
        if (sup.empty() != s[i].is_zero()) return false;
        if (seen & sup.mask()) return false;
        seen |= sup.mask();
    }
    return true;
}

SupportAssignment solve_supports_7_3_4(const ParityCheckMatrix& H,
                                       const std::vector<Syndrome>& s) {
    if (H.r() != 3)
        throw ParameterError("solve_supports_7_3_4 needs r = 3");
    if (s.size() != 4)
        throw DimensionError("solve_supports_7_3_4 needs exactly 4 syndromes");
    return solve_any(H, s);
}

SupportAssignment solve_supports_15_4_8(const ParityCheckMatrix& H,
                                        const std::vector<Syndrome>& s) {
    if (H.r() != 4)
        throw ParameterError("solve_supports_15_4_8 needs r = 4");
    if (s.size() != 8)
        throw DimensionError("solve_supports_15_4_8 needs exactly 8 syndromes");
    return solve_any(H, s);
}

SupportAssignment solve_supports(const PRioCode& code, const std::vector<Syndrome>& s) {
    return code.r == 3 ? solve_supports_7_3_4(code.H, s) : solve_supports_15_4_8(code.H, s);
}

CellState prio_encode(const PRioCode& code, const PageSet& pages) {
    const std::vector<Syndrome> s = syndromes_from_pages(code, pages);
    const SupportAssignment a = solve_supports(code, s);
    std::vector<BitVector> chain;
    chain.reserve(pages.size());
    std::uint64_t acc = 0;
    for (const SupportSet& sup : a.supports) {
        acc |= sup.mask();
        chain.push_back(BitVector(code.n, acc));
    }
    return cell_from_chain(chain);
}

BitVector prio_decode_page(const PRioCode& code, const CellState& cell, int page) {
    if (page < 1 || page > code.t)
        throw ParameterError("page index out of range: " + std::to_string(page));
    if (cell.q() != code.t + 1 || cell.size() != code.n)
        throw DimensionError("cell state does not match the code geometry");
    return code.H.syndrome(read_threshold(cell, code.t + 1 - page)).bits();
}

}  // namespace rio
