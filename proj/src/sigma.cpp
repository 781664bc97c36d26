#include "rio/sigma.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace rio {

namespace {

// One slot of a permutation under construction. Column j equals its index
// value, so "the index whose column is v" is just v.
struct Step {
    enum Kind { kFixed, kFree, kPairWith } kind;
    unsigned syndrome = 0;  // kFixed: target column value; kPairWith: pair sum
    int prev = 0;           // kPairWith: 1-based earlier position to pair with
};

Step fixed(unsigned s) { return {Step::kFixed, s, 0}; }
Step free_choice() { return {Step::kFree, 0, 0}; }
Step pair_with(int prev, unsigned s) { return {Step::kPairWith, s, prev}; }

// Depth-first assignment of sigma, taking the smallest admissible index at
// every free slot and revising earlier free choices if a forced slot would
// collide. Returns the images plus whether any revision happened.
std::optional<std::vector<int>> run_steps(const std::vector<Step>& steps, int n,
                                          bool* backtracked) {
    std::vector<int> images(steps.size(), 0);
    std::vector<int> free_cursor(steps.size(), 0);
    std::uint64_t used = 0;
    std::size_t k = 0;
    bool revised = false;

    auto value_at = [&](std::size_t pos) { return static_cast<unsigned>(images[pos]); };

    while (k < steps.size()) {
        const Step& st = steps[k];
        int candidate = 0;
        bool ok = false;
        switch (st.kind) {
            case Step::kFixed: {
                candidate = static_cast<int>(st.syndrome);
                ok = candidate >= 1 && candidate <= n && !((used >> candidate) & 1);
                break;
            }
            case Step::kPairWith: {
                candidate = static_cast<int>(st.syndrome ^ value_at(st.prev - 1));
                ok = candidate >= 1 && candidate <= n && !((used >> candidate) & 1);
                break;
            }
            case Step::kFree: {
                for (int v = free_cursor[k] + 1; v <= n; ++v) {
                    if (!((used >> v) & 1)) {
                        candidate = v;
                        ok = true;
                        break;
                    }
                }
                break;
            }
        }
        if (ok) {
            images[k] = candidate;
            free_cursor[k] = candidate;
            used |= std::uint64_t{1} << candidate;
            ++k;
            continue;
        }
        // Backtrack to the most recent free slot and advance it.
        free_cursor[k] = 0;
        while (true) {
            if (k == 0) return std::nullopt;
            --k;
            used &= ~(std::uint64_t{1} << images[k]);
            images[k] = 0;
            if (steps[k].kind == Step::kFree) break;
            free_cursor[k] = 0;
        }
        revised = true;
    }
    if (backtracked) *backtracked = revised;
    return images;
}

std::vector<Step> steps_single(unsigned s, int n) {
    std::vector<Step> steps{fixed(s)};
    for (int b = 2; b < n; b += 2) {
        steps.push_back(free_choice());
        steps.push_back(pair_with(b, s));
    }
    return steps;
}

std::vector<Step> steps_pair(unsigned s1, unsigned s2, int n) {
    std::vector<Step> steps{fixed(s1), fixed(s2), pair_with(2, s1)};
    for (int b = 4; b < n; b += 4) {
        steps.push_back(free_choice());
        steps.push_back(pair_with(b, s1));
        steps.push_back(pair_with(b, s2));
        steps.push_back(pair_with(b + 2, s1));
    }
    return steps;
}

// Head shared by the triple and quad constructions once the third syndrome
// has its own singleton: positions 4..7 pair off against position 4.
void append_block_of_four(std::vector<Step>& steps, int b, unsigned s1, unsigned s2) {
    steps.push_back(free_choice());
    steps.push_back(pair_with(b, s1));
    steps.push_back(pair_with(b, s2));
    steps.push_back(pair_with(b + 2, s1));
}

// Tail block 8..15 where the third (and fourth) syndromes cut across the
// s1/s2 pairing: position 12 pairs with 8 under sx.
void append_tail_block(std::vector<Step>& steps, unsigned s1, unsigned s2, unsigned sx,
                       bool anchor_fixed, unsigned anchor) {
    if (anchor_fixed)
        steps.push_back(fixed(anchor));
    else
        steps.push_back(free_choice());
    steps.push_back(pair_with(8, s1));
    steps.push_back(pair_with(8, s2));
    steps.push_back(pair_with(10, s1));
    steps.push_back(pair_with(8, sx));
    steps.push_back(pair_with(12, s1));
    steps.push_back(pair_with(12, s2));
    steps.push_back(pair_with(14, s1));
}

void require_distinct_nonzero(std::initializer_list<Syndrome> ss, int r) {
    std::vector<unsigned> vals;
    for (const auto& s : ss) {
        if (s.r() != r) throw DimensionError("syndrome width must equal r");
        if (s.is_zero()) throw ParameterError("syndromes must be nonzero");
        vals.push_back(s.value());
    }
    std::sort(vals.begin(), vals.end());
    if (std::adjacent_find(vals.begin(), vals.end()) != vals.end())
        throw ParameterError("syndromes must be pairwise distinct");
}

Permutation finish(std::optional<std::vector<int>> images, const char* what) {
    if (!images)
        throw DispatchError(std::string("permutation construction dead-ended: ") + what);
    return Permutation(std::move(*images));
}

bool pattern_matches(const ParityCheckMatrix& H, const Syndrome& s, const VPattern& pat,
                     const Permutation& sigma) {
    VSet vs = v_set(H, s);
    std::vector<SupportSet> claimed;
    if (pat.singleton != 0) claimed.push_back(SupportSet({sigma(pat.singleton)}));
    for (auto [p, q] : pat.pairs) claimed.push_back(SupportSet({sigma(p), sigma(q)}));
    std::vector<SupportSet> actual = vs.members();
    std::sort(claimed.begin(), claimed.end());
    std::sort(actual.begin(), actual.end());
    return claimed == actual;
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::uint64_t seen = 0;
    const int n = static_cast<int>(images_.size());
    for (int v : images_) {
        if (v < 1 || v > n || ((seen >> v) & 1))
            throw ParameterError("permutation images must be a bijection on 1..n");
        seen |= std::uint64_t{1} << v;
    }
}

int Permutation::operator()(int k) const {
    if (k < 1 || k > size())
        throw ParameterError("permutation argument out of range: " + std::to_string(k));
    return images_[k - 1];
}

const char* to_string(TripleKind k) { return k == TripleKind::A ? "A" : "B"; }
const char* to_string(QuadKind k) {
    switch (k) {
        case QuadKind::A: return "A";
        case QuadKind::B: return "B";
        default: return "C";
    }
}

SigmaResult sigma_single(const ParityCheckMatrix& H, const Syndrome& s) {
    require_distinct_nonzero({s}, H.r());
    SigmaResult res;
    res.sigma = finish(run_steps(steps_single(s.value(), H.n()), H.n(), &res.backtracked),
                       "single syndrome");
    return res;
}

SigmaResult sigma_pair(const ParityCheckMatrix& H, const Syndrome& s1, const Syndrome& s2) {
    require_distinct_nonzero({s1, s2}, H.r());
    SigmaResult res;
    res.sigma = finish(run_steps(steps_pair(s1.value(), s2.value(), H.n()), H.n(),
                                 &res.backtracked),
                       "syndrome pair");
    return res;
}

TripleResult sigma_triple(const ParityCheckMatrix& H, const Syndrome& s1, const Syndrome& s2,
                          const Syndrome& s3) {
    if (H.r() != 4)
        throw ParameterError("sigma_triple is defined for r = 4 only");
    require_distinct_nonzero({s1, s2, s3}, 4);
    const unsigned a = s1.value(), b = s2.value(), c = s3.value();
    TripleResult res;
    res.kind = ((a ^ b) == c) ? TripleKind::B : TripleKind::A;
    std::vector<Step> steps{fixed(a), fixed(b), pair_with(2, a)};
    if (res.kind == TripleKind::A) {
        steps.push_back(fixed(c));
        steps.push_back(pair_with(4, a));
        steps.push_back(pair_with(4, b));
        steps.push_back(pair_with(6, a));
        append_tail_block(steps, a, b, c, false, 0);
    } else {
        // position 3 already carries the singleton of s3 = s1 + s2
        append_block_of_four(steps, 4, a, b);
        append_block_of_four(steps, 8, a, b);
        append_block_of_four(steps, 12, a, b);
    }
    res.sigma = finish(run_steps(steps, 15, &res.backtracked), "syndrome triple");
    return res;
}

QuadResult sigma_quad(const ParityCheckMatrix& H, const Syndrome& s1, const Syndrome& s2,
                      const Syndrome& s3, const Syndrome& s4) {
    if (H.r() != 4)
        throw ParameterError("sigma_quad is defined for r = 4 only");
    require_distinct_nonzero({s1, s2, s3, s4}, 4);
    const std::array<unsigned, 4> v{s1.value(), s2.value(), s3.value(), s4.value()};

    QuadResult res;
    // Classification precedence: B (some reordering has a two-term sum equal
    // to a third), then C (all four sum to zero), then A (independent).
    std::array<int, 4> order{1, 2, 3, 4};
    bool found_b = false;
    {
        std::array<int, 4> perm{1, 2, 3, 4};
        do {
            if ((v[perm[0] - 1] ^ v[perm[1] - 1]) == v[perm[2] - 1]) {
                order = perm;
                found_b = true;
                break;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    std::vector<Step> steps;
    if (found_b) {
        res.kind = QuadKind::B;
        res.tau = order;
        const unsigned a = v[order[0] - 1], b = v[order[1] - 1], d = v[order[3] - 1];
        steps = {fixed(a), fixed(b), pair_with(2, a)};  // position 3 = singleton of the sum
        steps.push_back(fixed(d));
        steps.push_back(pair_with(4, a));
        steps.push_back(pair_with(4, b));
        steps.push_back(pair_with(6, a));
        append_tail_block(steps, a, b, d, false, 0);
    } else if ((v[0] ^ v[1] ^ v[2] ^ v[3]) == 0) {
        res.kind = QuadKind::C;
        const unsigned a = v[0], b = v[1], c = v[2];
        steps = {fixed(a), fixed(b), pair_with(2, a)};
        steps.push_back(fixed(c));
        steps.push_back(pair_with(4, a));
        steps.push_back(pair_with(4, b));
        steps.push_back(pair_with(6, a));  // lands on the singleton of s4
        append_tail_block(steps, a, b, c, false, 0);
    } else {
        // Not B, not C: the four syndromes must be linearly independent. A
        // dependency would involve a two-, three-, or four-term zero sum;
        // the first is impossible for distinct values and the others are B
        // and C. Verify anyway and refuse to guess.
        unsigned basis[4] = {};
        for (unsigned x : v) {
            for (int bit = 3; bit >= 0; --bit)
                if (((x >> bit) & 1) && basis[bit]) x ^= basis[bit];
            if (x == 0)
                throw DispatchError("quadruple is neither B, C, nor independent: " + s1.str() +
                                    "," + s2.str() + "," + s3.str() + "," + s4.str());
            basis[std::bit_width(x) - 1] = x;
        }
        res.kind = QuadKind::A;
        const unsigned a = v[0], b = v[1], c = v[2], d = v[3];
        steps = {fixed(a), fixed(b), pair_with(2, a)};
        steps.push_back(fixed(c));
        steps.push_back(pair_with(4, a));
        steps.push_back(pair_with(4, b));
        steps.push_back(pair_with(6, a));
        append_tail_block(steps, a, b, c, true, d);
    }
    res.sigma = finish(run_steps(steps, 15, &res.backtracked), "syndrome quadruple");
    return res;
}

std::vector<VPattern> sigma_patterns_single(int n) {
    VPattern p;
    p.singleton = 1;
    for (int b = 2; b < n; b += 2) p.pairs.push_back({b, b + 1});
    return {p};
}

std::vector<VPattern> sigma_patterns_pair(int n) {
    VPattern p1, p2;
    p1.singleton = 1;
    p1.pairs.push_back({2, 3});
    p2.singleton = 2;
    p2.pairs.push_back({1, 3});
    for (int b = 4; b < n; b += 4) {
        p1.pairs.push_back({b, b + 1});
        p1.pairs.push_back({b + 2, b + 3});
        p2.pairs.push_back({b, b + 2});
        p2.pairs.push_back({b + 1, b + 3});
    }
    return {p1, p2};
}

namespace {

VPattern head_pattern_1() {
    return {1, {{2, 3}, {4, 5}, {6, 7}, {8, 9}, {10, 11}, {12, 13}, {14, 15}}};
}
VPattern head_pattern_2() {
    return {2, {{1, 3}, {4, 6}, {5, 7}, {8, 10}, {9, 11}, {12, 14}, {13, 15}}};
}
VPattern cross_pattern_3() {  // third syndrome with its own singleton at 4
    return {4, {{1, 5}, {2, 6}, {3, 7}, {8, 12}, {9, 13}, {10, 14}, {11, 15}}};
}
VPattern sum_pattern_3() {  // third syndrome equal to s1 + s2
    return {3, {{1, 2}, {4, 7}, {5, 6}, {8, 11}, {9, 10}, {12, 15}, {13, 14}}};
}

}  // namespace

std::vector<VPattern> sigma_patterns_triple(TripleKind kind) {
    if (kind == TripleKind::A)
        return {head_pattern_1(), head_pattern_2(), cross_pattern_3()};
    return {head_pattern_1(), head_pattern_2(), sum_pattern_3()};
}

std::vector<VPattern> sigma_patterns_quad(QuadKind kind) {
    switch (kind) {
        case QuadKind::A:
            return {head_pattern_1(), head_pattern_2(), cross_pattern_3(),
                    {8, {{1, 9}, {2, 10}, {3, 11}, {4, 12}, {5, 13}, {6, 14}, {7, 15}}}};
        case QuadKind::B:
            return {head_pattern_1(), head_pattern_2(), sum_pattern_3(), cross_pattern_3()};
        default:
            return {head_pattern_1(), head_pattern_2(), cross_pattern_3(),
                    {7, {{1, 6}, {2, 5}, {3, 4}, {8, 15}, {9, 14}, {10, 13}, {11, 12}}}};
    }
}

bool check_sigma_single(const ParityCheckMatrix& H, const Syndrome& s, const Permutation& sigma) {
    return pattern_matches(H, s, sigma_patterns_single(H.n())[0], sigma);
}

bool check_sigma_pair(const ParityCheckMatrix& H, const Syndrome& s1, const Syndrome& s2,
                      const Permutation& sigma) {
    auto pats = sigma_patterns_pair(H.n());
    return pattern_matches(H, s1, pats[0], sigma) && pattern_matches(H, s2, pats[1], sigma);
}

bool check_sigma_triple(const ParityCheckMatrix& H, const Syndrome& s1, const Syndrome& s2,
                        const Syndrome& s3, TripleKind kind, const Permutation& sigma) {
    auto pats = sigma_patterns_triple(kind);
    return pattern_matches(H, s1, pats[0], sigma) && pattern_matches(H, s2, pats[1], sigma) &&
           pattern_matches(H, s3, pats[2], sigma);
}

bool check_sigma_quad(const ParityCheckMatrix& H, const Syndrome& s1, const Syndrome& s2,
                      const Syndrome& s3, const Syndrome& s4, QuadKind kind,
                      const std::array<int, 4>& tau, const Permutation& sigma) {
    auto pats = sigma_patterns_quad(kind);
    const std::array<Syndrome, 4> in{s1, s2, s3, s4};
    for (int k = 0; k < 4; ++k)
        if (!pattern_matches(H, in[tau[k] - 1], pats[k], sigma)) return false;
    return true;
}

}  // namespace rio
