#include "rio/wom.hpp"

#include <algorithm>
#include <array>
#include <bit>

namespace rio {

namespace {

// Enumerates supports of the free positions by ascending weight, lex order
// within a weight, and returns the first one whose columns XOR to target.
std::optional<std::uint64_t> smallest_patch(const ParityCheckMatrix& H, std::uint64_t free_mask,
                                            unsigned target) {
    if (target == 0) return std::uint64_t{0};
    std::vector<int> free_pos;
    for (int j = 1; j <= H.n(); ++j)
        if ((free_mask >> (j - 1)) & 1) free_pos.push_back(j);
    const int m = static_cast<int>(free_pos.size());
    for (int w = 1; w <= m; ++w) {
        std::vector<int> comb(w);
        for (int i = 0; i < w; ++i) comb[i] = i;
        while (true) {
            unsigned s = 0;
            std::uint64_t mask = 0;
            for (int i : comb) {
                s ^= static_cast<unsigned>(free_pos[i]);
                mask |= std::uint64_t{1} << (free_pos[i] - 1);
            }
            if (s == target) return mask;
            int i = w - 1;
            while (i >= 0 && comb[i] == m - w + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int k = i + 1; k < w; ++k) comb[k] = comb[k - 1] + 1;
        }
    }
    return std::nullopt;
}

}  // namespace

BitVector wom_encode(const ParityCheckMatrix& H, const Syndrome& d, const BitVector& c) {
    if (c.length() != H.n())
        throw DimensionError("wom_encode: state length must equal the code length");
    if (d.r() != H.r())
        throw DimensionError("wom_encode: datum width must equal r");
    const unsigned target = d.value() ^ H.syndrome_of_mask(c.mask());
    const std::uint64_t free_mask = ~c.mask() & ((std::uint64_t{1} << H.n()) - 1);
    auto patch = smallest_patch(H, free_mask, target);
    if (!patch)
        throw CapacityError("wom_encode: memory is full for datum " + d.str());
    return BitVector(H.n(), c.mask() | *patch);
}

Syndrome wom_decode(const ParityCheckMatrix& H, const BitVector& c) {
    return H.syndrome(c);
}

WomReport verify_write_guarantee(const ParityCheckMatrix& H, int t) {
    if (t < 1)
        throw ParameterError("verify_write_guarantee needs t >= 1");
    if (H.r() > 4)
        throw ParameterError("verify_write_guarantee enumerates all states; r <= 4 only");
    const int n = H.n();
    const int r = H.r();
    const std::uint64_t nstates = std::uint64_t{1} << n;
    const unsigned full = (1u << (1u << r)) - 1u;  // one bit per possible datum

    // Column j equals j, so the syndrome of a mask folds index values.
    std::vector<unsigned> synd(nstates);
    synd[0] = 0;
    for (std::uint64_t m = 1; m < nstates; ++m)
        synd[m] = synd[m & (m - 1)] ^ static_cast<unsigned>(std::countr_zero(m) + 1);

    WomReport report;
    // safe[k][c]: from state c, k more writes can always be served.
    std::vector<std::vector<bool>> safe(static_cast<std::size_t>(t) + 1);
    safe[0].assign(nstates, true);
    report.safe_states_per_round.push_back(nstates);

    for (int k = 1; k <= t; ++k) {
        const auto& prev = safe[k - 1];
        auto& cur = safe[k];
        cur.assign(nstates, false);
        std::uint64_t safe_count = 0;
        for (std::uint64_t c = 0; c < nstates; ++c) {
            const std::uint64_t free_mask = ~c & (nstates - 1);
            // Which data are reachable through some patch that stays safe?
            // Writing datum d needs a patch with syndrome d ^ synd[c]; as d
            // runs over all values so does the required patch syndrome, so
            // the state is safe iff every patch syndrome is achieved.
            unsigned achieved = 0;
            std::uint64_t x = free_mask;
            while (true) {
                if (prev[c | x]) {
                    achieved |= 1u << synd[x];
                    if (achieved == full) break;
                }
                if (x == 0) break;
                x = (x - 1) & free_mask;
            }
            report.states_explored++;
            if (achieved == full) {
                cur[c] = true;
                ++safe_count;
            }
        }
        report.safe_states_per_round.push_back(safe_count);
    }

    report.guaranteed = safe[t][0];
    if (!report.guaranteed) {
        // Walk an adversarial play down to a state where some datum has no
        // admissible patch at all.
        std::uint64_t c = 0;
        for (int k = t; k >= 1; --k) {
            const auto& prev = safe[k - 1];
            const std::uint64_t free_mask = ~c & (nstates - 1);
            unsigned achieved_at_all = 0, achieved_safe = 0;
            std::uint64_t x = free_mask;
            while (true) {
                achieved_at_all |= 1u << synd[x];
                if (prev[c | x]) achieved_safe |= 1u << synd[x];
                if (x == 0) break;
                x = (x - 1) & free_mask;
            }
            unsigned dead = ~achieved_at_all & full;
            if (dead) {
                const unsigned datum = static_cast<unsigned>(std::countr_zero(dead)) ^ synd[c];
                report.counterexample =
                    WomCounterexample{BitVector(n, c), t - k, Syndrome(r, datum)};
                break;
            }
            // Every datum is writable here, so the loss lies deeper: follow
            // a datum whose every admissible patch leads to an unsafe state.
            const unsigned bad = ~achieved_safe & full;
            const unsigned want = static_cast<unsigned>(std::countr_zero(bad));
            std::uint64_t step = free_mask;
            std::uint64_t best = free_mask;
            while (true) {
                if (synd[step] == want) best = step;
                if (step == 0) break;
                step = (step - 1) & free_mask;
            }
            c |= best;
        }
    }
    return report;
}

namespace {

// Index = datum value under the position-1-first convention: "10" parses to
// value 1 and maps to cells "010" (mask 2); "01" parses to value 2 and maps
// to "100" (mask 1). Second-write codewords are the complements.
constexpr std::array<std::uint64_t, 4> kFirstWrite{0b000, 0b010, 0b001, 0b100};
constexpr std::array<std::uint64_t, 4> kSecondWrite{0b111, 0b101, 0b110, 0b011};

unsigned datum_of_state(std::uint64_t m) {
    const unsigned v1 = m & 1, v2 = (m >> 1) & 1, v3 = (m >> 2) & 1;
    return (v2 ^ v3) | ((v1 ^ v3) << 1);
}

}  // namespace

BitVector rs322_encode(const BitVector& data, const BitVector& state, int write_index) {
    if (data.length() != 2)
        throw DimensionError("rs322_encode: datum must be 2 bits");
    if (state.length() != 3)
        throw DimensionError("rs322_encode: state must be 3 cells");
    const unsigned d = static_cast<unsigned>(data.mask());
    if (write_index == 1) {
        if (!state.is_zero())
            throw ParameterError("rs322_encode: first write starts from 000");
        return BitVector(3, kFirstWrite[d]);
    }
    if (write_index != 2)
        throw ParameterError("rs322_encode: write index must be 1 or 2");
    const std::uint64_t m = state.mask();
    if (std::popcount(m) > 1)
        throw ParameterError("rs322_encode: second write starts from a first-write codeword");
    if (datum_of_state(m) == d) return state;     // same datum, leave unchanged
    if (m == 0) return BitVector(3, kFirstWrite[d]);  // untouched cells take the cheap codeword
    return BitVector(3, kSecondWrite[d]);
}

BitVector rs322_decode(const BitVector& state) {
    if (state.length() != 3)
        throw DimensionError("rs322_decode: state must be 3 cells");
    return BitVector(2, datum_of_state(state.mask()));
}

}  // namespace rio
