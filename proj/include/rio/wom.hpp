#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rio/hamming.hpp"

namespace rio {

// Coset-coding write: returns c + x where x has syndrome d - cH^T and a
// support disjoint from the programmed cells. Among the admissible x the
// minimum-weight one is chosen, ties broken by lexicographically smallest
// support. Throws CapacityError when no admissible x exists.
BitVector wom_encode(const ParityCheckMatrix& H, const Syndrome& d, const BitVector& c);

// Coset-coding read: cH^T.
Syndrome wom_decode(const ParityCheckMatrix& H, const BitVector& c);

struct WomCounterexample {
    BitVector state;
    int depth = 0;  // writes already performed when the datum became unwritable
    Syndrome datum;
};

struct WomReport {
    bool guaranteed = false;
    std::optional<WomCounterexample> counterexample;
    std::uint64_t states_explored = 0;
    // Number of states from which k more writes can always be served,
    // indexed k = 0..t.
    std::vector<std::uint64_t> safe_states_per_round;
};

// Decides whether t writes can always be served starting from the all-zero
// state, for every data sequence. The write guarantee is a property of the
// code, not of any particular choice rule, so this checks the existence of
// an admissible x at every step by backward induction over all states: a
// state can serve k more writes iff for every datum some admissible x leads
// to a state that can serve k-1 more.
WomReport verify_write_guarantee(const ParityCheckMatrix& H, int t);

// The classic 3-cell, 2-bit, 2-write table code.
// First write: 00->000, 01->100, 10->010, 11->001.
// Second write: 00->111, 01->011, 10->101, 11->110, with two exceptions: a
// datum equal to the currently stored one leaves the state unchanged, and a
// second write onto untouched cells reuses the first-write codeword.
BitVector rs322_encode(const BitVector& data, const BitVector& state, int write_index);
BitVector rs322_decode(const BitVector& state);

}  // namespace rio
