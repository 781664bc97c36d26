#pragma once

#include <vector>

#include "rio/cell.hpp"
#include "rio/hamming.hpp"
#include "rio/sigma.hpp"

namespace rio {

// One of the two code instances built here: eight 4-bit pages in 15 cells,
// or four 3-bit pages in 7 cells.
struct PRioCode {
    int r;
    int n;  // 2^r - 1 cells
    int l;  // data bits per page (= r)
    int t;  // page count
    ParityCheckMatrix H;

    static PRioCode make(int r);
};

// Pages d_1..d_t, each an l-bit vector.
using PageSet = std::vector<BitVector>;

// Per-page cell supports I(x_1)..I(x_t), each of size 0, 1, or 2.
struct SupportAssignment {
    std::vector<SupportSet> supports;
};

// s_i = d_i + d_{i-1} with d_0 = 0.
std::vector<Syndrome> syndromes_from_pages(const PRioCode& code, const PageSet& pages);

// True iff every support's columns XOR to its syndrome (empty support for a
// zero syndrome) and the supports are pairwise disjoint.
bool check_solution(const ParityCheckMatrix& H, const std::vector<Syndrome>& s,
                    const SupportAssignment& a);

// Constructive support solvers. Every syndrome list must succeed; an input
// that escapes the dispatch tables raises DispatchError naming the profile.
SupportAssignment solve_supports_7_3_4(const ParityCheckMatrix& H,
                                       const std::vector<Syndrome>& s);
SupportAssignment solve_supports_15_4_8(const ParityCheckMatrix& H,
                                        const std::vector<Syndrome>& s);
SupportAssignment solve_supports(const PRioCode& code, const std::vector<Syndrome>& s);

// Full write path: syndromes, supports, cumulative page codewords, summed
// cell state with q = t + 1.
CellState prio_encode(const PRioCode& code, const PageSet& pages);

// Page i is the syndrome of the threshold-(t+1-i) read.
BitVector prio_decode_page(const PRioCode& code, const CellState& cell, int page);

}  // namespace rio
