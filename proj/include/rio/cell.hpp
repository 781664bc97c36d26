#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rio/bitvec.hpp"

namespace rio {

// Programmed levels of n multilevel cells. q is carried explicitly: an
// all-zero state still belongs to a particular level count.
class CellState {
  public:
    CellState(std::vector<int> levels, int q);
    static CellState parse(std::string_view digits, int q);

    int q() const { return q_; }
    int size() const { return static_cast<int>(levels_.size()); }
    int level(int pos) const;  // 1-based
    const std::vector<int>& levels() const { return levels_; }

    // Digit string such as "021" for q <= 10; JSON-style array otherwise.
    std::string str() const;

    friend bool operator==(const CellState&, const CellState&) = default;

  private:
    std::vector<int> levels_;
    int q_ = 0;
};

// Binary read against threshold i: bit j is 1 iff level_j >= i.
BitVector read_threshold(const CellState& c, int i);

// Sums a monotone chain c_1 <= ... <= c_t into a cell state with q = t + 1.
CellState cell_from_chain(const std::vector<BitVector>& chain);

}  // namespace rio
