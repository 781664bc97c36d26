#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rio/bitvec.hpp"

namespace rio {

// An r-bit syndrome. The value doubles as a column index of the canonical
// parity-check matrix: column j holds the binary expansion of j with row 1
// storing the least significant bit, so h_j == j as an integer. Strings
// print row 1 first ("110" has rows 1 and 2 set, value 3).
class Syndrome {
  public:
    Syndrome() = default;
    Syndrome(int r, unsigned value);
    static Syndrome parse(std::string_view text);
    static Syndrome from_bits(const BitVector& bits);

    int r() const { return r_; }
    unsigned value() const { return value_; }
    bool is_zero() const { return value_ == 0; }
    BitVector bits() const { return BitVector(r_, value_); }
    std::string str() const { return bits().str(); }

    Syndrome operator^(const Syndrome& other) const;
    friend bool operator==(const Syndrome&, const Syndrome&) = default;

  private:
    int r_ = 0;
    unsigned value_ = 0;
};

// Parity-check matrix of the (2^r - 1, 2^r - r - 1) Hamming code whose
// columns enumerate every nonzero r-bit vector in index order.
class ParityCheckMatrix {
  public:
    explicit ParityCheckMatrix(int r);

    int r() const { return r_; }
    int n() const { return n_; }

    Syndrome column(int j) const;
    // Row as a bit string across columns 1..n (for display/export).
    std::string row(int i) const;

    // c H^T, i.e. the XOR of the columns indexed by the support of x.
    Syndrome syndrome(const BitVector& x) const;
    unsigned syndrome_of_mask(std::uint64_t mask) const;

  private:
    int r_ = 0;
    int n_ = 0;
};

// The family V(s): every singleton {j} with h_j = s and every pair
// {j1, j2} with h_j1 + h_j2 = s. For nonzero s this is exactly one
// singleton plus 2^(r-1) - 1 pairs.
struct VSet {
    Syndrome s;
    SupportSet singleton;
    std::vector<SupportSet> pairs;  // sorted by (min, max)

    // Singleton first, then pairs.
    std::vector<SupportSet> members() const;
    bool contains(const SupportSet& m) const;
};

VSet v_set(const ParityCheckMatrix& H, const Syndrome& s);

}  // namespace rio
