#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rio/errors.hpp"

namespace rio {

// Largest supported vector length. One machine word covers every code in
// scope (n = 3, 7, 15), so there is no sparse path.
inline constexpr int kMaxBits = 63;

// Fixed-length vector over GF(2). Positions are 1-based; position p is
// stored in bit (p-1) of the mask, so the string form prints position 1
// first ("0100010" has positions 2 and 6 set). Immutable after construction.
class BitVector {
  public:
    BitVector() = default;
    BitVector(int length, std::uint64_t mask);

    // Parses a bit string such as "0100010" (position 1 leftmost).
    static BitVector parse(std::string_view text);
    static BitVector zero(int length) { return BitVector(length, 0); }

    int length() const { return length_; }
    std::uint64_t mask() const { return mask_; }
    bool get(int pos) const;
    int weight() const;
    bool is_zero() const { return mask_ == 0; }

    std::string str() const;

    friend bool operator==(const BitVector&, const BitVector&) = default;

  private:
    int length_ = 0;
    std::uint64_t mask_ = 0;
};

// The set of 1-positions of some vector, kept sorted ascending.
class SupportSet {
  public:
    SupportSet() = default;
    explicit SupportSet(std::vector<int> indices);
    static SupportSet of(std::initializer_list<int> indices);

    const std::vector<int>& indices() const { return indices_; }
    std::size_t size() const { return indices_.size(); }
    bool empty() const { return indices_.empty(); }
    std::uint64_t mask() const;

    std::string str() const;

    friend bool operator==(const SupportSet&, const SupportSet&) = default;
    friend bool operator<(const SupportSet& a, const SupportSet& b) {
        return a.indices_ < b.indices_;
    }

  private:
    std::vector<int> indices_;
};

// Componentwise XOR; lengths must agree.
BitVector xor_bits(const BitVector& a, const BitVector& b);
inline BitVector operator^(const BitVector& a, const BitVector& b) {
    return xor_bits(a, b);
}

SupportSet support(const BitVector& v);
BitVector from_support(int length, const SupportSet& s);

// True iff a_i <= b_i for every position.
bool leq(const BitVector& a, const BitVector& b);

// True iff the sets are pairwise disjoint.
bool disjoint(const std::vector<SupportSet>& sets);

}  // namespace rio
