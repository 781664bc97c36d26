#include "rio/hamming.hpp"

#include <algorithm>
#include <bit>

namespace rio {

Syndrome::Syndrome(int r, unsigned value) : r_(r), value_(value) {
    if (r < 1 || r > 16)
        throw ParameterError("syndrome width out of range: " + std::to_string(r));
    if (value >> r)
        throw ParameterError("syndrome value does not fit in " + std::to_string(r) + " bits");
}

Syndrome Syndrome::parse(std::string_view text) {
    BitVector v = BitVector::parse(text);
    return Syndrome(v.length(), static_cast<unsigned>(v.mask()));
}

Syndrome Syndrome::from_bits(const BitVector& bits) {
    return Syndrome(bits.length(), static_cast<unsigned>(bits.mask()));
}

Syndrome Syndrome::operator^(const Syndrome& other) const {
    if (r_ != other.r_)
        throw DimensionError("syndrome xor: width mismatch");
    return Syndrome(r_, value_ ^ other.value_);
}

ParityCheckMatrix::ParityCheckMatrix(int r) : r_(r), n_((1 << r) - 1) {
    if (r < 2 || r > 6)
        throw ParameterError("parity-check matrix needs 2 <= r <= 6, got " + std::to_string(r));
}

Syndrome ParityCheckMatrix::column(int j) const {
    if (j < 1 || j > n_)
        throw ParameterError("column index out of range: " + std::to_string(j));
    return Syndrome(r_, static_cast<unsigned>(j));
}

std::string ParityCheckMatrix::row(int i) const {
    if (i < 1 || i > r_)
        throw ParameterError("row index out of range: " + std::to_string(i));
    std::string out(static_cast<std::size_t>(n_), '0');
    for (int j = 1; j <= n_; ++j)
        if ((j >> (i - 1)) & 1) out[j - 1] = '1';
    return out;
}

Syndrome ParityCheckMatrix::syndrome(const BitVector& x) const {
    if (x.length() != n_)
        throw DimensionError("syndrome: vector length must equal the code length");
    return Syndrome(r_, syndrome_of_mask(x.mask()));
}

unsigned ParityCheckMatrix::syndrome_of_mask(std::uint64_t mask) const {
    unsigned s = 0;
    while (mask) {
        int j = std::countr_zero(mask) + 1;
        s ^= static_cast<unsigned>(j);
        mask &= mask - 1;
    }
    return s;
}

std::vector<SupportSet> VSet::members() const {
    std::vector<SupportSet> out;
    out.reserve(1 + pairs.size());
    out.push_back(singleton);
    out.insert(out.end(), pairs.begin(), pairs.end());
    return out;
}

bool VSet::contains(const SupportSet& m) const {
    if (m == singleton) return true;
    return std::binary_search(pairs.begin(), pairs.end(), m);
}

VSet v_set(const ParityCheckMatrix& H, const Syndrome& s) {
    if (s.r() != H.r())
        throw DimensionError("v_set: syndrome width must equal r");
    if (s.is_zero())
        throw ParameterError("v_set: the zero syndrome has no V-family");
    const int n = H.n();
    const int sv = static_cast<int>(s.value());
    VSet out;
    out.s = s;
    out.singleton = SupportSet({sv});
    for (int j1 = 1; j1 <= n; ++j1) {
        int j2 = j1 ^ sv;
        if (j2 > j1 && j2 <= n)
            out.pairs.push_back(SupportSet({j1, j2}));
    }
    return out;
}

}  // namespace rio
