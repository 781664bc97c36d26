#include "rio/bitvec.hpp"

#include <algorithm>
#include <bit>

namespace rio {

BitVector::BitVector(int length, std::uint64_t mask) : length_(length), mask_(mask) {
    if (length < 0 || length > kMaxBits)
        throw ParameterError("BitVector length out of range: " + std::to_string(length));
    if ((mask >> length) != 0)
        throw ParameterError("BitVector mask has bits beyond its length");
}

BitVector BitVector::parse(std::string_view text) {
    if (text.empty() || text.size() > static_cast<std::size_t>(kMaxBits))
        throw ParameterError("bit string length out of range");
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '1')
            mask |= std::uint64_t{1} << i;
        else if (text[i] != '0')
            throw ParameterError("bit string may contain only '0' and '1'");
    }
    return BitVector(static_cast<int>(text.size()), mask);
}

bool BitVector::get(int pos) const {
    if (pos < 1 || pos > length_)
        throw ParameterError("position out of range: " + std::to_string(pos));
    return (mask_ >> (pos - 1)) & 1;
}

int BitVector::weight() const { return std::popcount(mask_); }

std::string BitVector::str() const {
    std::string out(static_cast<std::size_t>(length_), '0');
    for (int p = 1; p <= length_; ++p)
        if ((mask_ >> (p - 1)) & 1) out[p - 1] = '1';
    return out;
}

SupportSet::SupportSet(std::vector<int> indices) : indices_(std::move(indices)) {
    std::sort(indices_.begin(), indices_.end());
    indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
    if (!indices_.empty() && (indices_.front() < 1 || indices_.back() > kMaxBits))
        throw ParameterError("support index out of range");
}

SupportSet SupportSet::of(std::initializer_list<int> indices) {
    return SupportSet(std::vector<int>(indices));
}

std::uint64_t SupportSet::mask() const {
    std::uint64_t m = 0;
    for (int i : indices_) m |= std::uint64_t{1} << (i - 1);
    return m;
}

std::string SupportSet::str() const {
    std::string out = "{";
    for (std::size_t k = 0; k < indices_.size(); ++k) {
        if (k) out += ",";
        out += std::to_string(indices_[k]);
    }
    out += "}";
    return out;
}

BitVector xor_bits(const BitVector& a, const BitVector& b) {
    if (a.length() != b.length())
        throw DimensionError("xor: length mismatch");
    return BitVector(a.length(), a.mask() ^ b.mask());
}

SupportSet support(const BitVector& v) {
    std::vector<int> idx;
    for (int p = 1; p <= v.length(); ++p)
        if (v.get(p)) idx.push_back(p);
    return SupportSet(std::move(idx));
}

BitVector from_support(int length, const SupportSet& s) {
    if (!s.empty() && s.indices().back() > length)
        throw ParameterError("support index exceeds vector length");
    return BitVector(length, s.mask());
}

bool leq(const BitVector& a, const BitVector& b) {
    if (a.length() != b.length())
        throw DimensionError("leq: length mismatch");
    return (a.mask() & ~b.mask()) == 0;
}

bool disjoint(const std::vector<SupportSet>& sets) {
    std::uint64_t seen = 0;
    for (const auto& s : sets) {
        std::uint64_t m = s.mask();
        if (seen & m) return false;
        seen |= m;
    }
    return true;
}

}  // namespace rio
