#include "rio/cell.hpp"

namespace rio {

CellState::CellState(std::vector<int> levels, int q) : levels_(std::move(levels)), q_(q) {
    if (q < 1)
        throw ParameterError("cell state needs q >= 1");
    if (levels_.empty() || levels_.size() > static_cast<std::size_t>(kMaxBits))
        throw ParameterError("cell count out of range");
    for (int lv : levels_)
        if (lv < 0 || lv > q - 1)
            throw ParameterError("cell level out of range: " + std::to_string(lv));
}

CellState CellState::parse(std::string_view digits, int q) {
    if (q > 10)
        throw ParameterError("digit-string parsing needs q <= 10");
    std::vector<int> levels;
    levels.reserve(digits.size());
    for (char ch : digits) {
        if (ch < '0' || ch > '9')
            throw ParameterError("cell state digits must be 0-9");
        levels.push_back(ch - '0');
    }
    return CellState(std::move(levels), q);
}

int CellState::level(int pos) const {
    if (pos < 1 || pos > size())
        throw ParameterError("cell position out of range: " + std::to_string(pos));
    return levels_[pos - 1];
}

std::string CellState::str() const {
    if (q_ <= 10) {
        std::string out;
        out.reserve(levels_.size());
        for (int lv : levels_) out.push_back(static_cast<char>('0' + lv));
        return out;
    }
    std::string out = "[";
    for (std::size_t k = 0; k < levels_.size(); ++k) {
        if (k) out += ",";
        out += std::to_string(levels_[k]);
    }
    return out + "]";
}

BitVector read_threshold(const CellState& c, int i) {
    if (i < 1 || i > c.q() - 1)
        throw ParameterError("read threshold out of range: " + std::to_string(i));
    std::uint64_t mask = 0;
    for (int p = 1; p <= c.size(); ++p)
        if (c.level(p) >= i) mask |= std::uint64_t{1} << (p - 1);
    return BitVector(c.size(), mask);
}

CellState cell_from_chain(const std::vector<BitVector>& chain) {
    if (chain.empty())
        throw ParameterError("chain must contain at least one vector");
    const int n = chain.front().length();
    std::vector<int> levels(static_cast<std::size_t>(n), 0);
    for (std::size_t k = 0; k < chain.size(); ++k) {
        if (chain[k].length() != n)
            throw DimensionError("chain vectors must share one length");
        if (k > 0 && !leq(chain[k - 1], chain[k]))
            throw ChainError("chain is not monotone at write " + std::to_string(k + 1));
        for (int p = 1; p <= n; ++p)
            if (chain[k].get(p)) ++levels[p - 1];
    }
    return CellState(std::move(levels), static_cast<int>(chain.size()) + 1);
}

}  // namespace rio
