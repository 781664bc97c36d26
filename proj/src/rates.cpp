#include "rio/rates.hpp"

#include <cmath>
#include <cstdint>

namespace rio {

std::vector<SumRateRow> sum_rate_table() {
    auto row = [](std::string name, int n, int l, int t) {
        return SumRateRow{std::move(name), n, l, t, double(l) * t / n, std::log2(t + 1.0)};
    };
    return {
        row("[7,3,3] RIO", 7, 3, 3),
        row("[7,3,4] P-RIO", 7, 3, 4),
        row("[15,4,6] RIO", 15, 4, 6),
        row("[15,4,8] P-RIO", 15, 4, 8),
    };
}

std::string format_rate(double value, int decimals) {
    double scale = 1;
    for (int i = 0; i < decimals; ++i) scale *= 10;
    // Truncate toward zero; nudge by half an ulp-equivalent so exact values
    // such as 2.0 or 1.6 are not pulled below their decimal representation.
    auto scaled = static_cast<std::int64_t>(value * scale + (value >= 0 ? 1e-7 : -1e-7));
    std::string digits = std::to_string(scaled < 0 ? -scaled : scaled);
    while (digits.size() <= static_cast<std::size_t>(decimals)) digits.insert(0, "0");
    std::string out = (scaled < 0 ? "-" : "");
    out += digits.substr(0, digits.size() - decimals);
    std::string frac = digits.substr(digits.size() - decimals);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (!frac.empty()) out += "." + frac;
    return out;
}

}  // namespace rio
