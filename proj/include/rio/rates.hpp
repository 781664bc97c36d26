#pragma once

#include <string>
#include <vector>

namespace rio {

// One row of the sum-rate report: lt/n against the log2(t+1) ceiling.
struct SumRateRow {
    std::string name;
    int n, l, t;
    double sum_rate;
    double upper_bound;
};

// The two sequential codes and the two parallel codes built here.
std::vector<SumRateRow> sum_rate_table();

// Fixed-point truncation (not rounding) at `decimals` places with trailing
// zeros trimmed: 12.0/7 prints as "1.7142", log2(7) as "2.8073", 8.0/5 as
// "1.6", 2.0 as "2".
std::string format_rate(double value, int decimals = 4);

}  // namespace rio
