#include <doctest.h>

#include "rio/rates.hpp"

using namespace rio;

TEST_CASE("rate formatting truncates and trims") {
    CHECK(format_rate(12.0 / 7.0) == "1.7142");
    CHECK(format_rate(9.0 / 7.0) == "1.2857");
    CHECK(format_rate(24.0 / 15.0) == "1.6");
    CHECK(format_rate(32.0 / 15.0) == "2.1333");
    CHECK(format_rate(2.0) == "2");
    CHECK(format_rate(0.0) == "0");
}

TEST_CASE("table rows and bounds") {
    const auto rows = sum_rate_table();
    REQUIRE(rows.size() == 4);

    CHECK(rows[0].name == "[7,3,3] RIO");
    CHECK(format_rate(rows[0].sum_rate) == "1.2857");
    CHECK(format_rate(rows[0].upper_bound) == "2");

    CHECK(rows[1].name == "[7,3,4] P-RIO");
    CHECK(format_rate(rows[1].sum_rate) == "1.7142");
    CHECK(format_rate(rows[1].upper_bound) == "2.3219");

    CHECK(rows[2].name == "[15,4,6] RIO");
    CHECK(format_rate(rows[2].sum_rate) == "1.6");
    CHECK(format_rate(rows[2].upper_bound) == "2.8073");

    CHECK(rows[3].name == "[15,4,8] P-RIO");
    CHECK(format_rate(rows[3].sum_rate) == "2.1333");
    CHECK(format_rate(rows[3].upper_bound) == "3.1699");

    for (const auto& r : rows) CHECK(r.sum_rate <= r.upper_bound);
}
