#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "rio/hamming.hpp"

using namespace rio;

TEST_CASE("canonical matrix for r=3") {
    ParityCheckMatrix H(3);
    CHECK(H.n() == 7);
    CHECK(H.row(1) == "1010101");
    CHECK(H.row(2) == "0110011");
    CHECK(H.row(3) == "0001111");
    CHECK(H.column(5).bits() == BitVector::parse("101"));
}

TEST_CASE("columns enumerate all nonzero vectors") {
    for (int r : {2, 3, 4, 5, 6}) {
        ParityCheckMatrix H(r);
        std::set<unsigned> seen;
        for (int j = 1; j <= H.n(); ++j) {
            const unsigned v = H.column(j).value();
            CHECK(v != 0);
            seen.insert(v);
        }
        CHECK(static_cast<int>(seen.size()) == H.n());
    }
    CHECK_THROWS_AS(ParityCheckMatrix(1), ParameterError);
    CHECK_THROWS_AS(ParityCheckMatrix(7), ParameterError);
}

TEST_CASE("syndromes of fixed vectors") {
    ParityCheckMatrix H(3);
    CHECK(H.syndrome(BitVector::parse("0000001")).str() == "111");
    CHECK(H.syndrome(BitVector::parse("0100010")).str() == "001");
    CHECK(H.syndrome(BitVector::zero(7)).is_zero());
    CHECK_THROWS_AS(H.syndrome(BitVector::zero(8)), DimensionError);
}

TEST_CASE("syndrome is linear") {
    ParityCheckMatrix H(4);
    std::mt19937_64 rng(23);
    for (int iter = 0; iter < 300; ++iter) {
        BitVector x(15, rng() & 0x7fff), y(15, rng() & 0x7fff);
        CHECK(H.syndrome(x ^ y) == (H.syndrome(x) ^ H.syndrome(y)));
    }
}

TEST_CASE("V families for r=3 match the known listing") {
    ParityCheckMatrix H(3);
    struct Fixture {
        const char* s;
        int singleton;
        std::vector<std::pair<int, int>> pairs;
    };
    const Fixture fixtures[] = {
        {"100", 1, {{2, 3}, {4, 5}, {6, 7}}}, {"010", 2, {{1, 3}, {4, 6}, {5, 7}}},
        {"110", 3, {{1, 2}, {4, 7}, {5, 6}}}, {"001", 4, {{1, 5}, {2, 6}, {3, 7}}},
        {"101", 5, {{1, 4}, {2, 7}, {3, 6}}}, {"011", 6, {{1, 7}, {2, 4}, {3, 5}}},
        {"111", 7, {{1, 6}, {2, 5}, {3, 4}}},
    };
    for (const auto& f : fixtures) {
        const VSet vs = v_set(H, Syndrome::parse(f.s));
        CHECK(vs.singleton == SupportSet::of({f.singleton}));
        REQUIRE(vs.pairs.size() == f.pairs.size());
        for (std::size_t k = 0; k < f.pairs.size(); ++k)
            CHECK(vs.pairs[k] == SupportSet::of({f.pairs[k].first, f.pairs[k].second}));
    }
}

TEST_CASE("V families agree with direct enumeration") {
    // Independent oracle: scan all singletons and pairs of columns.
    for (int r : {3, 4}) {
        ParityCheckMatrix H(r);
        for (unsigned sv = 1; sv < (1u << r); ++sv) {
            const Syndrome s(r, sv);
            const VSet vs = v_set(H, s);
            std::vector<SupportSet> expect;
            for (int j = 1; j <= H.n(); ++j)
                if (H.column(j) == s) expect.push_back(SupportSet({j}));
            CHECK(expect.size() == 1);
            for (int j1 = 1; j1 <= H.n(); ++j1)
                for (int j2 = j1 + 1; j2 <= H.n(); ++j2)
                    if ((H.column(j1) ^ H.column(j2)) == s)
                        expect.push_back(SupportSet({j1, j2}));
            auto actual = vs.members();
            std::sort(actual.begin(), actual.end());
            std::sort(expect.begin(), expect.end());
            CHECK(actual == expect);
            CHECK(vs.pairs.size() == (1u << (r - 1)) - 1);
        }
    }
}

TEST_CASE("zero syndrome has no V family") {
    ParityCheckMatrix H(3);
    CHECK_THROWS_AS(v_set(H, Syndrome(3, 0)), ParameterError);
}

TEST_CASE("syndrome parsing follows the row-first convention") {
    CHECK(Syndrome::parse("100").value() == 1);
    CHECK(Syndrome::parse("110").value() == 3);
    CHECK(Syndrome::parse("0001").value() == 8);
    CHECK(Syndrome::parse("110").str() == "110");
}
