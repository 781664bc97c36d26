#include <doctest.h>

#include <random>

#include "rio/bitvec.hpp"

using namespace rio;

TEST_CASE("xor basics") {
    CHECK((BitVector::parse("1010") ^ BitVector::parse("0110")) == BitVector::parse("1100"));
    const auto v = BitVector::parse("0100010");
    CHECK((v ^ v).is_zero());
    CHECK((v ^ BitVector::zero(7)) == v);
    CHECK_THROWS_AS(xor_bits(BitVector::parse("101"), BitVector::parse("1010")), DimensionError);
}

TEST_CASE("support extraction") {
    CHECK(support(BitVector::parse("0000001")) == SupportSet::of({7}));
    CHECK(support(BitVector::parse("0100010")) == SupportSet::of({2, 6}));
    CHECK(support(BitVector::zero(9)).empty());
    CHECK(from_support(7, SupportSet::of({2, 6})) == BitVector::parse("0100010"));
}

TEST_CASE("componentwise order") {
    CHECK(leq(BitVector::parse("010"), BitVector::parse("011")));
    CHECK_FALSE(leq(BitVector::parse("100"), BitVector::parse("011")));
    const auto v = BitVector::parse("0110");
    CHECK(leq(v, v));
    CHECK_THROWS_AS(leq(BitVector::parse("01"), BitVector::parse("011")), DimensionError);
}

TEST_CASE("disjointness") {
    CHECK(disjoint({SupportSet::of({7}), SupportSet::of({1}), SupportSet::of({3}),
                    SupportSet::of({5})}));
    CHECK_FALSE(disjoint({SupportSet::of({1, 2}), SupportSet::of({2, 3})}));
    CHECK(disjoint({SupportSet(), SupportSet()}));
}

TEST_CASE("string round trips and parse errors") {
    for (const char* s : {"0", "1", "0100010", "111111111111111"})
        CHECK(BitVector::parse(s).str() == s);
    CHECK_THROWS_AS(BitVector::parse(""), ParameterError);
    CHECK_THROWS_AS(BitVector::parse("01201"), ParameterError);
    CHECK_THROWS_AS(BitVector(70, 0), ParameterError);
}

TEST_CASE("xor algebra on random vectors") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 200; ++iter) {
        const int n = 1 + static_cast<int>(rng() % kMaxBits);
        const std::uint64_t cap = n == kMaxBits ? ~0ull >> 1 : (1ull << n) - 1;
        BitVector a(n, rng() & cap), b(n, rng() & cap), c(n, rng() & cap);
        CHECK((a ^ b) == (b ^ a));
        CHECK(((a ^ b) ^ c) == (a ^ (b ^ c)));
        CHECK((a ^ a).is_zero());

        // support(a ^ b) is the symmetric difference of the supports
        const auto sym = support(a ^ b);
        std::vector<int> expect;
        for (int p = 1; p <= n; ++p)
            if (a.get(p) != b.get(p)) expect.push_back(p);
        CHECK(sym == SupportSet(expect));
    }
}

TEST_CASE("leq is a partial order") {
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 500; ++iter) {
        const int n = 1 + static_cast<int>(rng() % 16);
        const std::uint64_t cap = (1ull << n) - 1;
        BitVector a(n, rng() & cap), b(n, rng() & cap), c(n, rng() & cap);
        CHECK(leq(a, a));
        if (leq(a, b) && leq(b, a)) CHECK(a == b);
        if (leq(a, b) && leq(b, c)) CHECK(leq(a, c));
    }
}
