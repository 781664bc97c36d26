#include <doctest.h>

#include <random>

#include "rio/cell.hpp"

using namespace rio;

TEST_CASE("threshold reads of a fixed state") {
    const auto c = CellState::parse("021", 3);
    CHECK(read_threshold(c, 1) == BitVector::parse("011"));
    CHECK(read_threshold(c, 2) == BitVector::parse("010"));
    CHECK_THROWS_AS(read_threshold(c, 0), ParameterError);
    CHECK_THROWS_AS(read_threshold(c, 3), ParameterError);

    const CellState zero(std::vector<int>(5, 0), 4);
    for (int i = 1; i <= 3; ++i) CHECK(read_threshold(zero, i).is_zero());
}

TEST_CASE("summing a chain") {
    CHECK(cell_from_chain({BitVector::parse("010"), BitVector::parse("011")}) ==
          CellState::parse("021", 3));
    CHECK(cell_from_chain({BitVector::zero(3), BitVector::zero(3)}) == CellState::parse("000", 3));

    const auto c = cell_from_chain({BitVector::parse("0000001"), BitVector::parse("1000001"),
                                    BitVector::parse("1010001"), BitVector::parse("1010101")});
    CHECK(c.str() == "3020104");
    CHECK(c.q() == 5);

    CHECK_THROWS_AS(cell_from_chain({BitVector::parse("010"), BitVector::parse("001")}),
                    ChainError);
    CHECK_THROWS_AS(cell_from_chain({}), ParameterError);
}

namespace {

std::vector<BitVector> random_chain(std::mt19937_64& rng, int n, int t) {
    std::vector<BitVector> chain;
    std::uint64_t acc = 0;
    const std::uint64_t cap = (1ull << n) - 1;
    for (int k = 0; k < t; ++k) {
        acc |= rng() & cap;
        chain.push_back(BitVector(n, acc));
    }
    return chain;
}

}  // namespace

TEST_CASE("threshold reads invert chain sums, exhaustively for n=3 t=2") {
    for (std::uint64_t m1 = 0; m1 < 8; ++m1) {
        for (std::uint64_t m2 = 0; m2 < 8; ++m2) {
            if (m1 & ~m2) continue;  // not monotone
            const std::vector<BitVector> chain{BitVector(3, m1), BitVector(3, m2)};
            const CellState c = cell_from_chain(chain);
            CHECK(read_threshold(c, 2) == chain[0]);
            CHECK(read_threshold(c, 1) == chain[1]);
        }
    }
}

TEST_CASE("threshold reads invert random chains") {
    std::mt19937_64 rng(31);
    for (auto [n, t] : {std::pair{7, 4}, std::pair{15, 8}}) {
        for (int iter = 0; iter < 500; ++iter) {
            const auto chain = random_chain(rng, n, t);
            const CellState c = cell_from_chain(chain);
            for (int i = 1; i <= t; ++i)
                CHECK(read_threshold(c, t + 1 - i) == chain[i - 1]);
        }
    }
}

TEST_CASE("reads shrink as the threshold rises") {
    std::mt19937_64 rng(37);
    for (int iter = 0; iter < 200; ++iter) {
        std::vector<int> levels(7);
        for (auto& lv : levels) lv = static_cast<int>(rng() % 5);
        const CellState c(levels, 5);
        for (int i = 1; i < 4; ++i)
            CHECK(leq(read_threshold(c, i + 1), read_threshold(c, i)));
    }
}

TEST_CASE("state validation and printing") {
    CHECK_THROWS_AS(CellState({0, 3, 1}, 3), ParameterError);
    CHECK_THROWS_AS(CellState::parse("0a1", 3), ParameterError);
    CHECK(CellState({0, 2, 1}, 3).str() == "021");
    CHECK(CellState({0, 11}, 12).str() == "[0,11]");
}
