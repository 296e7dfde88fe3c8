#include "doctest.h"

#include "corpus.hpp"
#include "oracles.hpp"
#include "paramhom/levelset.hpp"
#include "paramhom/zigzag.hpp"

using namespace paramhom;

namespace
{

PrimeField const f2(2);
auto const fwd = ArrowDirection::forward;
auto const bwd = ArrowDirection::backward;

ZigzagModule line(std::vector<std::uint32_t> const& maps, std::vector<ArrowDirection> const& dirs)
{
    std::vector<ZigzagArrow> arrows;
    for (std::size_t i = 0; i < maps.size(); ++i)
        arrows.push_back({dirs[i], Matrix::from_rows({{maps[i]}}, f2)});
    return ZigzagModule(std::vector<std::size_t>(maps.size() + 1, 1), arrows, f2);
}

ZigzagModule circle_h0()
{
    return levelset_zigzag(corpus::circle(), 0, f2).module;
}

} // namespace

TEST_SUITE("zigzag")
{
    TEST_CASE("module shapes are checked")
    {
        CHECK_THROWS_AS(ZigzagModule({1, 1}, {{fwd, Matrix(2, 1, f2)}}, f2), ContractError);
        CHECK_THROWS_AS(ZigzagModule({1, 1}, {}, f2), ContractError);
        CHECK_THROWS_AS(ZigzagModule::interval_module({fwd}, 2, 1, f2), ContractError);
    }

    TEST_CASE("limit to colimit rank examples")
    {
        auto const i14 = ZigzagModule::interval_module({fwd, bwd, fwd}, 1, 4, f2);
        for (std::size_t p = 1; p <= 4; ++p)
            for (std::size_t q = p; q <= 4; ++q)
                CHECK(limit_colimit_rank(i14, p, q) == 1);
        CHECK(limit_colimit_rank(line({0}, {fwd}), 1, 2) == 0);
        auto const c = circle_h0();
        CHECK(c.dims() == std::vector<std::size_t>{0, 1, 2, 1, 0});
        CHECK(limit_colimit_rank(c, 2, 4) == 1);
    }

    TEST_CASE("the rank table matches the literal construction")
    {
        Rng rng(3);
        for (int trial = 0; trial < 60; ++trial) {
            PrimeField const f(trial % 2 == 0 ? 2 : 3);
            auto const z = corpus::random_zigzag(rng, 1 + trial % 6, 3, f);
            auto const table = limit_colimit_rank_table(z);
            for (std::size_t p = 1; p <= z.length(); ++p)
                for (std::size_t q = p; q <= z.length(); ++q)
                    CHECK(table[p][q] == limit_colimit_rank(z, p, q));
        }
    }

    TEST_CASE("decomposition examples")
    {
        auto const i23 = ZigzagModule::interval_module({fwd, bwd}, 2, 3, f2);
        CHECK(decompose(i23) == IntervalMultiset{{{2, 3}, 1}});
        CHECK(decompose(line({1, 1}, {fwd, fwd})) == IntervalMultiset{{{1, 3}, 1}});
        CHECK(decompose(circle_h0()) == IntervalMultiset{{{2, 4}, 1}, {{3, 3}, 1}});
    }

    TEST_CASE("multiplicity examples")
    {
        auto const sum = ZigzagModule::direct_sum(ZigzagModule::interval_module({fwd}, 1, 1, f2),
                                                  ZigzagModule::interval_module({fwd}, 1, 2, f2));
        CHECK(multiplicity(sum, {1, 1}) == 1);
        CHECK(multiplicity(sum, {1, 2}) == 1);
        CHECK(multiplicity(sum, {2, 2}) == 0);
        CHECK(multiplicity(circle_h0(), {3, 3}) == 1);
    }

    TEST_CASE("coarsening examples")
    {
        auto const ids = coarsen(line({1, 1}, {fwd, fwd}), 2);
        CHECK(ids == line({1}, {fwd}));
        auto const zero = coarsen(line({0, 1}, {fwd, fwd}), 2);
        CHECK(zero.arrows()[0].matrix.is_zero());
        CHECK_THROWS_AS(coarsen(circle_h0(), 3), ContractError);
        CHECK_THROWS_AS(coarsen(line({1, 1}, {fwd, fwd}), 1), ContractError);
    }

    TEST_CASE("dualization examples")
    {
        auto const i = ZigzagModule::interval_module({fwd, bwd, bwd}, 2, 3, f2);
        auto const d = dualize(i);
        CHECK(d.arrows()[0].direction == bwd);
        CHECK(d.arrows()[1].direction == fwd);
        CHECK(decompose(d) == IntervalMultiset{{{2, 3}, 1}});
        CHECK(dualize(d) == i);
        CHECK(decompose(dualize(circle_h0())) == decompose(circle_h0()));
    }

    TEST_CASE("scrambled interval sums decompose into their intervals")
    {
        Rng rng(17);
        for (int trial = 0; trial < 80; ++trial) {
            PrimeField const f(trial % 3 == 0 ? 3 : 2);
            std::size_t const n = 1 + trial % 6;
            std::vector<ArrowDirection> shape;
            for (std::size_t i = 0; i + 1 < n; ++i)
                shape.push_back(rng() % 2 ? fwd : bwd);
            IntervalMultiset want;
            for (int k = 0; k < 4; ++k) {
                std::size_t const a = 1 + rng() % n;
                std::size_t const b = a + rng() % (n - a + 1);
                ++want[{a, b}];
            }
            auto const z = corpus::scrambled_sum(shape, want, rng, f);
            CHECK(decompose(z) == want);
        }
    }

    TEST_CASE("decomposition invariants on random modules")
    {
        Rng rng(23);
        for (int trial = 0; trial < 80; ++trial) {
            PrimeField const f(trial % 2 == 0 ? 2 : 5);
            auto const z = corpus::random_zigzag(rng, 1 + trial % 7, 3, f);
            auto const d = decompose(z);
            for (std::size_t i = 1; i <= z.length(); ++i) {
                std::size_t sum = 0;
                for (auto const& [iv, m] : d)
                    if (iv.first <= i && i <= iv.last)
                        sum += m;
                CHECK(sum == z.dims()[i - 1]);
            }
            for (std::size_t i = 1; i < z.length(); ++i) {
                std::size_t sum = 0;
                for (auto const& [iv, m] : d)
                    if (iv.first <= i && i + 1 <= iv.last)
                        sum += m;
                CHECK(sum == rank(z.arrows()[i - 1].matrix));
            }
            CHECK(decompose(dualize(z)) == d);
            for (std::size_t k = 2; k < z.length(); ++k)
                if (z.arrows()[k - 2].direction == z.arrows()[k - 1].direction)
                    CHECK(decompose(coarsen(z, k)) == restrict_intervals(d, k));
        }
    }

    TEST_CASE("decomposition matches the exhaustive oracle")
    {
        Rng rng(29);
        for (int trial = 0; trial < 40; ++trial) {
            auto const z = corpus::random_zigzag(rng, 1 + trial % 5, 2, PrimeField(trial % 2 ? 3 : 2));
            auto const found = oracle::matching_decompositions(z);
            REQUIRE(found.size() == 1);
            CHECK(found.front() == decompose(z));
        }
    }

    TEST_CASE("restricting intervals drops the removed node")
    {
        IntervalMultiset const full{{{1, 2}, 1}, {{2, 2}, 2}, {{2, 4}, 1}, {{3, 3}, 1}};
        IntervalMultiset const want{{{1, 1}, 1}, {{2, 2}, 1}, {{2, 3}, 1}};
        CHECK(restrict_intervals(full, 2) == want);
    }
}
