#include "doctest.h"

#include "corpus.hpp"
#include "paramhom/levelset.hpp"
#include "paramhom/measures.hpp"

using namespace paramhom;

namespace
{

PrimeField const f2(2);

Behavior mirror(Behavior b)
{
    switch (b) {
    case Behavior::up_up:
        return Behavior::down_down;
    case Behavior::down_down:
        return Behavior::up_up;
    default:
        return b;
    }
}

} // namespace

TEST_SUITE("measures")
{
    TEST_CASE("rectangle patterns")
    {
        CHECK(rectangle_pattern(Behavior::up_down) == IndexInterval{3, 5});
        CHECK(rectangle_pattern(Behavior::down_down) == IndexInterval{2, 5});
        CHECK(rectangle_pattern(Behavior::up_up) == IndexInterval{3, 6});
        CHECK(rectangle_pattern(Behavior::down_up) == IndexInterval{2, 6});
    }

    TEST_CASE("circle measure examples")
    {
        auto const x = corpus::circle();
        CHECK(measure_direct(x, 0, Behavior::down_up, {-1, 0, 1, 2}, f2) == 1);
        CHECK(measure_direct(x, 0, Behavior::down_up, {-1, -0.5, 1, 2}, f2) == 0);
        CHECK(measure_direct(x, 0, Behavior::up_down, {-0.2, 0.3, 0.6, 1.4}, f2) == 1);
        CHECK(measure_direct(x, 0, Behavior::down_up, {-0.2, 0.3, 0.6, 1.4}, f2) == 1);
        CHECK(measure_direct(x, 0, Behavior::down_down, {-0.2, 0.3, 0.6, 1.4}, f2) == 0);
        for (auto b : all_behaviors)
            CHECK(measure_direct(x, 0, b, {-5, -4, -3, -2}, f2) == 0);
        CHECK_THROWS_AS(measure_direct(x, 0, Behavior::up_down, {0, 1, 1, 2}, f2), ContractError);
    }

    TEST_CASE("each two-strand model is detected by its own measure")
    {
        auto const r = corpus::two_strands_rectangle();
        for (auto own : all_behaviors) {
            auto const x = corpus::two_strands(own);
            for (auto probe : all_behaviors)
                CHECK(measure_direct(x, 0, probe, r, f2) == (probe == own ? 1u : 0u));
        }
    }

    TEST_CASE("the rectangle zigzag of the circle")
    {
        auto const z = rectangle_zigzag(corpus::circle(), 0, {-0.2, 0.3, 0.6, 1.4}, f2);
        CHECK(z.length() == 7);
        CHECK(z.dims() == std::vector<std::size_t>{0, 1, 2, 2, 2, 1, 0});
    }

    TEST_CASE("coordinate reversal")
    {
        auto const x = corpus::circle();
        auto const y = coordinate_reverse(x);
        CHECK(y.critical_values == std::vector<double>{-1, 0});
        CHECK(validate(y).empty());
        CHECK(coordinate_reverse(y).critical_values == x.critical_values);

        Rng rng(13);
        for (auto const& s : corpus::standard_corpus(4, 7)) {
            PrimeField const f(s.characteristic);
            auto const rev = coordinate_reverse(s.space);
            for (int trial = 0; trial < 10; ++trial) {
                auto const r = random_rectangle(s.space, rng, true);
                auto const rr = reverse_rectangle(r);
                for (int k = 0; k <= s.max_dim; ++k)
                    for (auto b : all_behaviors)
                        CHECK(measure_direct(rev, k, mirror(b), rr, f) ==
                              measure_direct(s.space, k, b, r, f));
            }
        }
    }

    TEST_CASE("measures are monotone, bounded and agree with the engine")
    {
        Rng rng(19);
        for (auto const& s : corpus::standard_corpus(4, 3)) {
            PrimeField const f(s.characteristic);
            MeasureEngine engine(s.space, f);
            for (int trial = 0; trial < 15; ++trial) {
                auto const inner = random_rectangle(s.space, rng);
                Rectangle const outer{inner.a - 0.0625, inner.b, inner.c, inner.d + 0.0625};
                for (int k = 0; k <= s.max_dim; ++k) {
                    auto const m = engine.measures(k, inner);
                    auto const big = engine.measures(k, outer);
                    std::size_t sum = 0;
                    for (auto b : all_behaviors) {
                        auto const i = behavior_index(b);
                        CHECK(m[i] == measure_direct(s.space, k, b, inner, f));
                        CHECK(m[i] <= big[i]);
                        sum += m[i];
                    }
                    CHECK(sum <= closed_bar_bound(s.space, k, inner.b, inner.c, f));
                }
            }
        }
    }

    TEST_CASE("extraction from measures matches the levelset pipeline")
    {
        for (auto const& s : corpus::standard_corpus(3, 11)) {
            PrimeField const f(s.characteristic);
            MeasureEngine engine(s.space, f);
            auto const sets = parametrized_homology(s.space, s.max_dim, f);
            for (int k = 0; k <= s.max_dim; ++k)
                CHECK(engine.extract(k) == sets[k]);
        }
    }

    TEST_CASE("the injected fault is visible")
    {
        MeasureEngine broken(corpus::circle(), f2, true);
        MeasureEngine sound(corpus::circle(), f2);
        Rectangle const r{-0.2, 0.3, 0.6, 1.4};
        CHECK(broken.measures(0, r) != sound.measures(0, r));
    }
}
