#include "doctest.h"

#include "corpus.hpp"
#include "paramhom/rspace.hpp"

using namespace paramhom;

namespace
{

PrimeField const f2(2);

std::size_t betti(ChainComplex const& c, int k)
{
    return homology(c, k).rank;
}

bool mentions(std::vector<std::string> const& problems, std::string const& word)
{
    for (auto const& p : problems)
        if (p.find(word) != std::string::npos)
            return true;
    return false;
}

} // namespace

TEST_SUITE("rspace")
{
    TEST_CASE("validation examples")
    {
        auto x = corpus::circle();
        CHECK(validate(x).empty());

        auto repeated = x;
        repeated.critical_values = {1, 1};
        CHECK(mentions(validate(repeated), "increasing"));
        CHECK_THROWS_AS(require_valid(repeated), ContractError);

        auto dangling = x;
        dangling.left_maps[0] = SimplicialMap(std::map<int, int>{{0, 0}, {1, 9}});
        CHECK_FALSE(validate(dangling).empty());

        auto short_lists = x;
        short_lists.edge_complexes.clear();
        CHECK_FALSE(validate(short_lists).empty());

        auto nan = x;
        nan.critical_values[1] = infinity;
        CHECK_FALSE(validate(nan).empty());
    }

    TEST_CASE("levelset complexes of the circle")
    {
        auto const x = corpus::circle();
        CHECK(levelset_complex(x, 0.5).count(0) == 2);
        CHECK(levelset_complex(x, 0).count(0) == 1);
        CHECK(levelset_complex(x, -5).empty());
        CHECK(levelset_complex(x, 7).empty());
        CHECK(x.half_min_gap() == doctest::Approx(0.5));
    }

    TEST_CASE("slice complexes of the circle")
    {
        auto const x = corpus::circle();
        auto const low = slice_complex(x, -1, 0.5, f2);
        CHECK(betti(low.complex, 0) == 1);
        CHECK(betti(low.complex, 1) == 0);
        CHECK(betti(low.fiber_high, 0) == 2);
        CHECK(low.fiber_low.total_rank() == 0);

        auto const whole = slice_complex(x, -1, 2, f2);
        CHECK(betti(whole.complex, 0) == 1);
        CHECK(betti(whole.complex, 1) == 1);

        CHECK(slice_complex(x, -3, -2, f2).complex.total_rank() == 0);
        CHECK(low.high_inclusion.commutes(low.fiber_high, low.complex));
    }

    TEST_CASE("sublevel and superlevel sets")
    {
        auto const x = corpus::circle();
        auto const half = sublevel_complex(x, 0.5, f2);
        CHECK(betti(half.complex, 0) == 1);
        CHECK(betti(half.complex, 1) == 0);
        auto const all = sublevel_complex(x, 3, f2);
        CHECK(betti(all.complex, 1) == 1);
        CHECK(superlevel_complex(x, 3, f2).complex.total_rank() == 0);
        CHECK(betti(superlevel_complex(x, 0.5, f2).complex, 0) == 1);
    }

    TEST_CASE("slice homology on the corpus")
    {
        Rng rng(5);
        for (int trial = 0; trial < 25; ++trial) {
            auto const x = corpus::random_space(rng, 4, 30);
            auto const& a = x.critical_values;
            double const h = x.half_min_gap();
            auto const full = slice_complex(x, a.front(), a.back(), f2);
            auto const everything = slice_complex(x, -infinity, infinity, f2);
            for (int k = 0; k <= 2; ++k)
                CHECK(betti(full.complex, k) == betti(everything.complex, k));

            for (std::size_t i = 0; i + 1 < a.size(); ++i) {
                double const t = a[i] + h;
                auto const fiber = slice_complex(x, t, t, f2);
                auto const direct = chain_complex(levelset_complex(x, t), f2);
                for (int k = 0; k <= 2; ++k)
                    CHECK(betti(fiber.complex, k) == betti(direct, k));

                // Moving a regular endpoint inside its gap keeps the homology.
                auto const near = slice_complex(x, a.front() - 1, a[i] + h * 0.5, f2);
                auto const far = slice_complex(x, a.front() - 1, a[i] + h * 1.5, f2);
                for (int k = 0; k <= 2; ++k)
                    CHECK(betti(near.complex, k) == betti(far.complex, k));
            }
        }
    }

    TEST_CASE("cut models expose slices as subcomplexes")
    {
        auto const x = corpus::circle();
        CutModel const model(x, {0.5}, f2);
        auto const lower = model.range(-infinity, 0.5);
        CHECK(is_boundary_closed(model.total(), lower));
        auto const sub = make_subcomplex(model, lower);
        CHECK(betti(sub.complex, 0) == 1);
        auto const fiber = make_subcomplex(model, model.fiber(0.5));
        CHECK(betti(fiber.complex, 0) == 2);
        auto const rel = make_subquotient(model, model.everything(), model.range(0.5, infinity));
        CHECK(betti(rel.complex, 1) == 1);  // circle modulo an arc
        CHECK(betti(rel.complex, 0) == 0);
        auto const map = subquotient_map(fiber, sub, f2);
        CHECK(map.commutes(fiber.complex, sub.complex));
        CHECK_THROWS_AS(model.range(0.25, 0.75), ContractError);
    }
}
