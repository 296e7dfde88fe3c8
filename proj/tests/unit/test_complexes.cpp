#include "doctest.h"

#include "corpus.hpp"
#include "paramhom/complexes.hpp"

using namespace paramhom;

namespace
{

PrimeField const f2(2);

std::size_t betti(ChainComplex const& c, int k)
{
    return homology(c, k).rank;
}

SimplicialComplex two_points()
{
    return SimplicialComplex::closure({{0}, {1}});
}

SimplicialComplex one_point()
{
    return SimplicialComplex::closure({{0}});
}

TelescopeDiagram pt_edge_pt(SimplicialComplex const& e, PrimeField f)
{
    TelescopeDiagram d;
    auto const v = one_point();
    d.nodes = {chain_complex(v, f), chain_complex(v, f)};
    d.edges = {chain_complex(e, f)};
    auto const collapse = SimplicialMap::constant(e, 0);
    d.left = {induced_chain_map(collapse, e, v, f)};
    d.right = {induced_chain_map(collapse, e, v, f)};
    return d;
}

} // namespace

TEST_SUITE("complexes")
{
    TEST_CASE("closure adds faces and rejects malformed simplices")
    {
        auto const t = SimplicialComplex::closure({{0, 1, 2}});
        CHECK(t.count(0) == 3);
        CHECK(t.count(1) == 3);
        CHECK(t.count(2) == 1);
        CHECK(t.dimension() == 2);
        CHECK(SimplicialComplex{}.dimension() == -1);
        CHECK_THROWS_AS(SimplicialComplex::closure({{1, 0}}), ContractError);
        CHECK_THROWS_AS(SimplicialComplex::closure({{-1}}), ContractError);
        CHECK_THROWS_AS(SimplicialComplex::exact({{0, 1}}), ContractError);
        CHECK(check_simplex({2, 2}).has_value());
        CHECK_FALSE(check_simplex({0, 3}).has_value());
    }

    TEST_CASE("chain complex examples")
    {
        auto const pt = chain_complex(one_point(), f2);
        CHECK(pt.rank(0) == 1);
        CHECK(pt.boundary(0).is_zero());

        auto const e = chain_complex(SimplicialComplex::closure({{0, 1}}), PrimeField(3));
        auto const d1 = e.boundary(1);
        REQUIRE(d1.rows() == 2);
        CHECK(d1(0, 0) == 2);  // -v0
        CHECK(d1(1, 0) == 1);  // +v1

        auto const ring = chain_complex(SimplicialComplex::closure({{0, 1}, {1, 2}, {0, 2}}), PrimeField(3));
        CHECK(rank(ring.boundary(1)) == 2);
        CHECK(betti(ring, 0) == 1);
        CHECK(betti(ring, 1) == 1);
        CHECK(ring.boundary_squares_to_zero());
    }

    TEST_CASE("boundary squares to zero on a tetrahedron in every characteristic")
    {
        auto const k = SimplicialComplex::closure({{0, 1, 2, 3}});
        for (std::uint32_t p : {2u, 3u, 5u}) {
            auto const c = chain_complex(k, PrimeField(p));
            CHECK(c.boundary_squares_to_zero());
            CHECK(c.euler_characteristic() == 1);
            CHECK(betti(c, 0) == 1);
            CHECK(betti(c, 1) == 0);
            CHECK(betti(c, 2) == 0);
        }
        auto const shell = SimplicialComplex::closure({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
        CHECK(betti(chain_complex(shell, PrimeField(3)), 2) == 1);
    }

    TEST_CASE("induced chain maps")
    {
        auto const e = SimplicialComplex::closure({{0, 1}});
        auto const id = induced_chain_map(SimplicialMap::identity(e), e, e, f2);
        CHECK(id.matrix(0, chain_complex(e, f2), chain_complex(e, f2)) == Matrix::identity(2, f2));
        CHECK(id.matrix(1, chain_complex(e, f2), chain_complex(e, f2)) == Matrix::identity(1, f2));

        auto const pt = one_point();
        auto const collapse = induced_chain_map(SimplicialMap::constant(e, 0), e, pt, f2);
        CHECK(collapse.matrix(1, chain_complex(e, f2), chain_complex(pt, f2)).is_zero());

        auto const two = two_points();
        auto const glue = induced_chain_map(SimplicialMap::constant(two, 0), two, pt, PrimeField(3));
        CHECK(glue.matrix(0, chain_complex(two, PrimeField(3)), chain_complex(pt, PrimeField(3))) ==
              Matrix::from_rows({{1, 1}}, PrimeField(3)));
        CHECK(glue.commutes(chain_complex(two, PrimeField(3)), chain_complex(pt, PrimeField(3))));
    }

    TEST_CASE("simplicial map orientation signs and violations")
    {
        SimplicialMap const swap(std::map<int, int>{{0, 1}, {1, 0}});
        auto const img = swap.image({0, 1});
        REQUIRE(img);
        CHECK(img->first == Simplex{0, 1});
        CHECK(img->second == -1);
        CHECK_FALSE(SimplicialMap::constant(SimplicialComplex::closure({{0, 1}}), 0).image({0, 1}));

        auto const e = SimplicialComplex::closure({{0, 1}});
        SimplicialMap const dangling(std::map<int, int>{{0, 0}, {1, 5}});
        CHECK_FALSE(dangling.violations(e, e).empty());
        CHECK(swap.violations(e, e).empty());
    }

    TEST_CASE("homology maps of the identity and of a collapse")
    {
        auto const ring = SimplicialComplex::closure({{0, 1}, {1, 2}, {0, 2}});
        auto const c = chain_complex(ring, f2);
        auto const h1 = homology(c, 1);
        auto const id = induced_homology_map(ChainMap::identity(c), c, c, h1, h1);
        CHECK(id == Matrix::identity(1, f2));

        auto const pt = one_point();
        auto const cp = chain_complex(pt, f2);
        auto const h0 = homology(c, 0), p0 = homology(cp, 0);
        auto const to_pt = induced_chain_map(SimplicialMap::constant(ring, 0), ring, pt, f2);
        CHECK(induced_homology_map(to_pt, c, cp, h0, p0) == Matrix::identity(1, f2));
    }

    TEST_CASE("telescope examples")
    {
        TelescopeDiagram single;
        single.nodes = {chain_complex(two_points(), f2)};
        auto const t = telescope(single);
        CHECK(t.total.total_rank() == 2);
        CHECK(betti(t.total, 0) == 2);

        for (std::uint32_t p : {2u, 3u, 5u}) {
            auto const circle = telescope(pt_edge_pt(two_points(), PrimeField(p)));
            CHECK(circle.total.boundary_squares_to_zero());
            CHECK(betti(circle.total, 0) == 1);
            CHECK(betti(circle.total, 1) == 1);

            auto const segment = telescope(pt_edge_pt(one_point(), PrimeField(p)));
            CHECK(betti(segment.total, 0) == 1);
            CHECK(betti(segment.total, 1) == 0);

            auto const ring = SimplicialComplex::closure({{0, 1}, {1, 2}, {0, 2}});
            auto const sphere = telescope(pt_edge_pt(ring, PrimeField(p)));
            CHECK(sphere.total.boundary_squares_to_zero());
            CHECK(betti(sphere.total, 1) == 0);
            CHECK(betti(sphere.total, 2) == 1);
        }
    }

    TEST_CASE("telescope inclusions are chain maps")
    {
        PrimeField const f3(3);
        auto const t = telescope(pt_edge_pt(two_points(), f3));
        auto const pt = chain_complex(one_point(), f3);
        for (auto const& inc : t.node_inclusions)
            CHECK(inc.commutes(pt, t.total));
    }

    TEST_CASE("telescopes of random spaces")
    {
        Rng rng(61);
        for (int trial = 0; trial < 30; ++trial) {
            PrimeField const f(trial % 2 ? 3 : 5);
            auto const x = corpus::random_space(rng, 4, 30);
            TelescopeDiagram d;
            long chi = 0;
            for (auto const& v : x.vertex_complexes) {
                d.nodes.push_back(chain_complex(v, f));
                chi += d.nodes.back().euler_characteristic();
            }
            for (std::size_t i = 0; i + 1 < x.size(); ++i) {
                auto const& e = x.edge_complexes[i];
                d.edges.push_back(chain_complex(e, f));
                chi -= d.edges.back().euler_characteristic();
                d.left.push_back(induced_chain_map(x.left_maps[i], e, x.vertex_complexes[i], f));
                d.right.push_back(induced_chain_map(x.right_maps[i], e, x.vertex_complexes[i + 1], f));
            }
            auto const t = telescope(d);
            CHECK(t.total.boundary_squares_to_zero());
            CHECK(t.total.euler_characteristic() == chi);
            for (std::size_t i = 0; i < d.nodes.size(); ++i)
                CHECK(t.node_inclusions[i].commutes(d.nodes[i], t.total));
        }
    }

    TEST_CASE("a mapping cylinder has the homology of its target")
    {
        Rng rng(67);
        for (int trial = 0; trial < 30; ++trial) {
            PrimeField const f(3);
            auto const x = corpus::random_space(rng, 2, 30);
            if (x.size() < 2)
                continue;
            // V_1 <- E_1 -> E_1 with the identity on the right is the
            // mapping cylinder of l_1, which retracts onto V_1.
            TelescopeDiagram d;
            auto const& e = x.edge_complexes[0];
            d.nodes = {chain_complex(x.vertex_complexes[0], f), chain_complex(e, f)};
            d.edges = {chain_complex(e, f)};
            d.left = {induced_chain_map(x.left_maps[0], e, x.vertex_complexes[0], f)};
            d.right = {ChainMap::identity(d.edges[0])};
            auto const t = telescope(d);
            for (int k = 0; k <= 2; ++k)
                CHECK(betti(t.total, k) == betti(d.nodes[0], k));
        }
    }

    TEST_CASE("relative complexes")
    {
        auto const c = chain_complex(SimplicialComplex::closure({{0, 1}}), f2);
        auto const all = relative_complex(c, {{0, 1}, {0}});
        CHECK(all.total_rank() == 0);
        auto const none = relative_complex(c, {});
        CHECK(none.total_rank() == c.total_rank());
        // The interval relative to its endpoints is a circle shifted up one degree.
        auto const rel = relative_complex(c, {{0, 1}});
        CHECK(betti(rel, 0) == 0);
        CHECK(betti(rel, 1) == 1);
        CHECK_THROWS_AS(relative_complex(c, {{}, {0}}), ContractError);
        CHECK_FALSE(is_boundary_closed(c, {{}, {0}}));
        CHECK(subcomplex(c, {{1}}).total_rank() == 1);
    }
}
