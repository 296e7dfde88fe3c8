#ifndef PARAMHOM_COMPLEXES_HPP
#define PARAMHOM_COMPLEXES_HPP

#include "paramhom/field.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace paramhom
{

/// Strictly increasing list of vertex ids.
using Simplex = std::vector<int>;

/// A finite abstract simplicial complex, stored per dimension with each
/// dimension's simplices in lexicographic order.
class SimplicialComplex
{
public:
    SimplicialComplex() = default;

    /// Builds the downward closure of the given simplices. Each simplex must
    /// be strictly sorted with nonnegative ids.
    static SimplicialComplex closure(std::vector<Simplex> const& simplices);

    /// Builds from an explicit simplex list that must already be closed
    /// under taking faces.
    static SimplicialComplex exact(std::vector<Simplex> const& simplices);

    /// -1 for the empty complex.
    int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
    bool empty() const { return by_dim_.empty(); }
    std::size_t count(int k) const;
    std::size_t size() const;
    std::vector<Simplex> const& simplices(int k) const;
    std::vector<int> vertices() const;

    std::optional<std::size_t> index_of(Simplex const& s) const;
    bool contains(Simplex const& s) const { return index_of(s).has_value(); }

    /// All simplices, lowest dimension first.
    std::vector<Simplex> all() const;

    bool operator==(SimplicialComplex const&) const = default;

private:
    std::vector<std::vector<Simplex>> by_dim_;
};

/// Reports a problem with a simplex list (unsorted tuple, negative id, ...)
/// or nullopt when the list is well-formed.
std::optional<std::string> check_simplex(Simplex const& s);

/// Vertex map between complexes.
class SimplicialMap
{
public:
    SimplicialMap() = default;
    explicit SimplicialMap(std::map<int, int> vertex_map)
        : vertex_map_(std::move(vertex_map))
    {
    }

    static SimplicialMap identity(SimplicialComplex const& k);
    /// Sends every vertex of `source` to `target_vertex`.
    static SimplicialMap constant(SimplicialComplex const& source, int target_vertex);

    std::map<int, int> const& table() const { return vertex_map_; }

    /// Image of a simplex after sorting, with the sign of the sorting
    /// permutation; nullopt when two vertices collide (degenerate image).
    /// Throws ContractError if a vertex is missing from the table.
    std::optional<std::pair<Simplex, int>> image(Simplex const& s) const;

    /// Every problem that prevents this from being a simplicial map
    /// source -> target. Empty when valid.
    std::vector<std::string> violations(SimplicialComplex const& source,
                                        SimplicialComplex const& target) const;

    SimplicialMap compose_after(SimplicialMap const& first) const;

    bool operator==(SimplicialMap const&) const = default;

private:
    std::map<int, int> vertex_map_;
};

/// Chain complex of finite-dimensional F_p vector spaces with labelled bases.
/// boundary(k) is the matrix of C_k -> C_{k-1}.
class ChainComplex
{
public:
    explicit ChainComplex(PrimeField field = PrimeField{});
    ChainComplex(PrimeField field,
                 std::vector<std::vector<std::string>> labels,
                 std::vector<Matrix> boundaries);

    PrimeField field() const { return field_; }
    /// -1 when every chain group is zero.
    int top_dimension() const { return static_cast<int>(labels_.size()) - 1; }
    std::size_t rank(int k) const;
    std::size_t total_rank() const;
    std::vector<std::string> const& labels(int k) const;
    /// Correctly shaped for every k, zero outside the stored range.
    Matrix boundary(int k) const;

    /// True when every composite boundary(k-1) * boundary(k) vanishes.
    bool boundary_squares_to_zero() const;
    /// Alternating sum of chain ranks.
    long euler_characteristic() const;

    /// Keeps only the listed generators in each degree (sorted indices).
    /// The result is a subcomplex when `keep` is closed under the boundary
    /// and a quotient complex when its complement is.
    ChainComplex restrict_to(std::vector<std::vector<std::size_t>> const& keep) const;

private:
    PrimeField field_;
    std::vector<std::vector<std::string>> labels_;
    std::vector<Matrix> boundaries_;
};

/// Per-degree matrices of a chain map source -> target.
class ChainMap
{
public:
    ChainMap() = default;
    explicit ChainMap(std::vector<Matrix> matrices)
        : matrices_(std::move(matrices))
    {
    }

    /// Zero map between the complexes (correct shapes).
    static ChainMap zero(ChainComplex const& source, ChainComplex const& target);
    static ChainMap identity(ChainComplex const& c);

    /// Correctly shaped for every k given the complexes.
    Matrix matrix(int k, ChainComplex const& source, ChainComplex const& target) const;
    std::vector<Matrix> const& matrices() const { return matrices_; }

    /// True when shapes match and boundary * f == f * boundary in every degree.
    bool commutes(ChainComplex const& source, ChainComplex const& target) const;

private:
    std::vector<Matrix> matrices_;
};

ChainComplex chain_complex(SimplicialComplex const& k, PrimeField field);

ChainMap induced_chain_map(SimplicialMap const& f,
                           SimplicialComplex const& source,
                           SimplicialComplex const& target,
                           PrimeField field);

/// A basis of H_k with cycle representatives and a projection from cycles to
/// class coordinates.
struct HomologyBasis
{
    int degree = 0;
    std::size_t rank = 0;
    Matrix representatives;
    Matrix projection;
};

HomologyBasis homology(ChainComplex const& c, int k);

/// Matrix of H_k(f) in the given bases. Throws ContractError if a mapped
/// representative is not a cycle.
Matrix induced_homology_map(ChainMap const& f,
                            ChainComplex const& source,
                            ChainComplex const& target,
                            HomologyBasis const& source_basis,
                            HomologyBasis const& target_basis);

/// An alternating diagram C_1 <- E_1 -> C_2 <- E_2 -> ... -> C_m.
struct TelescopeDiagram
{
    std::vector<ChainComplex> nodes;
    std::vector<ChainComplex> edges;
    std::vector<ChainMap> left;   ///< E_i -> C_i
    std::vector<ChainMap> right;  ///< E_i -> C_{i+1}
};

/// Homotopy colimit of a TelescopeDiagram. Generators in each degree are
/// laid out node 1, edge 1 (shifted), node 2, edge 2, ...
struct Telescope
{
    ChainComplex total;
    std::vector<ChainMap> node_inclusions;
    /// E_i included at its left end (via l_i) and at its right end (via r_i).
    std::vector<ChainMap> edge_left_inclusions;
    std::vector<ChainMap> edge_right_inclusions;
    /// node_offsets[i][k]: first total generator of node i in degree k.
    std::vector<std::vector<std::size_t>> node_offsets;
    /// edge_offsets[i][k]: first total generator of edge i in degree k.
    std::vector<std::vector<std::size_t>> edge_offsets;
};

/// Differential on a shifted edge generator e: (r(e) - l(e)) - (de)shifted.
Telescope telescope(TelescopeDiagram const& diagram);

/// Quotient complex C / sub. `sub` lists generator indices per degree and
/// must be closed under the boundary.
ChainComplex relative_complex(ChainComplex const& c,
                              std::vector<std::vector<std::size_t>> const& sub);

/// Subcomplex spanned by the listed generators, which must be closed under
/// the boundary.
ChainComplex subcomplex(ChainComplex const& c,
                        std::vector<std::vector<std::size_t>> const& gens);

/// True when the boundary of every listed generator is supported on listed
/// generators.
bool is_boundary_closed(ChainComplex const& c,
                        std::vector<std::vector<std::size_t>> const& gens);

} // namespace paramhom

#endif
