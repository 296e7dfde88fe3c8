#ifndef PARAMHOM_RSPACE_HPP
#define PARAMHOM_RSPACE_HPP

#include "paramhom/complexes.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace paramhom
{

/// Morse-type (constructible) R-space: vertex complexes V_i sitting over
/// critical values a_i, edge complexes E_i spanning [a_i, a_{i+1}], and
/// attaching maps l_i : E_i -> V_i, r_i : E_i -> V_{i+1}.
struct ConstructibleRSpace
{
    std::vector<double> critical_values;
    std::vector<SimplicialComplex> vertex_complexes;
    std::vector<SimplicialComplex> edge_complexes;
    std::vector<SimplicialMap> left_maps;
    std::vector<SimplicialMap> right_maps;

    std::size_t size() const { return critical_values.size(); }
    /// Half the smallest gap between consecutive critical values (1 when n = 1).
    double half_min_gap() const;
};

/// Every invariant violation, each naming its location. Empty when valid.
std::vector<std::string> validate(ConstructibleRSpace const& x);

/// Throws ContractError listing the violations when `x` is invalid.
void require_valid(ConstructibleRSpace const& x);

/// The fiber f^{-1}(t): V_i at a critical value, E_i inside a gap, empty
/// outside [a_1, a_n].
SimplicialComplex levelset_complex(ConstructibleRSpace const& x, double t);

/// A node of a slice diagram: either a critical fiber V_i or a regular fiber
/// (a copy of E_i) at a cut value inside gap i. Indices are 0-based.
struct SliceNode
{
    enum class Kind { critical, regular };
    Kind kind;
    std::size_t index;
    double value;

    bool operator==(SliceNode const&) const = default;
};

/// Ordered nodes of f^{-1}[p, q]; consecutive nodes are joined by cylinders
/// on the edge complex of the gap that contains them.
struct SlicePlan
{
    std::vector<SliceNode> nodes;
    std::size_t gap_between(std::size_t i) const;
};

SlicePlan slice_plan(ConstructibleRSpace const& x, double p, double q);

/// Per-degree sorted generator indices of an ambient chain complex.
using GeneratorSet = std::vector<std::vector<std::size_t>>;

/// A telescope model of the whole space whose node list is refined at a
/// given set of cut values. Every slice f^{-1}[p, q] with endpoints among the
/// cuts (or outside [a_1, a_n]) is a literal subcomplex.
class CutModel
{
public:
    CutModel(ConstructibleRSpace const& x, std::vector<double> const& cuts, PrimeField field);

    ChainComplex const& total() const { return total_; }
    SlicePlan const& plan() const { return plan_; }
    PrimeField field() const { return total_.field(); }

    /// Generators of f^{-1}[p, q]. Finite endpoints inside [a_1, a_n] must be
    /// critical values or cuts.
    GeneratorSet range(double p, double q) const;
    GeneratorSet fiber(double t) const { return range(t, t); }
    GeneratorSet everything() const;
    GeneratorSet nothing() const;

private:
    SlicePlan plan_;
    ChainComplex total_;
    std::vector<std::vector<std::size_t>> node_offsets_;
    std::vector<std::vector<std::size_t>> node_counts_;
    std::vector<std::vector<std::size_t>> edge_offsets_;
    std::vector<std::vector<std::size_t>> edge_counts_;
};

/// U/L for subcomplexes L of U of a CutModel's total complex.
struct Subquotient
{
    GeneratorSet upper;
    GeneratorSet lower;
    GeneratorSet generators;
    ChainComplex complex;
};

Subquotient make_subquotient(CutModel const& model, GeneratorSet upper, GeneratorSet lower);
Subquotient make_subcomplex(CutModel const& model, GeneratorSet gens);

/// Map U/L -> U'/L' induced by inclusion; requires U within U' and L within L'.
ChainMap subquotient_map(Subquotient const& from, Subquotient const& to, PrimeField field);

/// A slice with its two end fibers.
struct SliceComplex
{
    ChainComplex complex;
    ChainComplex fiber_low;
    ChainComplex fiber_high;
    ChainMap low_inclusion;
    ChainMap high_inclusion;
};

SliceComplex slice_complex(ConstructibleRSpace const& x, double p, double q, PrimeField field);
/// f^{-1}(-inf, t]; the fiber at t is the high end.
SliceComplex sublevel_complex(ConstructibleRSpace const& x, double t, PrimeField field);
/// f^{-1}[t, +inf); the fiber at t is the low end.
SliceComplex superlevel_complex(ConstructibleRSpace const& x, double t, PrimeField field);

} // namespace paramhom

#endif
