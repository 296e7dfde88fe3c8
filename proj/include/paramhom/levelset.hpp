#ifndef PARAMHOM_LEVELSET_HPP
#define PARAMHOM_LEVELSET_HPP

#include "paramhom/diagram.hpp"
#include "paramhom/rspace.hpp"
#include "paramhom/zigzag.hpp"

#include <cstddef>
#include <vector>

namespace paramhom
{

/// Position of a node in the levelset zigzag. Fiber nodes are F_0 .. F_n
/// (F_0 and F_n empty), slice nodes S_1 .. S_n.
struct LevelsetNode
{
    enum class Kind { fiber, slice };
    Kind kind;
    std::size_t index;

    bool operator==(LevelsetNode const&) const = default;
};

struct LevelsetZigzag
{
    ZigzagModule module;
    /// labels[j] annotates node j + 1 of the module.
    std::vector<LevelsetNode> labels;
};

/// F_0 -> S_1 <- F_1 -> S_2 <- ... -> S_n <- F_n in homology degree k, with
/// S_i = H_k(V_i), F_i = H_k(E_i), maps induced by r_{i-1} and l_i.
LevelsetZigzag levelset_zigzag(ConstructibleRSpace const& x, int k, PrimeField field);

/// The four diagrams of degree `dim` read off the intervals of a levelset
/// zigzag. Throws ContractError if an interval leaves the labelled range.
DiagramSet translate(IntervalMultiset const& intervals,
                     std::vector<LevelsetNode> const& labels,
                     std::vector<double> const& critical_values, int dim);

/// Diagrams of degrees 0 .. max_dim via the levelset zigzag.
std::vector<DiagramSet> parametrized_homology(ConstructibleRSpace const& x, int max_dim,
                                              PrimeField field);

} // namespace paramhom

#endif
