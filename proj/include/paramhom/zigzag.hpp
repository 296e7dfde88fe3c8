#ifndef PARAMHOM_ZIGZAG_HPP
#define PARAMHOM_ZIGZAG_HPP

#include "paramhom/field.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <vector>

namespace paramhom
{

enum class ArrowDirection { forward, backward };

/// Arrow between node i and node i+1. A forward matrix is dims[i+1] x dims[i];
/// a backward matrix is dims[i] x dims[i+1].
struct ZigzagArrow
{
    ArrowDirection direction;
    Matrix matrix;
    bool operator==(ZigzagArrow const&) const = default;
};

/// Representation of an A_n quiver of arbitrary orientation over F_p.
class ZigzagModule
{
public:
    ZigzagModule(std::vector<std::size_t> dims, std::vector<ZigzagArrow> arrows, PrimeField field);

    std::size_t length() const { return dims_.size(); }
    std::vector<std::size_t> const& dims() const { return dims_; }
    std::vector<ZigzagArrow> const& arrows() const { return arrows_; }
    PrimeField field() const { return field_; }

    /// Interval module I[p, q] (1-based, inclusive) of the given orientation.
    static ZigzagModule interval_module(std::vector<ArrowDirection> const& shape,
                                        std::size_t p, std::size_t q, PrimeField field);
    /// Node-wise direct sum; orientations must agree.
    static ZigzagModule direct_sum(ZigzagModule const& a, ZigzagModule const& b);

    bool operator==(ZigzagModule const&) const = default;

private:
    std::vector<std::size_t> dims_;
    std::vector<ZigzagArrow> arrows_;
    PrimeField field_;
};

/// Closed index interval [first, last], 1-based node positions.
struct IndexInterval
{
    std::size_t first;
    std::size_t last;

    auto operator<=>(IndexInterval const&) const = default;
};

using IntervalMultiset = std::map<IndexInterval, std::size_t>;

/// Rank of the canonical limit -> colimit map of the restriction to [p, q],
/// built from the full direct sum over the nodes of [p, q].
std::size_t limit_colimit_rank(ZigzagModule const& z, std::size_t p, std::size_t q);

/// Dimensions of the limit and colimit of the restriction to [p, q].
std::size_t limit_dimension(ZigzagModule const& z, std::size_t p, std::size_t q);
std::size_t colimit_dimension(ZigzagModule const& z, std::size_t p, std::size_t q);

/// All limit -> colimit ranks, table[p][q] for 1 <= p <= q <= n (other
/// entries zero). Computed with one sweep per right endpoint tracking the
/// extendable subspace and the colimit kernel at the left node.
std::vector<std::vector<std::size_t>> limit_colimit_rank_table(ZigzagModule const& z);

/// Interval decomposition by inclusion-exclusion of limit -> colimit ranks.
/// Throws ContractError if a multiplicity comes out negative or the result
/// fails the dimension-sum check.
IntervalMultiset decompose(ZigzagModule const& z);

std::size_t multiplicity(ZigzagModule const& z, IndexInterval interval);

/// Drops node k (1-based, 2 <= k <= n-1) whose two arrows point the same
/// way, replacing them by their composite.
ZigzagModule coarsen(ZigzagModule const& z, std::size_t k);

/// Reverses every arrow and transposes its matrix.
ZigzagModule dualize(ZigzagModule const& z);

/// Intervals of the coarsened module obtained by restricting each interval
/// of `full` to the index set without node k.
IntervalMultiset restrict_intervals(IntervalMultiset const& full, std::size_t k);

} // namespace paramhom

#endif
