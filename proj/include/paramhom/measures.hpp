#ifndef PARAMHOM_MEASURES_HPP
#define PARAMHOM_MEASURES_HPP

#include "paramhom/diagram.hpp"
#include "paramhom/rspace.hpp"
#include "paramhom/zigzag.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <tuple>
#include <vector>

namespace paramhom
{

/// H_k of a chain of subquotients of one CutModel. directions[i] orients the
/// arrow between nodes i and i+1; every arrow must be induced by inclusion.
ZigzagModule subquotient_zigzag(CutModel const& model, std::vector<Subquotient> const& nodes,
                                std::vector<ArrowDirection> const& directions, int k);

/// H_k of X_a^a -> X_a^b <- X_b^b -> X_b^c <- X_c^c -> X_c^d <- X_d^d.
/// Admits b == c so diagonal points can be probed.
ZigzagModule rectangle_zigzag(ConstructibleRSpace const& x, int k, Rectangle const& r,
                              PrimeField field);

/// Node interval of the rectangle zigzag counted by each behavior type.
IndexInterval rectangle_pattern(Behavior type);

/// Counts of the four behavior types in R, indexed by behavior_index.
using MeasureValues = std::array<std::size_t, 4>;

/// Requires a valid rectangle (a < b < c < d).
std::size_t measure_direct(ConstructibleRSpace const& x, int k, Behavior type,
                           Rectangle const& r, PrimeField field);

/// Multiplicity of the full bar in X_b^b -> X_b^c <- X_c^c.
std::size_t closed_bar_bound(ConstructibleRSpace const& x, int k, double b, double c,
                             PrimeField field);

/// Negated, reversed critical values; pieces reversed and l/r swapped.
ConstructibleRSpace coordinate_reverse(ConstructibleRSpace const& x);

/// Memoizing evaluator of the four measures of one space.
class MeasureEngine
{
public:
    /// With `inject_fault` the arrow H(X_b^b) -> H(X_a^b) is replaced by zero;
    /// this breaks additivity and exists only as a negative control.
    MeasureEngine(ConstructibleRSpace x, PrimeField field, bool inject_fault = false);

    ConstructibleRSpace const& space() const { return x_; }
    PrimeField field() const { return field_; }

    /// Requires a valid rectangle.
    MeasureValues measures(int k, Rectangle const& r);
    std::size_t measure(int k, Behavior type, Rectangle const& r);

    /// Oracle for extract_diagram; also answers diagonal rectangles.
    MeasureOracle oracle(int k, Behavior type);

    /// Diagrams of degree k recovered from the measures.
    DiagramSet extract(int k);

private:
    MeasureValues evaluate(int k, Rectangle const& r);

    ConstructibleRSpace x_;
    PrimeField field_;
    bool inject_fault_;
    std::map<std::tuple<int, double, double, double, double>, MeasureValues> cache_;
};

} // namespace paramhom

#endif
