#ifndef PARAMHOM_BOTTLENECK_HPP
#define PARAMHOM_BOTTLENECK_HPP

#include "paramhom/diagram.hpp"
#include "paramhom/rspace.hpp"

#include <string>
#include <utility>
#include <vector>

namespace paramhom
{

using PlanePoint = std::pair<double, double>;

/// l-infinity distance with |inf - inf| = |-inf - (-inf)| = 0.
double dinf(PlanePoint const& x, PlanePoint const& y);

/// (q - p) / 2; +inf when exactly one coordinate is infinite.
double diagonal_distance(PlanePoint const& x);

/// Expands multiplicities into a point list.
std::vector<PlanePoint> expand(UndecoratedDiagram const& d);

/// Minimal cost over partial bijections; unmatched points pay their
/// diagonal distance. May be +inf when infinite points cannot be paired.
double bottleneck_distance(UndecoratedDiagram const& a, UndecoratedDiagram const& b);

struct StabilityRecord
{
    int dim;
    Behavior type;
    double distance;
    double delta;
    bool pass;
};

/// Compares the undecorated diagrams of x and of the same space with critical
/// values replaced by `values`. Throws ContractError unless `values` has the
/// same length and is strictly increasing.
std::vector<StabilityRecord> stability_report(ConstructibleRSpace const& x,
                                              std::vector<double> const& values, int max_dim,
                                              PrimeField field);

} // namespace paramhom

#endif
