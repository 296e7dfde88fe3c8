#ifndef PARAMHOM_EXTENDED_HPP
#define PARAMHOM_EXTENDED_HPP

#include "paramhom/diagram.hpp"
#include "paramhom/rspace.hpp"
#include "paramhom/zigzag.hpp"

#include <array>
#include <string>
#include <vector>

namespace paramhom
{

enum class ExtendedType { ordinary, relative, extended_plus, extended_minus };

inline constexpr std::array<ExtendedType, 4> all_extended_types = {
    ExtendedType::ordinary, ExtendedType::relative, ExtendedType::extended_plus,
    ExtendedType::extended_minus};

/// "ord", "rel", "ext+", "ext-".
std::string extended_code(ExtendedType t);
ExtendedType extended_from_code(std::string const& code);

/// One extended diagram as an undecorated multiset.
struct ExtendedDiagram
{
    int dim;
    ExtendedType type;
    UndecoratedDiagram points;

    bool operator==(ExtendedDiagram const&) const = default;
};

/// Extended diagrams of degrees 0 .. max_dim + 1 from parametrized diagrams
/// of degrees 0 .. max_dim:
///   Ord_i = down-down_i, Rel_{i+1} = up-up_i, Ext+_i = down-up_i,
///   Ext-_{i+1} = up-down_i.
/// Result is indexed [degree][type].
std::vector<std::array<ExtendedDiagram, 4>>
extended_from_parametrized(std::vector<DiagramSet> const& diagrams);

/// H_i of X^a -> X^b -> X^c -> X^d -> (X, X_d) -> (X, X_c) -> (X, X_b) -> (X, X_a),
/// where X^t is the sublevel set and X_t the superlevel set.
ZigzagModule extended_sequence(ConstructibleRSpace const& x, int i, Rectangle const& r,
                               PrimeField field);

/// Node interval of the extended sequence counted by each type.
IndexInterval extended_pattern(ExtendedType t);

std::size_t extended_direct(ConstructibleRSpace const& x, int i, ExtendedType t,
                            Rectangle const& r, PrimeField field);

} // namespace paramhom

#endif
