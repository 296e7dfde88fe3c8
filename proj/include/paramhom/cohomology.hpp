#ifndef PARAMHOM_COHOMOLOGY_HPP
#define PARAMHOM_COHOMOLOGY_HPP

#include "paramhom/diagram.hpp"
#include "paramhom/rspace.hpp"

#include <vector>

namespace paramhom
{

/// Diagrams of the dual of the degree-k levelset zigzag, read with the same
/// translation table as homology.
DiagramSet cohomology_diagrams_unchecked(ConstructibleRSpace const& x, int k, PrimeField field);

/// As above, but throws ContractError unless the result equals the homology
/// diagrams of the same degree.
DiagramSet cohomology_diagrams(ConstructibleRSpace const& x, int k, PrimeField field);

std::vector<DiagramSet> parametrized_cohomology(ConstructibleRSpace const& x, int max_dim,
                                                PrimeField field);

} // namespace paramhom

#endif
