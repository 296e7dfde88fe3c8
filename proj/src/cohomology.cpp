#include "paramhom/cohomology.hpp"

#include "paramhom/levelset.hpp"

namespace paramhom
{

DiagramSet cohomology_diagrams_unchecked(ConstructibleRSpace const& x, int k, PrimeField field)
{
    auto const z = levelset_zigzag(x, k, field);
    return translate(decompose(dualize(z.module)), z.labels, x.critical_values, k);
}

DiagramSet cohomology_diagrams(ConstructibleRSpace const& x, int k, PrimeField field)
{
    auto const z = levelset_zigzag(x, k, field);
    auto homology = translate(decompose(z.module), z.labels, x.critical_values, k);
    auto cohomology = translate(decompose(dualize(z.module)), z.labels, x.critical_values, k);
    if (!(homology == cohomology))
        throw ContractError("cohomology diagrams in degree " + std::to_string(k) +
                            " differ from homology diagrams");
    return cohomology;
}

std::vector<DiagramSet> parametrized_cohomology(ConstructibleRSpace const& x, int max_dim,
                                                PrimeField field)
{
    std::vector<DiagramSet> out;
    for (int k = 0; k <= max_dim; ++k)
        out.push_back(cohomology_diagrams(x, k, field));
    return out;
}

} // namespace paramhom
