#include "paramhom/extended.hpp"

#include "paramhom/measures.hpp"

#include <stdexcept>

namespace paramhom
{

std::string extended_code(ExtendedType t)
{
    switch (t) {
    case ExtendedType::ordinary:
        return "ord";
    case ExtendedType::relative:
        return "rel";
    case ExtendedType::extended_plus:
        return "ext+";
    case ExtendedType::extended_minus:
        return "ext-";
    }
    throw std::logic_error("unknown extended type");
}

ExtendedType extended_from_code(std::string const& code)
{
    for (auto t : all_extended_types)
        if (extended_code(t) == code)
            return t;
    throw std::invalid_argument("unknown extended type '" + code +
                                "' (expected ord, rel, ext+ or ext-)");
}

std::vector<std::array<ExtendedDiagram, 4>>
extended_from_parametrized(std::vector<DiagramSet> const& diagrams)
{
    std::vector<std::array<ExtendedDiagram, 4>> out;
    for (std::size_t i = 0; i <= diagrams.size(); ++i) {
        int const dim = static_cast<int>(i);
        out.push_back({ExtendedDiagram{dim, ExtendedType::ordinary, {}},
                       ExtendedDiagram{dim, ExtendedType::relative, {}},
                       ExtendedDiagram{dim, ExtendedType::extended_plus, {}},
                       ExtendedDiagram{dim, ExtendedType::extended_minus, {}}});
    }
    auto slot = [&](std::size_t dim, ExtendedType t) -> UndecoratedDiagram& {
        return out[dim][static_cast<std::size_t>(t)].points;
    };
    for (std::size_t i = 0; i < diagrams.size(); ++i) {
        slot(i, ExtendedType::ordinary) = undecorate(diagrams[i][Behavior::down_down]);
        slot(i + 1, ExtendedType::relative) = undecorate(diagrams[i][Behavior::up_up]);
        slot(i, ExtendedType::extended_plus) = undecorate(diagrams[i][Behavior::down_up]);
        slot(i + 1, ExtendedType::extended_minus) = undecorate(diagrams[i][Behavior::up_down]);
    }
    return out;
}

ZigzagModule extended_sequence(ConstructibleRSpace const& x, int i, Rectangle const& r,
                               PrimeField field)
{
    if (!r.valid())
        throw ContractError("extended sequence needs a < b < c < d");
    CutModel const model(x, {r.a, r.b, r.c, r.d}, field);
    auto const whole = model.everything();
    std::vector<Subquotient> nodes;
    for (double t : {r.a, r.b, r.c, r.d})
        nodes.push_back(make_subcomplex(model, model.range(-infinity, t)));
    for (double t : {r.d, r.c, r.b, r.a})
        nodes.push_back(make_subquotient(model, whole, model.range(t, infinity)));
    std::vector<ArrowDirection> dirs(7, ArrowDirection::forward);
    return subquotient_zigzag(model, nodes, dirs, i);
}

IndexInterval extended_pattern(ExtendedType t)
{
    switch (t) {
    case ExtendedType::ordinary:
        return {2, 3};
    case ExtendedType::relative:
        return {6, 7};
    case ExtendedType::extended_plus:
        return {2, 5};
    case ExtendedType::extended_minus:
        return {4, 7};
    }
    throw std::logic_error("unknown extended type");
}

std::size_t extended_direct(ConstructibleRSpace const& x, int i, ExtendedType t,
                            Rectangle const& r, PrimeField field)
{
    return multiplicity(extended_sequence(x, i, r, field), extended_pattern(t));
}

} // namespace paramhom
