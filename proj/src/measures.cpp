#include "paramhom/measures.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace paramhom
{

namespace
{

std::string describe(Rectangle const& r)
{
    std::ostringstream out;
    out << "[" << r.a << ", " << r.b << "] x [" << r.c << ", " << r.d << "]";
    return out.str();
}

ZigzagModule build_rectangle_zigzag(ConstructibleRSpace const& x, int k, Rectangle const& r,
                                    PrimeField field, bool inject_fault)
{
    if (!r.valid_allowing_diagonal())
        throw ContractError("invalid rectangle " + describe(r));
    CutModel const model(x, {r.a, r.b, r.c, r.d}, field);
    std::vector<Subquotient> nodes;
    nodes.push_back(make_subcomplex(model, model.fiber(r.a)));
    nodes.push_back(make_subcomplex(model, model.range(r.a, r.b)));
    nodes.push_back(make_subcomplex(model, model.fiber(r.b)));
    nodes.push_back(make_subcomplex(model, model.range(r.b, r.c)));
    nodes.push_back(make_subcomplex(model, model.fiber(r.c)));
    nodes.push_back(make_subcomplex(model, model.range(r.c, r.d)));
    nodes.push_back(make_subcomplex(model, model.fiber(r.d)));
    std::vector<ArrowDirection> dirs;
    for (int i = 0; i < 6; ++i)
        dirs.push_back(i % 2 == 0 ? ArrowDirection::forward : ArrowDirection::backward);
    auto z = subquotient_zigzag(model, nodes, dirs, k);
    if (!inject_fault)
        return z;
    auto arrows = z.arrows();
    auto& m = arrows[1].matrix;
    arrows[1].matrix = Matrix(m.rows(), m.cols(), field);
    return ZigzagModule(z.dims(), std::move(arrows), field);
}

MeasureValues read_patterns(ZigzagModule const& z)
{
    auto const intervals = decompose(z);
    MeasureValues out{};
    for (auto t : all_behaviors) {
        auto it = intervals.find(rectangle_pattern(t));
        out[behavior_index(t)] = it == intervals.end() ? 0 : it->second;
    }
    return out;
}

} // namespace

ZigzagModule subquotient_zigzag(CutModel const& model, std::vector<Subquotient> const& nodes,
                                std::vector<ArrowDirection> const& directions, int k)
{
    if (nodes.empty() || directions.size() + 1 != nodes.size())
        throw ContractError("subquotient_zigzag: need one direction per consecutive pair");
    PrimeField const field = model.field();
    std::vector<HomologyBasis> bases;
    std::vector<std::size_t> dims;
    for (auto const& n : nodes) {
        bases.push_back(homology(n.complex, k));
        dims.push_back(bases.back().rank);
    }
    std::vector<ZigzagArrow> arrows;
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        bool const fwd = directions[i] == ArrowDirection::forward;
        std::size_t const s = fwd ? i : i + 1;
        std::size_t const t = fwd ? i + 1 : i;
        auto const f = subquotient_map(nodes[s], nodes[t], field);
        arrows.push_back({directions[i], induced_homology_map(f, nodes[s].complex,
                                                              nodes[t].complex, bases[s],
                                                              bases[t])});
    }
    return ZigzagModule(std::move(dims), std::move(arrows), field);
}

ZigzagModule rectangle_zigzag(ConstructibleRSpace const& x, int k, Rectangle const& r,
                              PrimeField field)
{
    return build_rectangle_zigzag(x, k, r, field, false);
}

IndexInterval rectangle_pattern(Behavior type)
{
    switch (type) {
    case Behavior::up_down:
        return {3, 5};
    case Behavior::down_down:
        return {2, 5};
    case Behavior::up_up:
        return {3, 6};
    case Behavior::down_up:
        return {2, 6};
    }
    throw std::logic_error("unknown behavior");
}

std::size_t measure_direct(ConstructibleRSpace const& x, int k, Behavior type,
                           Rectangle const& r, PrimeField field)
{
    if (!r.valid())
        throw ContractError("invalid rectangle " + describe(r) + " (need a < b < c < d)");
    return multiplicity(rectangle_zigzag(x, k, r, field), rectangle_pattern(type));
}

std::size_t closed_bar_bound(ConstructibleRSpace const& x, int k, double b, double c,
                             PrimeField field)
{
    if (!(b <= c) || !std::isfinite(b) || !std::isfinite(c))
        throw ContractError("closed_bar_bound: need finite b <= c");
    CutModel const model(x, {b, c}, field);
    std::vector<Subquotient> nodes{make_subcomplex(model, model.fiber(b)),
                                   make_subcomplex(model, model.range(b, c)),
                                   make_subcomplex(model, model.fiber(c))};
    auto const z = subquotient_zigzag(model, nodes,
                                      {ArrowDirection::forward, ArrowDirection::backward}, k);
    return multiplicity(z, {1, 3});
}

ConstructibleRSpace coordinate_reverse(ConstructibleRSpace const& x)
{
    ConstructibleRSpace out;
    out.critical_values.assign(x.critical_values.rbegin(), x.critical_values.rend());
    for (auto& v : out.critical_values)
        v = -v;
    out.vertex_complexes.assign(x.vertex_complexes.rbegin(), x.vertex_complexes.rend());
    out.edge_complexes.assign(x.edge_complexes.rbegin(), x.edge_complexes.rend());
    out.left_maps.assign(x.right_maps.rbegin(), x.right_maps.rend());
    out.right_maps.assign(x.left_maps.rbegin(), x.left_maps.rend());
    return out;
}

MeasureEngine::MeasureEngine(ConstructibleRSpace x, PrimeField field, bool inject_fault)
    : x_(std::move(x)), field_(field), inject_fault_(inject_fault)
{
    require_valid(x_);
}

MeasureValues MeasureEngine::evaluate(int k, Rectangle const& r)
{
    auto const key = std::make_tuple(k, r.a, r.b, r.c, r.d);
    if (auto it = cache_.find(key); it != cache_.end())
        return it->second;
    auto const values = read_patterns(build_rectangle_zigzag(x_, k, r, field_, inject_fault_));
    cache_.emplace(key, values);
    return values;
}

MeasureValues MeasureEngine::measures(int k, Rectangle const& r)
{
    if (!r.valid())
        throw ContractError("invalid rectangle " + describe(r) + " (need a < b < c < d)");
    return evaluate(k, r);
}

std::size_t MeasureEngine::measure(int k, Behavior type, Rectangle const& r)
{
    return measures(k, r)[behavior_index(type)];
}

MeasureOracle MeasureEngine::oracle(int k, Behavior type)
{
    return [this, k, type](Rectangle const& r) { return evaluate(k, r)[behavior_index(type)]; };
}

DiagramSet MeasureEngine::extract(int k)
{
    DiagramSet out(k);
    for (auto t : all_behaviors)
        out[t] = extract_diagram(oracle(k, t), t, k, x_.critical_values);
    return out;
}

} // namespace paramhom
