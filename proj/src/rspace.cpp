#include "paramhom/rspace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace paramhom
{

namespace
{

std::string fmt_value(double v)
{
    std::ostringstream out;
    out << v;
    return out.str();
}

/// Nodes for the whole space refined at `cuts`.
SlicePlan refined_plan(ConstructibleRSpace const& x, std::vector<double> const& cuts)
{
    auto const& a = x.critical_values;
    std::vector<double> values(a.begin(), a.end());
    for (double c : cuts)
        if (std::isfinite(c) && !a.empty() && c > a.front() && c < a.back())
            values.push_back(c);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());

    SlicePlan plan;
    for (double v : values) {
        auto it = std::lower_bound(a.begin(), a.end(), v);
        if (it != a.end() && *it == v) {
            plan.nodes.push_back({SliceNode::Kind::critical,
                                  static_cast<std::size_t>(it - a.begin()), v});
        } else {
            plan.nodes.push_back({SliceNode::Kind::regular,
                                  static_cast<std::size_t>(it - a.begin()) - 1, v});
        }
    }
    return plan;
}

} // namespace

double ConstructibleRSpace::half_min_gap() const
{
    double gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < critical_values.size(); ++i)
        gap = std::min(gap, critical_values[i] - critical_values[i - 1]);
    return std::isfinite(gap) ? gap / 2 : 1.0;
}

std::vector<std::string> validate(ConstructibleRSpace const& x)
{
    std::vector<std::string> out;
    std::size_t const n = x.size();
    if (n == 0)
        out.push_back("at least one critical value is required");
    for (std::size_t i = 0; i < n; ++i)
        if (!std::isfinite(x.critical_values[i]))
            out.push_back("critical value " + std::to_string(i + 1) + " is not finite");
    for (std::size_t i = 1; i < n; ++i)
        if (!(x.critical_values[i - 1] < x.critical_values[i]))
            out.push_back("critical values not strictly increasing at position " +
                          std::to_string(i + 1) + " (" + fmt_value(x.critical_values[i - 1]) +
                          ", " + fmt_value(x.critical_values[i]) + ")");
    if (x.vertex_complexes.size() != n)
        out.push_back("expected " + std::to_string(n) + " vertex complexes, got " +
                      std::to_string(x.vertex_complexes.size()));
    std::size_t const gaps = n == 0 ? 0 : n - 1;
    if (x.edge_complexes.size() != gaps)
        out.push_back("expected " + std::to_string(gaps) + " edge complexes, got " +
                      std::to_string(x.edge_complexes.size()));
    if (x.left_maps.size() != gaps)
        out.push_back("expected " + std::to_string(gaps) + " left maps, got " +
                      std::to_string(x.left_maps.size()));
    if (x.right_maps.size() != gaps)
        out.push_back("expected " + std::to_string(gaps) + " right maps, got " +
                      std::to_string(x.right_maps.size()));
    if (!out.empty())
        return out;
    for (std::size_t i = 0; i < gaps; ++i) {
        for (auto const& v : x.left_maps[i].violations(x.edge_complexes[i], x.vertex_complexes[i]))
            out.push_back("left map " + std::to_string(i + 1) + ": " + v);
        for (auto const& v :
             x.right_maps[i].violations(x.edge_complexes[i], x.vertex_complexes[i + 1]))
            out.push_back("right map " + std::to_string(i + 1) + ": " + v);
    }
    return out;
}

void require_valid(ConstructibleRSpace const& x)
{
    auto const problems = validate(x);
    if (problems.empty())
        return;
    std::string msg = "invalid constructible R-space:";
    for (auto const& p : problems)
        msg += "\n  " + p;
    throw ContractError(msg);
}

SimplicialComplex levelset_complex(ConstructibleRSpace const& x, double t)
{
    auto const& a = x.critical_values;
    if (a.empty() || !(t >= a.front() && t <= a.back()))
        return {};
    auto it = std::lower_bound(a.begin(), a.end(), t);
    std::size_t const i = static_cast<std::size_t>(it - a.begin());
    if (*it == t)
        return x.vertex_complexes[i];
    return x.edge_complexes[i - 1];
}

std::size_t SlicePlan::gap_between(std::size_t i) const
{
    // A cylinder between nodes i and i+1 lives in the gap starting at the
    // left node (critical a_g or regular inside gap g).
    return nodes.at(i).index;
}

SlicePlan slice_plan(ConstructibleRSpace const& x, double p, double q)
{
    if (p > q)
        throw ContractError("slice_plan: p > q");
    SlicePlan const full = refined_plan(x, {p, q});
    SlicePlan out;
    for (auto const& node : full.nodes)
        if (node.value >= p && node.value <= q)
            out.nodes.push_back(node);
    return out;
}

CutModel::CutModel(ConstructibleRSpace const& x, std::vector<double> const& cuts,
                   PrimeField field)
    : plan_(refined_plan(x, cuts)), total_(field)
{
    require_valid(x);
    std::size_t const n = x.size();
    std::vector<ChainComplex> vchains, echains;
    for (auto const& v : x.vertex_complexes)
        vchains.push_back(chain_complex(v, field));
    for (auto const& e : x.edge_complexes)
        echains.push_back(chain_complex(e, field));
    std::vector<ChainMap> lmaps, rmaps;
    for (std::size_t g = 0; g + 1 < n; ++g) {
        lmaps.push_back(induced_chain_map(x.left_maps[g], x.edge_complexes[g],
                                          x.vertex_complexes[g], field));
        rmaps.push_back(induced_chain_map(x.right_maps[g], x.edge_complexes[g],
                                          x.vertex_complexes[g + 1], field));
    }

    TelescopeDiagram dgm;
    auto const& nodes = plan_.nodes;
    for (auto const& node : nodes)
        dgm.nodes.push_back(node.kind == SliceNode::Kind::critical ? vchains[node.index]
                                                                   : echains[node.index]);
    for (std::size_t j = 0; j + 1 < nodes.size(); ++j) {
        std::size_t const g = plan_.gap_between(j);
        dgm.edges.push_back(echains[g]);
        dgm.left.push_back(nodes[j].kind == SliceNode::Kind::critical
                               ? lmaps[g]
                               : ChainMap::identity(echains[g]));
        dgm.right.push_back(nodes[j + 1].kind == SliceNode::Kind::critical
                                ? rmaps[g]
                                : ChainMap::identity(echains[g]));
    }
    Telescope tel = telescope(dgm);
    total_ = std::move(tel.total);
    int const top = total_.top_dimension();
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        std::vector<std::size_t> offs, counts;
        for (int k = 0; k <= top; ++k) {
            offs.push_back(tel.node_offsets[j].at(k));
            counts.push_back(dgm.nodes[j].rank(k));
        }
        node_offsets_.push_back(std::move(offs));
        node_counts_.push_back(std::move(counts));
        if (j + 1 < nodes.size()) {
            std::vector<std::size_t> eoffs, ecounts;
            for (int k = 0; k <= top; ++k) {
                eoffs.push_back(tel.edge_offsets[j].at(k));
                ecounts.push_back(dgm.edges[j].rank(k - 1));
            }
            edge_offsets_.push_back(std::move(eoffs));
            edge_counts_.push_back(std::move(ecounts));
        }
    }
}

GeneratorSet CutModel::nothing() const
{
    return GeneratorSet(std::max(total_.top_dimension() + 1, 0));
}

GeneratorSet CutModel::everything() const
{
    return range(-std::numeric_limits<double>::infinity(),
                 std::numeric_limits<double>::infinity());
}

GeneratorSet CutModel::range(double p, double q) const
{
    if (p > q)
        throw ContractError("range: p > q");
    auto const& nodes = plan_.nodes;
    auto check_endpoint = [&](double t) {
        if (!std::isfinite(t) || nodes.empty())
            return;
        if (t < nodes.front().value || t > nodes.back().value)
            return;
        bool const present = std::any_of(nodes.begin(), nodes.end(),
                                         [t](SliceNode const& s) { return s.value == t; });
        if (!present)
            throw ContractError("range endpoint " + fmt_value(t) + " is not a cut of this model");
    };
    check_endpoint(p);
    check_endpoint(q);

    GeneratorSet out = nothing();
    std::size_t first = nodes.size(), last = 0;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        if (nodes[j].value >= p && nodes[j].value <= q) {
            first = std::min(first, j);
            last = j;
        }
    }
    if (first == nodes.size())
        return out;
    for (std::size_t k = 0; k < out.size(); ++k) {
        for (std::size_t j = first; j <= last; ++j) {
            for (std::size_t g = 0; g < node_counts_[j][k]; ++g)
                out[k].push_back(node_offsets_[j][k] + g);
            if (j < last)
                for (std::size_t g = 0; g < edge_counts_[j][k]; ++g)
                    out[k].push_back(edge_offsets_[j][k] + g);
        }
    }
    return out;
}

namespace
{

GeneratorSet set_difference(GeneratorSet const& upper, GeneratorSet const& lower)
{
    GeneratorSet out(upper.size());
    for (std::size_t k = 0; k < upper.size(); ++k) {
        static std::vector<std::size_t> const none;
        auto const& l = k < lower.size() ? lower[k] : none;
        std::set_difference(upper[k].begin(), upper[k].end(), l.begin(), l.end(),
                            std::back_inserter(out[k]));
    }
    return out;
}

bool includes_all(GeneratorSet const& big, GeneratorSet const& small)
{
    for (std::size_t k = 0; k < small.size(); ++k) {
        if (small[k].empty())
            continue;
        if (k >= big.size() ||
            !std::includes(big[k].begin(), big[k].end(), small[k].begin(), small[k].end()))
            return false;
    }
    return true;
}

} // namespace

Subquotient make_subquotient(CutModel const& model, GeneratorSet upper, GeneratorSet lower)
{
    if (!includes_all(upper, lower))
        throw ContractError("subquotient: lower set is not contained in upper set");
    Subquotient sq;
    sq.generators = set_difference(upper, lower);
    sq.complex = model.total().restrict_to(sq.generators);
    sq.upper = std::move(upper);
    sq.lower = std::move(lower);
    return sq;
}

Subquotient make_subcomplex(CutModel const& model, GeneratorSet gens)
{
    return make_subquotient(model, std::move(gens), model.nothing());
}

ChainMap subquotient_map(Subquotient const& from, Subquotient const& to, PrimeField field)
{
    if (!includes_all(to.upper, from.upper) || !includes_all(to.lower, from.lower))
        throw ContractError("subquotient_map: not induced by an inclusion of pairs");
    std::vector<Matrix> ms;
    for (int k = 0; k <= from.complex.top_dimension(); ++k) {
        Matrix m(to.complex.rank(k), from.complex.rank(k), field);
        auto const& src = from.generators[k];
        static std::vector<std::size_t> const none;
        auto const& dst = static_cast<std::size_t>(k) < to.generators.size() ? to.generators[k] : none;
        std::size_t r = 0;
        for (std::size_t c = 0; c < src.size(); ++c) {
            while (r < dst.size() && dst[r] < src[c])
                ++r;
            if (r < dst.size() && dst[r] == src[c])
                m(r, c) = 1;
        }
        ms.push_back(std::move(m));
    }
    return ChainMap(std::move(ms));
}

SliceComplex slice_complex(ConstructibleRSpace const& x, double p, double q, PrimeField field)
{
    if (p > q)
        throw ContractError("slice_complex: p > q");
    CutModel const model(x, {p, q}, field);
    auto const slice = make_subcomplex(model, model.range(p, q));
    auto const low = make_subcomplex(model, model.fiber(p));
    auto const high = make_subcomplex(model, model.fiber(q));
    SliceComplex out;
    out.low_inclusion = subquotient_map(low, slice, field);
    out.high_inclusion = subquotient_map(high, slice, field);
    out.complex = slice.complex;
    out.fiber_low = low.complex;
    out.fiber_high = high.complex;
    return out;
}

SliceComplex sublevel_complex(ConstructibleRSpace const& x, double t, PrimeField field)
{
    return slice_complex(x, -std::numeric_limits<double>::infinity(), t, field);
}

SliceComplex superlevel_complex(ConstructibleRSpace const& x, double t, PrimeField field)
{
    return slice_complex(x, t, std::numeric_limits<double>::infinity(), field);
}

} // namespace paramhom
