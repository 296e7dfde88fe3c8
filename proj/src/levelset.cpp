#include "paramhom/levelset.hpp"

#include <string>

namespace paramhom
{

namespace
{

/// Value of endpoint a_i with the conventions a_0 = -inf, a_{n+1} = +inf.
double endpoint(std::vector<double> const& a, std::size_t i)
{
    if (i == 0)
        return -infinity;
    if (i > a.size())
        return infinity;
    return a[i - 1];
}

} // namespace

LevelsetZigzag levelset_zigzag(ConstructibleRSpace const& x, int k, PrimeField field)
{
    require_valid(x);
    std::size_t const n = x.size();

    std::vector<ChainComplex> vchains, echains;
    std::vector<HomologyBasis> vh, eh;
    for (auto const& v : x.vertex_complexes) {
        vchains.push_back(chain_complex(v, field));
        vh.push_back(homology(vchains.back(), k));
    }
    for (auto const& e : x.edge_complexes) {
        echains.push_back(chain_complex(e, field));
        eh.push_back(homology(echains.back(), k));
    }

    std::vector<std::size_t> dims;
    std::vector<ZigzagArrow> arrows;
    LevelsetZigzag out{ZigzagModule({0}, {}, field), {}};

    dims.push_back(0);
    out.labels.push_back({LevelsetNode::Kind::fiber, 0});
    for (std::size_t i = 0; i < n; ++i) {
        // F_{i} -> S_{i+1} (1-based names), from the right map of gap i-1.
        std::size_t const s_dim = vh[i].rank;
        if (i == 0) {
            arrows.push_back({ArrowDirection::forward, Matrix(s_dim, 0, field)});
        } else {
            auto const f = induced_chain_map(x.right_maps[i - 1], x.edge_complexes[i - 1],
                                             x.vertex_complexes[i], field);
            arrows.push_back({ArrowDirection::forward,
                              induced_homology_map(f, echains[i - 1], vchains[i], eh[i - 1], vh[i])});
        }
        dims.push_back(s_dim);
        out.labels.push_back({LevelsetNode::Kind::slice, i + 1});

        if (i + 1 == n) {
            arrows.push_back({ArrowDirection::backward, Matrix(s_dim, 0, field)});
            dims.push_back(0);
        } else {
            auto const f = induced_chain_map(x.left_maps[i], x.edge_complexes[i],
                                             x.vertex_complexes[i], field);
            arrows.push_back({ArrowDirection::backward,
                              induced_homology_map(f, echains[i], vchains[i], eh[i], vh[i])});
            dims.push_back(eh[i].rank);
        }
        out.labels.push_back({LevelsetNode::Kind::fiber, i + 1});
    }
    out.module = ZigzagModule(std::move(dims), std::move(arrows), field);
    return out;
}

DiagramSet translate(IntervalMultiset const& intervals, std::vector<LevelsetNode> const& labels,
                     std::vector<double> const& critical_values, int dim)
{
    DiagramSet out(dim);
    for (auto const& [iv, mult] : intervals) {
        if (iv.first < 1 || iv.last > labels.size() || iv.first > iv.last)
            throw ContractError("translate: interval [" + std::to_string(iv.first) + ", " +
                                std::to_string(iv.last) + "] outside the labelled zigzag");
        auto const& s = labels[iv.first - 1];
        auto const& e = labels[iv.last - 1];
        bool const s_slice = s.kind == LevelsetNode::Kind::slice;
        bool const e_slice = e.kind == LevelsetNode::Kind::slice;
        double const p = endpoint(critical_values, s.index);
        double const q = endpoint(critical_values, e_slice ? e.index : e.index + 1);
        Behavior type;
        if (s_slice && e_slice)
            type = Behavior::down_up;
        else if (s_slice)
            type = Behavior::down_down;
        else if (e_slice)
            type = Behavior::up_up;
        else
            type = Behavior::up_down;
        out[type].add(p, q, mult);
    }
    return out;
}

std::vector<DiagramSet> parametrized_homology(ConstructibleRSpace const& x, int max_dim,
                                              PrimeField field)
{
    std::vector<DiagramSet> out;
    for (int k = 0; k <= max_dim; ++k) {
        auto const z = levelset_zigzag(x, k, field);
        out.push_back(translate(decompose(z.module), z.labels, x.critical_values, k));
    }
    return out;
}

} // namespace paramhom
