#include "paramhom/complexes.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace paramhom
{

namespace
{

std::string simplex_string(Simplex const& s)
{
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < s.size(); ++i)
        out << (i ? "," : "") << s[i];
    out << ']';
    return out.str();
}

Simplex drop_vertex(Simplex const& s, std::size_t i)
{
    Simplex face;
    face.reserve(s.size() - 1);
    for (std::size_t j = 0; j < s.size(); ++j)
        if (j != i)
            face.push_back(s[j]);
    return face;
}

std::size_t ambient_size(std::vector<std::vector<std::size_t>> const& gens, int k)
{
    return k >= 0 && static_cast<std::size_t>(k) < gens.size() ? gens[k].size() : 0;
}

} // namespace

std::optional<std::string> check_simplex(Simplex const& s)
{
    if (s.empty())
        return "empty simplex";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0)
            return "negative vertex id in " + simplex_string(s);
        if (i > 0 && s[i - 1] >= s[i])
            return "vertex tuple not strictly sorted: " + simplex_string(s);
    }
    return std::nullopt;
}

SimplicialComplex SimplicialComplex::closure(std::vector<Simplex> const& simplices)
{
    std::vector<std::set<Simplex>> sets;
    for (auto const& s : simplices) {
        if (auto problem = check_simplex(s))
            throw ContractError(*problem);
        std::size_t const top = s.size() - 1;
        if (sets.size() <= top)
            sets.resize(top + 1);
        // Enumerate all nonempty subsets; pieces are small.
        if (s.size() > 20)
            throw ContractError("simplex dimension too large");
        std::uint32_t const n = static_cast<std::uint32_t>(s.size());
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            Simplex face;
            for (std::uint32_t i = 0; i < n; ++i)
                if (mask & (1u << i))
                    face.push_back(s[i]);
            sets[face.size() - 1].insert(std::move(face));
        }
    }
    SimplicialComplex out;
    for (auto& set : sets)
        out.by_dim_.emplace_back(set.begin(), set.end());
    return out;
}

SimplicialComplex SimplicialComplex::exact(std::vector<Simplex> const& simplices)
{
    SimplicialComplex out = closure(simplices);
    if (out.size() != std::set<Simplex>(simplices.begin(), simplices.end()).size())
        throw ContractError("simplex list is not closed under taking faces");
    return out;
}

std::size_t SimplicialComplex::count(int k) const
{
    return k >= 0 && k <= dimension() ? by_dim_[k].size() : 0;
}

std::size_t SimplicialComplex::size() const
{
    std::size_t n = 0;
    for (auto const& v : by_dim_)
        n += v.size();
    return n;
}

std::vector<Simplex> const& SimplicialComplex::simplices(int k) const
{
    static std::vector<Simplex> const none;
    return k >= 0 && k <= dimension() ? by_dim_[k] : none;
}

std::vector<int> SimplicialComplex::vertices() const
{
    std::vector<int> out;
    for (auto const& s : simplices(0))
        out.push_back(s[0]);
    return out;
}

std::optional<std::size_t> SimplicialComplex::index_of(Simplex const& s) const
{
    int const k = static_cast<int>(s.size()) - 1;
    if (k < 0 || k > dimension())
        return std::nullopt;
    auto const& list = by_dim_[k];
    auto it = std::lower_bound(list.begin(), list.end(), s);
    if (it == list.end() || *it != s)
        return std::nullopt;
    return static_cast<std::size_t>(it - list.begin());
}

std::vector<Simplex> SimplicialComplex::all() const
{
    std::vector<Simplex> out;
    for (auto const& v : by_dim_)
        out.insert(out.end(), v.begin(), v.end());
    return out;
}

SimplicialMap SimplicialMap::identity(SimplicialComplex const& k)
{
    std::map<int, int> table;
    for (int v : k.vertices())
        table[v] = v;
    return SimplicialMap(std::move(table));
}

SimplicialMap SimplicialMap::constant(SimplicialComplex const& source, int target_vertex)
{
    std::map<int, int> table;
    for (int v : source.vertices())
        table[v] = target_vertex;
    return SimplicialMap(std::move(table));
}

std::optional<std::pair<Simplex, int>> SimplicialMap::image(Simplex const& s) const
{
    Simplex img;
    img.reserve(s.size());
    for (int v : s) {
        auto it = vertex_map_.find(v);
        if (it == vertex_map_.end())
            throw ContractError("vertex " + std::to_string(v) + " missing from map table");
        img.push_back(it->second);
    }
    // Insertion sort, counting transpositions for the sign.
    int sign = 1;
    for (std::size_t i = 1; i < img.size(); ++i) {
        for (std::size_t j = i; j > 0 && img[j - 1] > img[j]; --j) {
            std::swap(img[j - 1], img[j]);
            sign = -sign;
        }
    }
    for (std::size_t i = 1; i < img.size(); ++i)
        if (img[i - 1] == img[i])
            return std::nullopt;
    return std::make_pair(std::move(img), sign);
}

std::vector<std::string> SimplicialMap::violations(SimplicialComplex const& source,
                                                   SimplicialComplex const& target) const
{
    std::vector<std::string> out;
    for (int v : source.vertices()) {
        auto it = vertex_map_.find(v);
        if (it == vertex_map_.end())
            out.push_back("source vertex " + std::to_string(v) + " has no image");
        else if (!target.contains(Simplex{it->second}))
            out.push_back("vertex " + std::to_string(v) + " maps to non-existent vertex " +
                          std::to_string(it->second));
    }
    if (!out.empty())
        return out;
    for (auto const& s : source.all()) {
        Simplex img;
        for (int v : s)
            img.push_back(vertex_map_.at(v));
        std::sort(img.begin(), img.end());
        img.erase(std::unique(img.begin(), img.end()), img.end());
        if (!target.contains(img))
            out.push_back("image of " + simplex_string(s) + " is not a simplex of the target");
    }
    return out;
}

SimplicialMap SimplicialMap::compose_after(SimplicialMap const& first) const
{
    std::map<int, int> table;
    for (auto const& [v, w] : first.table()) {
        auto it = vertex_map_.find(w);
        if (it == vertex_map_.end())
            throw ContractError("composition: vertex " + std::to_string(w) + " missing");
        table[v] = it->second;
    }
    return SimplicialMap(std::move(table));
}

ChainComplex::ChainComplex(PrimeField field)
    : field_(field)
{
}

ChainComplex::ChainComplex(PrimeField field,
                           std::vector<std::vector<std::string>> labels,
                           std::vector<Matrix> boundaries)
    : field_(field), labels_(std::move(labels)), boundaries_(std::move(boundaries))
{
    while (!labels_.empty() && labels_.back().empty())
        labels_.pop_back();
    boundaries_.resize(labels_.size(), Matrix(0, 0, field_));
    for (std::size_t k = 0; k < labels_.size(); ++k) {
        std::size_t const rows = k == 0 ? 0 : labels_[k - 1].size();
        auto& d = boundaries_[k];
        if (d.rows() == 0 && d.cols() == 0)
            d = Matrix(rows, labels_[k].size(), field_);
        if (d.rows() != rows || d.cols() != labels_[k].size())
            throw ContractError("boundary matrix shape does not match chain ranks in degree " +
                                std::to_string(k));
    }
}

std::size_t ChainComplex::rank(int k) const
{
    return k >= 0 && k <= top_dimension() ? labels_[k].size() : 0;
}

std::size_t ChainComplex::total_rank() const
{
    std::size_t n = 0;
    for (auto const& l : labels_)
        n += l.size();
    return n;
}

std::vector<std::string> const& ChainComplex::labels(int k) const
{
    static std::vector<std::string> const none;
    return k >= 0 && k <= top_dimension() ? labels_[k] : none;
}

Matrix ChainComplex::boundary(int k) const
{
    if (k >= 0 && k <= top_dimension())
        return boundaries_[k];
    return Matrix(rank(k - 1), rank(k), field_);
}

bool ChainComplex::boundary_squares_to_zero() const
{
    for (int k = 1; k <= top_dimension(); ++k)
        if (!(boundary(k - 1) * boundary(k)).is_zero())
            return false;
    return true;
}

long ChainComplex::euler_characteristic() const
{
    long chi = 0;
    for (int k = 0; k <= top_dimension(); ++k)
        chi += (k % 2 == 0 ? 1 : -1) * static_cast<long>(rank(k));
    return chi;
}

ChainComplex ChainComplex::restrict_to(std::vector<std::vector<std::size_t>> const& keep) const
{
    std::size_t const top = std::min(keep.size(), labels_.size());
    std::vector<std::vector<std::string>> labels(top);
    std::vector<Matrix> bds;
    for (std::size_t k = 0; k < top; ++k) {
        for (auto g : keep[k])
            labels[k].push_back(labels_[k].at(g));
        std::size_t const rows = k == 0 ? 0 : keep[k - 1].size();
        Matrix d(rows, keep[k].size(), field_);
        if (k > 0) {
            auto const& full = boundaries_[k];
            for (std::size_t r = 0; r < rows; ++r) {
                auto const src_row = full.row(keep[k - 1][r]);
                for (std::size_t c = 0; c < keep[k].size(); ++c)
                    d(r, c) = src_row[keep[k][c]];
            }
        }
        bds.push_back(std::move(d));
    }
    return ChainComplex(field_, std::move(labels), std::move(bds));
}

ChainMap ChainMap::zero(ChainComplex const& source, ChainComplex const& target)
{
    std::vector<Matrix> ms;
    for (int k = 0; k <= source.top_dimension(); ++k)
        ms.emplace_back(target.rank(k), source.rank(k), source.field());
    return ChainMap(std::move(ms));
}

ChainMap ChainMap::identity(ChainComplex const& c)
{
    std::vector<Matrix> ms;
    for (int k = 0; k <= c.top_dimension(); ++k)
        ms.push_back(Matrix::identity(c.rank(k), c.field()));
    return ChainMap(std::move(ms));
}

Matrix ChainMap::matrix(int k, ChainComplex const& source, ChainComplex const& target) const
{
    if (k >= 0 && static_cast<std::size_t>(k) < matrices_.size()) {
        auto const& m = matrices_[k];
        if (m.rows() != target.rank(k) || m.cols() != source.rank(k))
            throw ContractError("chain map shape mismatch in degree " + std::to_string(k));
        return m;
    }
    return Matrix(target.rank(k), source.rank(k), source.field());
}

bool ChainMap::commutes(ChainComplex const& source, ChainComplex const& target) const
{
    int const top = std::max(source.top_dimension(), target.top_dimension());
    try {
        for (int k = 0; k <= top + 1; ++k) {
            Matrix const lhs = target.boundary(k) * matrix(k, source, target);
            Matrix const rhs = matrix(k - 1, source, target) * source.boundary(k);
            if (!(lhs == rhs))
                return false;
        }
    } catch (ContractError const&) {
        return false;
    }
    return true;
}

ChainComplex chain_complex(SimplicialComplex const& k, PrimeField field)
{
    std::vector<std::vector<std::string>> labels(k.dimension() + 1);
    std::vector<Matrix> bds;
    for (int d = 0; d <= k.dimension(); ++d) {
        for (auto const& s : k.simplices(d))
            labels[d].push_back(simplex_string(s));
        Matrix m(k.count(d - 1), k.count(d), field);
        if (d > 0) {
            auto const& simplices = k.simplices(d);
            for (std::size_t c = 0; c < simplices.size(); ++c) {
                for (std::size_t i = 0; i < simplices[c].size(); ++i) {
                    auto const face = k.index_of(drop_vertex(simplices[c], i));
                    if (!face)
                        throw ContractError("complex not closed under faces");
                    m(*face, c) = field.reduce(i % 2 == 0 ? 1 : -1);
                }
            }
        }
        bds.push_back(std::move(m));
    }
    return ChainComplex(field, std::move(labels), std::move(bds));
}

ChainMap induced_chain_map(SimplicialMap const& f,
                           SimplicialComplex const& source,
                           SimplicialComplex const& target,
                           PrimeField field)
{
    std::vector<Matrix> ms;
    for (int d = 0; d <= source.dimension(); ++d) {
        Matrix m(target.count(d), source.count(d), field);
        auto const& simplices = source.simplices(d);
        for (std::size_t c = 0; c < simplices.size(); ++c) {
            auto const img = f.image(simplices[c]);
            if (!img)
                continue;
            auto const row = target.index_of(img->first);
            if (!row)
                throw ContractError("image of " + simplex_string(simplices[c]) +
                                    " is not a simplex of the target");
            m(*row, c) = field.reduce(img->second);
        }
        ms.push_back(std::move(m));
    }
    return ChainMap(std::move(ms));
}

HomologyBasis homology(ChainComplex const& c, int k)
{
    HomologyBasis out;
    out.degree = k;
    PrimeField const f = c.field();
    std::size_t const n = c.rank(k);
    if (n == 0) {
        out.representatives = Matrix(0, 0, f);
        out.projection = Matrix(0, 0, f);
        return out;
    }
    Matrix const cycles = kernel_basis(c.boundary(k));
    auto q = quotient_map(cycles, c.boundary(k + 1));
    out.rank = q.dimension;
    out.representatives = std::move(q.representatives);
    out.projection = std::move(q.projection);
    return out;
}

Matrix induced_homology_map(ChainMap const& f,
                            ChainComplex const& source,
                            ChainComplex const& target,
                            HomologyBasis const& source_basis,
                            HomologyBasis const& target_basis)
{
    int const k = source_basis.degree;
    PrimeField const field = source.field();
    if (source_basis.rank == 0 || target_basis.rank == 0)
        return Matrix(target_basis.rank, source_basis.rank, field);
    Matrix const images = f.matrix(k, source, target) * source_basis.representatives;
    if (!(target.boundary(k) * images).is_zero())
        throw ContractError("chain map sends a cycle to a non-cycle in degree " +
                            std::to_string(k));
    return target_basis.projection * images;
}

Telescope telescope(TelescopeDiagram const& dgm)
{
    std::size_t const m = dgm.nodes.size();
    if (m == 0)
        throw ContractError("telescope of an empty diagram");
    if (dgm.edges.size() + 1 != m || dgm.left.size() != dgm.edges.size() ||
        dgm.right.size() != dgm.edges.size())
        throw ContractError("telescope diagram is not alternating");
    PrimeField const f = dgm.nodes.front().field();

    int top = -1;
    for (auto const& n : dgm.nodes)
        top = std::max(top, n.top_dimension());
    for (auto const& e : dgm.edges)
        top = std::max(top, e.top_dimension() + 1);

    Telescope t;
    t.node_offsets.assign(m, std::vector<std::size_t>(top + 1, 0));
    t.edge_offsets.assign(m - 1, std::vector<std::size_t>(top + 1, 0));
    std::vector<std::vector<std::string>> labels(top + 1);
    for (int k = 0; k <= top; ++k) {
        for (std::size_t i = 0; i < m; ++i) {
            t.node_offsets[i][k] = labels[k].size();
            for (auto const& l : dgm.nodes[i].labels(k))
                labels[k].push_back("N" + std::to_string(i) + ":" + l);
            if (i + 1 < m) {
                t.edge_offsets[i][k] = labels[k].size();
                for (auto const& l : dgm.edges[i].labels(k - 1))
                    labels[k].push_back("E" + std::to_string(i) + "x:" + l);
            }
        }
    }

    std::vector<Matrix> bds;
    for (int k = 0; k <= top; ++k) {
        Matrix d(k == 0 ? 0 : labels[k - 1].size(), labels[k].size(), f);
        if (k > 0) {
            for (std::size_t i = 0; i < m; ++i) {
                auto const& node = dgm.nodes[i];
                Matrix const bn = node.boundary(k);
                for (std::size_t r = 0; r < bn.rows(); ++r)
                    for (std::size_t c = 0; c < bn.cols(); ++c)
                        d(t.node_offsets[i][k - 1] + r, t.node_offsets[i][k] + c) = bn(r, c);
                if (i + 1 == m)
                    continue;
                auto const& edge = dgm.edges[i];
                std::size_t const ncols = edge.rank(k - 1);
                if (ncols == 0)
                    continue;
                std::size_t const col0 = t.edge_offsets[i][k];
                Matrix const lm = dgm.left[i].matrix(k - 1, edge, dgm.nodes[i]);
                Matrix const rm = dgm.right[i].matrix(k - 1, edge, dgm.nodes[i + 1]);
                for (std::size_t c = 0; c < ncols; ++c) {
                    for (std::size_t r = 0; r < lm.rows(); ++r)
                        if (lm(r, c))
                            d(t.node_offsets[i][k - 1] + r, col0 + c) =
                                f.sub(d(t.node_offsets[i][k - 1] + r, col0 + c), lm(r, c));
                    for (std::size_t r = 0; r < rm.rows(); ++r)
                        if (rm(r, c))
                            d(t.node_offsets[i + 1][k - 1] + r, col0 + c) =
                                f.add(d(t.node_offsets[i + 1][k - 1] + r, col0 + c), rm(r, c));
                }
                Matrix const be = edge.boundary(k - 1);
                for (std::size_t r = 0; r < be.rows(); ++r)
                    for (std::size_t c = 0; c < be.cols(); ++c)
                        if (be(r, c))
                            d(t.edge_offsets[i][k - 1] + r, col0 + c) = f.neg(be(r, c));
            }
        }
        bds.push_back(std::move(d));
    }
    t.total = ChainComplex(f, labels, std::move(bds));
    if (!t.total.boundary_squares_to_zero())
        throw ContractError("telescope differential does not square to zero");

    auto node_inclusion = [&](std::size_t i, ChainComplex const& src, ChainMap const* via) {
        std::vector<Matrix> ms;
        for (int k = 0; k <= src.top_dimension(); ++k) {
            Matrix incl(t.total.rank(k), src.rank(k), f);
            Matrix const inner = via ? via->matrix(k, src, dgm.nodes[i])
                                     : Matrix::identity(src.rank(k), f);
            for (std::size_t r = 0; r < inner.rows(); ++r)
                for (std::size_t c = 0; c < inner.cols(); ++c)
                    incl(t.node_offsets[i][k] + r, c) = inner(r, c);
            ms.push_back(std::move(incl));
        }
        return ChainMap(std::move(ms));
    };
    for (std::size_t i = 0; i < m; ++i)
        t.node_inclusions.push_back(node_inclusion(i, dgm.nodes[i], nullptr));
    for (std::size_t i = 0; i + 1 < m; ++i) {
        t.edge_left_inclusions.push_back(node_inclusion(i, dgm.edges[i], &dgm.left[i]));
        t.edge_right_inclusions.push_back(node_inclusion(i + 1, dgm.edges[i], &dgm.right[i]));
    }
    return t;
}

bool is_boundary_closed(ChainComplex const& c,
                        std::vector<std::vector<std::size_t>> const& gens)
{
    for (int k = 1; k <= c.top_dimension(); ++k) {
        if (ambient_size(gens, k) == 0)
            continue;
        std::vector<bool> in_lower(c.rank(k - 1), false);
        if (static_cast<std::size_t>(k - 1) < gens.size())
            for (auto g : gens[k - 1])
                in_lower.at(g) = true;
        Matrix const d = c.boundary(k);
        for (auto g : gens[k])
            for (std::size_t r = 0; r < d.rows(); ++r)
                if (d(r, g) != 0 && !in_lower[r])
                    return false;
    }
    return true;
}

namespace
{

std::vector<std::vector<std::size_t>> normalized(ChainComplex const& c,
                                                 std::vector<std::vector<std::size_t>> gens)
{
    gens.resize(std::max<std::size_t>(gens.size(), c.top_dimension() + 1));
    for (std::size_t k = 0; k < gens.size(); ++k) {
        auto& g = gens[k];
        std::sort(g.begin(), g.end());
        g.erase(std::unique(g.begin(), g.end()), g.end());
        for (auto x : g)
            if (x >= c.rank(static_cast<int>(k)))
                throw ContractError("generator index out of range");
    }
    return gens;
}

} // namespace

ChainComplex relative_complex(ChainComplex const& c,
                              std::vector<std::vector<std::size_t>> const& sub)
{
    auto const s = normalized(c, sub);
    if (!is_boundary_closed(c, s))
        throw ContractError("relative_complex: subcomplex is not closed under the boundary");
    std::vector<std::vector<std::size_t>> keep(c.top_dimension() + 1);
    for (int k = 0; k <= c.top_dimension(); ++k) {
        std::size_t j = 0;
        for (std::size_t g = 0; g < c.rank(k); ++g) {
            if (j < s[k].size() && s[k][j] == g) {
                ++j;
                continue;
            }
            keep[k].push_back(g);
        }
    }
    return c.restrict_to(keep);
}

ChainComplex subcomplex(ChainComplex const& c,
                        std::vector<std::vector<std::size_t>> const& gens)
{
    auto const s = normalized(c, gens);
    if (!is_boundary_closed(c, s))
        throw ContractError("subcomplex: generators are not closed under the boundary");
    return c.restrict_to(s);
}

} // namespace paramhom
