#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace oracle
{

using paramhom::ArrowDirection;
using paramhom::IndexInterval;
using paramhom::IntervalMultiset;
using paramhom::ZigzagModule;

namespace
{

std::int64_t mod(std::int64_t v, std::int64_t p)
{
    v %= p;
    return v < 0 ? v + p : v;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t p)
{
    // Fermat; p is prime and small.
    std::int64_t result = 1, base = mod(a, p), e = p - 2;
    while (e > 0) {
        if (e & 1)
            result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return result;
}

/// Reduces in place to row echelon form; returns pivot columns.
std::vector<std::size_t> eliminate(Rows& m, std::size_t cols, std::int64_t p)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
        std::size_t sel = row;
        while (sel < m.size() && mod(m[sel][c], p) == 0)
            ++sel;
        if (sel == m.size())
            continue;
        std::swap(m[row], m[sel]);
        std::int64_t const inv = inverse_mod(m[row][c], p);
        for (auto& v : m[row])
            v = mod(v * inv, p);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row)
                continue;
            std::int64_t const f = mod(m[r][c], p);
            if (f == 0)
                continue;
            for (std::size_t k = 0; k < cols; ++k)
                m[r][k] = mod(m[r][k] - f * m[row][k], p);
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

Rows to_rows(paramhom::Matrix const& m)
{
    Rows out(m.rows(), std::vector<std::int64_t>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            out[r][c] = m(r, c);
    return out;
}

double gap(double u, double v)
{
    if (u == v)
        return 0;
    return std::fabs(u - v);
}

double dist(paramhom::PlanePoint const& x, paramhom::PlanePoint const& y)
{
    return std::max(gap(x.first, y.first), gap(x.second, y.second));
}

double to_diagonal(paramhom::PlanePoint const& x)
{
    if (std::isinf(x.first) || std::isinf(x.second))
        return std::numeric_limits<double>::infinity();
    return (x.second - x.first) / 2;
}

} // namespace

std::size_t rank_mod(Rows m, std::int64_t p)
{
    if (m.empty())
        return 0;
    return eliminate(m, m.front().size(), p).size();
}

std::vector<std::vector<std::int64_t>> kernel_mod(Rows const& m, std::size_t cols, std::int64_t p)
{
    Rows r = m;
    auto const pivots = eliminate(r, cols, p);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots)
        is_pivot[c] = true;
    std::vector<std::vector<std::int64_t>> out;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<std::int64_t> v(cols, 0);
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = mod(-r[i][free], p);
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<std::size_t> additive_invariants(ZigzagModule const& z)
{
    std::int64_t const p = z.field().characteristic();
    auto const& dims = z.dims();
    std::size_t const n = dims.size();
    std::vector<std::size_t> out(dims.begin(), dims.end());
    for (auto const& a : z.arrows())
        out.push_back(rank_mod(to_rows(a.matrix), p));

    for (std::size_t first = 0; first < n; ++first) {
        for (std::size_t last = first; last < n; ++last) {
            std::vector<std::size_t> offset;
            std::size_t total = 0;
            for (std::size_t i = first; i <= last; ++i) {
                offset.push_back(total);
                total += dims[i];
            }
            auto at = [&](std::size_t node) { return offset[node - first]; };
            Rows compat, relations;
            for (std::size_t i = first; i < last; ++i) {
                auto const& arrow = z.arrows()[i];
                auto const m = to_rows(arrow.matrix);
                bool const fwd = arrow.direction == ArrowDirection::forward;
                std::size_t const src = fwd ? i : i + 1;
                std::size_t const tgt = fwd ? i + 1 : i;
                for (std::size_t r = 0; r < dims[tgt]; ++r) {
                    std::vector<std::int64_t> row(total, 0);
                    for (std::size_t c = 0; c < dims[src]; ++c)
                        row[at(src) + c] = m[r][c];
                    row[at(tgt) + r] = mod(row[at(tgt) + r] - 1, p);
                    compat.push_back(std::move(row));
                }
                for (std::size_t c = 0; c < dims[src]; ++c) {
                    std::vector<std::int64_t> v(total, 0);
                    v[at(src) + c] = 1;
                    for (std::size_t r = 0; r < dims[tgt]; ++r)
                        v[at(tgt) + r] = mod(-m[r][c], p);
                    relations.push_back(std::move(v));
                }
            }
            std::size_t const lim = total - rank_mod(compat, p);
            std::size_t const rel = rank_mod(relations, p);
            std::size_t const colim = total - rel;
            Rows both = relations;
            auto const kernel = compat.empty() ? [&] {
                std::vector<std::vector<std::int64_t>> id;
                for (std::size_t c = 0; c < total; ++c) {
                    std::vector<std::int64_t> v(total, 0);
                    v[c] = 1;
                    id.push_back(v);
                }
                return id;
            }()
                                               : kernel_mod(compat, total, p);
            // lim -> colim factors through any single node; use the first.
            for (auto v : kernel) {
                std::fill(v.begin() + static_cast<std::ptrdiff_t>(dims[first]), v.end(), 0);
                both.push_back(std::move(v));
            }
            std::size_t const image = total == 0 ? 0 : rank_mod(both, p) - rel;
            out.push_back(lim);
            out.push_back(colim);
            out.push_back(image);
        }
    }
    return out;
}

std::vector<IntervalMultiset> matching_decompositions(ZigzagModule const& z)
{
    std::vector<ArrowDirection> shape;
    for (auto const& a : z.arrows())
        shape.push_back(a.direction);
    std::size_t const n = z.length();
    std::vector<IndexInterval> intervals;
    std::vector<std::vector<std::size_t>> contributions;
    for (std::size_t a = 1; a <= n; ++a) {
        for (std::size_t b = a; b <= n; ++b) {
            intervals.push_back({a, b});
            contributions.push_back(
                additive_invariants(ZigzagModule::interval_module(shape, a, b, z.field())));
        }
    }
    auto const target = additive_invariants(z);
    std::vector<IntervalMultiset> found;
    std::vector<std::size_t> partial(target.size(), 0);
    IntervalMultiset current;

    std::function<void(std::size_t)> search = [&](std::size_t i) {
        if (i == intervals.size()) {
            if (partial == target)
                found.push_back(current);
            return;
        }
        search(i + 1);
        auto const& add = contributions[i];
        std::size_t taken = 0;
        for (;;) {
            bool fits = true;
            for (std::size_t k = 0; k < target.size() && fits; ++k)
                fits = partial[k] + add[k] <= target[k];
            if (!fits)
                break;
            for (std::size_t k = 0; k < target.size(); ++k)
                partial[k] += add[k];
            ++taken;
            current[intervals[i]] = taken;
            search(i + 1);
        }
        for (std::size_t k = 0; k < target.size(); ++k)
            partial[k] -= taken * add[k];
        current.erase(intervals[i]);
    };
    search(0);
    return found;
}

double brute_bottleneck(std::vector<paramhom::PlanePoint> const& a,
                        std::vector<paramhom::PlanePoint> const& b)
{
    double best = std::numeric_limits<double>::infinity();
    std::vector<bool> used(b.size(), false);
    std::function<void(std::size_t, double)> go = [&](std::size_t i, double cost) {
        if (cost >= best)
            return;
        if (i == a.size()) {
            double total = cost;
            for (std::size_t j = 0; j < b.size(); ++j)
                if (!used[j])
                    total = std::max(total, to_diagonal(b[j]));
            best = std::min(best, total);
            return;
        }
        go(i + 1, std::max(cost, to_diagonal(a[i])));
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (used[j])
                continue;
            used[j] = true;
            go(i + 1, std::max(cost, dist(a[i], b[j])));
            used[j] = false;
        }
    };
    go(0, 0.0);
    return best;
}

} // namespace oracle
