#include "paramhom/zigzag.hpp"

#include <string>

namespace paramhom
{

namespace
{

std::size_t source_index(std::size_t arrow, ArrowDirection d)
{
    return d == ArrowDirection::forward ? arrow : arrow + 1;
}

std::size_t target_index(std::size_t arrow, ArrowDirection d)
{
    return d == ArrowDirection::forward ? arrow + 1 : arrow;
}

void check_interval(ZigzagModule const& z, std::size_t p, std::size_t q)
{
    if (p < 1 || p > q || q > z.length())
        throw ContractError("interval [" + std::to_string(p) + "," + std::to_string(q) +
                            "] outside 1.." + std::to_string(z.length()));
}

/// Reduces a spanning set (columns) to a basis.
Matrix basis_of(Matrix const& spanning)
{
    auto const cols = independent_columns(spanning);
    return spanning.columns(cols);
}

/// {x : f x in span(s)} for f : V -> W and s a basis matrix in W.
Matrix preimage(Matrix const& f, Matrix const& s)
{
    Matrix const blocks[] = {f, s};
    Matrix const ker = kernel_basis(hconcat(blocks, f.rows(), f.field()));
    Matrix top(f.cols(), ker.cols(), f.field());
    for (std::size_t r = 0; r < f.cols(); ++r)
        for (std::size_t c = 0; c < ker.cols(); ++c)
            top(r, c) = ker(r, c);
    return basis_of(top);
}

Matrix image(Matrix const& g, Matrix const& s)
{
    return basis_of(g * s);
}

struct DirectSumLayout
{
    std::vector<std::size_t> offset;
    std::size_t total = 0;
};

DirectSumLayout layout(ZigzagModule const& z, std::size_t p, std::size_t q)
{
    DirectSumLayout out;
    out.offset.assign(z.length() + 2, 0);
    for (std::size_t i = p; i <= q; ++i) {
        out.offset[i] = out.total;
        out.total += z.dims()[i - 1];
    }
    return out;
}

/// Rows f v_s - v_t for each arrow in [p, q]; its kernel is the limit.
Matrix compatibility_matrix(ZigzagModule const& z, std::size_t p, std::size_t q,
                            DirectSumLayout const& lay)
{
    PrimeField const f = z.field();
    std::size_t rows = 0;
    for (std::size_t a = p; a < q; ++a)
        rows += z.dims()[target_index(a, z.arrows()[a - 1].direction) - 1];
    Matrix c(rows, lay.total, f);
    std::size_t row = 0;
    for (std::size_t a = p; a < q; ++a) {
        auto const& arrow = z.arrows()[a - 1];
        std::size_t const s = source_index(a, arrow.direction);
        std::size_t const t = target_index(a, arrow.direction);
        for (std::size_t r = 0; r < arrow.matrix.rows(); ++r) {
            for (std::size_t k = 0; k < arrow.matrix.cols(); ++k)
                c(row + r, lay.offset[s] + k) = arrow.matrix(r, k);
            c(row + r, lay.offset[t] + r) = f.sub(c(row + r, lay.offset[t] + r), 1);
        }
        row += arrow.matrix.rows();
    }
    return c;
}

/// Columns e_s - f(e_s) spanning the colimit relations.
Matrix relation_matrix(ZigzagModule const& z, std::size_t p, std::size_t q,
                       DirectSumLayout const& lay)
{
    PrimeField const f = z.field();
    std::size_t cols = 0;
    for (std::size_t a = p; a < q; ++a)
        cols += z.arrows()[a - 1].matrix.cols();
    Matrix rel(lay.total, cols, f);
    std::size_t col = 0;
    for (std::size_t a = p; a < q; ++a) {
        auto const& arrow = z.arrows()[a - 1];
        std::size_t const s = source_index(a, arrow.direction);
        std::size_t const t = target_index(a, arrow.direction);
        for (std::size_t k = 0; k < arrow.matrix.cols(); ++k) {
            rel(lay.offset[s] + k, col + k) = 1;
            for (std::size_t r = 0; r < arrow.matrix.rows(); ++r)
                rel(lay.offset[t] + r, col + k) =
                    f.sub(rel(lay.offset[t] + r, col + k), arrow.matrix(r, k));
        }
        col += arrow.matrix.cols();
    }
    return rel;
}

} // namespace

ZigzagModule::ZigzagModule(std::vector<std::size_t> dims, std::vector<ZigzagArrow> arrows,
                           PrimeField field)
    : dims_(std::move(dims)), arrows_(std::move(arrows)), field_(field)
{
    if (dims_.empty())
        throw ContractError("zigzag module needs at least one node");
    if (arrows_.size() + 1 != dims_.size())
        throw ContractError("zigzag module needs exactly n-1 arrows");
    for (std::size_t i = 0; i < arrows_.size(); ++i) {
        auto const& a = arrows_[i];
        std::size_t const src = dims_[source_index(i, a.direction)];
        std::size_t const tgt = dims_[target_index(i, a.direction)];
        if (a.matrix.rows() != tgt || a.matrix.cols() != src)
            throw ContractError("arrow " + std::to_string(i + 1) + " matrix is " +
                                std::to_string(a.matrix.rows()) + "x" +
                                std::to_string(a.matrix.cols()) + ", expected " +
                                std::to_string(tgt) + "x" + std::to_string(src));
        if (!(a.matrix.field() == field_))
            throw ContractError("arrow matrix over the wrong field");
    }
}

ZigzagModule ZigzagModule::interval_module(std::vector<ArrowDirection> const& shape,
                                           std::size_t p, std::size_t q, PrimeField field)
{
    std::size_t const n = shape.size() + 1;
    if (p < 1 || p > q || q > n)
        throw ContractError("interval module support outside the shape");
    std::vector<std::size_t> dims(n, 0);
    for (std::size_t i = p; i <= q; ++i)
        dims[i - 1] = 1;
    std::vector<ZigzagArrow> arrows;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        auto const d = shape[i];
        Matrix m(dims[target_index(i, d)], dims[source_index(i, d)], field);
        if (m.rows() == 1 && m.cols() == 1)
            m(0, 0) = 1;
        arrows.push_back({d, std::move(m)});
    }
    return ZigzagModule(std::move(dims), std::move(arrows), field);
}

ZigzagModule ZigzagModule::direct_sum(ZigzagModule const& a, ZigzagModule const& b)
{
    if (a.length() != b.length())
        throw ContractError("direct sum of modules of different length");
    std::vector<std::size_t> dims;
    for (std::size_t i = 0; i < a.length(); ++i)
        dims.push_back(a.dims()[i] + b.dims()[i]);
    std::vector<ZigzagArrow> arrows;
    for (std::size_t i = 0; i + 1 < a.length(); ++i) {
        auto const& x = a.arrows()[i];
        auto const& y = b.arrows()[i];
        if (x.direction != y.direction)
            throw ContractError("direct sum of modules of different orientation");
        Matrix m(x.matrix.rows() + y.matrix.rows(), x.matrix.cols() + y.matrix.cols(), a.field());
        for (std::size_t r = 0; r < x.matrix.rows(); ++r)
            for (std::size_t c = 0; c < x.matrix.cols(); ++c)
                m(r, c) = x.matrix(r, c);
        for (std::size_t r = 0; r < y.matrix.rows(); ++r)
            for (std::size_t c = 0; c < y.matrix.cols(); ++c)
                m(x.matrix.rows() + r, x.matrix.cols() + c) = y.matrix(r, c);
        arrows.push_back({x.direction, std::move(m)});
    }
    return ZigzagModule(std::move(dims), std::move(arrows), a.field());
}

std::size_t limit_dimension(ZigzagModule const& z, std::size_t p, std::size_t q)
{
    check_interval(z, p, q);
    auto const lay = layout(z, p, q);
    return kernel_basis(compatibility_matrix(z, p, q, lay)).cols();
}

std::size_t colimit_dimension(ZigzagModule const& z, std::size_t p, std::size_t q)
{
    check_interval(z, p, q);
    auto const lay = layout(z, p, q);
    return lay.total - rank(relation_matrix(z, p, q, lay));
}

std::size_t limit_colimit_rank(ZigzagModule const& z, std::size_t p, std::size_t q)
{
    check_interval(z, p, q);
    PrimeField const f = z.field();
    auto const lay = layout(z, p, q);
    Matrix const lim = kernel_basis(compatibility_matrix(z, p, q, lay));
    Matrix const rel = relation_matrix(z, p, q, lay);

    // Each limit tuple maps to the class of its p-component in the colimit.
    Matrix at_p(lay.total, lim.cols(), f);
    for (std::size_t r = 0; r < z.dims()[p - 1]; ++r)
        for (std::size_t c = 0; c < lim.cols(); ++c)
            at_p(lay.offset[p] + r, c) = lim(lay.offset[p] + r, c);
    Matrix const blocks[] = {rel, at_p};
    return rank(hconcat(blocks, lay.total, f)) - rank(rel);
}

std::vector<std::vector<std::size_t>> limit_colimit_rank_table(ZigzagModule const& z)
{
    std::size_t const n = z.length();
    PrimeField const f = z.field();
    std::vector<std::vector<std::size_t>> table(n + 2, std::vector<std::size_t>(n + 2, 0));
    for (std::size_t q = n; q >= 1; --q) {
        std::size_t const dq = z.dims()[q - 1];
        // Values at the current left node that extend to a compatible tuple
        // over [p, q], and those that vanish in the colimit over [p, q].
        Matrix extendable = Matrix::identity(dq, f);
        Matrix vanishing(dq, 0, f);
        table[q][q] = dq;
        for (std::size_t p = q - 1; p >= 1; --p) {
            auto const& arrow = z.arrows()[p - 1];
            if (arrow.direction == ArrowDirection::forward) {
                extendable = preimage(arrow.matrix, extendable);
                vanishing = preimage(arrow.matrix, vanishing);
            } else {
                extendable = image(arrow.matrix, extendable);
                vanishing = image(arrow.matrix, vanishing);
            }
            Matrix const blocks[] = {extendable, vanishing};
            std::size_t const r =
                rank(hconcat(blocks, extendable.rows(), f)) - vanishing.cols();
            table[p][q] = r;
            if (r == 0)
                break;  // ranks only shrink as the interval grows
        }
    }
    return table;
}

IntervalMultiset decompose(ZigzagModule const& z)
{
    std::size_t const n = z.length();
    auto const r = limit_colimit_rank_table(z);
    auto rank_at = [&](std::size_t p, std::size_t q) -> long {
        if (p < 1 || q > n)
            return 0;
        return static_cast<long>(r[p][q]);
    };
    IntervalMultiset out;
    std::vector<std::size_t> covered(n + 1, 0);
    for (std::size_t p = 1; p <= n; ++p) {
        for (std::size_t q = p; q <= n; ++q) {
            long const m = rank_at(p, q) - rank_at(p - 1, q) - rank_at(p, q + 1) +
                           rank_at(p - 1, q + 1);
            if (m < 0)
                throw ContractError("negative interval multiplicity at [" + std::to_string(p) +
                                    "," + std::to_string(q) + "]");
            if (m == 0)
                continue;
            out[{p, q}] = static_cast<std::size_t>(m);
            for (std::size_t i = p; i <= q; ++i)
                covered[i] += static_cast<std::size_t>(m);
        }
    }
    for (std::size_t i = 1; i <= n; ++i)
        if (covered[i] != z.dims()[i - 1])
            throw ContractError("interval decomposition does not cover node " + std::to_string(i));
    return out;
}

std::size_t multiplicity(ZigzagModule const& z, IndexInterval interval)
{
    check_interval(z, interval.first, interval.last);
    auto const d = decompose(z);
    auto it = d.find(interval);
    return it == d.end() ? 0 : it->second;
}

ZigzagModule coarsen(ZigzagModule const& z, std::size_t k)
{
    std::size_t const n = z.length();
    if (k < 2 || k + 1 > n)
        throw ContractError("coarsen: node " + std::to_string(k) + " is not interior");
    auto const& before = z.arrows()[k - 2];
    auto const& after = z.arrows()[k - 1];
    if (before.direction != after.direction)
        throw ContractError("coarsen: arrows around node " + std::to_string(k) +
                            " point in different directions");
    Matrix composite = before.direction == ArrowDirection::forward
                           ? after.matrix * before.matrix
                           : before.matrix * after.matrix;
    std::vector<std::size_t> dims;
    for (std::size_t i = 1; i <= n; ++i)
        if (i != k)
            dims.push_back(z.dims()[i - 1]);
    std::vector<ZigzagArrow> arrows;
    for (std::size_t a = 1; a < n; ++a) {
        if (a == k - 1)
            arrows.push_back({before.direction, composite});
        else if (a != k)
            arrows.push_back(z.arrows()[a - 1]);
    }
    return ZigzagModule(std::move(dims), std::move(arrows), z.field());
}

ZigzagModule dualize(ZigzagModule const& z)
{
    std::vector<ZigzagArrow> arrows;
    for (auto const& a : z.arrows())
        arrows.push_back({a.direction == ArrowDirection::forward ? ArrowDirection::backward
                                                                 : ArrowDirection::forward,
                          a.matrix.transpose()});
    return ZigzagModule(z.dims(), std::move(arrows), z.field());
}

IntervalMultiset restrict_intervals(IntervalMultiset const& full, std::size_t k)
{
    IntervalMultiset out;
    for (auto const& [iv, m] : full) {
        if (iv.first == k && iv.last == k)
            continue;
        std::size_t first = iv.first, last = iv.last;
        if (first == k)
            ++first;
        if (last == k)
            --last;
        if (first > k)
            --first;
        if (last > k)
            --last;
        out[{first, last}] += m;
    }
    return out;
}

} // namespace paramhom
