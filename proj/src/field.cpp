#include "paramhom/field.hpp"

#include <algorithm>
#include <utility>

namespace paramhom
{

bool is_prime(std::uint32_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

PrimeField::PrimeField(std::uint32_t p)
    : p_(p)
{
    if (!is_prime(p))
        throw ContractError("field characteristic " + std::to_string(p) + " is not prime");
    if (p >= (1u << 31))
        throw ContractError("field characteristic must be below 2^31");
}

std::uint32_t PrimeField::inv(std::uint32_t a) const
{
    if (a % p_ == 0)
        throw ContractError("inverse of zero in F_p");
    // Extended Euclid on (a, p).
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p_, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
        std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
    }
    return reduce(t);
}

std::uint32_t PrimeField::reduce(std::int64_t v) const
{
    std::int64_t m = v % static_cast<std::int64_t>(p_);
    if (m < 0)
        m += p_;
    return static_cast<std::uint32_t>(m);
}

FieldScalar::FieldScalar(std::int64_t value, PrimeField field)
    : value_(field.reduce(value)), field_(field)
{
}

void FieldScalar::check_same_field(FieldScalar const& o) const
{
    if (!(field_ == o.field_))
        throw ContractError("mixing scalars of different characteristic");
}

FieldScalar FieldScalar::operator+(FieldScalar const& o) const
{
    check_same_field(o);
    return {field_.add(value_, o.value_), field_};
}

FieldScalar FieldScalar::operator-(FieldScalar const& o) const
{
    check_same_field(o);
    return {field_.sub(value_, o.value_), field_};
}

FieldScalar FieldScalar::operator*(FieldScalar const& o) const
{
    check_same_field(o);
    return {field_.mul(value_, o.value_), field_};
}

FieldScalar FieldScalar::operator-() const
{
    return {field_.neg(value_), field_};
}

FieldScalar FieldScalar::inverse() const
{
    return {field_.inv(value_), field_};
}

Matrix::Matrix(std::size_t rows, std::size_t cols, PrimeField field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, 0)
{
}

Matrix Matrix::from_rows(std::vector<std::vector<std::int64_t>> const& rows,
                         PrimeField field)
{
    std::size_t const ncols = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), ncols, field);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != ncols)
            throw ContractError("ragged matrix rows");
        for (std::size_t c = 0; c < ncols; ++c)
            m(r, c) = field.reduce(rows[r][c]);
    }
    return m;
}

Matrix Matrix::identity(std::size_t n, PrimeField field)
{
    Matrix m(n, n, field);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

Matrix Matrix::from_columns(std::size_t rows,
                            std::vector<std::vector<std::uint32_t>> const& cols,
                            PrimeField field)
{
    Matrix m(rows, cols.size(), field);
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows)
            throw ContractError("column length does not match row count");
        for (std::size_t r = 0; r < rows; ++r)
            m(r, c) = cols[c][r] % field.characteristic();
    }
    return m;
}

std::vector<std::uint32_t> Matrix::column(std::size_t c) const
{
    std::vector<std::uint32_t> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        out[r] = (*this)(r, c);
    return out;
}

Matrix Matrix::columns(std::span<std::size_t const> which) const
{
    Matrix out(rows_, which.size(), field_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t j = 0; j < which.size(); ++j)
            out(r, j) = (*this)(r, which[j]);
    return out;
}

Matrix Matrix::transpose() const
{
    Matrix out(cols_, rows_, field_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            out(c, r) = (*this)(r, c);
    return out;
}

bool Matrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](std::uint32_t v) { return v == 0; });
}

Matrix Matrix::operator*(Matrix const& o) const
{
    if (cols_ != o.rows_)
        throw ContractError("matrix product shape mismatch");
    if (!(field_ == o.field_))
        throw ContractError("matrix product over different fields");
    Matrix out(rows_, o.cols_, field_);
    std::uint64_t const p = field_.characteristic();
    std::vector<std::uint64_t> acc(o.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        std::fill(acc.begin(), acc.end(), 0);
        for (std::size_t k = 0; k < cols_; ++k) {
            std::uint64_t const a = (*this)(r, k);
            if (a == 0)
                continue;
            auto orow = o.row(k);
            for (std::size_t c = 0; c < o.cols_; ++c)
                acc[c] = (acc[c] + a * orow[c]) % p;
        }
        for (std::size_t c = 0; c < o.cols_; ++c)
            out(r, c) = static_cast<std::uint32_t>(acc[c]);
    }
    return out;
}

std::vector<std::uint32_t> Matrix::operator*(std::span<std::uint32_t const> v) const
{
    if (v.size() != cols_)
        throw ContractError("matrix-vector shape mismatch");
    std::uint64_t const p = field_.characteristic();
    std::vector<std::uint32_t> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        std::uint64_t acc = 0;
        auto rw = row(r);
        for (std::size_t c = 0; c < cols_; ++c)
            acc = (acc + static_cast<std::uint64_t>(rw[c]) * v[c]) % p;
        out[r] = static_cast<std::uint32_t>(acc);
    }
    return out;
}

Matrix Matrix::operator+(Matrix const& o) const
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw ContractError("matrix sum shape mismatch");
    Matrix out(*this);
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] = field_.add(data_[i], o.data_[i]);
    return out;
}

Matrix hconcat(std::span<Matrix const> blocks, std::size_t rows, PrimeField field)
{
    std::size_t total = 0;
    for (auto const& b : blocks) {
        if (b.rows() != rows)
            throw ContractError("hconcat row mismatch");
        total += b.cols();
    }
    Matrix out(rows, total, field);
    std::size_t offset = 0;
    for (auto const& b : blocks) {
        for (std::size_t r = 0; r < rows; ++r)
            std::copy(b.row(r).begin(), b.row(r).end(), out.row(r).begin() + offset);
        offset += b.cols();
    }
    return out;
}

std::vector<std::size_t> reduce_row_echelon(Matrix& m, std::size_t pivot_cols)
{
    PrimeField const f = m.field();
    bool const binary = f.characteristic() == 2;
    std::size_t const ncols = m.cols();
    std::size_t const limit = std::min(pivot_cols, ncols);
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < limit && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m(sel, col) == 0)
            ++sel;
        if (sel == m.rows())
            continue;
        if (sel != row)
            std::swap_ranges(m.row(sel).begin(), m.row(sel).end(), m.row(row).begin());
        auto prow = m.row(row);
        if (!binary && prow[col] != 1) {
            std::uint32_t const s = f.inv(prow[col]);
            for (std::size_t c = col; c < ncols; ++c)
                prow[c] = f.mul(prow[c], s);
        }
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row)
                continue;
            auto target = m.row(r);
            std::uint32_t const factor = target[col];
            if (factor == 0)
                continue;
            if (binary) {
                for (std::size_t c = col; c < ncols; ++c)
                    target[c] ^= prow[c];
            } else {
                for (std::size_t c = col; c < ncols; ++c)
                    if (prow[c] != 0)
                        target[c] = f.sub(target[c], f.mul(factor, prow[c]));
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(Matrix const& m)
{
    if (m.rows() == 0 || m.cols() == 0)
        return 0;
    Matrix work(m.rows() <= m.cols() ? m : m.transpose());
    return reduce_row_echelon(work).size();
}

Matrix kernel_basis(Matrix const& m)
{
    PrimeField const f = m.field();
    Matrix work(m);
    auto const pivots = reduce_row_echelon(work);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots)
        is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c])
            free_cols.push_back(c);
    Matrix out(m.cols(), free_cols.size(), f);
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
        std::size_t const fc = free_cols[j];
        out(fc, j) = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            out(pivots[r], j) = f.neg(work(r, fc));
    }
    return out;
}

std::vector<std::size_t> independent_columns(Matrix const& m)
{
    Matrix work(m);
    return reduce_row_echelon(work);
}

std::optional<std::vector<std::uint32_t>> solve_in_span(Matrix const& basis,
                                                        std::span<std::uint32_t const> v)
{
    if (v.size() != basis.rows())
        throw ContractError("solve_in_span: vector length does not match basis");
    std::size_t const k = basis.cols();
    Matrix aug(basis.rows(), k + 1, basis.field());
    for (std::size_t r = 0; r < basis.rows(); ++r) {
        std::copy(basis.row(r).begin(), basis.row(r).end(), aug.row(r).begin());
        aug(r, k) = v[r] % basis.field().characteristic();
    }
    auto const pivots = reduce_row_echelon(aug);
    if (!pivots.empty() && pivots.back() == k)
        return std::nullopt;
    if (pivots.size() != k)
        throw ContractError("solve_in_span: basis columns are not independent");
    std::vector<std::uint32_t> coeffs(k, 0);
    for (std::size_t r = 0; r < k; ++r)
        coeffs[pivots[r]] = aug(r, k);
    return coeffs;
}

QuotientMap quotient_map(Matrix const& z, Matrix const& b)
{
    PrimeField const f = z.field();
    std::size_t const m = z.rows();
    if (b.rows() != m)
        throw ContractError("quotient_map: ambient dimension mismatch");

    auto const b_ind = independent_columns(b);
    Matrix const b_basis = b.columns(b_ind);

    // Greedily extend the B basis by Z columns.
    Matrix const blocks[] = {b_basis, z};
    Matrix combined = hconcat(blocks, m, f);
    auto const piv = reduce_row_echelon(combined);
    std::vector<std::size_t> rep_cols;
    for (auto c : piv) {
        if (c >= b_basis.cols())
            rep_cols.push_back(c - b_basis.cols());
    }
    if (rank(z) != piv.size())
        throw ContractError("quotient_map: span(B) is not contained in span(Z)");

    QuotientMap out;
    out.dimension = rep_cols.size();
    out.representatives = z.columns(rep_cols);

    // Left inverse of M = [B' | R] via reduction of [M | I].
    std::size_t const c = b_basis.cols() + rep_cols.size();
    Matrix aug(m, c + m, f);
    for (std::size_t r = 0; r < m; ++r) {
        std::copy(b_basis.row(r).begin(), b_basis.row(r).end(), aug.row(r).begin());
        for (std::size_t j = 0; j < rep_cols.size(); ++j)
            aug(r, b_basis.cols() + j) = out.representatives(r, j);
        aug(r, c + r) = 1;
    }
    auto const pivots = reduce_row_echelon(aug, c);
    if (pivots.size() != c)
        throw ContractError("quotient_map: internal basis is dependent");
    out.projection = Matrix(out.dimension, m, f);
    for (std::size_t j = 0; j < out.dimension; ++j) {
        std::size_t const row = b_basis.cols() + j;
        for (std::size_t col = 0; col < m; ++col)
            out.projection(j, col) = aug(row, c + col);
    }
    return out;
}

} // namespace paramhom
