#ifndef PARAMHOM_FIELD_HPP
#define PARAMHOM_FIELD_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace paramhom
{

/// Thrown when an operation's precondition is violated. These indicate
/// programming errors or inconsistent inputs, never ordinary "no result"
/// outcomes (those are returned as values).
class ContractError : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

/// The prime field F_p. Residues are stored as uint32_t in [0, p).
class PrimeField
{
public:
    explicit PrimeField(std::uint32_t p = 2);

    std::uint32_t characteristic() const { return p_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const
    {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const
    {
        return a >= b ? a - b : a + p_ - b;
    }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const
    {
        return static_cast<std::uint32_t>(
            (static_cast<std::uint64_t>(a) * b) % p_);
    }
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t reduce(std::int64_t v) const;

    bool operator==(PrimeField const&) const = default;

private:
    std::uint32_t p_;
};

bool is_prime(std::uint32_t n);

/// A single element of F_p carrying its characteristic.
class FieldScalar
{
public:
    FieldScalar(std::int64_t value, PrimeField field);

    std::uint32_t value() const { return value_; }
    PrimeField field() const { return field_; }

    FieldScalar operator+(FieldScalar const& o) const;
    FieldScalar operator-(FieldScalar const& o) const;
    FieldScalar operator*(FieldScalar const& o) const;
    FieldScalar operator-() const;
    FieldScalar inverse() const;

    bool operator==(FieldScalar const&) const = default;

private:
    void check_same_field(FieldScalar const& o) const;

    std::uint32_t value_;
    PrimeField field_;
};

/// Dense row-major matrix over F_p. 0 x n and n x 0 shapes are legal.
class Matrix
{
public:
    Matrix() : Matrix(0, 0, PrimeField{}) {}
    Matrix(std::size_t rows, std::size_t cols, PrimeField field);

    /// Builds from signed integer rows; entries are reduced mod p.
    static Matrix from_rows(std::vector<std::vector<std::int64_t>> const& rows,
                            PrimeField field);
    static Matrix identity(std::size_t n, PrimeField field);
    /// Matrix whose columns are the given vectors (all of length `rows`).
    static Matrix from_columns(std::size_t rows,
                               std::vector<std::vector<std::uint32_t>> const& cols,
                               PrimeField field);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    PrimeField field() const { return field_; }

    std::uint32_t operator()(std::size_t r, std::size_t c) const
    {
        return data_[r * cols_ + c];
    }
    std::uint32_t& operator()(std::size_t r, std::size_t c)
    {
        return data_[r * cols_ + c];
    }
    FieldScalar at(std::size_t r, std::size_t c) const
    {
        return FieldScalar((*this)(r, c), field_);
    }

    std::span<std::uint32_t const> row(std::size_t r) const
    {
        return {data_.data() + r * cols_, cols_};
    }
    std::span<std::uint32_t> row(std::size_t r)
    {
        return {data_.data() + r * cols_, cols_};
    }

    std::vector<std::uint32_t> column(std::size_t c) const;
    Matrix columns(std::span<std::size_t const> which) const;
    Matrix transpose() const;
    bool is_zero() const;

    Matrix operator*(Matrix const& o) const;
    std::vector<std::uint32_t> operator*(std::span<std::uint32_t const> v) const;
    Matrix operator+(Matrix const& o) const;

    bool operator==(Matrix const& o) const = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    PrimeField field_;
    std::vector<std::uint32_t> data_;
};

/// Concatenates matrices with equal row counts left to right.
Matrix hconcat(std::span<Matrix const> blocks, std::size_t rows, PrimeField field);

/// In-place reduction to reduced row echelon form. Pivots are only taken in
/// the first `pivot_cols` columns (all columns when npos); the remaining
/// columns are carried along. Returns pivot column indices in row order.
std::vector<std::size_t> reduce_row_echelon(Matrix& m,
                                            std::size_t pivot_cols = static_cast<std::size_t>(-1));

std::size_t rank(Matrix const& m);

/// Columns span ker M and are linearly independent.
Matrix kernel_basis(Matrix const& m);

/// Indices of a maximal independent subset of columns, chosen greedily
/// left to right.
std::vector<std::size_t> independent_columns(Matrix const& m);

/// Coefficients c with B c = v, or nullopt when v is not in span(B).
/// B must have independent columns.
std::optional<std::vector<std::uint32_t>> solve_in_span(Matrix const& basis,
                                                        std::span<std::uint32_t const> v);

struct QuotientMap
{
    std::size_t dimension = 0;
    /// Columns: cycle-level representatives of a basis of span(Z)/span(B).
    Matrix representatives;
    /// dimension x ambient matrix sending any vector of span(Z) to its
    /// coordinates in the quotient basis; vectors of span(B) go to zero.
    Matrix projection;
};

/// Quotient span(Z)/span(B). Requires span(B) contained in span(Z).
QuotientMap quotient_map(Matrix const& z, Matrix const& b);

} // namespace paramhom

#endif
