#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace originlab {

/// Exact rational scalar. GMP keeps every result in canonical form
/// (gcd-reduced, positive denominator) after each arithmetic operation.
using Rational = mpq_class;
using BigInt = mpz_class;
using QVector = std::vector<Rational>;

/// Parses `p/q`, `-p/q` or a plain integer. Whitespace around the token is ignored.
Rational parse_rational(std::string_view text);

/// Parses a rational, or a decimal/scientific float rounded to the nearest
/// multiple of 2^-dyadic_bits when `dyadic_bits > 0`.
Rational parse_number(std::string_view text, int dyadic_bits);

std::string to_string(const Rational& q);

/// Nearest multiple of 2^-bits to `x` (ties to even), as an exact rational.
Rational dyadic_round(double x, int bits);

std::vector<std::string> to_strings(std::span<const Rational> v);

bool is_zero(std::span<const Rational> v);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

/// Dense row-major matrix of exact rationals.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    /// Builds a matrix from a list of equally sized rows.
    static QMatrix from_rows(const std::vector<QVector>& rows, std::size_t cols_if_empty = 0);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    std::vector<QVector> to_rows() const;
    QMatrix transposed() const;

    /// M·x
    QVector apply(std::span<const Rational> x) const;
    /// yᵀ·M
    QVector apply_left(std::span<const Rational> y) const;

    bool operator==(const QMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

}  // namespace originlab
