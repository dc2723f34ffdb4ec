#include "originlab/rational.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <string>

#include "originlab/errors.hpp"

namespace originlab {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ContractViolation: return "ContractViolation";
        case ErrorKind::SymmetryViolation: return "SymmetryViolation";
        case ErrorKind::WeightError: return "WeightError";
        case ErrorKind::InvalidParameter: return "InvalidParameter";
        case ErrorKind::ZeroCostVector: return "ZeroCostVector";
        case ErrorKind::ConfigError: return "ConfigError";
        case ErrorKind::TooLargeToEnumerate: return "TooLargeToEnumerate";
        case ErrorKind::FiniteAtomsRequired: return "FiniteAtomsRequired";
        case ErrorKind::MeanZeroRequired: return "MeanZeroRequired";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool is_integer_token(std::string_view s, bool allow_sign) {
    if (!s.empty() && allow_sign && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

BigInt parse_integer(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return BigInt(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const std::string_view s = trim(text);
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        if (!is_integer_token(s, true)) fail(ErrorKind::ParseError, "not a rational: '" + std::string(s) + "'");
        return Rational(parse_integer(s));
    }
    const auto num = trim(s.substr(0, slash));
    const auto den = trim(s.substr(slash + 1));
    if (!is_integer_token(num, true) || !is_integer_token(den, false)) {
        fail(ErrorKind::ParseError, "not a rational: '" + std::string(s) + "'");
    }
    BigInt q = parse_integer(den);
    if (q == 0) fail(ErrorKind::ParseError, "zero denominator in '" + std::string(s) + "'");
    Rational r(parse_integer(num), q);
    r.canonicalize();
    return r;
}

Rational parse_number(std::string_view text, int dyadic_bits) {
    const std::string_view s = trim(text);
    if (s.find_first_of(".eE") == std::string_view::npos || s.find('/') != std::string_view::npos) {
        return parse_rational(s);
    }
    if (dyadic_bits <= 0) {
        fail(ErrorKind::ParseError, "floating-point input '" + std::string(s) + "' needs --dyadic-bits");
    }
    double x = 0.0;
    const auto* first = s.data();
    const auto* last = s.data() + s.size();
    if (*first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, x);
    if (ec != std::errc() || ptr != last || !std::isfinite(x)) {
        fail(ErrorKind::ParseError, "not a number: '" + std::string(s) + "'");
    }
    return dyadic_round(x, dyadic_bits);
}

std::string to_string(const Rational& q) { return q.get_str(10); }

Rational dyadic_round(double x, int bits) {
    require(std::isfinite(x), ErrorKind::InvalidParameter, "dyadic_round of non-finite value");
    require(bits >= 0 && bits <= 1000, ErrorKind::InvalidParameter, "dyadic precision out of range");
    // ldexp is exact; nearbyint rounds half-to-even under the default mode.
    const double scaled = std::nearbyint(std::ldexp(x, bits));
    require(std::isfinite(scaled), ErrorKind::InvalidParameter, "dyadic_round overflows at this precision");
    Rational r;
    mpq_set_d(r.get_mpq_t(), scaled);
    if (bits > 0) mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(bits));
    return r;
}

std::vector<std::string> to_strings(std::span<const Rational> v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& q : v) out.push_back(to_string(q));
    return out;
}

bool is_zero(std::span<const Rational> v) {
    for (const auto& q : v) {
        if (sgn(q) != 0) return false;
    }
    return true;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
    require(a.size() == b.size(), ErrorKind::ContractViolation, "dot: dimension mismatch");
    Rational acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows, std::size_t cols_if_empty) {
    const std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
    QMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        require(rows[r].size() == cols, ErrorKind::ContractViolation, "ragged rows");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

std::vector<QVector> QMatrix::to_rows() const {
    std::vector<QVector> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r].assign(row(r).begin(), row(r).end());
    return out;
}

QMatrix QMatrix::transposed() const {
    QMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

QVector QMatrix::apply(std::span<const Rational> x) const {
    require(x.size() == cols_, ErrorKind::ContractViolation, "apply: dimension mismatch");
    QVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = dot(row(r), x);
    return out;
}

QVector QMatrix::apply_left(std::span<const Rational> y) const {
    require(y.size() == rows_, ErrorKind::ContractViolation, "apply_left: dimension mismatch");
    QVector out(cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        if (sgn(y[r]) == 0) continue;
        for (std::size_t c = 0; c < cols_; ++c) out[c] += y[r] * (*this)(r, c);
    }
    return out;
}

}  // namespace originlab
