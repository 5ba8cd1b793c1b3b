#pragma once

/**
 * @file polynomial.hpp
 * @brief Dense univariate polynomials over arbitrary-precision rationals.
 *
 * Coefficients are stored in ascending powers: coeffs()[l] multiplies x^l.
 * The stored sequence never ends in a zero, so the zero polynomial has an
 * empty coefficient vector and degree() == -1.
 */

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace alp {

using Integer = mpz_class;
using Rational = mpq_class;

/// Reduced decimal rendering: "7", "-3/4".
std::string to_string(const Rational& q);

class ExactPolynomial {
public:
    ExactPolynomial() = default;
    ExactPolynomial(std::initializer_list<long> coeffs);
    explicit ExactPolynomial(std::vector<Rational> coeffs);

    /// c * x^power
    static ExactPolynomial monomial(const Rational& c, std::size_t power);
    static ExactPolynomial constant(const Rational& c) { return monomial(c, 0); }

    [[nodiscard]] const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    [[nodiscard]] int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Coefficient of x^l, zero past the stored range.
    [[nodiscard]] Rational operator[](std::size_t l) const;

    /// Lowest power with a nonzero coefficient; -1 for the zero polynomial.
    [[nodiscard]] int lowest_power() const noexcept;

    [[nodiscard]] bool has_integer_coeffs() const;

    [[nodiscard]] ExactPolynomial derivative() const;

    /// Multiply by x^m.
    [[nodiscard]] ExactPolynomial shift_up(std::size_t m) const;

    /// Divide by x^m; throws std::domain_error unless x^m divides exactly.
    [[nodiscard]] ExactPolynomial shift_down(std::size_t m) const;

    /// x^degree * p(1/x) for a given reference degree >= degree().
    [[nodiscard]] ExactPolynomial reversed(std::size_t reference_degree) const;

    [[nodiscard]] Rational evaluate(const Rational& x) const;

    /// max_l |c_l|, zero for the zero polynomial.
    [[nodiscard]] Rational max_abs_coeff() const;

    ExactPolynomial& operator+=(const ExactPolynomial& other);
    ExactPolynomial& operator-=(const ExactPolynomial& other);
    ExactPolynomial& operator*=(const Rational& s);

    friend ExactPolynomial operator+(ExactPolynomial a, const ExactPolynomial& b) { return a += b; }
    friend ExactPolynomial operator-(ExactPolynomial a, const ExactPolynomial& b) { return a -= b; }
    friend ExactPolynomial operator*(ExactPolynomial a, const Rational& s) { return a *= s; }
    friend ExactPolynomial operator*(const Rational& s, ExactPolynomial a) { return a *= s; }
    friend ExactPolynomial operator*(const ExactPolynomial& a, const ExactPolynomial& b);
    friend ExactPolynomial operator-(ExactPolynomial a);

    friend bool operator==(const ExactPolynomial& a, const ExactPolynomial& b);

    /// "3 - 12*x + 10*x^2"
    [[nodiscard]] std::string to_string() const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

// Polynomial algebra used by the identity checks.

ExactPolynomial poly_mul(const ExactPolynomial& p, const ExactPolynomial& q);

/// Integral of p over [0, 1].
Rational poly_integrate01(const ExactPolynomial& p);

/// Unit-weight inner product on [0, 1].
Rational inner_product(const ExactPolynomial& p, const ExactPolynomial& q);

}  // namespace alp
