#pragma once

/**
 * @file float_eval.hpp
 * @brief Floating-point evaluation of exactly-constructed polynomials.
 *
 * Coefficients are converted once from their exact rational values into
 * unevaluated double-double pairs (hi + lo) and evaluated by Horner's scheme
 * in double-double arithmetic. Alongside the value, a running bound on the
 * rounding error (proportional to sum |c_l| |x|^l) is kept. When the bound
 * cannot certify a result to within about one ulp, typically near a zero or
 * for large n where the monomial coefficients reach 1e17 and cancel
 * heavily, the polynomial is re-evaluated exactly at the rational value of x
 * and rounded once.
 */

#include "alp/polynomial.hpp"

#include <memory>
#include <vector>

namespace alp {

struct DoubleDouble {
    double hi = 0.0;
    double lo = 0.0;

    static DoubleDouble from_rational(const Rational& q);
    [[nodiscard]] double value() const noexcept { return hi + lo; }
};

class FloatPolynomial {
public:
    FloatPolynomial() = default;
    explicit FloatPolynomial(const ExactPolynomial& p);

    [[nodiscard]] double operator()(double x) const;

    /// sum_l |c_l| |x|^l, the natural scale for residual tolerances.
    [[nodiscard]] double magnitude(double x) const noexcept;

    [[nodiscard]] double derivative_at(double x) const;

    [[nodiscard]] int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

private:
    FloatPolynomial(const ExactPolynomial& p, bool with_derivative);

    ExactPolynomial exact_;
    std::vector<DoubleDouble> coeffs_;
    std::vector<double> abs_coeffs_;
    std::shared_ptr<const FloatPolynomial> derivative_;
};

/// Jacobi polynomial P_m^{(alpha, beta)}(t) by the standard three-term
/// recurrence. Requires alpha, beta >= 0.
double jacobi_eval(int m, int alpha, int beta, double t);

}  // namespace alp
