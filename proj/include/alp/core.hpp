#pragma once

/**
 * @file core.hpp
 * @brief Alternative Legendre polynomials on [0, 1] and their auxiliary family.
 *
 * For fixed n the ALP family {P_nk}, k = n..0, is orthogonal on [0, 1] with
 * unit weight, P_nk(x) ~ x^k as x -> 0, and int P_nk^2 = 1/(2k+1). The
 * auxiliary family {A_nk}, k = n, n+1, ..., is x^n times a Jacobi polynomial
 * in 1 - 2x; A_0k are the shifted Legendre polynomials.
 *
 * Coefficients are built exactly. Floating-point evaluation converts them
 * once and runs Horner (see float_eval.hpp).
 */

#include "alp/errors.hpp"
#include "alp/float_eval.hpp"
#include "alp/polynomial.hpp"

#include <memory>
#include <vector>

namespace alp {

struct AlpIndex {
    int n = 0;
    int k = 0;

    friend bool operator==(const AlpIndex&, const AlpIndex&) = default;
};

/// Throws IndexError unless 0 <= k <= n.
void require_alp_index(AlpIndex idx);

/// Which parameter set to use for the three formulas that appear misprinted
/// in the literature (lower differentiation factor mu, the third
/// hypergeometric parameter, and the Jacobi superscripts).
enum class FormulaVariant { confirmed, printed };

/// Scalars of the recurrence and the two differentiation identities:
///
///   a P_{n,k-1}         = (b/x - c) P_nk - d P_{n,k+1}
///   alpha x(1-x) P'_nk  = (beta - gamma x) P_nk - delta x P_{n,k+1}
///   kappa x(x-1) P'_nk  = (lambda - mu x) P_nk - nu x P_{n,k-1}
///
/// `mu` holds the value that makes the last identity exact; `printed_mu`
/// keeps the commonly quoted (n+1)^2 + k^2 for comparison.
struct RecurrenceCoefficients {
    Integer a, b, c, d;
    Integer alpha, beta, gamma, delta;
    Integer kappa, lambda, mu, nu;
    Integer printed_mu;
};

ExactPolynomial alp_coefficients(AlpIndex idx);

/// Same polynomial via (1/(n-k)!) x^{-(k+1)} D^{n-k} [x^{n+k+1} (1-x)^{n-k}].
ExactPolynomial alp_coefficients_rodrigues(AlpIndex idx);

double alp_eval(AlpIndex idx, double x);

/// Values P_nk(x) for k = n, n-1, ..., 0 (element i holds k = n - i), by the
/// downward three-term recurrence seeded with P_nn = x^n. At x == 0 the
/// exact limits are returned instead.
std::vector<double> alp_eval_recurrence(int n, double x);

RecurrenceCoefficients recurrence_coeffs(AlpIndex idx);

/// P'_nk(x) from the upper differentiation identity; falls back to the
/// differentiated coefficients at x = 0 and x = 1.
double alp_derivative_eval(AlpIndex idx, double x);

/// x^2(1-x) z'' - x^2 z' + ((n+1)^2 x - k(k+1)) z with z = x P_nk.
ExactPolynomial ode_residual(AlpIndex idx);

// Residuals of the three-term identities, as exact polynomials. Each one is
// zero exactly when the identity holds. The recurrence residual is multiplied
// through by x. Recurrence and lower-derivative residuals need 1 <= k <= n.
ExactPolynomial recurrence_residual(AlpIndex idx);
ExactPolynomial upper_derivative_residual(AlpIndex idx);
ExactPolynomial lower_derivative_residual(AlpIndex idx, FormulaVariant variant = FormulaVariant::confirmed);

/// Exact coefficients in u of P_m^{(alpha, beta)}(1 - 2u) from the
/// terminating hypergeometric series
///   C(m + alpha, m) * sum_j (-m)_j (m + alpha + beta + 1)_j / ((alpha + 1)_j j!) u^j.
/// Negative integer alpha is admitted as a formal extension as long as
/// (alpha + 1)_j stays nonzero for j <= m; otherwise DomainError.
ExactPolynomial jacobi_shifted_coefficients(int m, int alpha, int beta = 0);

/// Auxiliary family A_nk(x) = x^n P_{k-n}^{(2n,0)}(1-2x), k >= n.
ExactPolynomial aux_coefficients(int n, int k);
double aux_eval(int n, int k, double x);

/// x^{-1} A_{-(n+1),-(k+1)}(1/x) expanded as x^n q(1/x).
ExactPolynomial reciprocity_transform(AlpIndex idx);

/// prefactor * x^k * 2F1(k-n, k+n+2; c; x).
ExactPolynomial hypergeometric_coefficients(AlpIndex idx, FormulaVariant variant = FormulaVariant::confirmed);

/// x^k P_{n-k}^{(A,B)}(1-2x).
ExactPolynomial jacobi_relation_alp(AlpIndex idx, FormulaVariant variant = FormulaVariant::confirmed);

/// Terminating 2F1(-m, b; c; x) times a prefactor; m >= 0, c not a
/// nonpositive integer within the series range.
ExactPolynomial terminating_hypergeometric(const Rational& prefactor, long m, long b, long c);

/// All members of one ALP family, exact and converted. Immutable.
class AlpFamily {
public:
    explicit AlpFamily(int n);

    [[nodiscard]] int n() const noexcept { return n_; }
    [[nodiscard]] const ExactPolynomial& exact(int k) const;
    [[nodiscard]] const FloatPolynomial& floating(int k) const;

private:
    int n_;
    std::vector<ExactPolynomial> exact_;
    std::vector<FloatPolynomial> floating_;
};

/// Shared, lazily built family for order n. Safe to call from several threads.
std::shared_ptr<const AlpFamily> family(int n);

}  // namespace alp
