#include "alp/core.hpp"

#include "alp/binomial.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <string>

namespace alp {
namespace {

std::string index_str(AlpIndex idx) {
    return "(n=" + std::to_string(idx.n) + ", k=" + std::to_string(idx.k) + ")";
}

void require_finite(double x) {
    if (!std::isfinite(x)) throw DomainError("evaluation point must be finite");
}

Integer sq(long v) { return Integer(v) * v; }

}  // namespace

void require_alp_index(AlpIndex idx) {
    if (idx.n < 0 || idx.k < 0 || idx.k > idx.n) {
        throw IndexError("ALP index out of range " + index_str(idx) + ", need 0 <= k <= n");
    }
}

ExactPolynomial alp_coefficients(AlpIndex idx) {
    require_alp_index(idx);
    const long n = idx.n;
    const long k = idx.k;
    std::vector<Rational> c(static_cast<std::size_t>(n + 1), Rational(0));
    for (long j = 0; j <= n - k; ++j) {
        Integer term = binomial(n - k, j) * binomial(n + k + 1 + j, n - k);
        if (j % 2 == 1) term = -term;
        c[static_cast<std::size_t>(k + j)] = Rational(term);
    }
    return ExactPolynomial(std::move(c));
}

ExactPolynomial alp_coefficients_rodrigues(AlpIndex idx) {
    require_alp_index(idx);
    const int n = idx.n;
    const int k = idx.k;
    const int order = n - k;

    ExactPolynomial one_minus_x{1, -1};
    ExactPolynomial body = ExactPolynomial::constant(1);
    for (int i = 0; i < order; ++i) body = body * one_minus_x;
    body = body.shift_up(static_cast<std::size_t>(n + k + 1));

    for (int i = 0; i < order; ++i) body = body.derivative();
    return body.shift_down(static_cast<std::size_t>(k + 1)) * Rational(Integer(1), factorial(order));
}

RecurrenceCoefficients recurrence_coeffs(AlpIndex idx) {
    require_alp_index(idx);
    const long n = idx.n;
    const long k = idx.k;
    RecurrenceCoefficients r;
    r.a = Integer(k + 1) * (n - k + 1) * (n + k + 1);
    r.b = Integer(k) * (2 * k + 1) * (2 * k + 2);
    r.c = Integer(2 * k + 1) * (sq(n + 1) + k * k + k);
    r.d = Integer(k) * (n - k) * (n + k + 2);
    r.alpha = 2 * (k + 1);
    r.beta = 2 * k * (k + 1);
    r.gamma = sq(n) + k * k + 2 * n;
    r.delta = Integer(n - k) * (n + k + 2);
    r.kappa = 2 * k;
    r.lambda = 2 * k * (k + 1);
    r.mu = sq(n + 1) + k * k + 2 * k;
    r.nu = Integer(n - k + 1) * (n + k + 1);
    r.printed_mu = sq(n + 1) + k * k;
    return r;
}

ExactPolynomial recurrence_residual(AlpIndex idx) {
    require_alp_index(idx);
    if (idx.k < 1) throw IndexError("recurrence needs k >= 1, got " + index_str(idx));
    const auto fam = family(idx.n);
    const auto rc = recurrence_coeffs(idx);
    const ExactPolynomial& p = fam->exact(idx.k);
    const ExactPolynomial& below = fam->exact(idx.k - 1);
    ExactPolynomial above = idx.k < idx.n ? fam->exact(idx.k + 1) : ExactPolynomial{};

    // x * [a P_{k-1} - (b/x - c) P_k + d P_{k+1}]
    const ExactPolynomial b_minus_cx(std::vector<Rational>{Rational(rc.b), Rational(-rc.c)});
    return (below * Rational(rc.a)).shift_up(1) - b_minus_cx * p + (above * Rational(rc.d)).shift_up(1);
}

ExactPolynomial upper_derivative_residual(AlpIndex idx) {
    require_alp_index(idx);
    const auto fam = family(idx.n);
    const auto rc = recurrence_coeffs(idx);
    const ExactPolynomial& p = fam->exact(idx.k);
    ExactPolynomial above = idx.k < idx.n ? fam->exact(idx.k + 1) : ExactPolynomial{};

    const ExactPolynomial x_one_minus_x{0, 1, -1};
    const ExactPolynomial beta_minus_gamma_x(std::vector<Rational>{Rational(rc.beta), Rational(-rc.gamma)});
    return x_one_minus_x * p.derivative() * Rational(rc.alpha) - beta_minus_gamma_x * p +
           (above * Rational(rc.delta)).shift_up(1);
}

ExactPolynomial lower_derivative_residual(AlpIndex idx, FormulaVariant variant) {
    require_alp_index(idx);
    if (idx.k < 1) throw IndexError("lower differentiation identity needs k >= 1, got " + index_str(idx));
    const auto fam = family(idx.n);
    const auto rc = recurrence_coeffs(idx);
    const Integer& mu = variant == FormulaVariant::confirmed ? rc.mu : rc.printed_mu;
    const ExactPolynomial& p = fam->exact(idx.k);
    const ExactPolynomial& below = fam->exact(idx.k - 1);

    const ExactPolynomial x_x_minus_one{0, -1, 1};
    const ExactPolynomial lambda_minus_mu_x(std::vector<Rational>{Rational(rc.lambda), Rational(-mu)});
    return x_x_minus_one * p.derivative() * Rational(rc.kappa) - lambda_minus_mu_x * p +
           (below * Rational(rc.nu)).shift_up(1);
}

ExactPolynomial ode_residual(AlpIndex idx) {
    require_alp_index(idx);
    const long n = idx.n;
    const long k = idx.k;
    const ExactPolynomial zeta = family(idx.n)->exact(idx.k).shift_up(1);
    const ExactPolynomial d1 = zeta.derivative();
    const ExactPolynomial d2 = d1.derivative();
    const ExactPolynomial x2_one_minus_x{0, 0, 1, -1};
    const ExactPolynomial potential(std::vector<Rational>{Rational(-k * (k + 1)), Rational(sq(n + 1))});
    return x2_one_minus_x * d2 - d1.shift_up(2) + potential * zeta;
}

ExactPolynomial terminating_hypergeometric(const Rational& prefactor, long m, long b, long c) {
    if (m < 0) throw DomainError("terminating_hypergeometric: negative degree");
    std::vector<Rational> coeffs(static_cast<std::size_t>(m + 1), Rational(0));
    Rational term = prefactor;
    for (long j = 0; j <= m; ++j) {
        coeffs[static_cast<std::size_t>(j)] = term;
        if (j == m) break;
        if (c + j == 0) {
            throw DomainError("terminating_hypergeometric: lower parameter hits zero at step " + std::to_string(j));
        }
        Rational step(Integer(-m + j) * (b + j), Integer(c + j) * (j + 1));
        step.canonicalize();
        term *= step;
    }
    return ExactPolynomial(std::move(coeffs));
}

ExactPolynomial jacobi_shifted_coefficients(int m, int alpha, int beta) {
    if (m < 0) throw DomainError("jacobi_shifted_coefficients: negative degree");
    for (int i = 0; i < m; ++i) {
        if (alpha + 1 + i == 0) {
            throw DomainError("jacobi_shifted_coefficients: (alpha+1)_j vanishes for alpha=" + std::to_string(alpha) +
                              ", m=" + std::to_string(m));
        }
    }
    const Rational prefactor(generalized_binomial(m + alpha, m));
    return terminating_hypergeometric(prefactor, m, m + alpha + beta + 1, alpha + 1);
}

ExactPolynomial aux_coefficients(int n, int k) {
    if (n < 0 || k < n) {
        throw IndexError("auxiliary index out of range (n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                         "), need k >= n >= 0");
    }
    return jacobi_shifted_coefficients(k - n, 2 * n).shift_up(static_cast<std::size_t>(n));
}

double aux_eval(int n, int k, double x) {
    if (n < 0 || k < n) {
        throw IndexError("auxiliary index out of range (n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                         "), need k >= n >= 0");
    }
    require_finite(x);
    return std::pow(x, n) * jacobi_eval(k - n, 2 * n, 0, 1.0 - 2.0 * x);
}

ExactPolynomial reciprocity_transform(AlpIndex idx) {
    require_alp_index(idx);
    // A_{N,K}(x) = x^N q(1 - 2x) with N = -(n+1), K = -(k+1), so
    // x^{-1} A_{N,K}(1/x) = x^n q_u(1/x) where q_u is the Jacobi factor in u.
    const ExactPolynomial q = jacobi_shifted_coefficients(idx.n - idx.k, -2 * idx.n - 2);
    return q.reversed(static_cast<std::size_t>(idx.n));
}

ExactPolynomial hypergeometric_coefficients(AlpIndex idx, FormulaVariant variant) {
    require_alp_index(idx);
    const long n = idx.n;
    const long k = idx.k;
    const bool confirmed = variant == FormulaVariant::confirmed;
    const Rational prefactor(confirmed ? binomial(n + k + 1, n - k) : binomial(n + k, n - k));
    const long c = confirmed ? 2 * k + 2 : 2 * k + 1;
    return terminating_hypergeometric(prefactor, n - k, n + k + 2, c).shift_up(static_cast<std::size_t>(k));
}

ExactPolynomial jacobi_relation_alp(AlpIndex idx, FormulaVariant variant) {
    require_alp_index(idx);
    const int k = idx.k;
    const bool confirmed = variant == FormulaVariant::confirmed;
    const int a = confirmed ? 2 * k + 1 : 2 * k;
    const int b = confirmed ? 0 : 1;
    return jacobi_shifted_coefficients(idx.n - k, a, b).shift_up(static_cast<std::size_t>(k));
}

double alp_eval(AlpIndex idx, double x) {
    require_alp_index(idx);
    require_finite(x);
    return family(idx.n)->floating(idx.k)(x);
}

std::vector<double> alp_eval_recurrence(int n, double x) {
    if (n < 0) throw IndexError("alp_eval_recurrence: negative n");
    require_finite(x);
    std::vector<double> out(static_cast<std::size_t>(n + 1), 0.0);

    if (x == 0.0) {
        const auto fam = family(n);
        for (int k = n; k >= 0; --k) {
            out[static_cast<std::size_t>(n - k)] = fam->exact(k)[0].get_d();
        }
        return out;
    }

    double above = 0.0;
    double cur = std::pow(x, n);
    out[0] = cur;
    for (int k = n; k >= 1; --k) {
        const auto rc = recurrence_coeffs({n, k});
        const double below = ((rc.b.get_d() / x - rc.c.get_d()) * cur - rc.d.get_d() * above) / rc.a.get_d();
        above = cur;
        cur = below;
        out[static_cast<std::size_t>(n - k + 1)] = cur;
    }
    return out;
}

double alp_derivative_eval(AlpIndex idx, double x) {
    require_alp_index(idx);
    require_finite(x);
    const auto fam = family(idx.n);
    const FloatPolynomial& p = fam->floating(idx.k);
    if (x == 0.0 || x == 1.0) return p.derivative_at(x);

    const auto rc = recurrence_coeffs(idx);
    const double above = idx.k < idx.n ? fam->floating(idx.k + 1)(x) : 0.0;
    const double rhs = (rc.beta.get_d() - rc.gamma.get_d() * x) * p(x) - rc.delta.get_d() * x * above;
    return rhs / (rc.alpha.get_d() * x * (1.0 - x));
}

AlpFamily::AlpFamily(int n) : n_(n) {
    if (n < 0) throw IndexError("AlpFamily: negative n");
    exact_.reserve(static_cast<std::size_t>(n + 1));
    floating_.reserve(static_cast<std::size_t>(n + 1));
    for (int k = 0; k <= n; ++k) {
        exact_.push_back(alp_coefficients({n, k}));
        floating_.emplace_back(exact_.back());
    }
}

const ExactPolynomial& AlpFamily::exact(int k) const {
    require_alp_index({n_, k});
    return exact_[static_cast<std::size_t>(k)];
}

const FloatPolynomial& AlpFamily::floating(int k) const {
    require_alp_index({n_, k});
    return floating_[static_cast<std::size_t>(k)];
}

std::shared_ptr<const AlpFamily> family(int n) {
    static std::mutex mutex;
    static std::map<int, std::shared_ptr<const AlpFamily>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[n];
    if (!slot) slot = std::make_shared<const AlpFamily>(n);
    return slot;
}

}  // namespace alp
