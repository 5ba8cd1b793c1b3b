#pragma once

/**
 * @file quadrature.hpp
 * @brief Alternative Gauss quadrature on [0, 1] generated by the ALP family.
 *
 * The (n, k) rule, 1 <= k <= n, places its n-k+1 nodes at the nonzero zeros
 * of P_{n,k-1} and uses weights 1 / sum_{l=k}^{n} (2l+1) P_nl(x_j)^2. It
 * integrates x^l exactly for 2k-1 <= l <= 2n; constants and other low powers
 * are not captured (for k = 1 the rule gives sum w_j < 1).
 */

#include "alp/polynomial.hpp"

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace alp {

struct QuadratureRule {
    int n = 0;
    int k = 0;
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Zeros of P_{n,k-1} / x^{k-1} in (0, 1), ascending. Throws IndexError for
/// k outside [1, n] and RootCountError if isolation finds the wrong count.
std::vector<double> nodes(int n, int k);

std::vector<double> weights(int n, int k, std::span<const double> nodes);

QuadratureRule build_rule(int n, int k);

/// sum_j w_j f(x_j); DomainError if f is not finite at a node.
double integrate(const QuadratureRule& rule, const std::function<double(double)>& f);

struct MonomialError {
    int degree = 0;
    double error = 0.0;
    bool in_window = false;
};

/// |integrate(rule, x^l) - 1/(l+1)| for l = 0 .. 2n+1. Monomial sums use
/// compensated accumulation so the in-window entries reflect the rule, not
/// the summation.
std::vector<MonomialError> exactness_report(const QuadratureRule& rule);

/// c_k = (2k+1) <p, P_nk> for k = kmin .. n (element i holds k = kmin + i).
std::vector<Rational> expand_in_alp(const ExactPolynomial& p, int n, int kmin);

/// {"n":..,"k":..,"nodes":[..],"weights":[..]} with 17 significant digits.
std::string to_json(const QuadratureRule& rule);

/// Header `j,node,weight`, one row per node, j from 0.
std::string to_csv(const QuadratureRule& rule);

/// 17 significant digits, the format used for every float this library prints.
std::string format_real(double v);

}  // namespace alp
