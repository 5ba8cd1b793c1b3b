#include "alp/quadrature.hpp"

#include "alp/core.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace alp {
namespace {

constexpr double kBracketWidth = 1e-14;
constexpr double kResidualTol = 1e-13;
constexpr int kNewtonSteps = 3;
constexpr int kDensifications = 2;

void require_rule_index(int n, int k) {
    if (n < 1 || k < 1 || k > n) {
        throw IndexError("quadrature index out of range (n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                         "), need 1 <= k <= n");
    }
}

// Neumaier summation.
class CompensatedSum {
public:
    void add(double v) noexcept {
        const double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v)) {
            carry_ += (sum_ - t) + v;
        } else {
            carry_ += (v - t) + sum_;
        }
        sum_ = t;
    }
    [[nodiscard]] double value() const noexcept { return sum_ + carry_; }

private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

double refine_root(const FloatPolynomial& q, double lo, double hi, double f_lo) {
    while (hi - lo > kBracketWidth) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double f_mid = q(mid);
        if (f_mid == 0.0) return mid;
        if ((f_mid < 0.0) == (f_lo < 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    double x = 0.5 * (lo + hi);
    for (int i = 0; i < kNewtonSteps; ++i) {
        const double d = q.derivative_at(x);
        if (d == 0.0) break;
        const double next = x - q(x) / d;
        if (!(next >= lo && next <= hi)) break;
        x = next;
    }
    return x;
}

std::vector<double> isolate_roots(const FloatPolynomial& q, int grid_points) {
    std::vector<double> roots;
    const int last = grid_points - 1;
    double x_prev = 0.0;
    double f_prev = q(x_prev);
    for (int i = 1; i <= last; ++i) {
        const double x = static_cast<double>(i) / last;
        const double f = q(x);
        if (f == 0.0) {
            if (x < 1.0) roots.push_back(x);
            // Restart the scan just past the exact zero.
            x_prev = x;
            f_prev = q(std::nextafter(x, 1.0));
            continue;
        }
        if (f_prev != 0.0 && (f < 0.0) != (f_prev < 0.0)) {
            roots.push_back(refine_root(q, x_prev, x, f_prev));
        }
        x_prev = x;
        f_prev = f;
    }
    return roots;
}

}  // namespace

std::vector<double> nodes(int n, int k) {
    require_rule_index(n, k);
    const auto fam = family(n);
    const auto k_below = static_cast<std::size_t>(k - 1);
    const FloatPolynomial deflated(fam->exact(k - 1).shift_down(k_below));
    const int expected = n - k + 1;

    int grid = 8 * expected + 16;
    std::vector<double> roots;
    for (int attempt = 0; attempt <= kDensifications; ++attempt, grid *= 4) {
        roots = isolate_roots(deflated, grid);
        if (static_cast<int>(roots.size()) >= expected) break;
    }
    if (static_cast<int>(roots.size()) != expected) {
        throw RootCountError("rule (n=" + std::to_string(n) + ", k=" + std::to_string(k) + "): found " +
                             std::to_string(roots.size()) + " nodes, expected " + std::to_string(expected));
    }

    for (std::size_t j = 0; j < roots.size(); ++j) {
        const double x = roots[j];
        if (!(x > 0.0 && x < 1.0) || (j > 0 && !(x > roots[j - 1]))) {
            throw RootCountError("rule (n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                                 "): nodes not strictly increasing inside (0, 1)");
        }
        // local scale: the larger of sum |c_l| x^l and |q'(x)|
        const double scale = std::max(deflated.magnitude(x), std::abs(deflated.derivative_at(x)));
        if (std::abs(deflated(x)) > kResidualTol * scale) {
            throw RootCountError("rule (n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                                 "): node residual above tolerance at x=" + format_real(x));
        }
    }
    return roots;
}

std::vector<double> weights(int n, int k, std::span<const double> nodes) {
    require_rule_index(n, k);
    const auto fam = family(n);
    std::vector<double> w;
    w.reserve(nodes.size());
    for (double x : nodes) {
        if (!(x > 0.0 && x < 1.0)) throw DomainError("weights: node " + format_real(x) + " outside (0, 1)");
        CompensatedSum sum;
        for (int l = k; l <= n; ++l) {
            const double v = fam->floating(l)(x);
            sum.add((2.0 * l + 1.0) * v * v);
        }
        w.push_back(1.0 / sum.value());
    }
    return w;
}

QuadratureRule build_rule(int n, int k) {
    QuadratureRule rule;
    rule.n = n;
    rule.k = k;
    rule.nodes = nodes(n, k);
    rule.weights = weights(n, k, rule.nodes);
    for (double w : rule.weights) {
        if (!(w > 0.0)) throw RootCountError("rule has a non-positive weight");
    }
    return rule;
}

double integrate(const QuadratureRule& rule, const std::function<double(double)>& f) {
    CompensatedSum sum;
    for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
        const double v = f(rule.nodes[j]);
        if (!std::isfinite(v)) throw DomainError("integrand is not finite at node " + format_real(rule.nodes[j]));
        sum.add(rule.weights[j] * v);
    }
    return sum.value();
}

std::vector<MonomialError> exactness_report(const QuadratureRule& rule) {
    std::vector<MonomialError> out;
    for (int l = 0; l <= 2 * rule.n + 1; ++l) {
        const double approx = integrate(rule, [l](double x) { return std::pow(x, l); });
        MonomialError e;
        e.degree = l;
        e.error = std::abs(approx - 1.0 / (l + 1));
        e.in_window = l >= 2 * rule.k - 1 && l <= 2 * rule.n;
        out.push_back(e);
    }
    return out;
}

std::vector<Rational> expand_in_alp(const ExactPolynomial& p, int n, int kmin) {
    if (n < 0 || kmin < 0 || kmin > n) throw IndexError("expand_in_alp: need 0 <= kmin <= n");
    const auto fam = family(n);
    std::vector<Rational> c;
    for (int k = kmin; k <= n; ++k) {
        c.push_back(Rational(2 * k + 1) * inner_product(p, fam->exact(k)));
    }
    return c;
}

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string to_json(const QuadratureRule& rule) {
    std::ostringstream os;
    os << "{\"n\":" << rule.n << ",\"k\":" << rule.k << ",\"nodes\":[";
    for (std::size_t j = 0; j < rule.nodes.size(); ++j) os << (j ? "," : "") << format_real(rule.nodes[j]);
    os << "],\"weights\":[";
    for (std::size_t j = 0; j < rule.weights.size(); ++j) os << (j ? "," : "") << format_real(rule.weights[j]);
    os << "]}";
    return os.str();
}

std::string to_csv(const QuadratureRule& rule) {
    std::ostringstream os;
    os << "j,node,weight\n";
    for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
        os << j << ',' << format_real(rule.nodes[j]) << ',' << format_real(rule.weights[j]) << '\n';
    }
    return os.str();
}

}  // namespace alp
