#include "alp/float_eval.hpp"

#include <cmath>

namespace alp {
namespace {

DoubleDouble two_sum(double a, double b) noexcept {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

DoubleDouble quick_two_sum(double a, double b) noexcept {
    double s = a + b;
    return {s, b - (s - a)};
}

DoubleDouble two_prod(double a, double b) noexcept {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

DoubleDouble add(DoubleDouble a, DoubleDouble b) noexcept {
    DoubleDouble s = two_sum(a.hi, b.hi);
    DoubleDouble t = two_sum(a.lo, b.lo);
    s.lo += t.hi;
    s = quick_two_sum(s.hi, s.lo);
    s.lo += t.lo;
    return quick_two_sum(s.hi, s.lo);
}

DoubleDouble mul(DoubleDouble a, double b) noexcept {
    DoubleDouble p = two_prod(a.hi, b);
    p.lo += a.lo * b;
    return quick_two_sum(p.hi, p.lo);
}

}  // namespace

DoubleDouble DoubleDouble::from_rational(const Rational& q) {
    double hi = q.get_d();
    Rational rest = q - Rational(hi);
    return {hi, rest.get_d()};
}

FloatPolynomial::FloatPolynomial(const ExactPolynomial& p) : FloatPolynomial(p, true) {}

FloatPolynomial::FloatPolynomial(const ExactPolynomial& p, bool with_derivative) : exact_(p) {
    coeffs_.reserve(p.coeffs().size());
    abs_coeffs_.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        coeffs_.push_back(DoubleDouble::from_rational(c));
        abs_coeffs_.push_back(std::abs(coeffs_.back().value()));
    }
    if (with_derivative) {
        derivative_ = std::shared_ptr<const FloatPolynomial>(new FloatPolynomial(p.derivative(), false));
    }
}

double FloatPolynomial::operator()(double x) const {
    DoubleDouble acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = add(mul(acc, x), *it);
    }
    const double value = acc.value();
    // Each double-double step contributes at most a few units of 2^-104
    // relative to the running magnitude; coefficient conversion adds one more.
    const double bound = 8.0 * (coeffs_.size() + 1) * 0x1p-104 * magnitude(x);
    if (bound <= 0x1p-54 * std::abs(value)) return value;
    return exact_.evaluate(Rational(x)).get_d();
}

double FloatPolynomial::derivative_at(double x) const {
    if (!derivative_) return FloatPolynomial(exact_.derivative(), false)(x);
    return (*derivative_)(x);
}

double FloatPolynomial::magnitude(double x) const noexcept {
    double acc = 0.0;
    const double ax = std::abs(x);
    for (auto it = abs_coeffs_.rbegin(); it != abs_coeffs_.rend(); ++it) acc = acc * ax + *it;
    return acc;
}

double jacobi_eval(int m, int alpha, int beta, double t) {
    if (m == 0) return 1.0;
    const double a = alpha;
    const double b = beta;
    double prev = 1.0;
    double cur = (a + 1.0) + (a + b + 2.0) * (t - 1.0) / 2.0;
    for (int j = 2; j <= m; ++j) {
        const double s = 2.0 * j + a + b;
        const double c1 = 2.0 * j * (j + a + b) * (s - 2.0);
        const double c2 = (s - 1.0) * (s * (s - 2.0) * t + a * a - b * b);
        const double c3 = 2.0 * (j + a - 1.0) * (j + b - 1.0) * s;
        const double next = (c2 * cur - c3 * prev) / c1;
        prev = cur;
        cur = next;
    }
    return cur;
}

}  // namespace alp
