#include "alp/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace alp {

std::string to_string(const Rational& q) {
    return q.get_str(10);
}

ExactPolynomial::ExactPolynomial(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

ExactPolynomial::ExactPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c.canonicalize();
    trim();
}

ExactPolynomial ExactPolynomial::monomial(const Rational& c, std::size_t power) {
    ExactPolynomial p;
    if (c == 0) return p;
    p.coeffs_.assign(power + 1, Rational(0));
    p.coeffs_[power] = c;
    p.coeffs_[power].canonicalize();
    return p;
}

void ExactPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational ExactPolynomial::operator[](std::size_t l) const {
    return l < coeffs_.size() ? coeffs_[l] : Rational(0);
}

int ExactPolynomial::lowest_power() const noexcept {
    for (std::size_t l = 0; l < coeffs_.size(); ++l) {
        if (coeffs_[l] != 0) return static_cast<int>(l);
    }
    return -1;
}

bool ExactPolynomial::has_integer_coeffs() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& c) { return c.get_den() == 1; });
}

ExactPolynomial ExactPolynomial::derivative() const {
    ExactPolynomial d;
    if (coeffs_.size() <= 1) return d;
    d.coeffs_.resize(coeffs_.size() - 1);
    for (std::size_t l = 1; l < coeffs_.size(); ++l) {
        d.coeffs_[l - 1] = coeffs_[l] * static_cast<unsigned long>(l);
    }
    d.trim();
    return d;
}

ExactPolynomial ExactPolynomial::shift_up(std::size_t m) const {
    if (is_zero() || m == 0) return *this;
    ExactPolynomial r;
    r.coeffs_.assign(m, Rational(0));
    r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
    return r;
}

ExactPolynomial ExactPolynomial::shift_down(std::size_t m) const {
    if (is_zero() || m == 0) return *this;
    if (lowest_power() < static_cast<int>(m)) {
        throw std::domain_error("shift_down: polynomial is not divisible by x^" + std::to_string(m));
    }
    ExactPolynomial r;
    r.coeffs_.assign(coeffs_.begin() + static_cast<std::ptrdiff_t>(m), coeffs_.end());
    return r;
}

ExactPolynomial ExactPolynomial::reversed(std::size_t reference_degree) const {
    if (degree() > static_cast<int>(reference_degree)) {
        throw std::domain_error("reversed: reference degree below polynomial degree");
    }
    std::vector<Rational> r(reference_degree + 1, Rational(0));
    for (std::size_t l = 0; l < coeffs_.size(); ++l) r[reference_degree - l] = coeffs_[l];
    return ExactPolynomial(std::move(r));
}

Rational ExactPolynomial::evaluate(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

Rational ExactPolynomial::max_abs_coeff() const {
    Rational best(0);
    for (const auto& c : coeffs_) {
        Rational a = abs(c);
        if (a > best) best = a;
    }
    return best;
}

ExactPolynomial& ExactPolynomial::operator+=(const ExactPolynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
    for (std::size_t l = 0; l < other.coeffs_.size(); ++l) coeffs_[l] += other.coeffs_[l];
    trim();
    return *this;
}

ExactPolynomial& ExactPolynomial::operator-=(const ExactPolynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
    for (std::size_t l = 0; l < other.coeffs_.size(); ++l) coeffs_[l] -= other.coeffs_[l];
    trim();
    return *this;
}

ExactPolynomial& ExactPolynomial::operator*=(const Rational& s) {
    if (s == 0) {
        coeffs_.clear();
        return *this;
    }
    Rational scale = s;
    scale.canonicalize();
    for (auto& c : coeffs_) c *= scale;
    return *this;
}

ExactPolynomial operator*(const ExactPolynomial& a, const ExactPolynomial& b) {
    ExactPolynomial r;
    if (a.is_zero() || b.is_zero()) return r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    r.trim();
    return r;
}

ExactPolynomial operator-(ExactPolynomial a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
}

bool operator==(const ExactPolynomial& a, const ExactPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
}

std::string ExactPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t l = 0; l < coeffs_.size(); ++l) {
        const Rational& c = coeffs_[l];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (l == 0) {
            os << alp::to_string(mag);
            continue;
        }
        if (mag != 1) os << alp::to_string(mag) << '*';
        os << 'x';
        if (l > 1) os << '^' << l;
    }
    return os.str();
}

ExactPolynomial poly_mul(const ExactPolynomial& p, const ExactPolynomial& q) {
    return p * q;
}

Rational poly_integrate01(const ExactPolynomial& p) {
    Rational sum(0);
    const auto& c = p.coeffs();
    for (std::size_t l = 0; l < c.size(); ++l) {
        sum += c[l] / Rational(static_cast<unsigned long>(l + 1));
    }
    sum.canonicalize();
    return sum;
}

Rational inner_product(const ExactPolynomial& p, const ExactPolynomial& q) {
    return poly_integrate01(poly_mul(p, q));
}

}  // namespace alp
