#include "alp/binomial.hpp"

#include <stdexcept>

namespace alp {

Integer binomial(long n, long m) {
    if (n < 0) throw std::domain_error("binomial: negative upper index, use generalized_binomial");
    if (m < 0 || m > n) return Integer(0);
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(m));
    return r;
}

Integer generalized_binomial(long z, long m) {
    if (m < 0) return Integer(0);
    Integer num(1);
    for (long i = 0; i < m; ++i) num *= z - i;
    Integer q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), factorial(m).get_mpz_t());
    return q;
}

Rational pochhammer(const Rational& a, long m) {
    if (m < 0) throw std::domain_error("pochhammer: negative length");
    Rational r(1);
    for (long i = 0; i < m; ++i) r *= a + i;
    return r;
}

Integer factorial(long m) {
    if (m < 0) throw std::domain_error("factorial: negative argument");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(m));
    return r;
}

}  // namespace alp
