#pragma once

#include "alp/polynomial.hpp"

namespace alp {

/// C(n, m) for n >= 0; zero when m < 0 or m > n.
Integer binomial(long n, long m);

/// C(z, m) = z(z-1)...(z-m+1)/m! for any integer z and m >= 0.
Integer generalized_binomial(long z, long m);

/// Rising factorial (a)_m = a(a+1)...(a+m-1); (a)_0 = 1.
Rational pochhammer(const Rational& a, long m);

Integer factorial(long m);

}  // namespace alp
