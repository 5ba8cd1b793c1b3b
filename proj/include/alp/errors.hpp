#pragma once

#include <stdexcept>

namespace alp {

/// Polynomial index (n, k) outside the admissible range of an operation.
class IndexError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Argument outside the numerical domain (non-finite x, node outside (0,1), ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Root isolation found a different number of nodes than the rule requires.
class RootCountError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace alp
