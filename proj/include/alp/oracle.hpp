#pragma once

/**
 * @file oracle.hpp
 * @brief Exact verification of the ALP relations.
 *
 * Every check runs in rational arithmetic. A report passes exactly when its
 * residual is zero; a failing check is data, never an exception. Checks that
 * use the misprinted parameter sets carry `expected_pass == false` wherever
 * the printed and confirmed forms actually differ.
 */

#include "alp/polynomial.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace alp {

/// Declaration order is the canonical report order within one (n, k).
enum class Identity {
    sign_normalization,
    norm,
    orthogonality,
    aux_sign_normalization,
    aux_norm,
    aux_orthogonality,
    rodrigues,
    unit_integral,
    reciprocity,
    recurrence,
    derivative_upper,
    derivative_lower,
    derivative_lower_printed,
    ode,
    hypergeometric,
    hypergeometric_printed,
    jacobi_form,
    jacobi_form_printed,
};

std::string_view identity_name(Identity id);

struct IdentityReport {
    Identity identity{};
    int n = 0;
    int k = 0;
    /// Second member index for pairwise checks (orthogonality, norms); -1 otherwise.
    int l = -1;
    bool pass = false;
    bool expected_pass = true;
    /// Zero on success; otherwise the largest |coefficient| of the residual
    /// polynomial (or the scalar residual for integral checks).
    Rational residual;
    std::string note;

    [[nodiscard]] bool as_expected() const noexcept { return pass == expected_pass; }
};

/// {"identity": str, "n": int, "k": int, "pass": bool, "residual": str, "note": str}
std::string to_json_line(const IdentityReport& report);

/// Human-readable single line.
std::string to_text_line(const IdentityReport& report);

/// Sorts by (n, k, identity, l).
void canonical_sort(std::vector<IdentityReport>& reports);

/// Pairwise inner products for 0 <= k <= l <= n plus the sign of each
/// leading coefficient.
std::vector<IdentityReport> verify_orthogonality(int n);

/// Same checks for the auxiliary family, n <= k <= l <= kmax.
std::vector<IdentityReport> verify_aux_orthogonality(int n, int kmax);

/// Every coefficient-path and functional identity for 0 <= k <= n <= nmax.
std::vector<IdentityReport> verify_identity_suite(int nmax);

bool all_as_expected(const std::vector<IdentityReport>& reports);

}  // namespace alp
