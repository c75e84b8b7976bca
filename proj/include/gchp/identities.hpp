#pragma once

// Executable identities for complex Hermite / Laguerre polynomials and the
// matrix picture of G_nu^{m,n}. Each identity is checked in the form it is
// usually quoted and, when that form fails, in a corrected form; the result
// records both residuals so nothing is silently patched.

#include <string>
#include <vector>

#include "gchp/bipoly.hpp"
#include "gchp/params.hpp"

namespace gchp {

enum class IdentityStatus { verified, erratum, failed };

const char* to_string(IdentityStatus status);

struct IdentityResult {
  std::string name;
  IdentityStatus status = IdentityStatus::failed;
  double printed_residual = 0.0;    // residual of the quoted form
  double corrected_residual = 0.0;  // residual of the corrected form (== printed if verified)
  bool exact = true;                // residuals computed in exact arithmetic
  std::string note;
};

/// H^{m,n}(z, nu z* + conj(xi)/2) against the binomial sum of scaled
/// H^{m,j}(sqrt(nu) z, sqrt(nu) z*), quoted with a (-1)^{min(m,n)} factor.
IdentityResult verify_identity_2221(unsigned m, unsigned n, const Params& params);

/// H^{m,n}(z, z* + 1) against sum_j C(n,j) H^{m,j}(z, z*), quoted with (-1)^{min(m,n)}.
IdentityResult verify_identity_2222(unsigned m, unsigned n);

/// The Laguerre forms: the general-parameter one, the two unit-shift
/// specialisations (m >= n and n >= m) and the symmetric polynomial identity
/// (m >= n). Point identities are checked at fixed Gaussian-rational points
/// (exactly when sqrt(nu) is rational) and at pseudo-random float points.
std::vector<IdentityResult> verify_laguerre_identities(unsigned m, unsigned n, const Params& params);

/// Coefficient grid, rows = powers of z (ascending downward), columns = powers of z*.
std::vector<std::vector<Coefficient>> matrix_of(const BiPoly& p);
/// Right-aligned text rendering of matrix_of(p).
std::string format_matrix(const BiPoly& p);

struct DiagonalTerm {
  unsigned k = 0;        // second index of H^{m,k}
  Coefficient scale;     // m!/sqrt(nu)^m sqrt(nu)^k/k! (conj(xi)/2)^{m-k}/(m-k)!
  BiPoly hermite;        // H^{m,k}(sqrt(nu) z, sqrt(nu) z*)
  BiPoly diagonal;       // the (m-k)-th subdiagonal of matrix_of(G^{m,m})
};

/// Splits G^{m,m} along its subdiagonals, k = m, m-1, ..., 0. Each diagonal is
/// checked against scale * hermite (InternalDisagreement on mismatch).
std::vector<DiagonalTerm> diagonal_decomposition(unsigned m, const Params& params);

/// Largest deviation of matrix_of(G^{m,m}) from the closed entry formula
/// g_{lk} (zero above the diagonal). 0 means exact agreement.
double triangular_entry_residual(unsigned m, const Params& params);

/// G^{m,n} with coefficients carried as polynomials in conj(xi): drop the
/// z*^n column, differentiate every entry in conj(xi), then substitute the
/// numeric conj(xi). Equals (n/2) G^{m,n-1}. Requires n >= 1.
BiPoly drop_column_differentiate(unsigned m, unsigned n, const Params& params);

}  // namespace gchp
