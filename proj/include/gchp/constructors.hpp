#pragma once

// Generalized complex Hermite polynomials G_nu^{m,n}(z, z* | xi) and the
// classical complex Hermite polynomials H^{m,n}, built by five independent
// routes. SERIES is the canonical one; the others exist so that exact
// cross-route agreement can be checked.

#include <string>
#include <vector>

#include "gchp/bipoly.hpp"
#include "gchp/params.hpp"

namespace gchp {

enum class Route { series, recursion, op, rodrigues, hermite_sum };

const char* to_string(Route route);
inline constexpr Route all_routes[] = {Route::series, Route::recursion, Route::op,
                                       Route::rodrigues, Route::hermite_sum};

/// H^{m,n}(z, z*) = sum_j (-1)^j m! n! / (j! (m-j)! (n-j)!) z^{m-j} z*^{n-j}.
BiPoly complex_hermite(unsigned m, unsigned n, Mode mode = Mode::exact);

/// Dattoli's h_{m,n}(z, z* | tau) = m! n! sum_j tau^j/j! z^{m-j}/(m-j)! z*^{n-j}/(n-j)!.
BiPoly dattoli_h(unsigned m, unsigned n, const Coefficient& tau);

BiPoly gchp_series(unsigned m, unsigned n, const Params& params);

enum class RecursionOrder { m_first, n_first };
/// Three-term recursions from G^{0,0} = 1: G^{m+1,n} = z G^{m,n} - n G^{m,n-1}
/// and G^{m,n+1} = (nu z* + conj(xi)/2) G^{m,n} - m G^{m-1,n}.
BiPoly gchp_recursion(unsigned m, unsigned n, const Params& params,
                      RecursionOrder order = RecursionOrder::m_first);

/// (-d/dz + nu z* + conj(xi)/2)^n applied to z^m.
BiPoly gchp_operator(unsigned m, unsigned n, const Params& params);

/// Rodrigues form: (-1)^{m+n}/nu^m e^{W} d^{m+n}/dz^n dz*^m e^{-W} with
/// W = nu|z|^2 + conj(xi) z/2, carried out in the weighted calculus.
/// Throws InternalDisagreement if the exponentials fail to cancel.
BiPoly gchp_rodrigues(unsigned m, unsigned n, const Params& params);

/// Binomial sum of scaled complex Hermite polynomials H^{m,j}(sqrt(nu) z, sqrt(nu) z*).
/// In EXACT mode with irrational sqrt(nu) the result is computed in FLOAT mode.
BiPoly gchp_hermite_sum(unsigned m, unsigned n, const Params& params);

/// Dispatch by route, memoized on (m, n, params, route, mode). Thread-safe.
BiPoly gchp(unsigned m, unsigned n, const Params& params, Route route = Route::series);
void clear_gchp_cache();

/// G^{m,n}(0, 0 | xi) from the closed form; cross-checked against the
/// constant term of the series polynomial (InternalDisagreement on mismatch).
Coefficient hermite_number(unsigned m, unsigned n, const Params& params);

/// Entry [m][n] = m! n! [u^m v^n] exp(u z + v (nu z* + conj(xi)/2) - u v),
/// for 0 <= m <= M, 0 <= n <= N, from a truncated bivariate Taylor product.
/// Requires M, N <= 12.
std::vector<std::vector<BiPoly>> genfun_coefficients(const Params& params, unsigned M, unsigned N);

struct GchpPartials {
  BiPoly dz;      // m G^{m-1,n}
  BiPoly dzbar;   // n nu G^{m,n-1}
  BiPoly dxibar;  // (n/2) G^{m,n-1}
};

/// Closed forms of dG/dz, dG/dz*, dG/dconj(xi). dz and dzbar are checked
/// against formal differentiation, dxibar against an exact derivative in
/// conj(xi) obtained by interpolating G over n+1 shifted parameter values.
GchpPartials gchp_partials(unsigned m, unsigned n, const Params& params);

}  // namespace gchp
