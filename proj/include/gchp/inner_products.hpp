#pragma once

// Inner products <f, g> = int_C f(z) conj(g(z)) w(z) dA for the weight
//   w(z) = exp(-nu |z|^2 - Re(z conj(xi))) = exp(|xi|^2/(4 nu)) exp(-nu |z + xi/(2 nu)|^2),
// computed three independent ways:
//   exact    - expansion in monomial moments, each moment equal to
//              pi exp(|xi|^2/(4 nu)) times an exact Gaussian rational;
//   moments  - the same expansion with the closed-form Kummer-function moments
//              evaluated in double precision;
//   quad     - tensor Gauss-Hermite quadrature on the recentred Gaussian.

#include <complex>

#include "gchp/bipoly.hpp"
#include "gchp/kernels.hpp"
#include "gchp/params.hpp"

namespace gchp {

class Weight {
 public:
  explicit Weight(Params params) : params_(std::move(params)) {}
  double operator()(std::complex<double> z) const;
  const Params& params() const { return params_; }

 private:
  Params params_;
};

double weight_value(const Params& params, std::complex<double> z);

/// pi exp(|xi|^2 / (4 nu)): the common transcendental factor of every moment.
double moment_scale(const Params& params);

/// int z^m conj(z)^j w dA from the closed form
/// C_{m,j}(xi) 1F1(1 + max; 1 + |m-j|; |xi|^2/(4 nu)), in double precision.
std::complex<double> monomial_moment(unsigned m, unsigned j, const Params& params);

/// R with int z^m conj(z)^j w dA = moment_scale(params) * R. Exact in EXACT
/// mode (Kummer's transform turns the 1F1 into a terminating sum).
Coefficient monomial_moment_reduced(unsigned m, unsigned j, const Params& params);

/// sum f_{jk} conj(g_{lp}) R(j+p, k+l), exact in EXACT mode.
Coefficient inner_product_reduced(const BiPoly& f, const BiPoly& g, const Params& params);
/// moment_scale * inner_product_reduced.
std::complex<double> inner_product_exact(const BiPoly& f, const BiPoly& g, const Params& params);
/// Same expansion with monomial_moment().
std::complex<double> inner_product_moments(const BiPoly& f, const BiPoly& g, const Params& params);

struct QuadratureGrid {
  unsigned order = 0;
  kernels::GaussHermiteRule rule;
  std::complex<double> shift;  // -xi / (2 nu)
  double scale = 1.0;          // 1 / sqrt(nu)
  double prefactor = 1.0;      // exp(|xi|^2/(4 nu)) / nu

  static QuadratureGrid make(const Params& params, unsigned order);
};

/// (total degree of f conj(g)) / 2 + 4.
unsigned default_quad_order(const BiPoly& f, const BiPoly& g);

enum class Kernel { serial, omp };

/// order == 0 picks default_quad_order. An order below the exactness bound
/// prints a warning to stderr and proceeds.
std::complex<double> inner_product_quad(const BiPoly& f, const BiPoly& g, const Params& params,
                                        unsigned order = 0, Kernel kernel = Kernel::omp);

struct InnerProductReport {
  Coefficient exact_value;   // FLOAT value of the exact expansion
  Coefficient reduced;       // exact_value / moment_scale, exact when possible
  Coefficient quad_value;
  Coefficient moment_value;
  double max_delta = 0.0;    // largest pairwise |difference|
  double max_rel_delta = 0.0;  // max_delta / (||f|| ||g||)
};

InnerProductReport inner_product_report(const BiPoly& f, const BiPoly& g, const Params& params,
                                        unsigned quad_order = 0);

/// m! n! pi nu^n / nu^{m+1} 1F1(m+1; 1; |xi|^2/(4 nu)); checked against the
/// exact expansion of <G^{m,n}, G^{m,n}> (InternalDisagreement beyond 1e-9).
double gchp_norm_sq(unsigned m, unsigned n, const Params& params);

/// |<G^{m,n}, G^{j,k}>| / (||G^{m,n}|| ||G^{j,k}||) for n != k. Exactly 0.0
/// when the exact expansion vanishes identically.
double weak_orthogonality_check(unsigned m, unsigned n, unsigned j, unsigned k,
                                const Params& params);

/// <G^{m,n}, G^{m-1,n}> = 2 m! n! pi nu^n / (conj(xi) nu^m) (F(m;1;x) - F(m+1;1;x)),
/// x = |xi|^2/(4 nu); 0 when xi = 0. Requires m >= 1.
std::complex<double> cross_inner(unsigned m, unsigned n, const Params& params);

/// True when some pair G^{m,n}, G^{j,n} with m != j, all indices <= budget,
/// has a nonzero inner product, i.e. the family is not fully orthogonal.
bool orthogonality_iff_xi_zero(const Params& params, unsigned budget);

}  // namespace gchp
