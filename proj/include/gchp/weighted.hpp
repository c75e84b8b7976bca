#pragma once

// Symbolic calculus on functions P(z, z*) * exp(a z z* + b z + c z*).
//
// The class is closed under d/dz, d/dz* and multiplication by polynomials,
// so the ladder operators A = d/dz* + S/2, A* = -d/dz + S*/2 and the magnetic
// Schroedinger operator
//   L = -1/4 [ 4 d^2/dz dz* + 2 (S d/dz - S* d/dz*) - |S|^2 ]
// act exactly, with no numerical differentiation.

#include "gchp/bipoly.hpp"
#include "gchp/params.hpp"

namespace gchp {

struct GaussExponent {
  Coefficient a;  // z z*
  Coefficient b;  // z
  Coefficient c;  // z*

  static GaussExponent zero(Mode mode);
  /// -1/2 z* S(z) = -nu/2 z z* - xi/2 z*, the eigenfunction weight.
  static GaussExponent eigen_weight(const Params& params);
  /// -nu z z* - conj(xi)/2 z, the weight differentiated by the Rodrigues formula.
  static GaussExponent rodrigues_weight(const Params& params);

  Mode mode() const { return a.mode(); }
  bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero(); }

  friend GaussExponent operator+(const GaussExponent& x, const GaussExponent& y);
  GaussExponent operator-() const;
  friend bool operator==(const GaussExponent& x, const GaussExponent& y) = default;
};

struct WeightedPoly {
  BiPoly poly;
  GaussExponent exponent;

  Mode mode() const { return poly.mode(); }
};

/// Exponents must match; throws std::invalid_argument otherwise.
WeightedPoly operator+(const WeightedPoly& f, const WeightedPoly& g);
WeightedPoly operator-(const WeightedPoly& f, const WeightedPoly& g);
WeightedPoly operator*(const BiPoly& p, const WeightedPoly& f);
WeightedPoly operator*(const Coefficient& c, const WeightedPoly& f);

/// f * exp(extra): the exponents add.
WeightedPoly times_exp(const WeightedPoly& f, const GaussExponent& extra);

/// Product rule: poly' = dP/dz + P (a z* + b), exponent unchanged.
WeightedPoly wf_d_dz(const WeightedPoly& f);
/// Product rule: poly' = dP/dz* + P (a z + c), exponent unchanged.
WeightedPoly wf_d_dzbar(const WeightedPoly& f);

WeightedPoly apply_A(const Params& params, const WeightedPoly& f);
WeightedPoly apply_A_star(const Params& params, const WeightedPoly& f);

/// L f straight from the second-order definition.
WeightedPoly apply_L_direct(const Params& params, const WeightedPoly& f);
/// L f as A A* f - (nu/2) f.
WeightedPoly apply_L_ladder(const Params& params, const WeightedPoly& f);
/// L f; in EXACT mode both forms are computed and must agree exactly, else
/// InternalDisagreement is thrown. FLOAT mode uses the direct form only.
WeightedPoly apply_L(const Params& params, const WeightedPoly& f);

/// psi^m = z^m exp(-1/2 z* S).
WeightedPoly ground_state(const Params& params, unsigned m);
/// g^{m,n} = (A*)^n psi^m by n-fold application.
WeightedPoly eigenfunction(const Params& params, unsigned m, unsigned n);

/// (A*)^n f through the conjugation form
/// (-1)^n exp(z S*/2) d^n/dz^n [exp(-z S*/2) f].
WeightedPoly apply_A_star_power_conjugated(const Params& params, const WeightedPoly& f, unsigned n);

/// Polynomial part of L g^{m,n} - nu (n + 1/2) g^{m,n}; identically zero.
BiPoly eigen_residual(const Params& params, unsigned m, unsigned n);

}  // namespace gchp
