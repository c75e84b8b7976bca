#pragma once

#include <complex>
#include <optional>
#include <string>

#include "gchp/bipoly.hpp"
#include "gchp/coefficient.hpp"

namespace gchp {

/// The magnetic parameters: field strength nu > 0 and shift xi in C.
/// S(z) = nu*z + xi.
class Params {
 public:
  /// Throws std::invalid_argument unless nu is real and positive, and
  /// ModeMismatch unless nu and xi share a mode.
  Params(Coefficient nu, Coefficient xi);

  static Params exact(const Rational& nu, const Rational& xi_re = 0, const Rational& xi_im = 0);
  static Params floating(double nu, std::complex<double> xi = 0.0);

  Mode mode() const { return nu_.mode(); }
  const Coefficient& nu() const { return nu_; }
  const Coefficient& xi() const { return xi_; }
  Coefficient xi_conj() const { return xi_.conj(); }
  double nu_value() const { return nu_.to_complex().real(); }
  std::complex<double> xi_value() const { return xi_.to_complex(); }
  bool xi_is_zero() const { return xi_.is_zero(); }

  /// nu*z + xi
  BiPoly S() const;
  /// nu*z* + conj(xi)
  BiPoly S_conj() const;
  /// nu*z* + conj(xi)/2, the image of z* in every GCHP formula.
  BiPoly shifted_zbar() const;

  /// Exact sqrt(nu) when nu is the square of a rational, nullopt otherwise
  /// (always nullopt in FLOAT mode).
  std::optional<Coefficient> exact_sqrt_nu() const;
  /// sqrt(nu) in the params' mode when possible, otherwise FLOAT.
  Coefficient sqrt_nu() const;

  /// |xi|^2 / (4 nu), the argument of every norm formula.
  Coefficient norm_argument() const;

  Params to_mode(Mode target) const;

  /// "nu=1/4,xi=-i" style label used in reports and cache keys.
  std::string label() const;

 private:
  Coefficient nu_;
  Coefficient xi_;
};

}  // namespace gchp
