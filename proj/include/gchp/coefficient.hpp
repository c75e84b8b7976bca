#pragma once

// Complex scalar field used by every polynomial in the library.
//
// A Coefficient is either EXACT (a Gaussian rational, re + i*im with
// arbitrary-precision rational parts) or FLOAT (std::complex<double>).
// Arithmetic between the two modes is refused with ModeMismatch; use
// to_mode() to convert explicitly (EXACT -> FLOAT only).

#include <complex>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace gchp {

enum class Mode { exact, floating };

const char* to_string(Mode mode);

class ModeMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised when two independent computations of the same quantity disagree.
/// It always points at a bug, never at bad user input.
class InternalDisagreement : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Rational = mpq_class;

/// Parses "p/q", an integer, or a finite decimal ("0.25", "-1.5e-2") into an
/// exact rational. Throws std::invalid_argument on anything else.
Rational parse_rational(const std::string& text);

struct GaussianRational {
  Rational re;
  Rational im;
};

class Coefficient {
 public:
  /// Exact zero.
  Coefficient() : value_(GaussianRational{}) {}

  static Coefficient exact(Rational re, Rational im = 0);
  static Coefficient floating(std::complex<double> value);
  static Coefficient from_int(long value, Mode mode);
  static Coefficient zero(Mode mode) { return from_int(0, mode); }
  static Coefficient one(Mode mode) { return from_int(1, mode); }
  /// p/q in the requested mode.
  static Coefficient ratio(long p, long q, Mode mode);

  Mode mode() const { return value_.index() == 0 ? Mode::exact : Mode::floating; }
  bool is_exact() const { return mode() == Mode::exact; }
  bool is_zero() const;
  bool is_real() const;

  /// Rational parts; throw ModeMismatch in FLOAT mode.
  const Rational& exact_re() const;
  const Rational& exact_im() const;

  std::complex<double> to_complex() const;
  double abs() const { return std::abs(to_complex()); }

  Coefficient conj() const;
  Coefficient to_mode(Mode target) const;

  Coefficient& operator+=(const Coefficient& rhs);
  Coefficient& operator-=(const Coefficient& rhs);
  Coefficient& operator*=(const Coefficient& rhs);
  Coefficient& operator/=(const Coefficient& rhs);

  friend Coefficient operator+(Coefficient lhs, const Coefficient& rhs) { return lhs += rhs; }
  friend Coefficient operator-(Coefficient lhs, const Coefficient& rhs) { return lhs -= rhs; }
  friend Coefficient operator*(Coefficient lhs, const Coefficient& rhs) { return lhs *= rhs; }
  friend Coefficient operator/(Coefficient lhs, const Coefficient& rhs) { return lhs /= rhs; }
  Coefficient operator-() const;

  /// Exact structural equality: EXACT compares rationals, FLOAT compares the
  /// doubles bit-for-bit. Mixed modes compare unequal.
  friend bool operator==(const Coefficient& a, const Coefficient& b);

  /// "p/q" style in EXACT mode ("3", "-1/2", "1+2i", "-i/4" ...), %.17g in FLOAT.
  std::string to_string() const;

 private:
  explicit Coefficient(std::variant<GaussianRational, std::complex<double>> v)
      : value_(std::move(v)) {}
  void require_same_mode(const Coefficient& rhs, const char* op) const;

  std::variant<GaussianRational, std::complex<double>> value_;
};

Coefficient pow(const Coefficient& base, unsigned exponent);

/// n! as an exact integer.
Rational factorial(unsigned n);
Rational binomial(unsigned n, unsigned k);

}  // namespace gchp
