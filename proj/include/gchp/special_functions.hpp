#pragma once

// Generalized Laguerre polynomials and the confluent hypergeometric function
// 1F1(a; c; x), plus the two point-evaluation forms of G_nu^{m,n} built on them.

#include <complex>
#include <stdexcept>

#include "gchp/coefficient.hpp"
#include "gchp/params.hpp"

namespace gchp {

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

template <typename T>
T lift(long value, const T& /*like*/) {
  return T(static_cast<double>(value));
}

template <>
inline Coefficient lift<Coefficient>(long value, const Coefficient& like) {
  return Coefficient::from_int(value, like.mode());
}

}  // namespace detail

/// L_s^alpha(x) by the three-term recurrence in s. Works for double,
/// std::complex<double> and Coefficient (exact when x is exact).
template <typename T>
T laguerre(unsigned s, unsigned alpha, const T& x) {
  using detail::lift;
  const long a = static_cast<long>(alpha);
  T prev = lift(1, x);
  if (s == 0) return prev;
  T curr = lift(1 + a, x) - x;
  for (unsigned k = 1; k < s; ++k) {
    const long kk = static_cast<long>(k);
    T next = ((lift(2 * kk + 1 + a, x) - x) * curr - lift(kk + a, x) * prev) / lift(kk + 1, x);
    prev = std::move(curr);
    curr = std::move(next);
  }
  return curr;
}

/// Terminating Kummer series 1F1(-s; c; x) = sum_{k<=s} (-s)_k/(c)_k x^k/k!,
/// c a positive integer. Exact for exact x.
template <typename T>
T hyp1f1_terminating(unsigned s, unsigned c, const T& x) {
  using detail::lift;
  if (c == 0) throw std::domain_error("1F1: c must not be a nonpositive integer");
  T term = lift(1, x);
  T sum = term;
  for (unsigned k = 0; k < s; ++k) {
    const long kk = static_cast<long>(k);
    // term_{k+1} = term_k * (k - s) / ((c + k)(k + 1)) * x
    term = term * lift(kk - static_cast<long>(s), x) * x /
           lift((static_cast<long>(c) + kk) * (kk + 1), x);
    sum = sum + term;
  }
  return sum;
}

struct HypergeometricArgs {
  double a = 0.0;
  double c = 1.0;
  std::complex<double> x = 0.0;
};

/// Kummer's function in double precision. Nonpositive-integer a terminates;
/// otherwise the direct series runs with term-ratio stopping at relative
/// 1e-16, and for real negative x the Kummer transform
/// e^x 1F1(c-a; c; -x) is used. Throws std::domain_error for nonpositive
/// integer c and ConvergenceError past 1e5 terms.
std::complex<double> hyp1f1(const HypergeometricArgs& args);
double hyp1f1(double a, double c, double x);

enum class HyperPrefactor {
  corrected,  // (-1)^{min} max! / |m-n|!
  printed,    // (-1)^{min} min! / |m-n|!
};

/// (-1)^{min} min! z^{max-n} w^{max-m} L_{min}^{|m-n|}(z w), w = nu z* + conj(xi)/2.
Coefficient gchp_via_laguerre(unsigned m, unsigned n, const Params& params, const Coefficient& z);

/// prefactor * z^{max-n} w^{max-m} 1F1(-min; |m-n|+1; z w).
Coefficient gchp_via_1f1(unsigned m, unsigned n, const Params& params, const Coefficient& z,
                         HyperPrefactor prefactor = HyperPrefactor::corrected);

}  // namespace gchp
