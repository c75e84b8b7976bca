#include "gchp/special_functions.hpp"

#include <algorithm>
#include <cmath>

namespace gchp {

namespace {

bool is_nonpositive_integer(double v) { return v <= 0.0 && std::floor(v) == v; }

std::complex<double> kummer_series(double a, double c, std::complex<double> x) {
  std::complex<double> term = 1.0;
  std::complex<double> sum = 1.0;
  for (int k = 0; k < 100000; ++k) {
    term *= (a + k) / (c + k) * x / static_cast<double>(k + 1);
    sum += term;
    if (std::abs(term) <= 1e-16 * std::abs(sum)) return sum;
    if (term == 0.0) return sum;
  }
  throw ConvergenceError("1F1 series did not converge within 1e5 terms");
}

struct Pieces {
  unsigned lo;
  unsigned hi;
  Coefficient z_power;  // z^{max-n} w^{max-m}
  Coefficient arg;      // z w
};

Pieces common_pieces(unsigned m, unsigned n, const Params& params, const Coefficient& z) {
  const Mode mode = params.mode();
  if (z.mode() != mode) throw ModeMismatch("evaluation point and params modes differ");
  const Coefficient w = params.nu() * z.conj() + Coefficient::ratio(1, 2, mode) * params.xi_conj();
  const unsigned lo = std::min(m, n);
  const unsigned hi = std::max(m, n);
  return {lo, hi, pow(z, hi - n) * pow(w, hi - m), z * w};
}

Coefficient signed_factorial(unsigned k, unsigned sign_index, Mode mode) {
  const Rational f = factorial(k);
  Coefficient c = mode == Mode::exact ? Coefficient::exact(f) : Coefficient::floating(f.get_d());
  return sign_index % 2 == 1 ? -c : c;
}

}  // namespace

std::complex<double> hyp1f1(const HypergeometricArgs& args) {
  if (is_nonpositive_integer(args.c)) throw std::domain_error("1F1: c is a nonpositive integer");
  if (args.x == 0.0) return 1.0;
  if (is_nonpositive_integer(args.a)) {
    std::complex<double> term = 1.0;
    std::complex<double> sum = 1.0;
    const int s = static_cast<int>(-args.a);
    for (int k = 0; k < s; ++k) {
      term *= (args.a + k) / (args.c + k) * args.x / static_cast<double>(k + 1);
      sum += term;
    }
    return sum;
  }
  if (args.x.imag() == 0.0 && args.x.real() < 0.0)
    return std::exp(args.x) * kummer_series(args.c - args.a, args.c, -args.x);
  return kummer_series(args.a, args.c, args.x);
}

double hyp1f1(double a, double c, double x) { return hyp1f1(HypergeometricArgs{a, c, x}).real(); }

Coefficient gchp_via_laguerre(unsigned m, unsigned n, const Params& params, const Coefficient& z) {
  const Pieces p = common_pieces(m, n, params, z);
  return signed_factorial(p.lo, p.lo, params.mode()) * p.z_power *
         laguerre(p.lo, p.hi - p.lo, p.arg);
}

Coefficient gchp_via_1f1(unsigned m, unsigned n, const Params& params, const Coefficient& z,
                         HyperPrefactor prefactor) {
  const Mode mode = params.mode();
  const Pieces p = common_pieces(m, n, params, z);
  const unsigned d = p.hi - p.lo;
  const Rational ratio =
      factorial(prefactor == HyperPrefactor::corrected ? p.hi : p.lo) / factorial(d);
  Coefficient scale = mode == Mode::exact ? Coefficient::exact(ratio)
                                          : Coefficient::floating(ratio.get_d());
  if (p.lo % 2 == 1) scale = -scale;
  return scale * p.z_power * hyp1f1_terminating(p.lo, d + 1, p.arg);
}

}  // namespace gchp
