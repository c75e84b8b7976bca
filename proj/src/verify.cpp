#include "gchp/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "gchp/constructors.hpp"
#include "gchp/identities.hpp"
#include "gchp/inner_products.hpp"
#include "gchp/special_functions.hpp"
#include "gchp/weighted.hpp"

namespace gchp {

const char* to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::passed: return "VERIFIED";
    case CheckStatus::erratum: return "ERRATUM";
    case CheckStatus::failed: return "FAILED";
  }
  return "?";
}

bool VerifyReport::passed() const { return count(CheckStatus::failed) == 0; }

std::size_t VerifyReport::count(CheckStatus status) const {
  return static_cast<std::size_t>(std::count_if(
      checks.begin(), checks.end(), [status](const CheckResult& c) { return c.status == status; }));
}

std::vector<Params> default_params_set(Mode mode) {
  std::vector<Params> out{Params::exact(1), Params::exact(1, 2), Params::exact(2, 1, 1),
                          Params::exact(Rational(1, 4), 0, -1), Params::exact(Rational(1, 2), 0, -1),
                          Params::exact(4, 1, 1)};
  for (auto& p : out) p = p.to_mode(mode);
  return out;
}

namespace {

const std::string sign_erratum =
    "binomial Hermite sums: the (-1)^min(m,n) factor must be dropped";
const std::string prefactor_erratum =
    "1F1 representation: the prefactor min!/|m-n|! must read max!/|m-n|!";

constexpr double inner_tolerance = 1e-9;

/// Collects residuals of one check and remembers the first offending case.
class Tracker {
 public:
  explicit Tracker(double tol) : tol_(tol) {}

  void poly(const BiPoly& a, const BiPoly& b, const std::string& where) {
    if (a.mode() == Mode::exact && b.mode() == Mode::exact) {
      if (a == b) return;
      record(std::max(relative_difference(a, b), 1e-300), true, where);
      return;
    }
    const double r = relative_difference(a, b);
    record(r, r > tol_, where);
  }

  /// p must vanish; in FLOAT mode relative to the magnitude of the terms that produced it.
  void zero(const BiPoly& p, double scale, const std::string& where) {
    if (p.mode() == Mode::exact) {
      poly(p, BiPoly(p.mode()), where);
      return;
    }
    const double r = p.max_abs() / std::max(scale, 1e-300);
    record(r, r > tol_, where);
  }

  void value(double r, const std::string& where) { record(r, !(r <= tol_), where); }

  void value(double r, double tol, const std::string& where) { record(r, !(r <= tol), where); }

  void truth(bool ok, const std::string& where) { record(ok ? 0.0 : 1.0, !ok, where); }

  bool failed() const { return failed_; }

  CheckResult finish(std::string name) const {
    CheckResult out;
    out.name = std::move(name);
    out.residual = worst_;
    out.status = failed_ ? CheckStatus::failed : CheckStatus::passed;
    if (failed_) out.note = "first failure at " + first_failure_;
    return out;
  }

 private:
  void record(double r, bool bad, const std::string& where) {
    worst_ = std::max(worst_, std::isnan(r) ? INFINITY : r);
    if (bad && !failed_) {
      failed_ = true;
      first_failure_ = where;
    }
  }

  double tol_;
  double worst_ = 0.0;
  bool failed_ = false;
  std::string first_failure_;
};

std::string at(unsigned m, unsigned n) {
  return "(" + std::to_string(m) + "," + std::to_string(n) + ")";
}

std::string at(unsigned m, unsigned n, unsigned j, unsigned k) {
  return "(" + std::to_string(m) + "," + std::to_string(n) + ";" + std::to_string(j) + "," +
         std::to_string(k) + ")";
}

double rel(std::complex<double> a, std::complex<double> b, double scale) {
  return std::abs(a - b) / std::max(scale, 1e-300);
}

double rel(std::complex<double> a, std::complex<double> b) {
  return rel(a, b, std::max(std::abs(a), std::abs(b)));
}

/// sum |p_jk| r^{j+k}: the natural magnitude for relative evaluation errors.
double abs_eval(const BiPoly& p, double r) {
  double total = 0.0;
  for (std::size_t j = 0; j < p.rows(); ++j)
    for (std::size_t k = 0; k < p.cols(); ++k)
      total += p.at(j, k).abs() * std::pow(r, static_cast<double>(j + k));
  return total;
}

BiPoly w_poly(const Params& p) { return p.shifted_zbar(); }

BiPoly random_poly(std::mt19937_64& rng, unsigned deg, Mode mode) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  BiPoly out(mode);
  for (unsigned j = 0; j <= deg; ++j)
    for (unsigned k = 0; k <= deg; ++k) {
      Rational re(num(rng), den(rng));
      Rational im(num(rng), den(rng));
      re.canonicalize();
      im.canonicalize();
      out += BiPoly::monomial(j, k, Coefficient::exact(re, im).to_mode(mode));
    }
  return out;
}

struct Context {
  const VerifyOptions& options;
  unsigned D;
  double tol;
};

using CheckFn = std::function<CheckResult()>;
struct Check {
  std::string name;
  CheckFn run;
};

// construction -----------------------------------------------------------

CheckResult check_routes(const Context& c, const Params& p, const std::string& name) {
  Tracker t(c.tol);
  for (unsigned m = 0; m <= c.D; ++m)
    for (unsigned n = 0; n <= c.D; ++n) {
      BiPoly series = gchp(m, n, p, Route::series);
      if (c.options.corrupt && m == 1 && n == 1)
        series += BiPoly::constant(Coefficient::one(p.mode()));
      for (Route r : all_routes) {
        if (r == Route::series) continue;
        t.poly(series, gchp(m, n, p, r), std::string(to_string(r)) + at(m, n));
      }
      t.poly(series, gchp_recursion(m, n, p, RecursionOrder::n_first), "recursion_n_first" + at(m, n));
    }
  return t.finish(name);
}

CheckResult check_degree(const Context& c, const Params& p, const std::string& name) {
  Tracker t(c.tol);
  for (unsigned m = 0; m <= c.D; ++m)
    for (unsigned n = 0; n <= c.D; ++n) {
      const BiPoly g = gchp(m, n, p);
      t.truth(g.deg_z() == m && g.deg_zbar() == n, "degree" + at(m, n));
      t.truth(g.at(m, n) == pow(p.nu(), n), "leading" + at(m, n));
    }
  return t.finish(name);
}

CheckResult check_recursions(const Context& c, const Params& p, const std::string& name) {
  Tracker t(c.tol);
  const Mode mode = p.mode();
  const BiPoly z = BiPoly::z(mode);
  const BiPoly w = w_poly(p);
  for (unsigned m = 0; m < c.D; ++m)
    for (unsigned n = 0; n < c.D; ++n) {
      const BiPoly lhs = Coefficient::from_int(long(m) - long(n), mode) * gchp(m, n, p);
      const BiPoly rhs = w * gchp(m + 1, n, p) - z * gchp(m, n + 1, p);
      t.poly(lhs, rhs, "mixed" + at(m, n));
    }
  for (unsigned m = 0; m < c.D; ++m)
    t.poly(z * gchp(m, m + 1, p), w * gchp(m + 1, m, p), "corollary" + at(m, m + 1));
  return t.finish(name);
}

CheckResult check_differential_equations(const Context& c, const Params& p,
                                         const std::string& name) {
  Tracker t(c.tol);
  const Mode mode = p.mode();
  const BiPoly z = BiPoly::z(mode);
  const BiPoly w = w_poly(p);
  const Coefficient& nu = p.nu();
  for (unsigned m = 0; m <= c.D; ++m)
    for (unsigned n = 0; n <= c.D; ++n) {
      const BiPoly g = gchp(m, n, p);
      const BiPoly gz = d_dz(g);
      const BiPoly gzb = d_dzbar(g);
      const BiPoly mixed = d_dz(gzb);
      const Coefficient mm = Coefficient::from_int(m, mode);
      const Coefficient nn = Coefficient::from_int(n, mode);
      const BiPoly zgz = nu * (z * gz);
      const BiPoly wgzb = w * gzb;
      const double scale = std::max({mixed.max_abs(), zgz.max_abs(), wgzb.max_abs(),
                                     (nu * mm).abs() * g.max_abs(), (nu * nn).abs() * g.max_abs()});
      t.zero(-mixed + zgz - (nu * mm) * g, scale, "second_order_z" + at(m, n));
      t.zero(-mixed + wgzb - (nu * nn) * g, scale, "second_order_zbar" + at(m, n));
      t.zero(zgz - wgzb - (nu * (mm - nn)) * g, scale, "first_order" + at(m, n));
    }
  return t.finish(name);
}

CheckResult check_partials(const Context& c, const Params& p, const std::string& name) {
  Tracker t(c.tol);
  const Mode mode = p.mode();
  const unsigned D = std::min(c.D, 6u);
  for (unsigned m = 0; m <= D; ++m)
    for (unsigned n = 0; n <= D; ++n) {
      const GchpPartials d = gchp_partials(m, n, p);
      t.poly(d.dz, d_dz(gchp(m, n, p)), "dz" + at(m, n));
      t.poly(d.dzbar, d_dzbar(gchp(m, n, p)), "dzbar" + at(m, n));
      const BiPoly expected = n == 0 ? BiPoly(mode)
                                     : Coefficient::ratio(n, 2, mode) * gchp(m, n - 1, p);
      t.poly(d.dxibar, expected, "dxibar" + at(m, n));
    }
  return t.finish(name);
}

CheckResult check_hermite_numbers(const Context& c, const Params& p, const std::string& name) {
  Tracker t(c.tol);
  const Coefficient zero = Coefficient::zero(p.mode());
  for (unsigned m = 0; m <= c.D; ++m)
    for (unsigned n = 0; n <= c.D; ++n) {
      const Coefficient h = hermite_number(m, n, p);
      const Coefficient e = eval(gchp(m, n, p), zero);
      t.poly(BiPoly::constant(h), BiPoly::constant(e), "constant_term" + at(m, n));
    }
  return t.finish(name);
}

CheckResult check_generating_function(const Context& c, const Params& p, const std::string& name) {
  Tracker t(c.tol);
  const auto grid = genfun_coefficients(p, c.D, c.D);
  for (unsigned m = 0; m <= c.D; ++m)
    for (unsigned n = 0; n <= c.D; ++n) t.poly(grid[m][n], gchp(m, n, p), "coefficient" + at(m, n));
  return t.finish(name);
}

CheckResult check_dattoli(const Context& c, const Params& p, const std::string& name) {
  Tracker t(c.tol);
  const Mode mode = p.mode();
  const Coefficient minus_one = Coefficient::from_int(-1, mode);
  for (unsigned m = 0; m <= c.D; ++m)
    for (unsigned n = 0; n <= c.D; ++n) {
      const BiPoly h = dattoli_h(m, n, minus_one).substitute(BiPoly::z(mode), w_poly(p));
      t.poly(h, gchp(m, n, p), "substitution" + at(m, n));
    }
  return t.finish(name);
}

CheckResult check_reduction(const Context& c) {
  Tracker t(c.tol);
  const Params p = Params::exact(1).to_mode(c.options.mode);
  const Coefficient minus_one = Coefficient::from_int(-1, p.mode());
  for (unsigned m = 0; m <= c.D; ++m)
    for (unsigned n = 0; n <= c.D; ++n) {
      const BiPoly h = complex_hermite(m, n, p.mode());
      t.poly(gchp(m, n, p), h, "G_1(.|0)" + at(m, n));
      t.poly(dattoli_h(m, n, minus_one), h, "h(.|-1)" + at(m, n));
    }
  return t.finish("construction/reduction_to_complex_hermite");
}

// calculus ---------------------------------------------------------------

CheckResult check_eigenfunctions(const Context& c, const Params& p, const std::string& name) {
  Tracker t(c.tol);
  const unsigned D = std::min(c.D, 6u);
  for (unsigned m = 0; m <= D; ++m)
    for (unsigned n = 0; n <= D; ++n) {
      const WeightedPoly g = eigenfunction(p, m, n);
      const double scale = apply_L(p, g).poly.max_abs() + p.nu_value() * (n + 1) * g.poly.max_abs();
      t.zero(eigen_residual(p, m, n), scale, "landau_level" + at(m, n));
      t.poly(g.poly, gchp(m, n, p), "polynomial_part" + at(m, n));
      t.truth(g.exponent == GaussExponent::eigen_weight(p), "exponent" + at(m, n));
    }
  return t.finish(name);
}

CheckResult check_ladder(const Context& c, const Params& p, const std::string& name) {
  Tracker t(c.tol);
  const Mode mode = p.mode();
  const Coefficient half_nu = Coefficient::ratio(1, 2, mode) * p.nu();
  std::mt19937_64 rng(7);
  const unsigned deg = std::min(c.D, 4u);
  for (unsigned trial = 0; trial < 4; ++trial) {
    const WeightedPoly f{random_poly(rng, deg, mode), GaussExponent::eigen_weight(p)};
    const WeightedPoly Lf = apply_L(p, f);
    const WeightedPoly aas = apply_A(p, apply_A_star(p, f));
    const WeightedPoly asa = apply_A_star(p, apply_A(p, f));
    const double scale = std::max({aas.poly.max_abs(), asa.poly.max_abs(), Lf.poly.max_abs(),
                                   half_nu.abs() * f.poly.max_abs()});
    t.zero((aas - Lf - half_nu * f).poly, scale, "A_A*" + std::to_string(trial));
    t.zero((asa - Lf + half_nu * f).poly, scale, "A*_A" + std::to_string(trial));
    t.truth(Lf.exponent == f.exponent, "closure" + std::to_string(trial));
  }
  for (unsigned m = 0; m <= c.D; ++m) {
    const WeightedPoly psi = ground_state(p, m);
    const double scale = std::max(1.0, p.nu_value() + std::abs(p.xi_value()));
    t.zero(apply_A(p, psi).poly, scale, "annihilates_ground_state" + at(m, 0));
  }
  return t.finish(name);
}

CheckResult check_conjugation_form(const Context& c, const Params& p, const std::string& name) {
  Tracker t(c.tol);
  const unsigned D = std::min(c.D, 5u);
  for (unsigned m = 0; m <= D; ++m)
    for (unsigned n = 0; n <= D; ++n) {
      const WeightedPoly viaconj = apply_A_star_power_conjugated(p, ground_state(p, m), n);
      const WeightedPoly iterated = eigenfunction(p, m, n);
      t.poly(viaconj.poly, iterated.poly, "power" + at(m, n));
      t.truth(viaconj.exponent == iterated.exponent, "exponent" + at(m, n));
    }
  return t.finish(name);
}

// special functions ------------------------------------------------------

CheckResult check_closed_forms(const Context& c, const Params& given, const std::string& name) {
  Tracker t(c.tol);
  const Params p = given.to_mode(Mode::floating);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> radius(0.0, 2.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  for (unsigned m = 0; m <= c.D; ++m)
    for (unsigned n = 0; n <= c.D; ++n) {
      const BiPoly g = gchp(m, n, p);
      for (int i = 0; i < 100; ++i) {
        const std::complex<double> zv = std::polar(radius(rng), angle(rng));
        const Coefficient z = Coefficient::floating(zv);
        const std::complex<double> ref = eval(g, zv);
        const double scale = std::max(abs_eval(g, std::abs(zv)), 1e-300);
        t.value(rel(gchp_via_laguerre(m, n, p, z).to_complex(), ref, scale), "laguerre" + at(m, n));
        t.value(rel(gchp_via_1f1(m, n, p, z).to_complex(), ref, scale), "kummer" + at(m, n));
      }
    }
  // exact evaluation at Gaussian-rational points
  if (given.mode() == Mode::exact) {
    const Coefficient points[] = {Coefficient::exact(Rational(1, 2), Rational(-1, 3)),
                                  Coefficient::exact(Rational(-5, 4), Rational(2, 3))};
    for (unsigned m = 0; m <= c.D; ++m)
      for (unsigned n = 0; n <= c.D; ++n)
        for (const Coefficient& z : points) {
          const BiPoly ref = BiPoly::constant(eval(gchp(m, n, given), z));
          t.poly(BiPoly::constant(gchp_via_laguerre(m, n, given, z)), ref, "laguerre_exact" + at(m, n));
          t.poly(BiPoly::constant(gchp_via_1f1(m, n, given, z)), ref, "kummer_exact" + at(m, n));
        }
  }
  return t.finish(name);
}

CheckResult check_prefactor_erratum(const Context& c) {
  // the printed prefactor differs from the corrected one by min!/max!
  const Params p = Params::floating(1.0, 2.0);
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> coord(-1.5, 1.5);
  double printed = 0.0;
  double corrected = 0.0;
  const unsigned m = 2;
  const unsigned n = 1;
  const BiPoly g = gchp(m, n, p);
  for (int i = 0; i < 20; ++i) {
    const std::complex<double> zv(coord(rng), coord(rng));
    const std::complex<double> ref = eval(g, zv);
    if (std::abs(ref) < 1e-3) continue;
    const Coefficient z = Coefficient::floating(zv);
    printed = std::max(printed, rel(gchp_via_1f1(m, n, p, z, HyperPrefactor::printed).to_complex(), ref, std::abs(ref)));
    corrected = std::max(corrected, rel(gchp_via_1f1(m, n, p, z).to_complex(), ref, std::abs(ref)));
  }
  CheckResult out;
  out.name = "special/hypergeometric_prefactor";
  out.residual = corrected;
  std::ostringstream note;
  note << "printed prefactor at (m,n)=(2,1): relative residual " << printed
       << " (value off by a factor 2); corrected prefactor residual " << corrected;
  out.note = note.str();
  if (corrected > c.tol) {
    out.status = CheckStatus::failed;
  } else if (printed > c.tol) {
    out.status = CheckStatus::erratum;
    out.erratum = prefactor_erratum;
  } else {
    out.status = CheckStatus::failed;
    out.note += "; the printed form unexpectedly holds";
  }
  return out;
}

CheckResult check_laguerre_kummer(const Context& c) {
  Tracker t(c.tol);
  const Coefficient xs[] = {Coefficient::exact(Rational(3, 7)), Coefficient::exact(Rational(-5, 2), Rational(1, 3))};
  const unsigned S = std::max(c.D, 1u) + 2;
  for (unsigned s = 0; s <= S; ++s)
    for (unsigned a = 0; a <= S; ++a)
      for (const Coefficient& x0 : xs) {
        const Coefficient x = x0.to_mode(c.options.mode);
        const Rational scale = factorial(s + a) / (factorial(s) * factorial(a));
        const Coefficient lhs = hyp1f1_terminating(s, a + 1, x) * Coefficient::exact(scale).to_mode(x.mode());
        t.poly(BiPoly::constant(lhs), BiPoly::constant(laguerre(s, a, x)), "L" + at(s, a));
      }
  return t.finish("special/laguerre_kummer_link");
}

// inner products ---------------------------------------------------------

CheckResult check_norms(const Context& c, const Params& p, const std::string& name) {
  Tracker t(inner_tolerance);
  const unsigned D = std::min(c.D, 5u);
  const double nu = p.nu_value();
  for (unsigned m = 0; m <= D; ++m)
    for (unsigned n = 0; n <= D; ++n) {
      const BiPoly g = gchp(m, n, p);
      const double closed = gchp_norm_sq(m, n, p);
      const std::complex<double> exact = inner_product_exact(g, g, p);
      const std::complex<double> quad = inner_product_quad(g, g, p);
      t.value(rel(exact, closed), "closed_form" + at(m, n));
      t.value(rel(quad, closed), "quadrature" + at(m, n));
      if (p.xi_is_zero() && p.nu_value() == 1.0) {
        const double hermite = factorial(m).get_d() * factorial(n).get_d() * std::numbers::pi;
        t.value(rel(exact, hermite), 1e-12, "hermite_norm" + at(m, n));
      }
      if (n < D) {
        const double ladder = nu * (n + 1) * closed;
        t.value(rel(gchp_norm_sq(m, n + 1, p), ladder), 1e-12, "ladder" + at(m, n));
      }
    }
  return t.finish(name);
}

CheckResult check_weak_orthogonality(const Context& c, const Params& p, const std::string& name) {
  Tracker t(c.tol);
  const unsigned D = std::min(c.D, 4u);
  for (unsigned m = 0; m <= D; ++m)
    for (unsigned n = 0; n <= D; ++n)
      for (unsigned j = 0; j <= D; ++j)
        for (unsigned k = 0; k <= D; ++k) {
          if (n == k) continue;
          t.value(weak_orthogonality_check(m, n, j, k, p), at(m, n, j, k));
        }
  return t.finish(name);
}

CheckResult check_three_methods(const Context& c, const Params& p, const std::string& name) {
  Tracker t(inner_tolerance);
  const unsigned D = std::min(c.D, 6u);
  auto compare = [&](unsigned m, unsigned n, unsigned j, unsigned k) {
    const BiPoly f = gchp(m, n, p);
    const BiPoly g = gchp(j, k, p);
    const InnerProductReport r = inner_product_report(f, g, p);
    const double scale = std::sqrt(gchp_norm_sq(m, n, p) * gchp_norm_sq(j, k, p));
    t.value(r.max_delta / scale, at(m, n, j, k));
  };
  const unsigned all_pairs = std::min(D, 3u);
  for (unsigned m = 0; m <= all_pairs; ++m)
    for (unsigned n = 0; n <= all_pairs; ++n)
      for (unsigned j = 0; j <= all_pairs; ++j)
        for (unsigned k = 0; k <= all_pairs; ++k) compare(m, n, j, k);
  for (unsigned m = 0; m <= D; ++m)
    for (unsigned n = 0; n <= D; ++n) {
      if (m <= all_pairs && n <= all_pairs) continue;
      compare(m, n, m, n);
      compare(m, n, n, m);
      compare(m, n, 0, 0);
      if (m > 0) compare(m, n, m - 1, n);
    }
  return t.finish(name);
}

CheckResult check_moments(const Context& c, const Params& p, const std::string& name) {
  Tracker t(inner_tolerance);
  const unsigned D = std::min(c.D, 6u);
  const Mode mode = p.mode();
  const double scale = moment_scale(p);
  const double nu = p.nu_value();
  for (unsigned m = 0; m <= D; ++m)
    for (unsigned j = 0; j <= D; ++j) {
      const BiPoly zm = BiPoly::monomial(m, 0, Coefficient::one(mode));
      const BiPoly zj = BiPoly::monomial(j, 0, Coefficient::one(mode));
      const std::complex<double> closed = monomial_moment(m, j, p);
      const std::complex<double> quad = inner_product_quad(zm, zj, p);
      // Cauchy-Schwarz scale: sqrt(<z^m,z^m> <z^j,z^j>)
      const double cs = std::sqrt(std::abs(monomial_moment(m, m, p)) * std::abs(monomial_moment(j, j, p)));
      t.value(rel(closed, quad, cs), "quadrature" + at(m, j));
      t.value(rel(closed, scale * monomial_moment_reduced(m, j, p).to_complex(), cs),
              "exact_reduction" + at(m, j));
      if (p.xi_is_zero() && m == j) {
        const double diag = std::numbers::pi * factorial(m).get_d() / std::pow(nu, m + 1.0);
        t.value(rel(closed, diag), 1e-12, "gaussian_diagonal" + at(m, j));
      }
    }
  return t.finish(name);
}

CheckResult check_cross(const Context& c, const Params& p, const std::string& name) {
  Tracker t(inner_tolerance);
  const unsigned D = std::min(c.D, 4u);
  const double nu = p.nu_value();
  for (unsigned m = 1; m <= D; ++m)
    for (unsigned n = 0; n <= D; ++n) {
      const std::complex<double> closed = cross_inner(m, n, p);
      const std::complex<double> exact = inner_product_exact(gchp(m, n, p), gchp(m - 1, n, p), p);
      const double scale = std::sqrt(gchp_norm_sq(m, n, p) * gchp_norm_sq(m - 1, n, p));
      t.value(rel(closed, exact, scale), "expansion" + at(m, n));
      // conj(xi)/2 <G^{m,n},G^{m-1,n}> = nu^n n! (m ||G^{m-1,0}||^2 - nu ||G^{m,0}||^2)
      const std::complex<double> lhs = std::conj(p.xi_value()) / 2.0 * closed;
      const double rhs = std::pow(nu, n) * factorial(n).get_d() *
                         (m * gchp_norm_sq(m - 1, 0, p) - nu * gchp_norm_sq(m, 0, p));
      t.value(rel(lhs, rhs, std::abs(p.xi_value()) * scale + (p.xi_is_zero() ? 1.0 : 0.0)),
              "norm_difference" + at(m, n));
    }
  return t.finish(name);
}

CheckResult check_inner_identities(const Context& c, const Params& p, const std::string& name) {
  Tracker t(inner_tolerance);
  const Mode mode = p.mode();
  const unsigned D = std::min(c.D, 4u);
  const BiPoly z = BiPoly::z(mode);
  auto ip = [&](const BiPoly& f, const BiPoly& g) { return inner_product_reduced(f, g, p); };
  auto norm = [&](const BiPoly& f) { return std::sqrt(ip(f, f).abs()); };
  // exact equality in EXACT mode, otherwise relative to ||f|| ||g|| of the pairing
  auto same = [&](const Coefficient& a, const Coefficient& b, double scale, const std::string& where) {
    if (a.is_exact() && b.is_exact()) {
      t.truth(a == b, where);
      return;
    }
    t.value(rel(a.to_complex(), b.to_complex(), scale), where);
  };
  for (unsigned m = 0; m <= D; ++m)
    for (unsigned n = 0; n <= D; ++n)
      for (unsigned j = 0; j <= D; ++j) {
        const BiPoly zg = z * gchp(m, n, p);
        const BiPoly zg1 = z * gchp(m, n + 1, p);
        const double nzg = norm(zg);
        for (unsigned k = 0; k <= D; ++k)
          if (k != n && k + 1 != n)
            same(ip(zg, gchp(j, k, p)), Coefficient::zero(mode), nzg * norm(gchp(j, k, p)),
                 "z_vanishing" + at(m, n, j, k));
        same(ip(zg, gchp(j, n, p)), ip(gchp(m + 1, n, p), gchp(j, n, p)), nzg * norm(gchp(j, n, p)),
             "z_raise" + at(m, n, j, n));
        same(ip(zg1, gchp(j, n, p)),
             Coefficient::from_int(n + 1, mode) * ip(gchp(m, n, p), gchp(j, n, p)),
             norm(zg1) * norm(gchp(j, n, p)), "z_lower" + at(m, n + 1, j, n));
        same(p.nu() * Coefficient::from_int(n + 1, mode) * ip(gchp(m, n, p), gchp(j, n, p)),
             ip(gchp(m, n + 1, p), gchp(j, n + 1, p)),
             norm(gchp(m, n + 1, p)) * norm(gchp(j, n + 1, p)), "second_index_ladder" + at(m, n, j, n));
      }
  // sesquilinearity
  std::mt19937_64 rng(17);
  const Coefficient alpha = Coefficient::exact(Rational(2, 3), Rational(-1, 2)).to_mode(mode);
  for (int trial = 0; trial < 3; ++trial) {
    const BiPoly f = random_poly(rng, 2, mode);
    const BiPoly g = random_poly(rng, 2, mode);
    const BiPoly h = random_poly(rng, 2, mode);
    const double scale = (norm(f) + norm(g)) * norm(h) * 2.0;
    same(ip(alpha * f + g, h), alpha * ip(f, h) + ip(g, h), scale, "linear_first");
    same(ip(f, alpha * g), alpha.conj() * ip(f, g), scale, "antilinear_second");
  }
  return t.finish(name);
}

CheckResult check_orthogonality_iff(const Context& c, const Params& p, const std::string& name) {
  Tracker t(c.tol);
  const unsigned budget = std::max(1u, std::min(c.D, 3u));
  t.truth(orthogonality_iff_xi_zero(p, budget) == !p.xi_is_zero(), "budget " + std::to_string(budget));
  return t.finish(name);
}

CheckResult check_witness(const Context& c) {
  Tracker t(c.tol);
  const Params p = Params::exact(1, 2).to_mode(c.options.mode);
  const BiPoly g10 = gchp(1, 0, p);
  const BiPoly g00 = gchp(0, 0, p);
  const double expected = -std::numbers::pi * std::numbers::e;
  t.value(rel(inner_product_exact(g10, g00, p), expected), "expansion");
  t.value(rel(inner_product_quad(g10, g00, p), expected), "quadrature");
  t.value(rel(cross_inner(1, 0, p), expected), "closed_form");
  return t.finish("inner/non_orthogonality_witness");
}

// identities and matrices -------------------------------------------------

CheckResult aggregate(std::string name, const std::vector<IdentityResult>& results,
                      const std::string& erratum) {
  CheckResult out;
  out.name = std::move(name);
  out.status = CheckStatus::passed;
  std::string printed_failure;
  for (const IdentityResult& r : results) {
    out.residual = std::max(out.residual, r.corrected_residual);
    if (r.status == IdentityStatus::failed) {
      if (out.status != CheckStatus::failed) out.note = r.name + ": " + r.note;
      out.status = CheckStatus::failed;
    } else if (r.status == IdentityStatus::erratum) {
      if (out.status == CheckStatus::passed) out.status = CheckStatus::erratum;
      if (printed_failure.empty()) {
        std::ostringstream s;
        s << "quoted form fails first at " << r.name << " (residual " << r.printed_residual
          << "); corrected form holds " << (r.exact ? "exactly" : "numerically");
        printed_failure = s.str();
      }
    }
  }
  if (out.status == CheckStatus::erratum) {
    out.note = printed_failure;
    out.erratum = erratum;
  }
  return out;
}

CheckResult check_shift_sum(const Context& c, const Params& p, const std::string& name) {
  const unsigned D = std::min(c.D, 6u);
  std::vector<IdentityResult> results;
  for (unsigned m = 0; m <= D; ++m)
    for (unsigned n = 0; n <= D; ++n) results.push_back(verify_identity_2221(m, n, p));
  return aggregate(name, results, sign_erratum);
}

CheckResult check_unit_shift_sum(const Context& c) {
  const unsigned D = std::min(c.D, 6u);
  std::vector<IdentityResult> results;
  for (unsigned m = 0; m <= D; ++m)
    for (unsigned n = 0; n <= D; ++n) results.push_back(verify_identity_2222(m, n));
  return aggregate("identities/hermite_unit_shift_sum", results, sign_erratum);
}

CheckResult check_laguerre_identities(const Context& c, const Params& p, const std::string& name) {
  const unsigned D = std::min(c.D, 6u);
  std::vector<IdentityResult> results;
  for (unsigned m = 0; m <= D; ++m)
    for (unsigned n = 0; n <= D; ++n)
      for (IdentityResult& r : verify_laguerre_identities(m, n, p)) results.push_back(std::move(r));
  return aggregate(name, results, "");
}

BiPoly integer_grid(std::initializer_list<std::initializer_list<long>> rows, Mode mode) {
  BiPoly::Grid grid;
  for (const auto& row : rows) {
    auto& out = grid.emplace_back();
    for (long v : row) out.push_back(Coefficient::from_int(v, mode));
  }
  return BiPoly::from_grid(grid, mode);
}

CheckResult check_reference_tables(const Context& c) {
  Tracker t(c.tol);
  const Mode mode = c.options.mode;
  const Params p = Params::exact(1, 2).to_mode(mode);
  const BiPoly g_tables[] = {
      integer_grid({{1}}, mode),
      integer_grid({{-1, 0}, {1, 1}}, mode),
      integer_grid({{2, 0, 0}, {-4, -4, 0}, {1, 2, 1}}, mode),
      integer_grid({{-6, 0, 0, 0}, {18, 18, 0, 0}, {-9, -18, -9, 0}, {1, 3, 3, 1}}, mode)};
  const BiPoly h_tables[] = {
      integer_grid({{1}}, mode),
      integer_grid({{-1, 0}, {0, 1}}, mode),
      integer_grid({{2, 0, 0}, {0, -4, 0}, {0, 0, 1}}, mode),
      integer_grid({{-6, 0, 0, 0}, {0, 18, 0, 0}, {0, 0, -9, 0}, {0, 0, 0, 1}}, mode)};
  for (unsigned m = 0; m <= std::min(c.D, 3u); ++m) {
    for (Route r : all_routes) t.poly(gchp(m, m, p, r), g_tables[m], std::string("G_table_") + to_string(r) + at(m, m));
    t.poly(complex_hermite(m, m, mode), h_tables[m], "H_table" + at(m, m));
    t.poly(gchp(m, m, p).diagonal(0), h_tables[m], "principal_diagonal" + at(m, m));
  }
  if (c.D >= 3) {
    const auto terms = diagonal_decomposition(3, p);
    const long multipliers[] = {1, 3, 3, 1};  // k = 3, 2, 1, 0
    for (std::size_t i = 0; i < terms.size(); ++i)
      t.truth(terms[i].scale == Coefficient::from_int(multipliers[i], mode),
              "multiplier k=" + std::to_string(terms[i].k));
  }
  return t.finish("matrix/reference_tables");
}

CheckResult check_diagonals(const Context& c, const Params& p, const std::string& name) {
  Tracker t(c.tol);
  const unsigned D = std::min(c.D, 6u);
  for (unsigned m = 0; m <= D; ++m) {
    const auto terms = diagonal_decomposition(m, p);  // throws on mismatch
    BiPoly sum(terms.front().diagonal.mode());
    for (const auto& term : terms) sum += term.diagonal;
    t.poly(sum, gchp(m, m, p).to_mode(sum.mode()), "diagonals_sum" + at(m, m));
    t.value(triangular_entry_residual(m, p), "entry_formula" + at(m, m));
  }
  return t.finish(name);
}

CheckResult check_drop_column(const Context& c, const Params& p, const std::string& name) {
  Tracker t(c.tol);
  const unsigned D = std::min(c.D, 6u);
  for (unsigned m = 0; m <= D; ++m)
    for (unsigned n = 1; n <= D; ++n)
      t.poly(drop_column_differentiate(m, n, p),
             Coefficient::ratio(n, 2, p.mode()) * gchp(m, n - 1, p), "prescription" + at(m, n));
  return t.finish(name);
}

CheckResult check_ring(const Context& c) {
  Tracker t(c.tol);
  const Mode mode = c.options.mode;
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  const unsigned deg = std::min(c.D, 3u);
  for (int trial = 0; trial < 5; ++trial) {
    const BiPoly a = random_poly(rng, deg, mode);
    const BiPoly b = random_poly(rng, deg, mode);
    const BiPoly d = random_poly(rng, deg, mode);
    t.poly((a + b) + d, a + (b + d), "associative_sum");
    t.poly(a * (b + d), a * b + a * d, "distributive");
    t.poly(d_dz(d_dzbar(a)), d_dzbar(d_dz(a)), "derivatives_commute");
    const std::complex<double> z(coord(rng), coord(rng));
    const std::complex<double> ab = eval(a * b, z);
    t.value(rel(ab, eval(a, z) * eval(b, z)), 1e-12, "eval_multiplicative");
  }
  return t.finish("core/ring_axioms");
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& options) {
  if (options.max_degree > max_verify_degree)
    throw std::invalid_argument("max degree must be at most " + std::to_string(max_verify_degree));
  if (!(options.tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");

  std::vector<Params> params = options.params_set;
  if (params.empty()) params = default_params_set(options.mode);
  for (auto& p : params) p = p.to_mode(options.mode);

  const Context ctx{options, options.max_degree, options.tolerance};
  std::vector<Check> checks;
  using PerParams = CheckResult (*)(const Context&, const Params&, const std::string&);
  const std::pair<const char*, PerParams> per_params[] = {
      {"construction/routes", check_routes},
      {"construction/degree", check_degree},
      {"construction/recursions", check_recursions},
      {"construction/differential_equations", check_differential_equations},
      {"construction/partials", check_partials},
      {"construction/hermite_numbers", check_hermite_numbers},
      {"construction/generating_function", check_generating_function},
      {"construction/dattoli_link", check_dattoli},
      {"calculus/eigenfunctions", check_eigenfunctions},
      {"calculus/ladder", check_ladder},
      {"calculus/conjugation_form", check_conjugation_form},
      {"special/closed_forms", check_closed_forms},
      {"inner/norms", check_norms},
      {"inner/weak_orthogonality", check_weak_orthogonality},
      {"inner/three_methods", check_three_methods},
      {"inner/moments", check_moments},
      {"inner/cross", check_cross},
      {"inner/recurrence_identities", check_inner_identities},
      {"inner/orthogonality_iff_xi_zero", check_orthogonality_iff},
      {"identities/hermite_shift_sum", check_shift_sum},
      {"identities/laguerre", check_laguerre_identities},
      {"matrix/diagonals", check_diagonals},
      {"matrix/drop_column", check_drop_column},
  };
  for (const auto& [base, fn] : per_params)
    for (const Params& p : params) {
      const std::string name = std::string(base) + "/" + p.label();
      checks.push_back({name, [&ctx, fn, p, name] { return fn(ctx, p, name); }});
    }
  checks.push_back({"construction/reduction_to_complex_hermite", [&ctx] { return check_reduction(ctx); }});
  checks.push_back({"special/laguerre_kummer_link", [&ctx] { return check_laguerre_kummer(ctx); }});
  checks.push_back({"inner/non_orthogonality_witness", [&ctx] { return check_witness(ctx); }});
  checks.push_back({"identities/hermite_unit_shift_sum", [&ctx] { return check_unit_shift_sum(ctx); }});
  checks.push_back({"matrix/reference_tables", [&ctx] { return check_reference_tables(ctx); }});
  checks.push_back({"core/ring_axioms", [&ctx] { return check_ring(ctx); }});
  if (options.max_degree >= 2)
    checks.push_back({"special/hypergeometric_prefactor", [&ctx] { return check_prefactor_erratum(ctx); }});

  VerifyReport report;
  report.max_degree = options.max_degree;
  report.mode = options.mode;
  report.checks.resize(checks.size());
  const long count = static_cast<long>(checks.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < count; ++i) {
    try {
      report.checks[i] = checks[i].run();
    } catch (const std::exception& e) {
      report.checks[i] = {checks[i].name, CheckStatus::failed, INFINITY, e.what(), ""};
    }
  }
  std::sort(report.checks.begin(), report.checks.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  std::set<std::string> errata;
  for (const auto& c : report.checks)
    if (c.status == CheckStatus::erratum && !c.erratum.empty()) errata.insert(c.erratum);
  report.errata.assign(errata.begin(), errata.end());
  return report;
}

}  // namespace gchp
