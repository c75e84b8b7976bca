#include "gchp/identities.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "gchp/constructors.hpp"
#include "gchp/special_functions.hpp"

namespace gchp {

const char* to_string(IdentityStatus status) {
  switch (status) {
    case IdentityStatus::verified: return "VERIFIED";
    case IdentityStatus::erratum: return "ERRATUM";
    case IdentityStatus::failed: return "FAILED";
  }
  return "?";
}

namespace {

constexpr double float_tolerance = 1e-10;

Coefficient rational(const Rational& q, Mode mode) {
  return mode == Mode::exact ? Coefficient::exact(q) : Coefficient::floating(q.get_d());
}

/// 0 when a == b exactly; otherwise the relative coefficient difference.
double residual(const BiPoly& a, const BiPoly& b) {
  if (a.mode() == Mode::exact && b.mode() == Mode::exact && a == b) return 0.0;
  const double r = relative_difference(a, b);
  // exact operands that differ must never report a zero residual
  return r == 0.0 ? 1e-300 : r;
}

double residual(const Coefficient& a, const Coefficient& b) {
  if (a.is_exact() && b.is_exact()) {
    if (a == b) return 0.0;
  }
  const double scale = std::max({a.abs(), b.abs(), 1.0});
  const double r = std::abs(a.to_complex() - b.to_complex()) / scale;
  return (a.is_exact() && b.is_exact() && r == 0.0) ? 1e-300 : r;
}

bool passes(double r, bool exact) { return exact ? r == 0.0 : r <= float_tolerance; }

IdentityResult classify(std::string name, double printed, double corrected, bool exact,
                        const std::string& erratum_note) {
  IdentityResult out;
  out.name = std::move(name);
  out.printed_residual = printed;
  out.corrected_residual = corrected;
  out.exact = exact;
  if (passes(printed, exact)) {
    out.status = IdentityStatus::verified;
  } else if (passes(corrected, exact)) {
    out.status = IdentityStatus::erratum;
    out.note = erratum_note;
  } else {
    out.status = IdentityStatus::failed;
    out.note = "neither the quoted nor the corrected form holds";
  }
  return out;
}

std::string indexed(const char* base, unsigned m, unsigned n) {
  std::ostringstream s;
  s << base << "[m=" << m << ",n=" << n << ']';
  return s.str();
}

/// sum |p_jk| r^{j+k}
double abs_eval(const BiPoly& p, double r) {
  double total = 0.0;
  for (std::size_t j = 0; j < p.rows(); ++j)
    for (std::size_t k = 0; k < p.cols(); ++k)
      total += p.at(j, k).abs() * std::pow(r, static_cast<double>(j + k));
  return total;
}

std::vector<Coefficient> exact_points() {
  return {Coefficient::exact(Rational(1, 2), Rational(1, 3)),
          Coefficient::exact(Rational(-2, 3), Rational(1, 5)),
          Coefficient::exact(Rational(3, 4), Rational(-1)),
          Coefficient::exact(Rational(2), Rational(1, 2))};
}

std::vector<Coefficient> float_points(unsigned count) {
  std::mt19937_64 rng(20070820);
  std::uniform_real_distribution<double> dist(-1.5, 1.5);
  std::vector<Coefficient> out;
  for (unsigned i = 0; i < count; ++i) out.push_back(Coefficient::floating({dist(rng), dist(rng)}));
  return out;
}

/// Sum_{j<=n} H^{m,j}(z,z*) / (j! (n-j)!), exact.
BiPoly unit_shift_sum(unsigned m, unsigned n) {
  BiPoly s(Mode::exact);
  for (unsigned j = 0; j <= n; ++j)
    s += Coefficient::exact(1 / (factorial(j) * factorial(n - j))) * complex_hermite(m, j);
  return s;
}

}  // namespace

IdentityResult verify_identity_2221(unsigned m, unsigned n, const Params& params) {
  const Mode mode = params.mode();
  const BiPoly lhs = complex_hermite(m, n, mode).substitute(BiPoly::z(mode), params.shifted_zbar());
  const BiPoly unsigned_sum = gchp_hermite_sum(m, n, params);
  const bool exact = unsigned_sum.mode() == Mode::exact && lhs.mode() == Mode::exact;
  const BiPoly signed_sum = std::min(m, n) % 2 == 1 ? -unsigned_sum : unsigned_sum;
  return classify(indexed("hermite_shift_sum", m, n), residual(lhs, signed_sum),
                  residual(lhs, unsigned_sum), exact,
                  "the (-1)^min(m,n) factor must be dropped");
}

IdentityResult verify_identity_2222(unsigned m, unsigned n) {
  const BiPoly shifted_zbar =
      BiPoly::zbar(Mode::exact) + BiPoly::constant(Coefficient::one(Mode::exact));
  const BiPoly lhs = complex_hermite(m, n).substitute(BiPoly::z(Mode::exact), shifted_zbar);
  BiPoly sum(Mode::exact);
  for (unsigned j = 0; j <= n; ++j)
    sum += Coefficient::exact(binomial(n, j)) * complex_hermite(m, j);
  const BiPoly signed_sum = std::min(m, n) % 2 == 1 ? -sum : sum;
  return classify(indexed("hermite_unit_shift_sum", m, n), residual(lhs, signed_sum),
                  residual(lhs, sum), true, "the (-1)^min(m,n) factor must be dropped");
}

std::vector<IdentityResult> verify_laguerre_identities(unsigned m, unsigned n,
                                                       const Params& given) {
  std::vector<IdentityResult> out;
  const unsigned lo = std::min(m, n);
  const unsigned hi = std::max(m, n);

  // general parameters: L_lo^{hi-lo}(z w) = (-1)^lo / lo! z^{-(hi-n)} w^{-(hi-m)} G^{m,n}
  {
    const bool exact = given.mode() == Mode::exact && given.exact_sqrt_nu().has_value();
    const Params params = exact ? given : given.to_mode(Mode::floating);
    const Mode mode = params.mode();
    const BiPoly g = gchp_hermite_sum(m, n, params);
    std::vector<Coefficient> points = exact ? exact_points() : float_points(8);
    double worst = 0.0;
    for (const Coefficient& z : points) {
      const Coefficient w = params.nu() * z.conj() + Coefficient::ratio(1, 2, mode) * params.xi_conj();
      if (z.is_zero() || w.is_zero()) continue;
      const Coefficient lhs = laguerre(lo, hi - lo, z * w);
      const Coefficient denominator = rational(factorial(lo), mode) * pow(z, hi - n) * pow(w, hi - m);
      Coefficient rhs = eval(g, z) / denominator;
      if (lo % 2 == 1) rhs = -rhs;
      if (exact) {
        worst = std::max(worst, residual(lhs, rhs));
      } else {
        // floating evaluation of G loses digits to cancellation; measure against its condition
        const double scale = std::max({lhs.abs(), rhs.abs(), abs_eval(g, z.abs()) / denominator.abs()});
        worst = std::max(worst, std::abs(lhs.to_complex() - rhs.to_complex()) / scale);
      }
    }
    out.push_back(classify(indexed("laguerre_hermite_sum", m, n), worst, worst, exact, ""));
  }

  // unit shift, nu = 1, xi = 2: w = z* + 1, z w = z z* + z
  const BiPoly s = unit_shift_sum(m, n);
  const Coefficient one = Coefficient::one(Mode::exact);
  if (m >= n) {
    double worst = 0.0;
    for (const Coefficient& z : exact_points()) {
      const Coefficient lhs = laguerre(n, m - n, z * (z.conj() + one));
      Coefficient rhs = eval(s, z) / pow(z, m - n);
      if (n % 2 == 1) rhs = -rhs;
      worst = std::max(worst, residual(lhs, rhs));
    }
    out.push_back(classify(indexed("laguerre_unit_shift_m_ge_n", m, n), worst, worst, true, ""));

    // n! (z*+1)^{m-n} S_{m,n} = m! z^{m-n} S_{n,m}
    const BiPoly w = BiPoly::zbar(Mode::exact) + BiPoly::constant(one);
    const BiPoly left = Coefficient::exact(factorial(n)) * pow(w, m - n) * s;
    const BiPoly right = Coefficient::exact(factorial(m)) *
                         BiPoly::monomial(m - n, 0, one) * unit_shift_sum(n, m);
    const double r = residual(left, right);
    out.push_back(classify(indexed("hermite_sum_symmetry", m, n), r, r, true, ""));
  }
  if (n >= m) {
    double worst = 0.0;
    for (const Coefficient& z : exact_points()) {
      const Coefficient w = z.conj() + one;
      const Coefficient lhs = laguerre(m, n - m, z * w);
      Coefficient rhs = Coefficient::exact(factorial(n) / factorial(m)) * eval(s, z) / pow(w, n - m);
      if (m % 2 == 1) rhs = -rhs;
      worst = std::max(worst, residual(lhs, rhs));
    }
    out.push_back(classify(indexed("laguerre_unit_shift_n_ge_m", m, n), worst, worst, true, ""));
  }
  return out;
}

std::vector<std::vector<Coefficient>> matrix_of(const BiPoly& p) { return p.grid(); }

std::string format_matrix(const BiPoly& p) {
  const auto grid = matrix_of(p);
  std::vector<std::vector<std::string>> cells;
  std::size_t width = 1;
  for (const auto& row : grid) {
    auto& out = cells.emplace_back();
    for (const auto& c : row) {
      out.push_back(c.to_string());
      width = std::max(width, out.back().size());
    }
  }
  std::ostringstream s;
  for (const auto& row : cells) {
    s << "[ ";
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k > 0) s << "  ";
      s << std::string(width - row[k].size(), ' ') << row[k];
    }
    s << " ]\n";
  }
  return s.str();
}

std::vector<DiagonalTerm> diagonal_decomposition(unsigned m, const Params& given) {
  const auto root = given.exact_sqrt_nu();
  const Params params = root ? given : given.to_mode(Mode::floating);
  const Mode mode = params.mode();
  const Coefficient s = root ? *root : params.sqrt_nu();
  const Coefficient half_xi_conj = Coefficient::ratio(1, 2, mode) * params.xi_conj();
  const BiPoly g = gchp_series(m, m, params);

  std::vector<DiagonalTerm> out;
  for (unsigned k = m + 1; k-- > 0;) {
    DiagonalTerm term;
    term.k = k;
    term.scale = rational(factorial(m) / (factorial(k) * factorial(m - k)), mode) * pow(s, k) *
                 pow(half_xi_conj, m - k) / pow(s, m);
    term.hermite = complex_hermite(m, k, mode).scaled(s, s);
    term.diagonal = g.diagonal(m - k);
    const BiPoly expected = term.scale * term.hermite;
    const bool ok = mode == Mode::exact ? expected == term.diagonal
                                        : relative_difference(expected, term.diagonal) <= 1e-10;
    if (!ok) throw InternalDisagreement("diagonal_decomposition: subdiagonal mismatch");
    out.push_back(std::move(term));
  }
  return out;
}

double triangular_entry_residual(unsigned m, const Params& params) {
  const Mode mode = params.mode();
  const BiPoly g = gchp_series(m, m, params);
  const Coefficient half_xi_conj = Coefficient::ratio(1, 2, mode) * params.xi_conj();
  const Rational msq = factorial(m) * factorial(m);
  BiPoly expected(mode);
  for (unsigned l = 0; l <= m; ++l)
    for (unsigned k = 0; k <= l; ++k) {
      Rational c = msq / (factorial(l) * factorial(m - l) * factorial(k) * factorial(l - k));
      if ((m + l) % 2 == 1) c = -c;
      expected += BiPoly::monomial(l, k, rational(c, mode) * pow(params.nu(), k) *
                                             pow(half_xi_conj, l - k));
    }
  for (std::size_t j = 0; j < g.rows(); ++j)
    for (std::size_t k = j + 1; k < g.cols(); ++k)
      if (!g.at(j, k).is_zero()) return std::max(1.0, residual(expected, g));
  return residual(expected, g);
}

BiPoly drop_column_differentiate(unsigned m, unsigned n, const Params& params) {
  if (n == 0) throw std::invalid_argument("drop_column_differentiate requires n >= 1");
  const Mode mode = params.mode();
  // coefficient of t^r (t = conj(xi)) in G^{m,n}:
  //   sum_j c_j C(n-j, r) 2^{-r} nu^{n-j-r} z^{m-j} z*^{n-j-r}
  std::vector<BiPoly> by_power(n + 1, BiPoly(mode));
  const Rational mn = factorial(m) * factorial(n);
  for (unsigned j = 0; j <= std::min(m, n); ++j) {
    Rational cj = mn / (factorial(j) * factorial(m - j) * factorial(n - j));
    if (j % 2 == 1) cj = -cj;
    for (unsigned r = 0; r <= n - j; ++r) {
      const Rational c = cj * binomial(n - j, r) / Rational(mpz_class(1) << r);
      by_power[r] +=
          BiPoly::monomial(m - j, n - j - r, rational(c, mode) * pow(params.nu(), n - j - r));
    }
  }
  // drop the z*^n column from every component, differentiate in t, substitute t
  BiPoly out(mode);
  Coefficient t_power = Coefficient::one(mode);
  for (unsigned r = 1; r <= n; ++r) {
    BiPoly component = by_power[r];
    while (component.deg_zbar() >= n && !component.is_zero()) component = component.drop_last_column();
    out += (Coefficient::from_int(r, mode) * t_power) * component;
    t_power *= params.xi_conj();
  }
  return out;
}

}  // namespace gchp
