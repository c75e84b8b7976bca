#include "gchp/constructors.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "gchp/weighted.hpp"

namespace gchp {

const char* to_string(Route route) {
  switch (route) {
    case Route::series: return "series";
    case Route::recursion: return "recursion";
    case Route::op: return "operator";
    case Route::rodrigues: return "rodrigues";
    case Route::hermite_sum: return "hermite_sum";
  }
  return "?";
}

namespace {

Coefficient exact_or_float(const Rational& q, Mode mode) {
  return mode == Mode::exact ? Coefficient::exact(q) : Coefficient::floating(q.get_d());
}

Coefficient int_coeff(long v, Mode mode) { return Coefficient::from_int(v, mode); }

std::vector<BiPoly> powers(const BiPoly& base, unsigned count) {
  std::vector<BiPoly> out;
  out.reserve(count + 1);
  out.push_back(BiPoly::constant(Coefficient::one(base.mode())));
  for (unsigned i = 1; i <= count; ++i) out.push_back(out.back() * base);
  return out;
}

void require_match(const BiPoly& closed, const BiPoly& formal, const char* what) {
  const bool ok = closed.mode() == Mode::exact && formal.mode() == Mode::exact
                      ? closed == formal
                      : relative_difference(closed, formal) <= 1e-9;
  if (!ok) throw InternalDisagreement(std::string("gchp_partials: ") + what + " mismatch");
}

}  // namespace

BiPoly complex_hermite(unsigned m, unsigned n, Mode mode) {
  BiPoly out(mode);
  const Rational mn = factorial(m) * factorial(n);
  for (unsigned j = 0; j <= std::min(m, n); ++j) {
    Rational c = mn / (factorial(j) * factorial(m - j) * factorial(n - j));
    if (j % 2 == 1) c = -c;
    out += BiPoly::monomial(m - j, n - j, exact_or_float(c, mode));
  }
  return out;
}

BiPoly dattoli_h(unsigned m, unsigned n, const Coefficient& tau) {
  const Mode mode = tau.mode();
  BiPoly out(mode);
  const Rational mn = factorial(m) * factorial(n);
  Coefficient tau_j = Coefficient::one(mode);
  for (unsigned j = 0; j <= std::min(m, n); ++j) {
    const Rational c = mn / (factorial(j) * factorial(m - j) * factorial(n - j));
    out += BiPoly::monomial(m - j, n - j, exact_or_float(c, mode) * tau_j);
    tau_j *= tau;
  }
  return out;
}

BiPoly gchp_series(unsigned m, unsigned n, const Params& params) {
  const Mode mode = params.mode();
  const std::vector<BiPoly> w = powers(params.shifted_zbar(), n);
  const Rational mn = factorial(m) * factorial(n);
  BiPoly out(mode);
  for (unsigned j = 0; j <= std::min(m, n); ++j) {
    Rational c = mn / (factorial(j) * factorial(m - j) * factorial(n - j));
    if (j % 2 == 1) c = -c;
    out += BiPoly::monomial(m - j, 0, exact_or_float(c, mode)) * w[n - j];
  }
  return out;
}

BiPoly gchp_recursion(unsigned m, unsigned n, const Params& params, RecursionOrder order) {
  const Mode mode = params.mode();
  const BiPoly z = BiPoly::z(mode);
  const BiPoly w = params.shifted_zbar();
  // table[i][k] = G^{i,k}
  std::vector<std::vector<BiPoly>> table(m + 1, std::vector<BiPoly>(n + 1, BiPoly(mode)));
  table[0][0] = BiPoly::constant(Coefficient::one(mode));

  auto step_m = [&](unsigned i, unsigned k) {  // G^{i+1,k}
    BiPoly next = z * table[i][k];
    if (k > 0) next -= int_coeff(k, mode) * table[i][k - 1];
    table[i + 1][k] = std::move(next);
  };
  auto step_n = [&](unsigned i, unsigned k) {  // G^{i,k+1}
    BiPoly next = w * table[i][k];
    if (i > 0) next -= int_coeff(i, mode) * table[i - 1][k];
    table[i][k + 1] = std::move(next);
  };

  if (order == RecursionOrder::m_first) {
    for (unsigned i = 0; i < m; ++i) step_m(i, 0);
    for (unsigned k = 0; k < n; ++k)
      for (unsigned i = 0; i <= m; ++i) step_n(i, k);
  } else {
    for (unsigned k = 0; k < n; ++k) step_n(0, k);
    for (unsigned i = 0; i < m; ++i)
      for (unsigned k = 0; k <= n; ++k) step_m(i, k);
  }
  return table[m][n];
}

BiPoly gchp_operator(unsigned m, unsigned n, const Params& params) {
  const BiPoly w = params.shifted_zbar();
  BiPoly g = BiPoly::monomial(m, 0, Coefficient::one(params.mode()));
  for (unsigned i = 0; i < n; ++i) g = w * g - d_dz(g);
  return g;
}

BiPoly gchp_rodrigues(unsigned m, unsigned n, const Params& params) {
  const Mode mode = params.mode();
  const GaussExponent weight = GaussExponent::rodrigues_weight(params);
  WeightedPoly f{BiPoly::constant(Coefficient::one(mode)), weight};
  for (unsigned i = 0; i < m; ++i) f = wf_d_dzbar(f);
  for (unsigned i = 0; i < n; ++i) f = wf_d_dz(f);
  Coefficient scale = Coefficient::one(mode) / pow(params.nu(), m);
  if ((m + n) % 2 == 1) scale = -scale;
  f = scale * f;
  // multiply by exp(nu|z|^2 + conj(xi) z / 2), built from the parameters directly
  const GaussExponent inverse{params.nu(), Coefficient::ratio(1, 2, mode) * params.xi_conj(),
                              Coefficient::zero(mode)};
  f = times_exp(f, inverse);
  if (!f.exponent.is_zero())
    throw InternalDisagreement("gchp_rodrigues: exponential factors failed to cancel");
  return f.poly;
}

BiPoly gchp_hermite_sum(unsigned m, unsigned n, const Params& given) {
  const auto root = given.exact_sqrt_nu();
  const Params params = root ? given : given.to_mode(Mode::floating);
  const Mode mode = params.mode();
  const Coefficient s = root ? *root : params.sqrt_nu();
  const Coefficient half_xi_conj = Coefficient::ratio(1, 2, mode) * params.xi_conj();

  BiPoly sum(mode);
  for (unsigned j = 0; j <= n; ++j) {
    const Coefficient weight = pow(s, j) * pow(half_xi_conj, n - j) /
                               exact_or_float(factorial(j) * factorial(n - j), mode);
    sum += weight * complex_hermite(m, j, mode).scaled(s, s);
  }
  return (exact_or_float(factorial(n), mode) / pow(s, m)) * sum;
}

namespace {

struct CacheKey {
  unsigned m;
  unsigned n;
  std::string params;
  int route;
  int mode;
  auto operator<=>(const CacheKey&) const = default;
};

std::mutex cache_mutex;
std::map<CacheKey, BiPoly> cache;

}  // namespace

BiPoly gchp(unsigned m, unsigned n, const Params& params, Route route) {
  const CacheKey key{m, n, params.label(), static_cast<int>(route), static_cast<int>(params.mode())};
  {
    std::lock_guard lock(cache_mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  BiPoly value(params.mode());
  switch (route) {
    case Route::series: value = gchp_series(m, n, params); break;
    case Route::recursion: value = gchp_recursion(m, n, params); break;
    case Route::op: value = gchp_operator(m, n, params); break;
    case Route::rodrigues: value = gchp_rodrigues(m, n, params); break;
    case Route::hermite_sum: value = gchp_hermite_sum(m, n, params); break;
  }
  std::lock_guard lock(cache_mutex);
  return cache.try_emplace(key, std::move(value)).first->second;
}

void clear_gchp_cache() {
  std::lock_guard lock(cache_mutex);
  cache.clear();
}

Coefficient hermite_number(unsigned m, unsigned n, const Params& params) {
  const Mode mode = params.mode();
  Coefficient value = Coefficient::zero(mode);
  if (m == n) {
    value = exact_or_float(factorial(m), mode);
    if (m % 2 == 1) value = -value;
  } else if (n > m) {
    const Coefficient half_xi_conj = Coefficient::ratio(1, 2, mode) * params.xi_conj();
    value = exact_or_float(factorial(n) / factorial(n - m), mode) * pow(half_xi_conj, n - m);
    if (m % 2 == 1) value = -value;
  }
  const Coefficient constant_term = gchp(m, n, params).at(0, 0);
  const bool agree = mode == Mode::exact
                         ? value == constant_term
                         : std::abs(value.to_complex() - constant_term.to_complex()) <=
                               1e-12 * std::max(1.0, value.abs());
  if (!agree) throw InternalDisagreement("hermite_number: closed form disagrees with G(0)");
  return value;
}

namespace {

/// Truncated power series in (u, v) with polynomial coefficients.
class TruncatedSeries {
 public:
  TruncatedSeries(unsigned M, unsigned N, Mode mode)
      : M_(M), N_(N), terms_((M + 1) * (N + 1), BiPoly(mode)) {}

  BiPoly& at(unsigned a, unsigned b) { return terms_[a * (N_ + 1) + b]; }
  const BiPoly& at(unsigned a, unsigned b) const { return terms_[a * (N_ + 1) + b]; }

  /// exp(c u^du v^dv) = sum_k c^k / k! u^{k du} v^{k dv}, truncated.
  static TruncatedSeries exp_of_monomial(const BiPoly& c, unsigned du, unsigned dv, unsigned M,
                                         unsigned N) {
    const Mode mode = c.mode();
    TruncatedSeries s(M, N, mode);
    BiPoly ck = BiPoly::constant(Coefficient::one(mode));
    for (unsigned k = 0; k * du <= M && k * dv <= N; ++k) {
      s.at(k * du, k * dv) = exact_or_float(1 / factorial(k), mode) * ck;
      ck = ck * c;
      if (du == 0 && dv == 0) break;
    }
    return s;
  }

  friend TruncatedSeries operator*(const TruncatedSeries& x, const TruncatedSeries& y) {
    TruncatedSeries out(x.M_, x.N_, x.terms_.front().mode());
    for (unsigned a = 0; a <= x.M_; ++a)
      for (unsigned b = 0; b <= x.N_; ++b) {
        if (x.at(a, b).is_zero()) continue;
        for (unsigned c = 0; a + c <= x.M_; ++c)
          for (unsigned d = 0; b + d <= x.N_; ++d) {
            if (y.at(c, d).is_zero()) continue;
            out.at(a + c, b + d) += x.at(a, b) * y.at(c, d);
          }
      }
    return out;
  }

 private:
  unsigned M_;
  unsigned N_;
  std::vector<BiPoly> terms_;
};

}  // namespace

std::vector<std::vector<BiPoly>> genfun_coefficients(const Params& params, unsigned M, unsigned N) {
  if (M > 12 || N > 12) throw std::invalid_argument("genfun_coefficients: M, N must be <= 12");
  const Mode mode = params.mode();
  const auto eu = TruncatedSeries::exp_of_monomial(BiPoly::z(mode), 1, 0, M, N);
  const auto ev = TruncatedSeries::exp_of_monomial(params.shifted_zbar(), 0, 1, M, N);
  const auto euv =
      TruncatedSeries::exp_of_monomial(BiPoly::constant(-Coefficient::one(mode)), 1, 1, M, N);
  const TruncatedSeries product = eu * ev * euv;

  std::vector<std::vector<BiPoly>> out(M + 1);
  for (unsigned a = 0; a <= M; ++a) {
    out[a].reserve(N + 1);
    for (unsigned b = 0; b <= N; ++b)
      out[a].push_back(exact_or_float(factorial(a) * factorial(b), mode) * product.at(a, b));
  }
  return out;
}

GchpPartials gchp_partials(unsigned m, unsigned n, const Params& params) {
  const Mode mode = params.mode();
  const BiPoly g = gchp(m, n, params);
  GchpPartials out{BiPoly(mode), BiPoly(mode), BiPoly(mode)};
  if (m > 0) out.dz = int_coeff(m, mode) * gchp(m - 1, n, params);
  if (n > 0) {
    const BiPoly lower = gchp(m, n - 1, params);
    out.dzbar = (int_coeff(n, mode) * params.nu()) * lower;
    out.dxibar = Coefficient::ratio(n, 2, mode) * lower;
  }
  require_match(out.dz, d_dz(g), "d/dz");
  require_match(out.dzbar, d_dzbar(g), "d/dz*");

  // G is a polynomial of degree n in conj(xi); shifting xi by a real h shifts
  // conj(xi) by h, so the derivative at h = 0 is an exact Lagrange combination
  // of the values at h = 0..n.
  BiPoly derivative(mode);
  Rational w0 = 0;
  for (unsigned i = 1; i <= n; ++i) {
    Rational wi = binomial(n, i) / Rational(i);
    if (i % 2 == 0) wi = -wi;
    w0 -= wi;
    const Params shifted(params.nu(), params.xi() + int_coeff(i, mode));
    derivative += exact_or_float(wi, mode) * gchp_series(m, n, shifted);
  }
  derivative += exact_or_float(w0, mode) * g;
  require_match(out.dxibar, derivative, "d/dconj(xi)");
  return out;
}

}  // namespace gchp
