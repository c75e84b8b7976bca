#include "gchp/inner_products.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <tuple>

#include "gchp/constructors.hpp"
#include "gchp/special_functions.hpp"

namespace gchp {

namespace {

std::complex<double> ipow(std::complex<double> base, unsigned e) {
  std::complex<double> r = 1.0;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

double norm_argument_value(const Params& params) {
  return std::norm(params.xi_value()) / (4.0 * params.nu_value());
}

using MomentKey = std::tuple<std::string, int, unsigned, unsigned>;
std::mutex moment_mutex;
std::map<MomentKey, Coefficient> moment_cache;

Coefficient compute_reduced_moment(unsigned m, unsigned j, const Params& params) {
  const Mode mode = params.mode();
  const unsigned hi = std::max(m, j);
  const unsigned lo = std::min(m, j);
  const unsigned d = hi - lo;
  const Rational num = factorial(hi);
  const Rational den = factorial(d) * Rational(mpz_class(1) << d);
  Coefficient c = mode == Mode::exact ? Coefficient::exact(num / den)
                                      : Coefficient::floating(Rational(num / den).get_d());
  c = c / pow(params.nu(), hi + 1);
  if ((m + j) % 2 == 1) c = -c;
  c = c * pow(params.xi(), hi - j) * pow(params.xi_conj(), hi - m);
  if (c.is_zero()) return c;
  // 1F1(1+hi; 1+d; x) = e^x 1F1(-lo; 1+d; -x)
  return c * hyp1f1_terminating(lo, d + 1, -params.norm_argument());
}

}  // namespace

double Weight::operator()(std::complex<double> z) const { return weight_value(params_, z); }

double weight_value(const Params& params, std::complex<double> z) {
  const double nu = params.nu_value();
  const std::complex<double> xi = params.xi_value();
  return std::exp(-nu * std::norm(z) - (z * std::conj(xi)).real());
}

double moment_scale(const Params& params) {
  return std::numbers::pi * std::exp(norm_argument_value(params));
}

std::complex<double> monomial_moment(unsigned m, unsigned j, const Params& params) {
  const double nu = params.nu_value();
  const std::complex<double> xi = params.xi_value();
  const unsigned hi = std::max(m, j);
  const unsigned d = hi - std::min(m, j);
  double c = std::numbers::pi * factorial(hi).get_d() /
             (std::pow(nu, hi + 1) * std::ldexp(1.0, static_cast<int>(d)) * factorial(d).get_d());
  if ((m + j) % 2 == 1) c = -c;
  const std::complex<double> pref = c * ipow(xi, hi - j) * ipow(std::conj(xi), hi - m);
  if (pref == 0.0) return 0.0;
  return pref * hyp1f1(1.0 + hi, 1.0 + d, norm_argument_value(params));
}

Coefficient monomial_moment_reduced(unsigned m, unsigned j, const Params& params) {
  MomentKey key{params.label(), static_cast<int>(params.mode()), m, j};
  {
    std::lock_guard lock(moment_mutex);
    if (auto it = moment_cache.find(key); it != moment_cache.end()) return it->second;
  }
  Coefficient value = compute_reduced_moment(m, j, params);
  std::lock_guard lock(moment_mutex);
  return moment_cache.try_emplace(std::move(key), std::move(value)).first->second;
}

Coefficient inner_product_reduced(const BiPoly& f, const BiPoly& g, const Params& params) {
  const Mode mode = params.mode();
  const BiPoly fm = f.to_mode(mode);
  const BiPoly gc = g.to_mode(mode).conjugate();  // conj(g) as a polynomial
  const BiPoly product = fm * gc;
  Coefficient sum = Coefficient::zero(mode);
  for (std::size_t a = 0; a < product.rows(); ++a)
    for (std::size_t b = 0; b < product.cols(); ++b) {
      const Coefficient c = product.at(a, b);
      if (c.is_zero()) continue;
      sum += c * monomial_moment_reduced(static_cast<unsigned>(a), static_cast<unsigned>(b), params);
    }
  return sum;
}

std::complex<double> inner_product_exact(const BiPoly& f, const BiPoly& g, const Params& params) {
  return moment_scale(params) * inner_product_reduced(f, g, params).to_complex();
}

std::complex<double> inner_product_moments(const BiPoly& f, const BiPoly& g, const Params& params) {
  const DenseGrid fd = dense_grid(f);
  const DenseGrid gd = dense_grid(g);
  std::complex<double> sum = 0.0;
  // f_{jk} z^j zb^k * conj(g_{lp}) zb^l z^p
  for (std::size_t j = 0; j < fd.rows; ++j)
    for (std::size_t k = 0; k < fd.cols; ++k) {
      const std::complex<double> fv = fd.values[j * fd.cols + k];
      if (fv == 0.0) continue;
      for (std::size_t l = 0; l < gd.rows; ++l)
        for (std::size_t p = 0; p < gd.cols; ++p) {
          const std::complex<double> gv = gd.values[l * gd.cols + p];
          if (gv == 0.0) continue;
          sum += fv * std::conj(gv) *
                 monomial_moment(static_cast<unsigned>(j + p), static_cast<unsigned>(k + l), params);
        }
    }
  return sum;
}

QuadratureGrid QuadratureGrid::make(const Params& params, unsigned order) {
  const double nu = params.nu_value();
  QuadratureGrid grid;
  grid.order = order;
  grid.rule = kernels::gauss_hermite(order);
  grid.shift = -params.xi_value() / (2.0 * nu);
  grid.scale = 1.0 / std::sqrt(nu);
  grid.prefactor = std::exp(norm_argument_value(params)) / nu;
  return grid;
}

unsigned default_quad_order(const BiPoly& f, const BiPoly& g) {
  const std::size_t total = f.deg_z() + f.deg_zbar() + g.deg_z() + g.deg_zbar();
  return static_cast<unsigned>(total / 2 + 4);
}

std::complex<double> inner_product_quad(const BiPoly& f, const BiPoly& g, const Params& params,
                                        unsigned order, Kernel kernel) {
  const std::size_t total = f.deg_z() + f.deg_zbar() + g.deg_z() + g.deg_zbar();
  if (order == 0) order = default_quad_order(f, g);
  if (order < total / 2 + 1)
    std::cerr << "warning: quadrature order " << order << " is below the exactness bound "
              << total / 2 + 1 << " for total degree " << total << '\n';
  const QuadratureGrid grid = QuadratureGrid::make(params, order);
  const DenseGrid fd = dense_grid(f);
  const DenseGrid gd = dense_grid(g);
  const std::complex<double> sum =
      kernel == Kernel::omp ? kernels::quad_sum_omp(fd, gd, grid.rule, grid.shift, grid.scale)
                            : kernels::quad_sum_serial(fd, gd, grid.rule, grid.shift, grid.scale);
  return grid.prefactor * sum;
}

InnerProductReport inner_product_report(const BiPoly& f, const BiPoly& g, const Params& params,
                                        unsigned quad_order) {
  const Coefficient reduced = inner_product_reduced(f, g, params);
  const std::complex<double> exact = moment_scale(params) * reduced.to_complex();
  const std::complex<double> quad = inner_product_quad(f, g, params, quad_order);
  const std::complex<double> moments = inner_product_moments(f, g, params);
  const double delta =
      std::max({std::abs(exact - quad), std::abs(exact - moments), std::abs(quad - moments)});
  // Cauchy-Schwarz scale, so that orthogonal pairs get a meaningful relative delta
  const double magnitude =
      std::sqrt(std::abs(inner_product_exact(f, f, params)) * std::abs(inner_product_exact(g, g, params)));
  return {Coefficient::floating(exact),
          reduced,
          Coefficient::floating(quad),
          Coefficient::floating(moments),
          delta,
          magnitude > 0.0 ? delta / magnitude : delta};
}

double gchp_norm_sq(unsigned m, unsigned n, const Params& params) {
  const double nu = params.nu_value();
  const double closed = factorial(m).get_d() * factorial(n).get_d() * std::numbers::pi *
                        std::pow(nu, static_cast<double>(n) - static_cast<double>(m) - 1.0) *
                        hyp1f1(m + 1.0, 1.0, norm_argument_value(params));
  const BiPoly g = gchp(m, n, params);
  const std::complex<double> expansion = inner_product_exact(g, g, params);
  if (std::abs(expansion - closed) > 1e-9 * closed)
    throw InternalDisagreement("gchp_norm_sq: closed form disagrees with moment expansion");
  return closed;
}

double weak_orthogonality_check(unsigned m, unsigned n, unsigned j, unsigned k,
                                const Params& params) {
  if (n == k) throw std::invalid_argument("weak_orthogonality_check requires n != k");
  const Coefficient reduced = inner_product_reduced(gchp(m, n, params), gchp(j, k, params), params);
  if (reduced.is_zero()) return 0.0;
  const double value = moment_scale(params) * reduced.abs();
  return value / std::sqrt(gchp_norm_sq(m, n, params) * gchp_norm_sq(j, k, params));
}

std::complex<double> cross_inner(unsigned m, unsigned n, const Params& params) {
  if (m == 0) throw std::invalid_argument("cross_inner requires m >= 1");
  if (params.xi_is_zero()) return 0.0;
  const double nu = params.nu_value();
  const double x = norm_argument_value(params);
  const double scale = 2.0 * factorial(m).get_d() * factorial(n).get_d() * std::numbers::pi *
                       std::pow(nu, static_cast<double>(n) - static_cast<double>(m));
  return scale / std::conj(params.xi_value()) * (hyp1f1(m, 1.0, x) - hyp1f1(m + 1.0, 1.0, x));
}

bool orthogonality_iff_xi_zero(const Params& params, unsigned budget) {
  for (unsigned n = 0; n <= budget; ++n)
    for (unsigned m = 0; m <= budget; ++m)
      for (unsigned j = 0; j < m; ++j) {
        const Coefficient r = inner_product_reduced(gchp(m, n, params), gchp(j, n, params), params);
        if (params.mode() == Mode::exact) {
          if (!r.is_zero()) return true;
          continue;
        }
        const double normalized = moment_scale(params) * r.abs() /
                                  std::sqrt(gchp_norm_sq(m, n, params) * gchp_norm_sq(j, n, params));
        if (normalized > 1e-10) return true;
      }
  return false;
}

}  // namespace gchp
