#include <numbers>
#include <random>

#include "doctest.h"
#include "gchp/constructors.hpp"
#include "gchp/inner_products.hpp"

using namespace gchp;

namespace {

constexpr double pi = std::numbers::pi;
constexpr double e = std::numbers::e;

double rel(std::complex<double> a, std::complex<double> b) {
  return std::abs(a - b) / std::max(1e-300, std::abs(b));
}

std::vector<Params> test_params() {
  return {Params::exact(1), Params::exact(1, 2), Params::exact(2, 1, 1),
          Params::exact(Rational(1, 4), 0, -1)};
}

BiPoly one() { return BiPoly::constant(Coefficient::one(Mode::exact)); }

}  // namespace

TEST_CASE("weight values") {
  CHECK(weight_value(Params::exact(1), 0.0) == 1.0);
  CHECK(weight_value(Params::exact(1, 2), 0.0) == 1.0);
  CHECK(weight_value(Params::exact(1, 2), -1.0) == doctest::Approx(e));
  const Params p = Params::exact(2, 1, 1);
  const std::complex<double> z(0.3, -0.7);
  const double x = std::norm(p.xi_value()) / (4 * p.nu_value());
  CHECK(weight_value(p, z) ==
        doctest::Approx(std::exp(x) * std::exp(-2.0 * std::norm(z + p.xi_value() / 4.0))));
}

TEST_CASE("monomial moments") {
  for (double nu : {1.0, 0.5, 3.0})
    for (unsigned m = 0; m <= 6; ++m) {
      const Params p = Params::floating(nu);
      CHECK(rel(monomial_moment(m, m, p), pi * factorial(m).get_d() / std::pow(nu, m + 1)) < 1e-13);
      for (unsigned j = 0; j <= 6; ++j)
        if (j != m) CHECK(monomial_moment(m, j, p) == std::complex<double>(0.0));
    }
  const Params p = Params::exact(1, 2);
  CHECK(rel(monomial_moment(0, 1, p), -pi * e) < 1e-14);
  CHECK(rel(monomial_moment(1, 0, p), -pi * e) < 1e-14);
}

TEST_CASE("moments: closed form, exact reduction and quadrature") {
  for (const Params& p : test_params())
    for (unsigned m = 0; m <= 6; ++m)
      for (unsigned j = 0; j <= 6; ++j) {
        const auto closed = monomial_moment(m, j, p);
        const auto exact = moment_scale(p) * monomial_moment_reduced(m, j, p).to_complex();
        const BiPoly zm = BiPoly::monomial(m, 0, Coefficient::one(Mode::exact));
        const BiPoly zj = BiPoly::monomial(j, 0, Coefficient::one(Mode::exact));
        const auto quad = inner_product_quad(zm, zj, p);
        const double scale = std::sqrt(std::abs(monomial_moment(m, m, p) * monomial_moment(j, j, p)));
        CHECK(std::abs(closed - exact) <= 1e-12 * scale);
        CHECK(std::abs(closed - quad) <= 1e-9 * scale);
      }
}

TEST_CASE("basic inner products") {
  CHECK(rel(inner_product_exact(one(), one(), Params::exact(1)), pi) < 1e-15);
  for (const Params& p : test_params()) {
    const double x = std::norm(p.xi_value()) / (4 * p.nu_value());
    CHECK(rel(inner_product_exact(one(), one(), p), pi / p.nu_value() * std::exp(x)) < 1e-14);
  }
  const BiPoly z = BiPoly::z(Mode::exact);
  CHECK(rel(inner_product_exact(z, z, Params::exact(1)), pi) < 1e-15);
  CHECK(rel(inner_product_exact(z, one(), Params::exact(1, 2)), -pi * e) < 1e-14);
  CHECK(rel(inner_product_quad(z, one(), Params::exact(1, 2)), -pi * e) < 1e-12);
}

TEST_CASE("independent numerical integration oracle") {
  // adaptive 2-D integration (mpmath) at nu = 1/2, xi = 1 - i
  const Params p = Params::exact(Rational(1, 2), 1, -1);
  const BiPoly g21 = gchp::gchp(2, 1, p);
  const BiPoly g11 = gchp::gchp(1, 1, p);
  CHECK(rel(inner_product_exact(g21, g21, p), 239.11255823485987783) < 1e-12);
  CHECK(rel(gchp_norm_sq(2, 1, p), 239.11255823485987783) < 1e-12);
  CHECK(rel(inner_product_exact(g21, g11, p), {-51.238405336041402393, 51.238405336041402393}) < 1e-12);
  CHECK(rel(inner_product_quad(g21, g11, p), {-51.238405336041402393, 51.238405336041402393}) < 1e-10);
}

TEST_CASE("norms") {
  for (unsigned m = 0; m <= 5; ++m)
    for (unsigned n = 0; n <= 5; ++n) {
      const double hermite = factorial(m).get_d() * factorial(n).get_d() * pi;
      CHECK(rel(gchp_norm_sq(m, n, Params::exact(1)), hermite) < 1e-12);
      for (const Params& p : test_params()) {
        const BiPoly g = gchp::gchp(m, n, p);
        const double closed = gchp_norm_sq(m, n, p);
        CHECK(rel(inner_product_exact(g, g, p), closed) < 1e-9);
        CHECK(rel(inner_product_quad(g, g, p), closed) < 1e-9);
        CHECK(rel(gchp_norm_sq(m, n + 1, p), p.nu_value() * (n + 1) * closed) < 1e-12);
      }
    }
}

TEST_CASE("weak orthogonality") {
  CHECK(inner_product_reduced(one(), gchp::gchp(0, 1, Params::exact(1, 2)), Params::exact(1, 2)).is_zero());
  CHECK(inner_product_reduced(gchp::gchp(2, 1, Params::exact(1, 2)), gchp::gchp(3, 0, Params::exact(1, 2)),
                              Params::exact(1, 2))
            .is_zero());
  for (const Params& p : test_params())
    for (unsigned m = 0; m <= 4; ++m)
      for (unsigned n = 0; n <= 4; ++n)
        for (unsigned j = 0; j <= 4; ++j)
          for (unsigned k = 0; k <= 4; ++k)
            if (n != k) CHECK(weak_orthogonality_check(m, n, j, k, p) == 0.0);
  const Params f = Params::floating(0.7, {0.4, 1.3});
  for (unsigned n = 0; n <= 3; ++n)
    for (unsigned k = 0; k <= 3; ++k)
      if (n != k) CHECK(weak_orthogonality_check(2, n, 1, k, f) <= 1e-10);
  CHECK_THROWS(weak_orthogonality_check(1, 2, 0, 2, f));
}

TEST_CASE("cross inner products") {
  CHECK(rel(cross_inner(1, 0, Params::exact(1, 2)), -pi * e) < 1e-13);
  CHECK(cross_inner(2, 1, Params::exact(1)) == std::complex<double>(0.0));
  for (const Params& p : test_params())
    for (unsigned m = 1; m <= 4; ++m)
      for (unsigned n = 0; n <= 4; ++n) {
        const auto exact = inner_product_exact(gchp::gchp(m, n, p), gchp::gchp(m - 1, n, p), p);
        const double scale = std::sqrt(gchp_norm_sq(m, n, p) * gchp_norm_sq(m - 1, n, p));
        CHECK(std::abs(cross_inner(m, n, p) - exact) <= 1e-9 * scale);
      }
}

TEST_CASE("sesquilinearity") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> num(-3, 3);
  auto random_poly = [&] {
    BiPoly p;
    for (unsigned j = 0; j <= 2; ++j)
      for (unsigned k = 0; k <= 2; ++k) p += BiPoly::monomial(j, k, Coefficient::exact(num(rng), num(rng)));
    return p;
  };
  const Params p = Params::exact(2, 1, 1);
  const Coefficient a = Coefficient::exact(Rational(1, 3), 2);
  for (int t = 0; t < 5; ++t) {
    const BiPoly f = random_poly(), g = random_poly(), h = random_poly();
    CHECK(inner_product_reduced(a * f + g, h, p) ==
          a * inner_product_reduced(f, h, p) + inner_product_reduced(g, h, p));
    CHECK(inner_product_reduced(f, a * g, p) == a.conj() * inner_product_reduced(f, g, p));
  }
}

TEST_CASE("orthogonality holds iff xi = 0") {
  CHECK_FALSE(orthogonality_iff_xi_zero(Params::exact(1), 3));
  CHECK_FALSE(orthogonality_iff_xi_zero(Params::exact(3), 3));
  CHECK(orthogonality_iff_xi_zero(Params::exact(1, 2), 1));
  CHECK(orthogonality_iff_xi_zero(Params::exact(2, 0, 1), 2));
  CHECK(orthogonality_iff_xi_zero(Params::floating(2.0, {0.0, 1.0}), 2));
}

TEST_CASE("inner product report and the three methods") {
  for (const Params& p : test_params())
    for (unsigned m = 0; m <= 3; ++m)
      for (unsigned n = 0; n <= 3; ++n) {
        const InnerProductReport r = inner_product_report(gchp::gchp(m, n, p), gchp::gchp(n, m, p), p);
        CHECK(r.max_rel_delta <= 1e-9);
      }
}
