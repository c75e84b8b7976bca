#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "gchp/constructors.hpp"
#include "gchp/inner_products.hpp"
#include "gchp/kernels.hpp"

using namespace gchp;

TEST_CASE("Gauss-Hermite rule") {
  // numpy.polynomial.hermite.hermgauss(10)
  const double nodes[] = {0.3429013272237046, 1.0366108297895136, 1.7566836492998816,
                          2.5327316742327897, 3.4361591188377374};
  const double weights[] = {0.6108626337353258, 0.2401386110823147, 0.033874394455481106,
                            0.0013436457467812324, 7.640432855232641e-06};
  const auto rule = kernels::gauss_hermite(10);  // nodes descending
  for (int i = 0; i < 5; ++i) {
    CHECK(rule.nodes[4 - i] == doctest::Approx(nodes[i]).epsilon(1e-13));
    CHECK(rule.nodes[5 + i] == doctest::Approx(-nodes[i]).epsilon(1e-13));
    CHECK(rule.weights[4 - i] == doctest::Approx(weights[i]).epsilon(1e-12));
    CHECK(rule.weights[5 + i] == doctest::Approx(weights[i]).epsilon(1e-12));
  }
  for (unsigned order : {1u, 2u, 7u, 20u, 40u}) {
    const auto r = kernels::gauss_hermite(order);
    double sum = 0.0, second = 0.0;
    for (unsigned i = 0; i < order; ++i) {
      sum += r.weights[i];
      second += r.weights[i] * r.nodes[i] * r.nodes[i];
    }
    CHECK(sum == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-13));
    if (order >= 2) CHECK(second == doctest::Approx(std::sqrt(std::numbers::pi) / 2).epsilon(1e-12));
  }
  CHECK_THROWS(kernels::gauss_hermite(0));
}

TEST_CASE("serial and OpenMP quadrature agree") {
  const Params p = Params::floating(0.75, {1.0, -0.5});
  for (unsigned m = 0; m <= 6; m += 2)
    for (unsigned n = 0; n <= 6; n += 3) {
      const BiPoly f = gchp::gchp(m, n, p);
      const BiPoly g = gchp::gchp(n, m, p);
      const auto serial = inner_product_quad(f, g, p, 0, Kernel::serial);
      const auto omp = inner_product_quad(f, g, p, 0, Kernel::omp);
      CHECK(std::abs(serial - omp) <= 1e-12 * std::max(1.0, std::abs(serial)));
    }
}

TEST_CASE("serial and OpenMP batch evaluation agree") {
  const DenseGrid g = dense_grid(gchp::gchp(5, 4, Params::floating(2.0, {1.0, 1.0})));
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  std::vector<std::complex<double>> zs(2000);
  for (auto& z : zs) z = {coord(rng), coord(rng)};
  std::vector<std::complex<double>> a(zs.size()), b(zs.size());
  kernels::eval_batch_serial(g, zs, a);
  kernels::eval_batch_omp(g, zs, b);
  CHECK(a == b);
  std::vector<std::complex<double>> wrong(3);
  CHECK_THROWS(kernels::eval_batch_omp(g, zs, wrong));
}

TEST_CASE("dense evaluation matches polynomial evaluation") {
  const BiPoly p = gchp::gchp(3, 2, Params::floating(0.5, {0.0, -1.0}));
  const DenseGrid g = dense_grid(p);
  const std::complex<double> z(0.4, 1.1);
  CHECK(std::abs(kernels::eval_dense(g, z) - eval(p, z)) < 1e-13);
}
