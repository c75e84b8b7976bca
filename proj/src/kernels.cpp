#include "gchp/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace gchp::kernels {

GaussHermiteRule gauss_hermite(unsigned order) {
  if (order == 0) throw std::invalid_argument("Gauss-Hermite order must be positive");
  constexpr double pi_m4 = 0.7511255444649425;  // pi^{-1/4}
  constexpr int max_iterations = 100;
  const int n = static_cast<int>(order);
  GaussHermiteRule rule{std::vector<double>(order), std::vector<double>(order)};
  auto& x = rule.nodes;
  auto& w = rule.weights;

  double z = 0.0;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // asymptotic starting guesses for the largest roots first
    if (i == 0)
      z = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -0.16667);
    else if (i == 1)
      z -= 1.14 * std::pow(static_cast<double>(n), 0.426) / z;
    else if (i == 2)
      z = 1.86 * z - 0.86 * x[0];
    else if (i == 3)
      z = 1.91 * z - 0.91 * x[1];
    else
      z = 2.0 * z - x[i - 2];

    double pp = 0.0;
    for (int it = 0; it < max_iterations; ++it) {
      // orthonormal Hermite recurrence
      double p1 = pi_m4;
      double p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = z * std::sqrt(2.0 / (j + 1)) * p2 - std::sqrt(static_cast<double>(j) / (j + 1)) * p3;
      }
      pp = std::sqrt(2.0 * n) * p2;
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) <= 1e-15 * std::max(1.0, std::abs(z))) break;
    }
    x[i] = z;
    x[n - 1 - i] = -z;
    w[i] = 2.0 / (pp * pp);
    w[n - 1 - i] = w[i];
  }
  if (n % 2 == 1) x[n / 2] = 0.0;
  return rule;
}

std::complex<double> quad_sum_serial(const DenseGrid& f, const DenseGrid& g,
                                     const GaussHermiteRule& rule, std::complex<double> shift,
                                     double scale) {
  const std::size_t q = rule.nodes.size();
  std::complex<double> total = 0.0;
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) {
      const std::complex<double> z = shift + scale * std::complex<double>(rule.nodes[i], rule.nodes[j]);
      total += rule.weights[i] * rule.weights[j] * eval_dense(f, z) * std::conj(eval_dense(g, z));
    }
  return total;
}

std::complex<double> quad_sum_omp(const DenseGrid& f, const DenseGrid& g,
                                  const GaussHermiteRule& rule, std::complex<double> shift,
                                  double scale) {
  const long q = static_cast<long>(rule.nodes.size());
  double re = 0.0;
  double im = 0.0;
#pragma omp parallel for collapse(2) reduction(+ : re, im) schedule(static)
  for (long i = 0; i < q; ++i)
    for (long j = 0; j < q; ++j) {
      const std::complex<double> z = shift + scale * std::complex<double>(rule.nodes[i], rule.nodes[j]);
      const std::complex<double> v =
          rule.weights[i] * rule.weights[j] * eval_dense(f, z) * std::conj(eval_dense(g, z));
      re += v.real();
      im += v.imag();
    }
  return {re, im};
}

void eval_batch_serial(const DenseGrid& p, std::span<const std::complex<double>> zs,
                       std::span<std::complex<double>> out) {
  if (out.size() != zs.size()) throw std::invalid_argument("eval_batch: size mismatch");
  for (std::size_t i = 0; i < zs.size(); ++i) out[i] = eval_dense(p, zs[i]);
}

void eval_batch_omp(const DenseGrid& p, std::span<const std::complex<double>> zs,
                    std::span<std::complex<double>> out) {
  if (out.size() != zs.size()) throw std::invalid_argument("eval_batch: size mismatch");
  const long count = static_cast<long>(zs.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < count; ++i) out[i] = eval_dense(p, zs[i]);
}

}  // namespace gchp::kernels
