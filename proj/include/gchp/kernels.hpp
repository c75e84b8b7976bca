#pragma once

// Data-parallel numeric kernels. Each kernel has a serial reference
// implementation and an OpenMP one; tests hold them to the same answers and
// bench/ compares their speed.

#include <complex>
#include <span>
#include <vector>

#include "gchp/bipoly.hpp"

namespace gchp::kernels {

/// n-point Gauss-Hermite rule for the weight exp(-x^2) on the real line.
struct GaussHermiteRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussHermiteRule gauss_hermite(unsigned order);

/// Tensor-product sum
///   sum_{i,j} W_i W_j f(z_ij) conj(g(z_ij)),  z_ij = shift + scale (x_i + i x_j).
std::complex<double> quad_sum_serial(const DenseGrid& f, const DenseGrid& g,
                                     const GaussHermiteRule& rule, std::complex<double> shift,
                                     double scale);
std::complex<double> quad_sum_omp(const DenseGrid& f, const DenseGrid& g,
                                  const GaussHermiteRule& rule, std::complex<double> shift,
                                  double scale);

/// out[i] = p(zs[i], conj(zs[i])). out.size() must equal zs.size().
void eval_batch_serial(const DenseGrid& p, std::span<const std::complex<double>> zs,
                       std::span<std::complex<double>> out);
void eval_batch_omp(const DenseGrid& p, std::span<const std::complex<double>> zs,
                    std::span<std::complex<double>> out);

/// Horner evaluation of a dense grid at (z, conj z).
inline std::complex<double> eval_dense(const DenseGrid& p, std::complex<double> z) {
  const std::complex<double> zbar = std::conj(z);
  std::complex<double> result = 0.0;
  for (std::size_t j = p.rows; j-- > 0;) {
    std::complex<double> row = 0.0;
    for (std::size_t k = p.cols; k-- > 0;) row = row * zbar + p.values[j * p.cols + k];
    result = result * z + row;
  }
  return result;
}

}  // namespace gchp::kernels
