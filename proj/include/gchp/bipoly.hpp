#pragma once

// Dense bivariate polynomials in z and z*.
//
// p(z, z*) = sum_{j,k} p_{jk} z^j (z*)^k is stored as a (deg_z+1) x (deg_zbar+1)
// grid, row j = power of z, column k = power of z*. z and z* are treated as
// independent symbols by every algebraic operation; only eval() ties z* to
// the complex conjugate of z.
//
// Every public operation returns a normalized polynomial: trailing all-zero
// rows and columns are trimmed, so deg_z()/deg_zbar() are canonical. The zero
// polynomial is the 1x1 grid {0}.

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "gchp/coefficient.hpp"

namespace gchp {

class BiPoly {
 public:
  using Grid = std::vector<std::vector<Coefficient>>;

  /// The zero polynomial in the given mode.
  explicit BiPoly(Mode mode = Mode::exact);

  static BiPoly constant(const Coefficient& c);
  static BiPoly monomial(std::size_t j, std::size_t k, const Coefficient& c);
  static BiPoly z(Mode mode) { return monomial(1, 0, Coefficient::one(mode)); }
  static BiPoly zbar(Mode mode) { return monomial(0, 1, Coefficient::one(mode)); }
  /// Rows are z powers; ragged rows are padded with zeros. All entries must
  /// share one mode. An empty grid gives the zero polynomial in `mode`.
  static BiPoly from_grid(const Grid& rows, Mode mode = Mode::exact);

  Mode mode() const { return mode_; }
  std::size_t deg_z() const { return rows_ - 1; }
  std::size_t deg_zbar() const { return cols_ - 1; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_zero() const;

  /// p_{jk}; zero outside the stored grid.
  Coefficient at(std::size_t j, std::size_t k) const;
  Grid grid() const;

  BiPoly& operator+=(const BiPoly& rhs);
  BiPoly& operator-=(const BiPoly& rhs);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const Coefficient& c, const BiPoly& p);
  friend BiPoly operator*(const BiPoly& p, const Coefficient& c) { return c * p; }
  BiPoly operator-() const;

  /// Structural equality of the normalized grids (exact for EXACT mode).
  friend bool operator==(const BiPoly& a, const BiPoly& b);

  BiPoly to_mode(Mode target) const;

  /// The polynomial q with q(z, z*) = conj(p(z, z*)) when z* = conj z:
  /// q_{jk} = conj(p_{kj}).
  BiPoly conjugate() const;

  /// p(z_image, zbar_image): formal composition.
  BiPoly substitute(const BiPoly& z_image, const BiPoly& zbar_image) const;

  /// p(sz * z, szbar * z*).
  BiPoly scaled(const Coefficient& sz, const Coefficient& szbar) const;

  /// Entries p_{j,j-offset} kept (the offset-th subdiagonal), all others zeroed.
  BiPoly diagonal(std::size_t offset) const;

  /// Drops the z*^{cols-1} column.
  BiPoly drop_last_column() const;

  /// Largest |p_{jk}|.
  double max_abs() const;

  std::string to_string() const;

 private:
  BiPoly(Mode mode, std::size_t rows, std::size_t cols);
  Coefficient& ref(std::size_t j, std::size_t k) { return coeffs_[j * cols_ + k]; }
  const Coefficient& ref(std::size_t j, std::size_t k) const { return coeffs_[j * cols_ + k]; }
  void normalize();
  void require_same_mode(const BiPoly& rhs, const char* op) const;

  friend BiPoly d_dz(const BiPoly& p);
  friend BiPoly d_dzbar(const BiPoly& p);
  friend Coefficient eval(const BiPoly& p, const Coefficient& z);

  Mode mode_;
  std::size_t rows_ = 1;
  std::size_t cols_ = 1;
  std::vector<Coefficient> coeffs_;
};

BiPoly add(const BiPoly& a, const BiPoly& b);
BiPoly mul(const BiPoly& a, const BiPoly& b);
BiPoly pow(const BiPoly& base, unsigned exponent);

BiPoly d_dz(const BiPoly& p);
BiPoly d_dzbar(const BiPoly& p);

/// sum p_{jk} z^j conj(z)^k via nested Horner. z must match p's mode.
Coefficient eval(const BiPoly& p, const Coefficient& z);
/// Float fast path; EXACT polynomials are converted coefficient-wise.
std::complex<double> eval(const BiPoly& p, std::complex<double> z);

/// EXACT operands: exact equality, `tol` ignored. Otherwise coefficient-wise
/// |a_{jk} - b_{jk}| <= tol * max(|a|_max, |b|_max) over the union shape.
bool equal_within(const BiPoly& a, const BiPoly& b, double tol);

/// Largest coefficient-wise |a - b| divided by max(|a|_max, |b|_max, 1e-300).
double relative_difference(const BiPoly& a, const BiPoly& b);

/// Row-major float copy of the coefficient grid, used by the numeric kernels.
struct DenseGrid {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::complex<double>> values;
};

DenseGrid dense_grid(const BiPoly& p);

}  // namespace gchp
