#include "gchp/bipoly.hpp"

#include <algorithm>
#include <sstream>

namespace gchp {

BiPoly::BiPoly(Mode mode) : BiPoly(mode, 1, 1) {}

BiPoly::BiPoly(Mode mode, std::size_t rows, std::size_t cols)
    : mode_(mode),
      rows_(std::max<std::size_t>(rows, 1)),
      cols_(std::max<std::size_t>(cols, 1)),
      coeffs_(rows_ * cols_, Coefficient::zero(mode)) {}

BiPoly BiPoly::constant(const Coefficient& c) {
  BiPoly p(c.mode(), 1, 1);
  p.ref(0, 0) = c;
  return p;
}

BiPoly BiPoly::monomial(std::size_t j, std::size_t k, const Coefficient& c) {
  BiPoly p(c.mode(), j + 1, k + 1);
  p.ref(j, k) = c;
  p.normalize();
  return p;
}

BiPoly BiPoly::from_grid(const Grid& rows, Mode mode) {
  if (rows.empty()) return BiPoly(mode);
  std::size_t cols = 1;
  for (const auto& row : rows) cols = std::max(cols, row.size());
  for (const auto& row : rows)
    if (!row.empty()) {
      mode = row.front().mode();
      break;
    }
  BiPoly p(mode, rows.size(), cols);
  for (std::size_t j = 0; j < rows.size(); ++j)
    for (std::size_t k = 0; k < rows[j].size(); ++k) {
      if (rows[j][k].mode() != mode) throw ModeMismatch("mixed modes in coefficient grid");
      p.ref(j, k) = rows[j][k];
    }
  p.normalize();
  return p;
}

bool BiPoly::is_zero() const {
  return rows_ == 1 && cols_ == 1 && coeffs_.front().is_zero();
}

Coefficient BiPoly::at(std::size_t j, std::size_t k) const {
  if (j >= rows_ || k >= cols_) return Coefficient::zero(mode_);
  return ref(j, k);
}

BiPoly::Grid BiPoly::grid() const {
  Grid g(rows_);
  for (std::size_t j = 0; j < rows_; ++j)
    g[j].assign(coeffs_.begin() + static_cast<std::ptrdiff_t>(j * cols_),
                coeffs_.begin() + static_cast<std::ptrdiff_t>((j + 1) * cols_));
  return g;
}

void BiPoly::normalize() {
  std::size_t rows = rows_;
  std::size_t cols = cols_;
  auto row_zero = [&](std::size_t j) {
    for (std::size_t k = 0; k < cols; ++k)
      if (!ref(j, k).is_zero()) return false;
    return true;
  };
  auto col_zero = [&](std::size_t k) {
    for (std::size_t j = 0; j < rows; ++j)
      if (!ref(j, k).is_zero()) return false;
    return true;
  };
  while (rows > 1 && row_zero(rows - 1)) --rows;
  while (cols > 1 && col_zero(cols - 1)) --cols;
  if (rows == rows_ && cols == cols_) return;
  std::vector<Coefficient> trimmed;
  trimmed.reserve(rows * cols);
  for (std::size_t j = 0; j < rows; ++j)
    for (std::size_t k = 0; k < cols; ++k) trimmed.push_back(std::move(ref(j, k)));
  coeffs_ = std::move(trimmed);
  rows_ = rows;
  cols_ = cols;
}

void BiPoly::require_same_mode(const BiPoly& rhs, const char* op) const {
  if (mode_ != rhs.mode_) throw ModeMismatch(std::string("mixed exact/float polynomials in ") + op);
}

BiPoly& BiPoly::operator+=(const BiPoly& rhs) {
  require_same_mode(rhs, "+");
  if (rhs.rows_ > rows_ || rhs.cols_ > cols_) {
    BiPoly grown(mode_, std::max(rows_, rhs.rows_), std::max(cols_, rhs.cols_));
    for (std::size_t j = 0; j < rows_; ++j)
      for (std::size_t k = 0; k < cols_; ++k) grown.ref(j, k) = std::move(ref(j, k));
    *this = std::move(grown);
  }
  for (std::size_t j = 0; j < rhs.rows_; ++j)
    for (std::size_t k = 0; k < rhs.cols_; ++k)
      if (!rhs.ref(j, k).is_zero()) ref(j, k) += rhs.ref(j, k);
  normalize();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& rhs) { return *this += -rhs; }

BiPoly BiPoly::operator-() const {
  BiPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  a.require_same_mode(b, "*");
  BiPoly out(a.mode_, a.rows_ + b.rows_ - 1, a.cols_ + b.cols_ - 1);
  for (std::size_t j = 0; j < a.rows_; ++j)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Coefficient& x = a.ref(j, k);
      if (x.is_zero()) continue;
      for (std::size_t l = 0; l < b.rows_; ++l)
        for (std::size_t p = 0; p < b.cols_; ++p) {
          const Coefficient& y = b.ref(l, p);
          if (y.is_zero()) continue;
          out.ref(j + l, k + p) += x * y;
        }
    }
  out.normalize();
  return out;
}

BiPoly operator*(const Coefficient& c, const BiPoly& p) {
  if (c.mode() != p.mode_) throw ModeMismatch("mixed exact/float scalar * polynomial");
  BiPoly out = p;
  for (auto& x : out.coeffs_)
    if (!x.is_zero()) x *= c;
  out.normalize();
  return out;
}

bool operator==(const BiPoly& a, const BiPoly& b) {
  return a.mode_ == b.mode_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.coeffs_ == b.coeffs_;
}

BiPoly BiPoly::to_mode(Mode target) const {
  if (target == mode_) return *this;
  BiPoly out(target, rows_, cols_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = coeffs_[i].to_mode(target);
  out.normalize();
  return out;
}

BiPoly BiPoly::conjugate() const {
  BiPoly out(mode_, cols_, rows_);
  for (std::size_t j = 0; j < rows_; ++j)
    for (std::size_t k = 0; k < cols_; ++k) out.ref(k, j) = ref(j, k).conj();
  return out;
}

BiPoly BiPoly::substitute(const BiPoly& z_image, const BiPoly& zbar_image) const {
  require_same_mode(z_image, "substitute");
  require_same_mode(zbar_image, "substitute");
  // Horner in z over rows, each row a Horner in z*.
  BiPoly result(mode_);
  for (std::size_t jj = rows_; jj-- > 0;) {
    BiPoly row(mode_);
    for (std::size_t kk = cols_; kk-- > 0;) {
      row = row * zbar_image;
      if (!ref(jj, kk).is_zero()) row += constant(ref(jj, kk));
    }
    result = result * z_image + row;
  }
  return result;
}

BiPoly BiPoly::scaled(const Coefficient& sz, const Coefficient& szbar) const {
  BiPoly out = *this;
  Coefficient zpow = Coefficient::one(mode_);
  for (std::size_t j = 0; j < rows_; ++j) {
    Coefficient factor = zpow;
    for (std::size_t k = 0; k < cols_; ++k) {
      if (!out.ref(j, k).is_zero()) out.ref(j, k) *= factor;
      factor *= szbar;
    }
    zpow *= sz;
  }
  out.normalize();
  return out;
}

BiPoly BiPoly::diagonal(std::size_t offset) const {
  BiPoly out(mode_, rows_, cols_);
  for (std::size_t j = offset; j < rows_; ++j)
    if (j - offset < cols_) out.ref(j, j - offset) = ref(j, j - offset);
  out.normalize();
  return out;
}

BiPoly BiPoly::drop_last_column() const {
  if (cols_ == 1) return BiPoly(mode_);
  BiPoly out(mode_, rows_, cols_ - 1);
  for (std::size_t j = 0; j < rows_; ++j)
    for (std::size_t k = 0; k + 1 < cols_; ++k) out.ref(j, k) = ref(j, k);
  out.normalize();
  return out;
}

double BiPoly::max_abs() const {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, c.abs());
  return m;
}

std::string BiPoly::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t j = 0; j < rows_; ++j)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Coefficient& c = ref(j, k);
      if (c.is_zero()) continue;
      if (!first) out << " + ";
      first = false;
      out << '(' << c.to_string() << ')';
      if (j > 0) out << "*z^" << j;
      if (k > 0) out << "*zb^" << k;
    }
  if (first) out << '0';
  return out.str();
}

BiPoly add(const BiPoly& a, const BiPoly& b) { return a + b; }
BiPoly mul(const BiPoly& a, const BiPoly& b) { return a * b; }

BiPoly pow(const BiPoly& base, unsigned exponent) {
  BiPoly result = BiPoly::constant(Coefficient::one(base.mode()));
  for (unsigned i = 0; i < exponent; ++i) result = result * base;
  return result;
}

BiPoly d_dz(const BiPoly& p) {
  if (p.rows_ == 1) return BiPoly(p.mode_);
  BiPoly out(p.mode_, p.rows_ - 1, p.cols_);
  for (std::size_t j = 1; j < p.rows_; ++j)
    for (std::size_t k = 0; k < p.cols_; ++k)
      if (!p.ref(j, k).is_zero())
        out.ref(j - 1, k) = Coefficient::from_int(static_cast<long>(j), p.mode_) * p.ref(j, k);
  out.normalize();
  return out;
}

BiPoly d_dzbar(const BiPoly& p) {
  if (p.cols_ == 1) return BiPoly(p.mode_);
  BiPoly out(p.mode_, p.rows_, p.cols_ - 1);
  for (std::size_t j = 0; j < p.rows_; ++j)
    for (std::size_t k = 1; k < p.cols_; ++k)
      if (!p.ref(j, k).is_zero())
        out.ref(j, k - 1) = Coefficient::from_int(static_cast<long>(k), p.mode_) * p.ref(j, k);
  out.normalize();
  return out;
}

Coefficient eval(const BiPoly& p, const Coefficient& z) {
  if (z.mode() != p.mode_) throw ModeMismatch("eval: point and polynomial modes differ");
  const Coefficient zbar = z.conj();
  Coefficient result = Coefficient::zero(p.mode_);
  for (std::size_t j = p.rows_; j-- > 0;) {
    Coefficient row = Coefficient::zero(p.mode_);
    for (std::size_t k = p.cols_; k-- > 0;) {
      row *= zbar;
      row += p.ref(j, k);
    }
    result *= z;
    result += row;
  }
  return result;
}

std::complex<double> eval(const BiPoly& p, std::complex<double> z) {
  const DenseGrid g = dense_grid(p);
  const std::complex<double> zbar = std::conj(z);
  std::complex<double> result = 0.0;
  for (std::size_t j = g.rows; j-- > 0;) {
    std::complex<double> row = 0.0;
    for (std::size_t k = g.cols; k-- > 0;) row = row * zbar + g.values[j * g.cols + k];
    result = result * z + row;
  }
  return result;
}

double relative_difference(const BiPoly& a, const BiPoly& b) {
  const std::size_t rows = std::max(a.rows(), b.rows());
  const std::size_t cols = std::max(a.cols(), b.cols());
  const double scale = std::max({a.max_abs(), b.max_abs(), 1e-300});
  double worst = 0.0;
  for (std::size_t j = 0; j < rows; ++j)
    for (std::size_t k = 0; k < cols; ++k)
      worst = std::max(worst, std::abs(a.at(j, k).to_complex() - b.at(j, k).to_complex()));
  return worst / scale;
}

bool equal_within(const BiPoly& a, const BiPoly& b, double tol) {
  if (a.mode() == Mode::exact && b.mode() == Mode::exact) return a == b;
  return relative_difference(a, b) <= tol;
}

DenseGrid dense_grid(const BiPoly& p) {
  DenseGrid g{p.rows(), p.cols(), {}};
  g.values.reserve(g.rows * g.cols);
  for (std::size_t j = 0; j < g.rows; ++j)
    for (std::size_t k = 0; k < g.cols; ++k) g.values.push_back(p.at(j, k).to_complex());
  return g;
}

}  // namespace gchp
