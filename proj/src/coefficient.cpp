#include "gchp/coefficient.hpp"

#include <cctype>
#include <cstdio>

namespace gchp {

const char* to_string(Mode mode) {
  return mode == Mode::exact ? "exact" : "float";
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty number");
  if (text.find('/') != std::string::npos) {
    Rational q;
    if (q.set_str(text, 10) != 0 || q.get_den() == 0)
      throw std::invalid_argument("malformed rational '" + text + "'");
    q.canonicalize();
    return q;
  }
  // decimal: [sign] digits [. digits] [e|E [sign] digits]
  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') negative = text[pos++] == '-';
  mpz_class mantissa = 0;
  long scale = 0;
  bool digits = false;
  bool after_point = false;
  for (; pos < text.size(); ++pos) {
    const char ch = text[pos];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      mantissa = mantissa * 10 + (ch - '0');
      if (after_point) --scale;
      digits = true;
    } else if (ch == '.' && !after_point) {
      after_point = true;
    } else {
      break;
    }
  }
  if (!digits) throw std::invalid_argument("malformed number '" + text + "'");
  if (pos < text.size()) {
    if (text[pos] != 'e' && text[pos] != 'E')
      throw std::invalid_argument("malformed number '" + text + "'");
    const std::string exponent = text.substr(pos + 1);
    std::size_t used = 0;
    long e = 0;
    try {
      e = std::stol(exponent, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != exponent.size())
      throw std::invalid_argument("malformed exponent in '" + text + "'");
    scale += e;
  }
  mpz_class ten_power;
  mpz_ui_pow_ui(ten_power.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
  Rational q = scale < 0 ? Rational(mantissa, ten_power) : Rational(mantissa * ten_power);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

Coefficient Coefficient::exact(Rational re, Rational im) {
  re.canonicalize();
  im.canonicalize();
  return Coefficient(GaussianRational{std::move(re), std::move(im)});
}

Coefficient Coefficient::floating(std::complex<double> value) { return Coefficient(value); }

Coefficient Coefficient::from_int(long value, Mode mode) {
  if (mode == Mode::exact) return exact(Rational(value));
  return floating(static_cast<double>(value));
}

Coefficient Coefficient::ratio(long p, long q, Mode mode) {
  if (mode == Mode::exact) return exact(Rational(p, q));
  return floating(static_cast<double>(p) / static_cast<double>(q));
}

bool Coefficient::is_zero() const {
  if (const auto* g = std::get_if<GaussianRational>(&value_)) return g->re == 0 && g->im == 0;
  return std::get<std::complex<double>>(value_) == std::complex<double>(0.0, 0.0);
}

bool Coefficient::is_real() const {
  if (const auto* g = std::get_if<GaussianRational>(&value_)) return g->im == 0;
  return std::get<std::complex<double>>(value_).imag() == 0.0;
}

const Rational& Coefficient::exact_re() const {
  if (const auto* g = std::get_if<GaussianRational>(&value_)) return g->re;
  throw ModeMismatch("exact_re() on a float coefficient");
}

const Rational& Coefficient::exact_im() const {
  if (const auto* g = std::get_if<GaussianRational>(&value_)) return g->im;
  throw ModeMismatch("exact_im() on a float coefficient");
}

std::complex<double> Coefficient::to_complex() const {
  if (const auto* g = std::get_if<GaussianRational>(&value_)) return {g->re.get_d(), g->im.get_d()};
  return std::get<std::complex<double>>(value_);
}

Coefficient Coefficient::conj() const {
  if (const auto* g = std::get_if<GaussianRational>(&value_))
    return Coefficient(GaussianRational{g->re, -g->im});
  return Coefficient(std::conj(std::get<std::complex<double>>(value_)));
}

Coefficient Coefficient::to_mode(Mode target) const {
  if (target == mode()) return *this;
  if (target == Mode::floating) return floating(to_complex());
  throw ModeMismatch("cannot convert a float coefficient to exact mode");
}

void Coefficient::require_same_mode(const Coefficient& rhs, const char* op) const {
  if (mode() != rhs.mode())
    throw ModeMismatch(std::string("mixed exact/float operands in ") + op);
}

Coefficient& Coefficient::operator+=(const Coefficient& rhs) {
  require_same_mode(rhs, "+");
  if (auto* g = std::get_if<GaussianRational>(&value_)) {
    const auto& r = std::get<GaussianRational>(rhs.value_);
    g->re += r.re;
    g->im += r.im;
  } else {
    std::get<std::complex<double>>(value_) += std::get<std::complex<double>>(rhs.value_);
  }
  return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& rhs) {
  require_same_mode(rhs, "-");
  if (auto* g = std::get_if<GaussianRational>(&value_)) {
    const auto& r = std::get<GaussianRational>(rhs.value_);
    g->re -= r.re;
    g->im -= r.im;
  } else {
    std::get<std::complex<double>>(value_) -= std::get<std::complex<double>>(rhs.value_);
  }
  return *this;
}

Coefficient& Coefficient::operator*=(const Coefficient& rhs) {
  require_same_mode(rhs, "*");
  if (auto* g = std::get_if<GaussianRational>(&value_)) {
    const auto& r = std::get<GaussianRational>(rhs.value_);
    if (g->im == 0 && r.im == 0) {
      g->re *= r.re;
      return *this;
    }
    Rational re = g->re * r.re - g->im * r.im;
    Rational im = g->re * r.im + g->im * r.re;
    g->re = std::move(re);
    g->im = std::move(im);
  } else {
    std::get<std::complex<double>>(value_) *= std::get<std::complex<double>>(rhs.value_);
  }
  return *this;
}

Coefficient& Coefficient::operator/=(const Coefficient& rhs) {
  require_same_mode(rhs, "/");
  if (rhs.is_zero()) throw std::domain_error("division by zero coefficient");
  if (auto* g = std::get_if<GaussianRational>(&value_)) {
    const auto& r = std::get<GaussianRational>(rhs.value_);
    if (r.im == 0) {
      g->re /= r.re;
      g->im /= r.re;
      return *this;
    }
    const Rational denom = r.re * r.re + r.im * r.im;
    Rational re = (g->re * r.re + g->im * r.im) / denom;
    Rational im = (g->im * r.re - g->re * r.im) / denom;
    g->re = std::move(re);
    g->im = std::move(im);
  } else {
    std::get<std::complex<double>>(value_) /= std::get<std::complex<double>>(rhs.value_);
  }
  return *this;
}

Coefficient Coefficient::operator-() const {
  if (const auto* g = std::get_if<GaussianRational>(&value_))
    return Coefficient(GaussianRational{-g->re, -g->im});
  return Coefficient(-std::get<std::complex<double>>(value_));
}

bool operator==(const Coefficient& a, const Coefficient& b) {
  if (a.mode() != b.mode()) return false;
  if (a.is_exact()) return a.exact_re() == b.exact_re() && a.exact_im() == b.exact_im();
  return a.to_complex() == b.to_complex();
}

std::string Coefficient::to_string() const {
  if (const auto* g = std::get_if<GaussianRational>(&value_)) {
    if (g->im == 0) return g->re.get_str();
    std::string im_part;
    const Rational mag = ::abs(g->im);
    if (mag == 1)
      im_part = "i";
    else if (mag.get_den() == 1)
      im_part = mag.get_str() + "i";
    else if (mag.get_num() == 1)
      im_part = "i/" + mag.get_den().get_str();
    else
      im_part = mag.get_num().get_str() + "i/" + mag.get_den().get_str();
    if (g->re == 0) return (g->im < 0 ? "-" : "") + im_part;
    return g->re.get_str() + (g->im < 0 ? "-" : "+") + im_part;
  }
  const auto v = std::get<std::complex<double>>(value_);
  char buf[80];
  if (v.imag() == 0.0)
    std::snprintf(buf, sizeof buf, "%.17g", v.real());
  else
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", v.real(), v.imag());
  return buf;
}

Coefficient pow(const Coefficient& base, unsigned exponent) {
  Coefficient result = Coefficient::one(base.mode());
  Coefficient square = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= square;
    exponent >>= 1U;
    if (exponent != 0) square *= square;
  }
  return result;
}

Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

Rational binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

}  // namespace gchp
