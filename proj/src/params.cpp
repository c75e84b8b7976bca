#include "gchp/params.hpp"

#include <cmath>
#include <stdexcept>

namespace gchp {

Params::Params(Coefficient nu, Coefficient xi) : nu_(std::move(nu)), xi_(std::move(xi)) {
  if (nu_.mode() != xi_.mode()) throw ModeMismatch("nu and xi must share a mode");
  if (!nu_.is_real()) throw std::invalid_argument("nu must be real");
  const bool positive = nu_.is_exact() ? nu_.exact_re() > 0 : nu_.to_complex().real() > 0.0;
  if (!positive) throw std::invalid_argument("nu must be positive");
}

Params Params::exact(const Rational& nu, const Rational& xi_re, const Rational& xi_im) {
  return Params(Coefficient::exact(nu), Coefficient::exact(xi_re, xi_im));
}

Params Params::floating(double nu, std::complex<double> xi) {
  return Params(Coefficient::floating(nu), Coefficient::floating(xi));
}

BiPoly Params::S() const {
  return BiPoly::monomial(1, 0, nu_) + BiPoly::constant(xi_);
}

BiPoly Params::S_conj() const {
  return BiPoly::monomial(0, 1, nu_) + BiPoly::constant(xi_conj());
}

BiPoly Params::shifted_zbar() const {
  return BiPoly::monomial(0, 1, nu_) +
         BiPoly::constant(xi_conj() / Coefficient::from_int(2, mode()));
}

std::optional<Coefficient> Params::exact_sqrt_nu() const {
  if (!nu_.is_exact()) return std::nullopt;
  const Rational& q = nu_.exact_re();
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t()))
    return std::nullopt;
  mpz_class num, den;
  mpz_sqrt(num.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), q.get_den_mpz_t());
  return Coefficient::exact(Rational(num, den));
}

Coefficient Params::sqrt_nu() const {
  if (auto root = exact_sqrt_nu()) return *root;
  return Coefficient::floating(std::sqrt(nu_value()));
}

Coefficient Params::norm_argument() const {
  const Coefficient abs2 = xi_ * xi_conj();
  return abs2 / (Coefficient::from_int(4, mode()) * nu_);
}

Params Params::to_mode(Mode target) const {
  return Params(nu_.to_mode(target), xi_.to_mode(target));
}

std::string Params::label() const {
  return "nu=" + nu_.to_string() + ",xi=" + xi_.to_string();
}

}  // namespace gchp
