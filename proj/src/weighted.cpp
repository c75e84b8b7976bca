#include "gchp/weighted.hpp"

#include <stdexcept>

namespace gchp {

namespace {

Coefficient half(Mode mode) { return Coefficient::ratio(1, 2, mode); }

void require_same_exponent(const WeightedPoly& f, const WeightedPoly& g) {
  if (!(f.exponent == g.exponent))
    throw std::invalid_argument("weighted polynomials with different exponents cannot be added");
}

}  // namespace

GaussExponent GaussExponent::zero(Mode mode) {
  return {Coefficient::zero(mode), Coefficient::zero(mode), Coefficient::zero(mode)};
}

GaussExponent GaussExponent::eigen_weight(const Params& params) {
  const Mode mode = params.mode();
  return {-half(mode) * params.nu(), Coefficient::zero(mode), -half(mode) * params.xi()};
}

GaussExponent GaussExponent::rodrigues_weight(const Params& params) {
  const Mode mode = params.mode();
  return {-params.nu(), -half(mode) * params.xi_conj(), Coefficient::zero(mode)};
}

GaussExponent operator+(const GaussExponent& x, const GaussExponent& y) {
  return {x.a + y.a, x.b + y.b, x.c + y.c};
}

GaussExponent GaussExponent::operator-() const { return {-a, -b, -c}; }

WeightedPoly operator+(const WeightedPoly& f, const WeightedPoly& g) {
  require_same_exponent(f, g);
  return {f.poly + g.poly, f.exponent};
}

WeightedPoly operator-(const WeightedPoly& f, const WeightedPoly& g) {
  require_same_exponent(f, g);
  return {f.poly - g.poly, f.exponent};
}

WeightedPoly operator*(const BiPoly& p, const WeightedPoly& f) { return {p * f.poly, f.exponent}; }

WeightedPoly operator*(const Coefficient& c, const WeightedPoly& f) { return {c * f.poly, f.exponent}; }

WeightedPoly times_exp(const WeightedPoly& f, const GaussExponent& extra) {
  return {f.poly, f.exponent + extra};
}

WeightedPoly wf_d_dz(const WeightedPoly& f) {
  const BiPoly dexp =
      BiPoly::monomial(0, 1, f.exponent.a) + BiPoly::constant(f.exponent.b);  // a z* + b
  return {d_dz(f.poly) + f.poly * dexp, f.exponent};
}

WeightedPoly wf_d_dzbar(const WeightedPoly& f) {
  const BiPoly dexp =
      BiPoly::monomial(1, 0, f.exponent.a) + BiPoly::constant(f.exponent.c);  // a z + c
  return {d_dzbar(f.poly) + f.poly * dexp, f.exponent};
}

WeightedPoly apply_A(const Params& params, const WeightedPoly& f) {
  return wf_d_dzbar(f) + (half(params.mode()) * params.S()) * f;
}

WeightedPoly apply_A_star(const Params& params, const WeightedPoly& f) {
  const WeightedPoly df = wf_d_dz(f);
  return (half(params.mode()) * params.S_conj()) * f - df;
}

WeightedPoly apply_L_direct(const Params& params, const WeightedPoly& f) {
  const Mode mode = params.mode();
  const BiPoly S = params.S();
  const BiPoly Sc = params.S_conj();
  const WeightedPoly fz = wf_d_dz(f);
  const WeightedPoly fzb = wf_d_dzbar(f);
  const WeightedPoly fzzb = wf_d_dzbar(fz);
  const Coefficient quarter = Coefficient::ratio(1, 4, mode);
  // -d2f + (-S fz + S* fzb)/2 + |S|^2 f / 4
  WeightedPoly out = (-Coefficient::one(mode)) * fzzb;
  out = out - (half(mode) * S) * fz;
  out = out + (half(mode) * Sc) * fzb;
  out = out + (quarter * (S * Sc)) * f;
  return out;
}

WeightedPoly apply_L_ladder(const Params& params, const WeightedPoly& f) {
  const WeightedPoly aa = apply_A(params, apply_A_star(params, f));
  return aa - (half(params.mode()) * params.nu()) * f;
}

WeightedPoly apply_L(const Params& params, const WeightedPoly& f) {
  WeightedPoly direct = apply_L_direct(params, f);
  if (params.mode() == Mode::exact) {
    const WeightedPoly ladder = apply_L_ladder(params, f);
    if (!(ladder.poly == direct.poly) || !(ladder.exponent == direct.exponent))
      throw InternalDisagreement("apply_L: direct and ladder forms disagree");
  }
  return direct;
}

WeightedPoly ground_state(const Params& params, unsigned m) {
  return {BiPoly::monomial(m, 0, Coefficient::one(params.mode())),
          GaussExponent::eigen_weight(params)};
}

WeightedPoly eigenfunction(const Params& params, unsigned m, unsigned n) {
  WeightedPoly g = ground_state(params, m);
  for (unsigned i = 0; i < n; ++i) g = apply_A_star(params, g);
  return g;
}

WeightedPoly apply_A_star_power_conjugated(const Params& params, const WeightedPoly& f, unsigned n) {
  const Mode mode = params.mode();
  // -1/2 z S* = -nu/2 z z* - conj(xi)/2 z
  const GaussExponent weight{-half(mode) * params.nu(), -half(mode) * params.xi_conj(),
                             Coefficient::zero(mode)};
  WeightedPoly g = times_exp(f, weight);
  for (unsigned i = 0; i < n; ++i) g = wf_d_dz(g);
  if (n % 2 == 1) g = (-Coefficient::one(mode)) * g;
  return times_exp(g, -weight);
}

BiPoly eigen_residual(const Params& params, unsigned m, unsigned n) {
  const WeightedPoly g = eigenfunction(params, m, n);
  const WeightedPoly Lg = apply_L(params, g);
  const Coefficient level =
      params.nu() * Coefficient::ratio(2 * static_cast<long>(n) + 1, 2, params.mode());
  return (Lg - level * g).poly;
}

}  // namespace gchp
