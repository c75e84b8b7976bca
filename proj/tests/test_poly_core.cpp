#include <random>

#include "doctest.h"
#include "gchp/bipoly.hpp"

using namespace gchp;

namespace {

Coefficient q(long p, long d = 1) { return Coefficient::ratio(p, d, Mode::exact); }

BiPoly grid(std::initializer_list<std::initializer_list<long>> rows) {
  BiPoly::Grid g;
  for (const auto& row : rows) {
    auto& r = g.emplace_back();
    for (long v : row) r.push_back(q(v));
  }
  return BiPoly::from_grid(g);
}

BiPoly random_poly(std::mt19937_64& rng, unsigned deg) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 5);
  BiPoly p;
  for (unsigned j = 0; j <= deg; ++j)
    for (unsigned k = 0; k <= deg; ++k) {
      Rational re(num(rng), den(rng));
      Rational im(num(rng), den(rng));
      re.canonicalize();
      im.canonicalize();
      p += BiPoly::monomial(j, k, Coefficient::exact(re, im));
    }
  return p;
}

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-0.25") == Rational(-1, 4));
  CHECK(parse_rational("1e-2") == Rational(1, 100));
  CHECK(parse_rational("6/8") == Rational(3, 4));
  CHECK_THROWS(parse_rational("x"));
  CHECK_THROWS(parse_rational("1/0"));
}

TEST_CASE("coefficient arithmetic and modes") {
  const Coefficient a = Coefficient::exact(1, 2);
  const Coefficient b = Coefficient::exact(Rational(1, 2), -1);
  CHECK(a * b == Coefficient::exact(Rational(5, 2), 0));
  CHECK((a / a) == q(1));
  CHECK(a.conj() == Coefficient::exact(1, -2));
  CHECK(Coefficient::exact(0, Rational(-1, 4)).to_string() == "-i/4");
  CHECK(Coefficient::exact(1, 2).to_string() == "1+2i");
  CHECK_THROWS_AS(a + Coefficient::floating(1.0), ModeMismatch);
  CHECK_THROWS_AS(a / q(0), std::domain_error);
  CHECK(pow(Coefficient::exact(0, 1), 4) == q(1));
  CHECK(factorial(10) == 3628800);
  CHECK(binomial(8, 3) == 56);
}

TEST_CASE("addition") {
  const BiPoly z = BiPoly::z(Mode::exact);
  const BiPoly zb = BiPoly::zbar(Mode::exact);
  const BiPoly s = z + zb;
  CHECK(s.at(1, 0) == q(1));
  CHECK(s.at(0, 1) == q(1));
  CHECK(s.at(1, 1) == q(0));
  CHECK(s + BiPoly() == s);
  const BiPoly t = (z * zb - BiPoly::constant(q(1))) + BiPoly::constant(q(1));
  CHECK(t == z * zb);
  CHECK(t.rows() == 2);
  CHECK(t.cols() == 2);
}

TEST_CASE("multiplication") {
  const BiPoly z = BiPoly::z(Mode::exact);
  const BiPoly zb = BiPoly::zbar(Mode::exact);
  const BiPoly one = BiPoly::constant(q(1));
  CHECK(z * zb == BiPoly::monomial(1, 1, q(1)));
  CHECK(pow(zb + one, 2) == grid({{1, 2, 1}}));
  CHECK(z * (zb + one) - one == grid({{-1, 0}, {1, 1}}));
}

TEST_CASE("derivatives") {
  for (unsigned m = 0; m <= 6; ++m) {
    const BiPoly zm = BiPoly::monomial(m, 0, q(1));
    CHECK(d_dz(zm) == (m == 0 ? BiPoly() : BiPoly::monomial(m - 1, 0, q(m))));
    CHECK(d_dzbar(zm).is_zero());
  }
  CHECK(d_dzbar(BiPoly::monomial(1, 2, q(1))) == BiPoly::monomial(1, 1, q(2)));
}

TEST_CASE("evaluation") {
  const BiPoly zzb = BiPoly::monomial(1, 1, q(1));
  CHECK(eval(zzb, Coefficient::exact(1, 1)) == q(2));
  CHECK(eval(BiPoly::constant(q(7, 3)), Coefficient::exact(-2, 5)) == q(7, 3));
  CHECK(eval(grid({{-1, 0}, {1, 1}}), q(0)) == q(-1));
  CHECK(eval(zzb, std::complex<double>(1, 1)) == std::complex<double>(2, 0));
}

TEST_CASE("equal_within") {
  const BiPoly z = BiPoly::z(Mode::exact);
  CHECK(equal_within(z, z, 0.0));
  CHECK_FALSE(equal_within(z, BiPoly::zbar(Mode::exact), 1e9));
  const BiPoly zf = z.to_mode(Mode::floating);
  CHECK(equal_within(zf, zf + BiPoly::constant(Coefficient::floating(1e-13)), 1e-12));
  CHECK_FALSE(equal_within(zf, zf + BiPoly::constant(Coefficient::floating(1e-9)), 1e-12));
}

TEST_CASE("conjugate swaps the roles of z and z*") {
  const BiPoly p = BiPoly::monomial(2, 1, Coefficient::exact(1, 3));
  const BiPoly c = p.conjugate();
  CHECK(c == BiPoly::monomial(1, 2, Coefficient::exact(1, -3)));
  const Coefficient z = Coefficient::exact(Rational(1, 2), 2);
  CHECK(eval(c, z) == eval(p, z).conj());
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    const BiPoly a = random_poly(rng, 3);
    const BiPoly b = random_poly(rng, 2);
    const BiPoly c = random_poly(rng, 3);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(d_dz(d_dzbar(a)) == d_dzbar(d_dz(a)));
    const Coefficient z = Coefficient::exact(Rational(trial, 7), Rational(-2, 3));
    CHECK(eval(a * b, z) == eval(a, z) * eval(b, z));
  }
}

TEST_CASE("float evaluation is multiplicative") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> coord(-1.5, 1.5);
  for (int trial = 0; trial < 20; ++trial) {
    const BiPoly a = random_poly(rng, 3).to_mode(Mode::floating);
    const BiPoly b = random_poly(rng, 3).to_mode(Mode::floating);
    const std::complex<double> z(coord(rng), coord(rng));
    const auto lhs = eval(a * b, z);
    const auto rhs = eval(a, z) * eval(b, z);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
  }
}

TEST_CASE("normalization trims zero rows and columns") {
  const BiPoly p = BiPoly::monomial(3, 2, q(1)) - BiPoly::monomial(3, 2, q(1));
  CHECK(p.is_zero());
  CHECK(p.rows() == 1);
  CHECK(p.cols() == 1);
}
