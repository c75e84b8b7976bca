#include "doctest.h"
#include "gchp/constructors.hpp"
#include "gchp/identities.hpp"

using namespace gchp;

namespace {

Coefficient q(long p, long d = 1) { return Coefficient::ratio(p, d, Mode::exact); }

std::vector<Params> test_params() {
  return {Params::exact(1), Params::exact(1, 2), Params::exact(2, 1, 1),
          Params::exact(Rational(1, 4), 0, -1), Params::exact(4, 1, 1)};
}

}  // namespace

TEST_CASE("shifted Hermite sums carry no sign") {
  const IdentityResult r11 = verify_identity_2221(1, 1, Params::exact(1, 2));
  CHECK(r11.status == IdentityStatus::erratum);
  CHECK(r11.corrected_residual == 0.0);
  CHECK(r11.printed_residual > 0.0);
  CHECK(verify_identity_2222(1, 1).status == IdentityStatus::erratum);

  // H^{1,1}(z, z*+1) = z z* + z - 1
  const BiPoly z = BiPoly::z(Mode::exact);
  const BiPoly zb = BiPoly::zbar(Mode::exact);
  const BiPoly one = BiPoly::constant(q(1));
  CHECK(complex_hermite(1, 1).substitute(z, zb + one) == z * zb + z - one);

  for (unsigned m = 0; m <= 6; ++m)
    for (unsigned n = 0; n <= 6; ++n) {
      const IdentityStatus expected =
          std::min(m, n) % 2 == 1 ? IdentityStatus::erratum : IdentityStatus::verified;
      CHECK(verify_identity_2222(m, n).status == expected);
      for (const Params& p : test_params()) {
        const IdentityResult r = verify_identity_2221(m, n, p);
        CHECK(r.status == expected);
        CHECK(r.corrected_residual <= 1e-12);
      }
    }
}

TEST_CASE("Laguerre identities verify as quoted") {
  for (const Params& p : test_params())
    for (unsigned m = 0; m <= 6; ++m)
      for (unsigned n = 0; n <= 6; ++n)
        for (const IdentityResult& r : verify_laguerre_identities(m, n, p)) {
          INFO(r.name);
          CHECK(r.status == IdentityStatus::verified);
        }
  const auto r = verify_laguerre_identities(1, 1, Params::exact(1, 2));
  CHECK(r.size() == 4);
  for (const auto& x : r) CHECK(x.exact);
}

TEST_CASE("matrix view") {
  const BiPoly g = gchp::gchp(2, 2, Params::exact(1, 2));
  const auto m = matrix_of(g);
  REQUIRE(m.size() == 3);
  CHECK(m[1][0] == q(-4));
  CHECK(m[2][1] == q(2));
  CHECK(format_matrix(g) == "[  2   0   0 ]\n[ -4  -4   0 ]\n[  1   2   1 ]\n");
  CHECK(format_matrix(BiPoly::constant(q(1))) == "[ 1 ]\n");
}

TEST_CASE("diagonal decomposition") {
  const Params p = Params::exact(1, 2);
  const auto terms = diagonal_decomposition(3, p);
  REQUIRE(terms.size() == 4);
  const long multipliers[] = {1, 3, 3, 1};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(terms[i].k == 3 - i);
    CHECK(terms[i].scale == q(multipliers[i]));
    CHECK(terms[i].hermite == complex_hermite(3, terms[i].k));
  }
  const auto zero = diagonal_decomposition(0, p);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].diagonal == BiPoly::constant(q(1)));
  CHECK(gchp::gchp(2, 2, p).diagonal(0) == complex_hermite(2, 2));
  for (const Params& pp : test_params())
    for (unsigned m = 0; m <= 6; ++m) CHECK_NOTHROW(diagonal_decomposition(m, pp));
  CHECK_NOTHROW(diagonal_decomposition(4, Params::exact(2, 1, 1)));
}

TEST_CASE("lower triangular entries") {
  for (const Params& p : test_params())
    for (unsigned m = 0; m <= 6; ++m) {
      CHECK(triangular_entry_residual(m, p) == 0.0);
      const BiPoly g = gchp::gchp(m, m, p);
      for (std::size_t l = 0; l < g.rows(); ++l)
        for (std::size_t k = l + 1; k < g.cols(); ++k) CHECK(g.at(l, k).is_zero());
    }
}

TEST_CASE("dropping the last column and differentiating in conj(xi)") {
  for (const Params& p : test_params())
    for (unsigned m = 0; m <= 5; ++m)
      for (unsigned n = 1; n <= 5; ++n)
        CHECK(drop_column_differentiate(m, n, p) == q(n, 2) * gchp::gchp(m, n - 1, p));
  const Params p = Params::exact(3, 2, -1);
  CHECK(drop_column_differentiate(4, 4, p) == q(2) * gchp::gchp(4, 3, p));
  for (unsigned m = 0; m <= 4; ++m)
    CHECK(drop_column_differentiate(m, 1, p) == BiPoly::monomial(m, 0, q(1, 2)));
  CHECK_THROWS(drop_column_differentiate(2, 0, p));
}
