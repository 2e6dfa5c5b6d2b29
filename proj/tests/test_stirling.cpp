#include <doctest.h>

#include <stdexcept>

#include "degseq/series.hpp"
#include "degseq/stirling.hpp"

using degseq::BiPoly;
using degseq::Rational;
using degseq::StirlingTable;
using degseq::TruncSeries;

namespace {

const BiPoly one = BiPoly::constant(Rational(1));

}  // namespace

TEST_CASE("classical values") {
  StirlingTable s1 = StirlingTable::first(8);
  CHECK(s1.at(2, 1) == BiPoly::constant(Rational(-1)));
  CHECK(s1.at(3, 1) == BiPoly::constant(Rational(2)));
  for (int n = 0; n <= 8; ++n) CHECK(s1.at(n, n) == one);

  StirlingTable s2 = StirlingTable::second(8);
  CHECK(s2.at(3, 2) == BiPoly::constant(Rational(3)));
  for (int n = 1; n <= 8; ++n) CHECK(s2.at(n, 1) == one);
  for (int n = 0; n <= 8; ++n) CHECK(s2.at(n, n) == one);

  CHECK(s1.at(3, 7).is_zero());  // l > n
  CHECK_THROWS_AS(s1.at(9, 0), std::out_of_range);
}

TEST_CASE("defining basis-change equations") {
  int nmax = 12;
  StirlingTable s1 = StirlingTable::first(nmax);
  StirlingTable s2 = StirlingTable::second(nmax);
  StirlingTable s1l = StirlingTable::first_degenerate(nmax);
  StirlingTable s2l = StirlingTable::second_degenerate(nmax);

  for (int n = 0; n <= nmax; ++n) {
    BiPoly lhs1;  // sum_l S1(n,l) x^l
    BiPoly lhs2;  // sum_l S2(n,l) (x)_l
    BiPoly lhs1l; // sum_l S1l(n,l) (x)_{l,lambda}
    BiPoly lhs2l; // sum_l S2l(n,l) (x)_l
    for (int l = 0; l <= n; ++l) {
      lhs1 += s1.at(n, l) * BiPoly::monomial(Rational(1), 0, l);
      lhs2 += s2.at(n, l) * degseq::falling_factorial(l);
      lhs1l += s1l.at(n, l) * degseq::degenerate_falling_factorial(l);
      lhs2l += s2l.at(n, l) * degseq::falling_factorial(l);
    }
    CHECK(lhs1 == degseq::falling_factorial(n));
    CHECK(lhs2 == BiPoly::monomial(Rational(1), 0, n));
    CHECK(lhs1l == degseq::falling_factorial(n));
    CHECK(lhs2l == degseq::degenerate_falling_factorial(n));
  }
}

// The degenerate recurrences are implementer-derived, so they are gated
// against the generating functions before anything else trusts the tables.
TEST_CASE("degenerate tables match their generating functions up to n = 16") {
  int nmax = 16;
  StirlingTable s1l = StirlingTable::first_degenerate(nmax);
  StirlingTable s2l = StirlingTable::second_degenerate(nmax);

  TruncSeries log_lambda = degseq::gf_log_lambda(nmax);
  TruncSeries exp_minus_1 =
      degseq::gf_degenerate_exp(nmax, false) - TruncSeries::constant(nmax, Rational(1));

  TruncSeries pow1 = TruncSeries::constant(nmax, Rational(1));
  TruncSeries pow2 = pow1;
  for (int k = 0; k <= nmax; ++k) {
    // pow1 = (log_lambda(1+t))^k / k!, pow2 = (e_lambda(t)-1)^k / k!
    for (int n = 0; n <= nmax; ++n) {
      CHECK(s1l.at(n, k) == pow1.coeff(n).scaled(degseq::factorial(n)));
      CHECK(s2l.at(n, k) == pow2.coeff(n).scaled(degseq::factorial(n)));
    }
    if (k < nmax) {
      BiPoly inv = BiPoly::constant(Rational(1, k + 1));
      pow1 = (pow1 * log_lambda).scaled(inv);
      pow2 = (pow2 * exp_minus_1).scaled(inv);
    }
  }
}

TEST_CASE("degenerate entries and classical limits") {
  StirlingTable s1l = StirlingTable::first_degenerate(12);
  StirlingTable s2l = StirlingTable::second_degenerate(12);
  CHECK(s2l.at(2, 1) == one - BiPoly::lambda());
  CHECK(s1l.at(2, 1) == BiPoly::lambda() - one);
  for (int n = 0; n <= 12; ++n) {
    CHECK(s1l.at(n, n) == one);
    CHECK(s2l.at(n, n) == one);
  }

  StirlingTable s1 = StirlingTable::first(12);
  StirlingTable s2 = StirlingTable::second(12);
  Rational zero(0);
  for (int n = 0; n <= 12; ++n) {
    for (int l = 0; l <= n; ++l) {
      CHECK(s1l.at(n, l).eval_lambda(zero) == s1.at(n, l));
      CHECK(s2l.at(n, l).eval_lambda(zero) == s2.at(n, l));
    }
  }
}

TEST_CASE("degenerate triangles are mutually inverse") {
  int nmax = 12;
  StirlingTable s1l = StirlingTable::first_degenerate(nmax);
  StirlingTable s2l = StirlingTable::second_degenerate(nmax);
  for (int n = 0; n <= nmax; ++n) {
    for (int m = 0; m <= nmax; ++m) {
      BiPoly acc;
      for (int l = 0; l <= n; ++l) acc += s1l.at(n, l) * s2l.at(l, m);
      CHECK(acc == (n == m ? one : BiPoly()));
    }
  }
}
