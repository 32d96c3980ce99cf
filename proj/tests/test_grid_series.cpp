#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "rsdlab/grid.hpp"
#include "rsdlab/series.hpp"

using namespace rsdlab;

namespace {

double max_coeff_gap(const TruncSeries& a, const TruncSeries& b) {
  REQUIRE(a.order() == b.order());
  double worst = 0.0;
  for (std::size_t i = 0; i < a.order(); ++i) {
    worst = std::max(worst, std::abs(a[i] - b[i]));
  }
  return worst;
}

TruncSeries random_series(std::mt19937_64& rng, std::size_t order) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  TruncSeries s(order);
  for (std::size_t i = 0; i < order; ++i) s[i] = dist(rng);
  return s;
}

}  // namespace

TEST_SUITE("grid") {
  TEST_CASE("symmetric grid contains zero and is sign-symmetric") {
    const EvalGrid g = EvalGrid::symmetric(129, 10.0);
    CHECK(g.size() == 129);
    CHECK(g[64] == 0.0);
    CHECK(g.points().front() == -10.0);
    CHECK(g.points().back() == 10.0);
    for (std::size_t i = 0; i < 64; ++i) {
      CHECK(g[i] == -g[128 - i]);
    }
    CHECK(g.uniform());
    CHECK(g.spacing() == doctest::Approx(10.0 / 64).epsilon(1e-15));
  }

  TEST_CASE("constructor rejections") {
    CHECK_THROWS_AS(EvalGrid::symmetric(128, 10.0), std::invalid_argument);
    CHECK_THROWS_AS(EvalGrid::symmetric(129, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(EvalGrid::nonnegative(1, 5.0), std::invalid_argument);
    CHECK_THROWS_AS(EvalGrid::from_points({0.0, 0.0, 1.0}, GridKind::Nonnegative),
                    std::invalid_argument);
    CHECK_THROWS_AS(EvalGrid::from_points({-1.0, 0.0, 2.0}, GridKind::SymmetricAboutZero),
                    std::invalid_argument);
    CHECK_THROWS_AS(EvalGrid::from_points({-1.0, 1.0}, GridKind::Nonnegative),
                    std::invalid_argument);
  }

  TEST_CASE("scaling keeps symmetry and downgrades unit-interval kind") {
    const EvalGrid g = EvalGrid::symmetric(65, 8.0).scaled(0.5);
    CHECK(g.kind() == GridKind::SymmetricAboutZero);
    CHECK(g.max_abs() == doctest::Approx(4.0));
    const EvalGrid u = EvalGrid::unit_interval(11).scaled(0.25);
    CHECK(u.kind() == GridKind::Nonnegative);
    CHECK(u.points().back() == doctest::Approx(0.25));
  }

  TEST_CASE("spacing on a non-uniform grid throws") {
    const EvalGrid g = EvalGrid::from_points({0.0, 1.0, 3.0}, GridKind::Nonnegative);
    CHECK_FALSE(g.uniform());
    CHECK_THROWS_AS(g.spacing(), std::logic_error);
  }
}

TEST_SUITE("series") {
  TEST_CASE("geometric division 1/(1-qs)") {
    const TruncSeries one = TruncSeries::constant(1.0, 8);
    const TruncSeries denom = TruncSeries::affine(1.0, -0.5, 8);
    const TruncSeries g = series_div(one, denom);
    const double expected[5] = {1.0, 0.5, 0.25, 0.125, 0.0625};
    for (std::size_t i = 0; i < 5; ++i) CHECK(g[i] == doctest::Approx(expected[i]).epsilon(1e-15));
  }

  TEST_CASE("multiplicative identity") {
    std::mt19937_64 rng(11);
    const TruncSeries a = random_series(rng, 32);
    const TruncSeries one = TruncSeries::constant(1.0, 32);
    CHECK(max_coeff_gap(series_mul(a, one), a) == 0.0);
  }

  TEST_CASE("(1-s^2)/(1-s) = 1+s") {
    TruncSeries num(8);
    num[0] = 1.0;
    num[2] = -1.0;
    const TruncSeries q = series_div(num, TruncSeries::affine(1.0, -1.0, 8));
    CHECK(q[0] == doctest::Approx(1.0));
    CHECK(q[1] == doctest::Approx(1.0));
    for (std::size_t i = 2; i < 8; ++i) CHECK(std::abs(q[i]) < 1e-15);
  }

  TEST_CASE("compose: square with affine argument") {
    TruncSeries sq(6);
    sq[2] = 1.0;
    const TruncSeries composed = series_compose(sq, TruncSeries::affine(0.5, 0.5, 6));
    CHECK(composed[0] == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(composed[1] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(composed[2] == doctest::Approx(0.25).epsilon(1e-15));
    for (std::size_t i = 3; i < 6; ++i) CHECK(composed[i] == 0.0);
  }

  TEST_CASE("compose with the identity is bitwise exact") {
    std::mt19937_64 rng(12);
    const TruncSeries a = random_series(rng, 24);
    const TruncSeries composed = series_compose(a, TruncSeries::affine(0.0, 1.0, 24));
    CHECK(max_coeff_gap(composed, a) == 0.0);
  }

  TEST_CASE("geometric PGF composed with thinning map") {
    // q/(1-(1-q)s) at q=1/2 under s -> 1-c+cs, c=1/2, thins to q'=2/3.
    const std::size_t n = 40;
    const double q = 0.5, c = 0.5;
    TruncSeries pgf(n);
    double term = q;
    for (std::size_t m = 0; m < n; ++m) {
      pgf[m] = term;
      term *= 1.0 - q;
    }
    const TruncSeries thinned = series_compose(pgf, TruncSeries::affine(1.0 - c, c, n));
    const double qp = q / (q + (1.0 - q) * c);
    CHECK(qp == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    double expected = qp;
    for (std::size_t m = 0; m + 8 < n; ++m) {  // skip the truncated tail
      CHECK(thinned[m] == doctest::Approx(expected).epsilon(1e-12));
      expected *= 1.0 - qp;
    }
  }

  TEST_CASE("compose rejects centers outside (-1,1)") {
    std::mt19937_64 rng(13);
    const TruncSeries a = random_series(rng, 8);
    CHECK_THROWS_AS(series_compose(a, TruncSeries::affine(1.0, 0.5, 8)),
                    std::domain_error);
  }

  TEST_CASE("real_pow: geometric series from (1-s)^-1") {
    const TruncSeries g = series_real_pow(TruncSeries::affine(1.0, -1.0, 16), -1.0);
    for (std::size_t i = 0; i < 16; ++i) CHECK(g[i] == doctest::Approx(1.0).epsilon(1e-14));
  }

  TEST_CASE("real_pow: binomial series of (1-0.75 s^2)^-1/2") {
    TruncSeries base(8);
    base[0] = 1.0;
    base[2] = -0.75;
    const TruncSeries p = series_real_pow(base, -0.5);
    CHECK(p[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(p[1] == 0.0);
    CHECK(p[2] == doctest::Approx(0.375).epsilon(1e-14));
    CHECK(p[3] == 0.0);
    CHECK(p[4] == doctest::Approx(0.2109375).epsilon(1e-14));
    // Oracle: squaring the result and multiplying back must give 1.
    const TruncSeries roundtrip = series_mul(series_mul(p, p), base);
    CHECK(roundtrip[0] == doctest::Approx(1.0).epsilon(1e-14));
    for (std::size_t i = 1; i < 8; ++i) CHECK(std::abs(roundtrip[i]) < 1e-13);
  }

  TEST_CASE("real_pow: exponent zero gives the unit series") {
    std::mt19937_64 rng(14);
    TruncSeries a = random_series(rng, 12);
    a[0] = 2.0;
    const TruncSeries p = series_real_pow(a, 0.0);
    CHECK(p[0] == 1.0);
    for (std::size_t i = 1; i < 12; ++i) CHECK(p[i] == 0.0);
  }

  TEST_CASE("real_pow rejects nonpositive constant term") {
    CHECK_THROWS_AS(series_real_pow(TruncSeries::affine(0.0, 1.0, 4), 0.5),
                    std::domain_error);
    CHECK_THROWS_AS(series_real_pow(TruncSeries::affine(-1.0, 1.0, 4), 2.0),
                    std::domain_error);
  }

  TEST_CASE("ring axioms on random truncations") {
    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 20; ++trial) {
      const TruncSeries a = random_series(rng, 48);
      const TruncSeries b = random_series(rng, 48);
      const TruncSeries c = random_series(rng, 48);
      CHECK(max_coeff_gap(series_mul(series_mul(a, b), c),
                          series_mul(a, series_mul(b, c))) < 1e-13);
      CHECK(max_coeff_gap(series_mul(a, series_add(b, c)),
                          series_add(series_mul(a, b), series_mul(a, c))) < 1e-13);
    }
  }

  TEST_CASE("division undoes multiplication up to truncation") {
    std::mt19937_64 rng(16);
    for (int trial = 0; trial < 20; ++trial) {
      const TruncSeries a = random_series(rng, 48);
      TruncSeries b = random_series(rng, 48);
      b[0] = 1.0 + std::abs(b[0]);  // keep the division well conditioned
      CHECK(max_coeff_gap(series_div(series_mul(a, b), b), a) < 1e-13);
    }
  }

  TEST_CASE("integer real_pow matches repeated multiplication") {
    std::mt19937_64 rng(17);
    TruncSeries a = random_series(rng, 32);
    a[0] = 1.5;
    const TruncSeries cubed = series_mul(series_mul(a, a), a);
    CHECK(max_coeff_gap(series_real_pow(a, 3.0), cubed) < 1e-13);
  }

  TEST_CASE("division by zero constant term throws") {
    const TruncSeries one = TruncSeries::constant(1.0, 4);
    CHECK_THROWS_AS(series_div(one, TruncSeries::affine(0.0, 1.0, 4)),
                    std::domain_error);
  }

  TEST_CASE("coeff_nonneg: 2s - s^2 fails at index 2") {
    TruncSeries a(4);
    a[1] = 2.0;
    a[2] = -1.0;
    const NonnegReport r = coeff_nonneg(a);
    CHECK_FALSE(r.pass);
    CHECK(r.first_violation_index == 2);
    CHECK(r.violating_value == -1.0);
  }

  TEST_CASE("coeff_nonneg: geometric coefficients pass") {
    TruncSeries a(64);
    double term = 0.3;
    for (std::size_t m = 0; m < 64; ++m) {
      a[m] = term;
      term *= 0.7;
    }
    CHECK(coeff_nonneg(a).pass);
  }

  TEST_CASE("coeff_nonneg: discrete SD quotient of a geometric law") {
    // P(s) = q/(1-ps) with q=0.4 divided by its thinned version at c=0.6.
    // Closed form: a_0 = q + pc, a_m = q(1-c) p^m for m >= 1.
    const std::size_t n = 200;
    const double q = 0.4, p = 0.6, c = 0.6;
    TruncSeries pgf(n), thinned(n);
    {
      double term = q;
      for (std::size_t m = 0; m < n; ++m) {
        pgf[m] = term;
        term *= p;
      }
    }
    thinned = series_compose(pgf, TruncSeries::affine(1.0 - c, c, n));
    const TruncSeries quotient = series_div(pgf, thinned);

    const NonnegReport r = coeff_nonneg(quotient, 1e-12);
    CHECK(r.pass);

    CHECK(quotient[0] == doctest::Approx(q + p * c).epsilon(1e-12));
    double tail = q * (1.0 - c) * p;
    for (std::size_t m = 1; m < 60; ++m) {
      CHECK(quotient[m] == doctest::Approx(tail).epsilon(1e-10));
      tail *= p;
    }
  }

  TEST_CASE("shift is exact") {
    std::mt19937_64 rng(18);
    const TruncSeries a = random_series(rng, 16);
    const TruncSeries shifted = series_shift(a, 3);
    for (std::size_t i = 0; i < 3; ++i) CHECK(shifted[i] == 0.0);
    for (std::size_t i = 3; i < 16; ++i) CHECK(shifted[i] == a[i - 3]);
  }

  TEST_CASE("order cap") {
    CHECK_THROWS_AS(TruncSeries(1024), std::invalid_argument);
    CHECK_NOTHROW(TruncSeries(kMaxSeriesOrder));
  }

  TEST_CASE("eval is Horner on the truncation") {
    const TruncSeries a{1.0, 2.0, 3.0};
    CHECK(a.eval(0.5) == doctest::Approx(1.0 + 1.0 + 0.75));
    CHECK(a.sum() == doctest::Approx(6.0));
  }
}
