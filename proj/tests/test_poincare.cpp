#include <doctest.h>

#include <cmath>
#include <complex>
#include <stdexcept>

#include "rsdlab/lt_family.hpp"

using namespace rsdlab;

TEST_SUITE("poincare-families") {
  TEST_CASE("lt_inverse closed-form values") {
    const LTFamily phi1 = LTFamily::harris_generator(1);
    CHECK(lt_inverse(phi1, 1.0) == 0.0);
    CHECK(lt_inverse(phi1, 0.5) == doctest::Approx(1.0).epsilon(1e-15));

    const LTFamily phi2 = LTFamily::harris_generator(2);
    const double s = lt_inverse(phi2, 0.25);
    CHECK(s == doctest::Approx(15.0).epsilon(1e-12));
    CHECK(phi2(s) == doctest::Approx(0.25).epsilon(1e-12));  // forward check
  }

  TEST_CASE("lt_inverse domain errors") {
    const LTFamily phi = LTFamily::harris_generator(1);
    CHECK_THROWS_AS(lt_inverse(phi, 0.0), std::domain_error);
    CHECK_THROWS_AS(lt_inverse(phi, -0.5), std::domain_error);
    CHECK_THROWS_AS(lt_inverse(phi, 1.0 + 1e-9), std::domain_error);
  }

  TEST_CASE("inverse composed with phi is the identity on [0,100]") {
    for (int k = 1; k <= 3; ++k) {
      const LTFamily phi = LTFamily::harris_generator(k);
      for (double s = 0.0; s <= 100.0; s += 0.5) {
        const double roundtrip = phi.inverse(phi(s));
        CHECK(std::abs(roundtrip - s) <= 1e-10 * std::max(1.0, s));
      }
      for (double u = 0.05; u <= 1.0; u += 0.05) {
        CHECK(phi(phi.inverse(u)) == doctest::Approx(u).epsilon(1e-12));
      }
    }
  }

  TEST_CASE("index_pgf closed forms") {
    const IndexPGF geo = index_pgf(LTFamily::harris_generator(1), 0.5);
    CHECK(geo(1.0) == doctest::Approx(1.0).epsilon(1e-15));

    const IndexPGF geo25 = index_pgf(LTFamily::harris_generator(1), 0.25);
    CHECK(geo25(0.5) == doctest::Approx(0.2).epsilon(1e-14));
    CHECK(geo25.compose_numeric(0.5) == doctest::Approx(0.2).epsilon(1e-12));

    const IndexPGF harris = index_pgf(LTFamily::harris_generator(2), 0.25);
    const double expected = 0.25 / std::sqrt(0.8125);
    CHECK(expected == doctest::Approx(0.2773500981126146).epsilon(1e-12));
    CHECK(harris(0.5) == doctest::Approx(expected).epsilon(1e-14));
    CHECK(harris.compose_numeric(0.5) == doctest::Approx(expected).epsilon(1e-12));
  }

  TEST_CASE("closed form agrees with the numeric phi composition everywhere") {
    for (int k = 1; k <= 3; ++k) {
      const LTFamily phi = LTFamily::harris_generator(k);
      for (double theta = 0.1; theta < 0.95; theta += 0.2) {
        const IndexPGF p(phi, theta);
        for (double s = 0.05; s <= 1.0; s += 0.05) {
          CHECK(std::abs(p(s) - p.compose_numeric(s)) < 1e-12);
        }
        CHECK(p.compose_numeric(0.0) == 0.0);
      }
    }
  }

  TEST_CASE("index_pgf rejects non-reciprocal-integer exponents and bad theta") {
    CHECK_THROWS_AS(index_pgf(LTFamily::exponential_mixture(0.4), 0.5),
                    std::domain_error);
    CHECK_THROWS_AS(index_pgf(LTFamily::harris_generator(1), 0.0), std::domain_error);
    CHECK_THROWS_AS(index_pgf(LTFamily::harris_generator(1), 1.0), std::domain_error);
    CHECK(LTFamily::exponential_mixture(0.4).reciprocal_integer() == 0);
    CHECK(LTFamily::exponential_mixture(0.5).reciprocal_integer() == 2);
  }

  TEST_CASE("poincare residual vanishes for the implemented families") {
    const EvalGrid grid = EvalGrid::nonnegative(501, 50.0);
    for (int k = 1; k <= 3; ++k) {
      const LTFamily phi = LTFamily::harris_generator(k);
      for (double theta = 0.1; theta < 0.95; theta += 0.1) {
        CHECK(poincare_residual(phi, theta, grid) < 1e-12);
      }
    }
  }

  TEST_CASE("poincare residual is exactly zero at t=0") {
    const LTFamily phi = LTFamily::harris_generator(2);
    const IndexPGF p(phi, 0.3);
    CHECK(std::abs(phi(0.0) - p(phi(0.0))) == 0.0);
  }

  TEST_CASE("poincare residual requires a nonnegative grid") {
    CHECK_THROWS_AS(
        poincare_residual(LTFamily::harris_generator(1), 0.5, EvalGrid::symmetric(9, 2.0)),
        std::invalid_argument);
  }

  TEST_CASE("series coefficients: geometric closed form") {
    const IndexPGF geo = index_pgf(LTFamily::harris_generator(1), 0.3);
    const TruncSeries s = geo.series(64);
    CHECK(s[0] == 0.0);
    double expected = 0.3;
    for (std::size_t m = 1; m < 64; ++m) {
      CHECK(s[m] == doctest::Approx(expected).epsilon(1e-12));
      expected *= 0.7;
    }
  }

  TEST_CASE("series coefficients: harris lattice and binomial closed form") {
    for (int k = 2; k <= 3; ++k) {
      const double theta = 0.25;
      const IndexPGF harris = index_pgf(LTFamily::harris_generator(k), theta);
      const TruncSeries s = harris.series(200);

      for (std::size_t m = 0; m < 200; ++m) {
        if (m % static_cast<std::size_t>(k) != 1) {
          CHECK(std::abs(s[m]) < 1e-15);  // support lives on 1 + kZ+
        }
      }

      // Binomial series oracle: coefficient of s^{1+km} is
      // theta^{1/k} C(-1/k, m) (-(1-theta))^m.
      double coeff = std::pow(theta, 1.0 / k);
      std::size_t idx = 1;
      for (std::size_t m = 0; idx < 200; ++m, idx += static_cast<std::size_t>(k)) {
        CHECK(s[idx] == doctest::Approx(coeff).epsilon(1e-12));
        const double mm = static_cast<double>(m);
        coeff *= (-1.0 / k - mm) / (mm + 1.0) * (-(1.0 - theta));
      }
    }
  }

  TEST_CASE("series coefficients are nonnegative and sum to 1 after tail correction") {
    for (int k = 1; k <= 3; ++k) {
      for (double theta = 0.1; theta < 0.95; theta += 0.2) {
        const IndexPGF p(LTFamily::harris_generator(k), theta);
        const TruncSeries s = p.series(200);
        double total = 0.0;
        for (std::size_t m = 0; m < 200; ++m) {
          CHECK(s[m] >= -1e-12);
          total += s[m];
        }
        // Geometric extrapolation of the lattice tail from the last two
        // nonzero coefficients.
        const std::size_t last = 200 - ((200 - 1 - 1) % static_cast<std::size_t>(k)) - 1;
        const double a_last = s[last];
        const double a_prev = s[last - static_cast<std::size_t>(k)];
        const double ratio = a_last / a_prev;
        const double tail = a_last * ratio / (1.0 - ratio);
        CHECK(total + tail == doctest::Approx(1.0).epsilon(1e-9));
      }
    }
  }

  TEST_CASE("mean is 1/theta, cross-checked by the derivative at 1") {
    for (int k = 1; k <= 3; ++k) {
      const double theta = 0.5;
      const IndexPGF p(LTFamily::harris_generator(k), theta);
      CHECK(p.mean() == doctest::Approx(1.0 / theta));
      const double h = 1e-7;
      const double derivative = (p(1.0) - p(1.0 - h)) / h;
      CHECK(derivative == doctest::Approx(1.0 / theta).epsilon(1e-5));
    }
  }

  TEST_CASE("complex evaluation stays in the unit disc") {
    const IndexPGF p(LTFamily::harris_generator(2), 0.25);
    CHECK(std::abs(p(std::complex<double>(1.0, 0.0)) - 1.0) < 1e-14);
    for (double t = -3.0; t <= 3.0; t += 0.25) {
      const std::complex<double> val = p(std::exp(std::complex<double>(0.0, t)));
      CHECK(std::abs(val) <= 1.0 + 1e-12);
    }
  }
}
