#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

#include "rsdlab/montecarlo.hpp"
#include "rsdlab/scalar_cf.hpp"

using namespace rsdlab;

namespace {

std::vector<ScalarCF> bundled_families() {
  return {
      ScalarCF::laplace(1.0),
      ScalarCF::laplace(2.0),
      ScalarCF::linnik(1.0, 1.0),
      ScalarCF::linnik(0.5, 2.0),
      ScalarCF::symmetric_gamma_mixture(1),
      ScalarCF::symmetric_gamma_mixture(2),
      ScalarCF::symmetric_gamma_mixture(3),
      ScalarCF::stable(1.5, 1.0),
      ScalarCF::stable(2.0, 0.5),
      ScalarCF::generalized_linnik(1.0, 1.0, 0.5),
      ScalarCF::degenerate(2.0),
      ScalarCF::product_of(ScalarCF::laplace(1.0), ScalarCF::stable(2.0, 0.5)),
      ScalarCF::mixture_of({0.25, 0.75},
                           {ScalarCF::degenerate(0.0), ScalarCF::laplace(1.0)}),
  };
}

}  // namespace

TEST_SUITE("transform-core") {
  TEST_CASE("closed-form point values") {
    CHECK(ScalarCF::laplace(1.0)(1.0).real() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(ScalarCF::linnik(1.0, 1.0)(2.0).real() ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(ScalarCF::symmetric_gamma_mixture(2)(1.0).real() ==
          doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  }

  TEST_CASE("every family is 1 at t=0") {
    for (const auto& f : bundled_families()) {
      const auto v = f(0.0);
      CHECK(std::abs(v - 1.0) < 1e-12);
    }
  }

  TEST_CASE("family invariants on the default grid") {
    for (const auto& f : bundled_families()) {
      const EvalGrid grid = default_grid(f);
      const auto values = eval_cf(f, grid);
      const std::size_t mid = grid.size() / 2;
      for (std::size_t i = 0; i < grid.size(); ++i) {
        CHECK(std::abs(values[i]) <= 1.0 + 1e-12);
        CHECK(std::abs(values[i] - std::conj(values[grid.size() - 1 - i])) < 1e-12);
      }
      CHECK(std::abs(values[mid] - 1.0) < 1e-12);
    }
  }

  TEST_CASE("parameter domain errors") {
    CHECK_THROWS_AS(ScalarCF::linnik(2.5, 1.0), std::domain_error);
    CHECK_THROWS_AS(ScalarCF::linnik(1.0, -1.0), std::domain_error);
    CHECK_THROWS_AS(ScalarCF::laplace(0.0), std::domain_error);
    CHECK_THROWS_AS(ScalarCF::symmetric_gamma_mixture(0), std::domain_error);
    CHECK_THROWS_AS(ScalarCF::mixture_of({0.5, 0.4},
                                         {ScalarCF::laplace(1.0), ScalarCF::laplace(2.0)}),
                    std::domain_error);
  }

  TEST_CASE("linnik matches a geometric-stable sampler") {
    // 1/(1+|t|) is the CF of U*C with U ~ Exp(1) and C standard Cauchy:
    // E exp(-U|t|) integrates the Cauchy CF over the exponential scale.
    std::mt19937_64 rng(20240601);
    auto uniform = [&rng]() {
      return static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53;
    };
    const std::size_t n = 200000;
    SampleBatch batch;
    batch.generator_id = "exp-scaled-cauchy";
    batch.values.resize(n);
    for (auto& x : batch.values) {
      const double e = -std::log(uniform());
      const double c = std::tan(3.14159265358979323846 * (uniform() - 0.5));
      x = e * c;
    }
    const ScalarCF linnik = ScalarCF::linnik(1.0, 1.0);
    const double gap = empirical_cf_sup_gap(
        batch, [&](double t) { return linnik(t); }, EvalGrid::symmetric(129, 10.0));
    CHECK(gap < 0.01);
    CHECK(std::abs(ScalarCF::empirical(batch)(2.0).real() - 1.0 / 3.0) < 0.01);
  }

  TEST_CASE("empirical CF of a degenerate batch is identically 1") {
    SampleBatch batch;
    batch.values.assign(50, 0.0);
    const EmpiricalCF emp = empirical_cf(batch, EvalGrid::symmetric(33, 5.0));
    for (std::size_t i = 0; i < emp.grid().size(); ++i) {
      CHECK(emp.value(i) == std::complex<double>(1.0, 0.0));
    }
  }

  TEST_CASE("empirical CF of a symmetric two-point batch is cos(at)") {
    const double a = 1.75;
    SampleBatch batch;
    batch.values = {a, -a};
    const EvalGrid grid = EvalGrid::symmetric(65, 8.0);
    const EmpiricalCF emp = empirical_cf(batch, grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      CHECK(emp.value(i).real() == doctest::Approx(std::cos(a * grid[i])).epsilon(1e-14));
      CHECK(std::abs(emp.value(i).imag()) < 1e-15);
    }
  }

  TEST_CASE("empirical CF at t=0 is exactly 1") {
    const SampleBatch batch = sample(SampleFamily::Laplace, {}, 1000, 99);
    const EmpiricalCF emp = empirical_cf(batch, EvalGrid::symmetric(9, 3.0));
    CHECK(emp.value(4) == std::complex<double>(1.0, 0.0));
  }

  TEST_CASE("empirical CF needs at least two samples") {
    SampleBatch batch;
    CHECK_THROWS_AS(empirical_cf(batch, EvalGrid::symmetric(9, 3.0)),
                    std::invalid_argument);
    batch.values = {1.0};
    CHECK_THROWS_AS(empirical_cf(batch, EvalGrid::symmetric(9, 3.0)),
                    std::invalid_argument);
  }

  TEST_CASE("empirical CF converges to the Laplace closed form") {
    const ScalarCF target = ScalarCF::laplace(1.0);
    const EvalGrid grid = EvalGrid::symmetric(129, 10.0);
    auto gap_at = [&](std::size_t n, std::uint64_t seed) {
      return empirical_cf_sup_gap(sample(SampleFamily::Laplace, {}, n, seed),
                                  [&](double t) { return target(t); }, grid);
    };
    const double g3 = gap_at(1000, mix_seed(1234, 1));
    const double g4 = gap_at(10000, mix_seed(1234, 2));
    const double g5 = gap_at(100000, mix_seed(1234, 3));
    CHECK(g4 < g3);
    CHECK(g5 < g4);
    CHECK(gap_at(200000, mix_seed(1234, 4)) < 0.01);
  }

  TEST_CASE("product with the unit CF is the identity") {
    const ScalarCF f = ScalarCF::laplace(1.0);
    const ScalarCF prod = cf_product(f, ScalarCF::degenerate(0.0));
    const EvalGrid grid = default_grid(f);
    const auto a = eval_cf(f, grid);
    const auto b = eval_cf(prod, grid);
    for (std::size_t i = 0; i < grid.size(); ++i) CHECK(a[i] == b[i]);
  }

  TEST_CASE("laplace squared at t=1") {
    const ScalarCF sq = cf_product(ScalarCF::laplace(1.0), ScalarCF::laplace(1.0));
    CHECK(sq(1.0).real() == doctest::Approx(0.25).epsilon(1e-15));
  }

  TEST_CASE("mixture identity: laplace(c) times the SD remainder mixture") {
    const double c = 0.5;
    const ScalarCF remainder = ScalarCF::mixture_of(
        {c * c, 1.0 - c * c}, {ScalarCF::degenerate(0.0), ScalarCF::laplace(1.0)});
    const ScalarCF prod = cf_product(ScalarCF::laplace(c), remainder);
    const ScalarCF target = ScalarCF::laplace(1.0);
    const EvalGrid grid = default_grid(target);
    for (double t : grid.points()) {
      CHECK(std::abs(prod(t) - target(t)) < 1e-14);
    }
  }

  TEST_CASE("cf_product is commutative and associative pointwise") {
    const ScalarCF a = ScalarCF::laplace(1.0);
    const ScalarCF b = ScalarCF::linnik(1.0, 2.0);
    const ScalarCF c = ScalarCF::stable(2.0, 0.25);
    const EvalGrid grid = EvalGrid::symmetric(65, 6.0);
    for (double t : grid.points()) {
      CHECK(std::abs(cf_product(a, b)(t) - cf_product(b, a)(t)) < 1e-15);
      CHECK(std::abs(cf_product(cf_product(a, b), c)(t) -
                     cf_product(a, cf_product(b, c))(t)) < 1e-15);
    }
  }

  TEST_CASE("default grid spans ten natural scales") {
    const EvalGrid g = default_grid(ScalarCF::laplace(2.0));
    CHECK(g.size() == 129);
    CHECK(g.max_abs() == doctest::Approx(20.0));
  }

  TEST_CASE("describe carries family parameters") {
    CHECK(ScalarCF::laplace(1.0).describe() == "laplace(b=1)");
    CHECK(ScalarCF::linnik(1.0, 0.5).describe() == "linnik(alpha=1,lambda=0.5)");
    CHECK(ScalarCF::laplace(1.0).family() == CfFamily::Laplace);
    const auto params = ScalarCF::stable(1.5, 2.0).params();
    CHECK(params.size() == 2);
    CHECK(params[0] == 1.5);
    CHECK(params[1] == 2.0);
  }
}
