#include "rsdlab/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "rsdlab/detail/format.hpp"
#include "rsdlab/scalar_cf.hpp"

namespace rsdlab {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// All transforms are written against raw 64-bit draws so a batch is
// reproducible bit-exactly from (family, params, n, seed).
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : engine_(seed) {}

  double uniform() {  // (0,1]
    return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
  }

  double exponential() { return -std::log(uniform()); }

  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double r = std::sqrt(-2.0 * std::log(uniform()));
    const double a = kTwoPi * uniform();
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

  // Marsaglia-Tsang, with the U^(1/shape) boost for shape < 1.
  double gamma(double shape, double scale) {
    if (!(shape > 0.0) || !(scale >= 0.0)) {
      throw std::domain_error("gamma sampler: shape must be > 0 and scale >= 0");
    }
    if (scale == 0.0) return 0.0;
    double boost = 1.0;
    double a = shape;
    if (a < 1.0) {
      boost = std::pow(uniform(), 1.0 / a);
      a += 1.0;
    }
    const double d = a - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x, v;
      do {
        x = normal();
        v = 1.0 + c * x;
      } while (v <= 0.0);
      v = v * v * v;
      const double u = uniform();
      if (u < 1.0 - 0.0331 * x * x * x * x) return boost * d * v * scale;
      if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) {
        return boost * d * v * scale;
      }
    }
  }

  // Knuth multiplication in chunks of 30 so the acceptance product never
  // underflows; the chunks superpose exactly.
  std::uint64_t poisson(double mean) {
    if (!(mean >= 0.0)) {
      throw std::domain_error("poisson sampler: mean must be >= 0");
    }
    std::uint64_t total = 0;
    double remaining = mean;
    while (remaining > 0.0) {
      const double chunk = std::min(remaining, 30.0);
      const double limit = std::exp(-chunk);
      double prod = 1.0;
      std::uint64_t count = 0;
      do {
        ++count;
        prod *= uniform();
      } while (prod > limit);
      total += count - 1;
      remaining -= chunk;
    }
    return total;
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

double draw_one(SampleRng& rng, SampleFamily family, const SampleParams& p) {
  switch (family) {
    case SampleFamily::Laplace:
      return p.scale * (rng.exponential() - rng.exponential());
    case SampleFamily::GeometricIndex: {
      if (!(p.theta > 0.0) || !(p.theta <= 1.0)) {
        throw std::domain_error(
            detail::strf("geometric index: theta=%g outside (0,1]", p.theta));
      }
      if (p.theta == 1.0) return 1.0;
      const double u = rng.uniform();
      return std::max(1.0, std::ceil(std::log(u) / std::log1p(-p.theta)));
    }
    case SampleFamily::HarrisIndex: {
      if (p.k < 1) throw std::domain_error("harris index: k must be >= 1");
      if (!(p.theta > 0.0) || !(p.theta <= 1.0)) {
        throw std::domain_error(
            detail::strf("harris index: theta=%g outside (0,1]", p.theta));
      }
      const double shape = 1.0 / static_cast<double>(p.k);
      const double scale = (1.0 - p.theta) / p.theta;
      const double mixing = rng.gamma(shape, scale);
      const double m = static_cast<double>(rng.poisson(mixing));
      return 1.0 + static_cast<double>(p.k) * m;
    }
    case SampleFamily::SymmetricGammaMixture: {
      if (p.k != 2) {
        throw std::invalid_argument(
            "symmetric gamma mixture sampler: only k=2 is implemented");
      }
      return p.scale * rng.normal() * std::abs(rng.normal());
    }
    case SampleFamily::SdRemainder: {
      if (!(p.c > 0.0) || !(p.c <= 1.0)) {
        throw std::domain_error(detail::strf("sd remainder: c=%g outside (0,1]", p.c));
      }
      const double u = rng.uniform();
      if (u <= p.c * p.c) return 0.0;
      return rng.exponential() - rng.exponential();
    }
  }
  throw std::invalid_argument("unknown sample family");
}

std::string describe(SampleFamily family, const SampleParams& p) {
  switch (family) {
    case SampleFamily::Laplace: return detail::strf("laplace(b=%g)", p.scale);
    case SampleFamily::GeometricIndex:
      return detail::strf("geometric-index(theta=%g)", p.theta);
    case SampleFamily::HarrisIndex:
      return detail::strf("harris-index(k=%d,theta=%g)", p.k, p.theta);
    case SampleFamily::SymmetricGammaMixture:
      return detail::strf("sym-gamma-mixture(k=%d,scale=%g)", p.k, p.scale);
    case SampleFamily::SdRemainder: return detail::strf("sd-remainder(c=%g)", p.c);
  }
  return "unknown";
}

SampleBatch combine(std::string id, std::uint64_t seed, std::vector<double> values) {
  SampleBatch batch;
  batch.values = std::move(values);
  batch.seed = seed;
  batch.generator_id = std::move(id);
  return batch;
}

}  // namespace

const char* to_string(SampleFamily family) {
  switch (family) {
    case SampleFamily::Laplace: return "laplace";
    case SampleFamily::GeometricIndex: return "geometric-index";
    case SampleFamily::HarrisIndex: return "harris-index";
    case SampleFamily::SymmetricGammaMixture: return "sym-gamma-mixture";
    case SampleFamily::SdRemainder: return "sd-remainder";
  }
  return "unknown";
}

SampleFamily sample_family_from_string(const std::string& name) {
  if (name == "laplace") return SampleFamily::Laplace;
  if (name == "geometric-index") return SampleFamily::GeometricIndex;
  if (name == "harris-index") return SampleFamily::HarrisIndex;
  if (name == "sym-gamma-mixture") return SampleFamily::SymmetricGammaMixture;
  if (name == "sd-remainder") return SampleFamily::SdRemainder;
  throw std::invalid_argument(detail::strf("unknown sample family '%s'", name.c_str()));
}

SampleBatch sample(SampleFamily family, const SampleParams& params, std::size_t n,
                   std::uint64_t seed) {
  if (n < 1) {
    throw std::invalid_argument("sample: n must be >= 1");
  }
  SampleRng rng(seed);
  std::vector<double> values(n);
  for (auto& v : values) v = draw_one(rng, family, params);
  return combine(describe(family, params), seed, std::move(values));
}

SampleBatch compound_sum(const SampleBatch& index, SampleFamily summand,
                         const SampleParams& params, std::uint64_t seed) {
  SampleRng rng(seed);
  std::vector<double> values(index.count());
  for (std::size_t i = 0; i < index.count(); ++i) {
    const double raw = index.values[i];
    if (!(raw >= 1.0) || raw != std::floor(raw) || raw > 9.007199254740992e15) {
      throw std::invalid_argument(detail::strf(
          "compound_sum: index value %.17g is not a positive integer", raw));
    }
    const auto n = static_cast<std::uint64_t>(raw);
    double acc = 0.0;
    for (std::uint64_t j = 0; j < n; ++j) acc += draw_one(rng, summand, params);
    values[i] = acc;
  }
  return combine(detail::strf("compound[%s over %s]",
                              describe(summand, params).c_str(),
                              index.generator_id.c_str()),
                 seed, std::move(values));
}

double ks_critical(double alpha) {
  if (!(alpha > 0.0) || !(alpha < 1.0)) {
    throw std::domain_error("ks_critical: alpha outside (0,1)");
  }
  return std::sqrt(-0.5 * std::log(alpha / 2.0));
}

TestResult ks_two_sample(const SampleBatch& a, const SampleBatch& b, double alpha) {
  if (a.count() < 100 || b.count() < 100) {
    throw std::invalid_argument("ks_two_sample: both samples need n >= 100");
  }
  std::vector<double> xs(a.values), ys(b.values);
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());

  const double na = static_cast<double>(xs.size());
  const double nb = static_cast<double>(ys.size());
  double stat = 0.0;
  std::size_t i = 0, j = 0;
  while (i < xs.size() && j < ys.size()) {
    // Step over whole tie runs so the gap is measured at jump points only.
    if (xs[i] < ys[j]) {
      ++i;
    } else if (ys[j] < xs[i]) {
      ++j;
    } else {
      const double v = xs[i];
      while (i < xs.size() && xs[i] == v) ++i;
      while (j < ys.size() && ys[j] == v) ++j;
    }
    stat = std::max(stat, std::abs(static_cast<double>(i) / na -
                                   static_cast<double>(j) / nb));
  }

  TestResult result;
  result.check = "ks-two-sample";
  result.statistic = stat;
  result.threshold = ks_critical(alpha) * std::sqrt((na + nb) / (na * nb));
  result.pass = stat < result.threshold;
  result.n_a = xs.size();
  result.n_b = ys.size();
  result.alpha = alpha;
  result.seed = a.seed;
  result.note = a.generator_id + " vs " + b.generator_id;
  return result;
}

TestResult compound_geometric_identity(double theta, std::size_t n, std::uint64_t seed,
                                       double alpha) {
  SampleParams index_params;
  index_params.theta = theta;
  const SampleBatch index =
      sample(SampleFamily::GeometricIndex, index_params, n, mix_seed(seed, 1));

  SampleParams summand;
  summand.scale = std::sqrt(theta);
  const SampleBatch compound =
      compound_sum(index, SampleFamily::Laplace, summand, mix_seed(seed, 2));

  SampleParams unit;
  unit.scale = 1.0;
  const SampleBatch target = sample(SampleFamily::Laplace, unit, n, mix_seed(seed, 3));

  TestResult result = ks_two_sample(compound, target, alpha);
  result.check = detail::strf("compound-geometric(theta=%g)", theta);
  result.seed = seed;
  return result;
}

TestResult compound_harris_identity(double theta, std::size_t n, std::uint64_t seed,
                                    double alpha) {
  SampleParams index_params;
  index_params.theta = theta;
  index_params.k = 2;
  const SampleBatch index =
      sample(SampleFamily::HarrisIndex, index_params, n, mix_seed(seed, 1));

  SampleParams summand;
  summand.k = 2;
  summand.scale = std::sqrt(theta);
  const SampleBatch compound = compound_sum(index, SampleFamily::SymmetricGammaMixture,
                                            summand, mix_seed(seed, 2));

  SampleParams unit;
  unit.k = 2;
  unit.scale = 1.0;
  const SampleBatch target =
      sample(SampleFamily::SymmetricGammaMixture, unit, n, mix_seed(seed, 3));

  TestResult result = ks_two_sample(compound, target, alpha);
  result.check = detail::strf("compound-harris(k=2,theta=%g)", theta);
  result.seed = seed;
  return result;
}

TestResult sd_identity_test(double c, std::size_t n, std::uint64_t seed, double alpha) {
  SampleParams unit;
  const SampleBatch xprime =
      sample(SampleFamily::Laplace, unit, n, mix_seed(seed, 1));
  SampleParams rem;
  rem.c = c;
  const SampleBatch eps = sample(SampleFamily::SdRemainder, rem, n, mix_seed(seed, 2));
  const SampleBatch x = sample(SampleFamily::Laplace, unit, n, mix_seed(seed, 3));

  std::vector<double> lhs(n);
  for (std::size_t i = 0; i < n; ++i) lhs[i] = c * xprime.values[i] + eps.values[i];

  TestResult result = ks_two_sample(
      combine(detail::strf("c*X' + eps_c (c=%g)", c), seed, std::move(lhs)), x, alpha);
  result.check = detail::strf("sd-identity(c=%g)", c);
  result.seed = seed;
  return result;
}

TestResult convolution_identity_test(double c, double theta, std::size_t n,
                                     std::uint64_t seed, double alpha) {
  if (!(c > 0.0) || !(c <= 1.0) || !(theta >= 0.0) || !(theta < 1.0)) {
    throw std::domain_error("convolution_identity_test: c in (0,1], theta in [0,1)");
  }
  SampleParams unit;
  SampleParams rem;
  rem.c = c;
  SampleParams vpar;
  vpar.scale = std::sqrt(theta);

  const SampleBatch xprime = sample(SampleFamily::Laplace, unit, n, mix_seed(seed, 1));
  const SampleBatch eps = sample(SampleFamily::SdRemainder, rem, n, mix_seed(seed, 2));
  const SampleBatch x = sample(SampleFamily::Laplace, unit, n, mix_seed(seed, 4));

  // theta = 0 degenerates the n-component law to the point mass at 0.
  std::vector<double> v1(n, 0.0), v2(n, 0.0);
  if (theta > 0.0) {
    v1 = sample(SampleFamily::Laplace, vpar, n, mix_seed(seed, 3)).values;
    v2 = sample(SampleFamily::Laplace, vpar, n, mix_seed(seed, 5)).values;
  }

  std::vector<double> lhs(n), rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    lhs[i] = c * xprime.values[i] + eps.values[i] + c * v1[i];
    rhs[i] = x.values[i] + c * v2[i];
  }

  TestResult result = ks_two_sample(
      combine(detail::strf("c*X' + W_{c,theta} (c=%g,theta=%g)", c, theta), seed,
              std::move(lhs)),
      combine(detail::strf("X + c*V_theta (c=%g,theta=%g)", c, theta), seed,
              std::move(rhs)),
      alpha);
  result.check = detail::strf("convolution-identity(c=%g,theta=%g)", c, theta);
  result.seed = seed;
  return result;
}

TestResult convolution_identity_test(const DecompositionReport& report, std::size_t n,
                                     std::uint64_t seed, double alpha) {
  if (report.family != ScalarCF::laplace(1.0).describe()) {
    throw std::invalid_argument(detail::strf(
        "convolution_identity_test: unsupported family '%s'; only the laplace(b=1) "
        "bundle has samplers for all four component laws",
        report.family.c_str()));
  }
  return convolution_identity_test(report.c, report.theta, n, seed, alpha);
}

double empirical_cf_sup_gap(const SampleBatch& batch,
                            const std::function<std::complex<double>(double)>& target,
                            const EvalGrid& grid) {
  const EmpiricalCF emp = empirical_cf(batch, grid);
  double worst = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    worst = std::max(worst, std::abs(emp.value(i) - target(grid[i])));
  }
  return worst;
}

}  // namespace rsdlab
