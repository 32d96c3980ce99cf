#include "rsdlab/scalar_cf.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>
#include <variant>

#include "rsdlab/detail/format.hpp"

namespace rsdlab {

namespace {

constexpr double kImagTol = 1e-12;

struct LaplaceNode {
  double scale;
};
struct LinnikNode {
  double alpha, lambda;
};
struct SymGammaNode {
  int k;
};
struct DegenerateNode {
  double point;
};
struct StableNode {
  double alpha, lambda;
};
struct GenLinnikNode {
  double alpha, lambda, beta;
};

}  // namespace

struct ScalarCF::Node {
  struct LtComposeNode {
    double phi_alpha;
    ScalarCF h;
  };
  struct ProductNode {
    ScalarCF lhs, rhs;
  };
  struct MixtureNode {
    std::vector<double> weights;
    std::vector<ScalarCF> parts;
  };
  struct EmpiricalNode {
    std::shared_ptr<const SampleBatch> samples;
  };

  using Variant = std::variant<LaplaceNode, LinnikNode, SymGammaNode, DegenerateNode,
                               StableNode, GenLinnikNode, LtComposeNode, ProductNode,
                               MixtureNode, EmpiricalNode>;
  Variant v;
};

namespace {

void check_exponent(double alpha, const char* what) {
  if (!(alpha > 0.0) || !(alpha <= 2.0)) {
    throw std::domain_error(
        detail::strf("%s: alpha=%g outside (0,2]", what, alpha));
  }
}

void check_positive(double x, const char* what, const char* name) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw std::domain_error(detail::strf("%s: %s=%g must be positive", what, name, x));
  }
}

}  // namespace

ScalarCF::ScalarCF(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

ScalarCF ScalarCF::laplace(double scale) {
  check_positive(scale, "laplace", "scale");
  return ScalarCF(std::make_shared<const Node>(Node{LaplaceNode{scale}}));
}

ScalarCF ScalarCF::linnik(double alpha, double lambda) {
  check_exponent(alpha, "linnik");
  check_positive(lambda, "linnik", "lambda");
  return ScalarCF(std::make_shared<const Node>(Node{LinnikNode{alpha, lambda}}));
}

ScalarCF ScalarCF::symmetric_gamma_mixture(int k) {
  if (k < 1) {
    throw std::domain_error("symmetric_gamma_mixture: k must be a positive integer");
  }
  return ScalarCF(std::make_shared<const Node>(Node{SymGammaNode{k}}));
}

ScalarCF ScalarCF::degenerate(double point) {
  if (!std::isfinite(point)) {
    throw std::domain_error("degenerate: point must be finite");
  }
  return ScalarCF(std::make_shared<const Node>(Node{DegenerateNode{point}}));
}

ScalarCF ScalarCF::stable(double alpha, double lambda) {
  check_exponent(alpha, "stable");
  check_positive(lambda, "stable", "lambda");
  return ScalarCF(std::make_shared<const Node>(Node{StableNode{alpha, lambda}}));
}

ScalarCF ScalarCF::generalized_linnik(double alpha, double lambda, double beta) {
  check_exponent(alpha, "generalized_linnik");
  check_positive(lambda, "generalized_linnik", "lambda");
  check_positive(beta, "generalized_linnik", "beta");
  return ScalarCF(std::make_shared<const Node>(Node{GenLinnikNode{alpha, lambda, beta}}));
}

ScalarCF ScalarCF::lt_compose(double phi_alpha, ScalarCF h) {
  check_positive(phi_alpha, "lt_compose", "phi_alpha");
  return ScalarCF(std::make_shared<const Node>(
      Node{Node::LtComposeNode{phi_alpha, std::move(h)}}));
}

ScalarCF ScalarCF::product_of(ScalarCF lhs, ScalarCF rhs) {
  return ScalarCF(std::make_shared<const Node>(
      Node{Node::ProductNode{std::move(lhs), std::move(rhs)}}));
}

ScalarCF ScalarCF::mixture_of(std::vector<double> weights, std::vector<ScalarCF> parts) {
  if (weights.empty() || weights.size() != parts.size()) {
    throw std::invalid_argument("mixture_of: weights and parts must match and be nonempty");
  }
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) {
      throw std::domain_error("mixture_of: weights must be nonnegative");
    }
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw std::domain_error(detail::strf("mixture_of: weights sum to %.17g, not 1", total));
  }
  return ScalarCF(std::make_shared<const Node>(
      Node{Node::MixtureNode{std::move(weights), std::move(parts)}}));
}

ScalarCF ScalarCF::empirical(SampleBatch samples) {
  if (samples.count() < 2) {
    throw std::invalid_argument("empirical: at least two samples required");
  }
  return ScalarCF(std::make_shared<const Node>(Node{Node::EmpiricalNode{
      std::make_shared<const SampleBatch>(std::move(samples))}}));
}

std::complex<double> ScalarCF::operator()(double t) const {
  using C = std::complex<double>;
  return std::visit(
      [&](const auto& node) -> C {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, LaplaceNode>) {
          const double bt = node.scale * t;
          return C(1.0 / (1.0 + bt * bt), 0.0);
        } else if constexpr (std::is_same_v<T, LinnikNode>) {
          return C(1.0 / (1.0 + node.lambda * std::pow(std::abs(t), node.alpha)), 0.0);
        } else if constexpr (std::is_same_v<T, SymGammaNode>) {
          return C(std::pow(1.0 + t * t, -1.0 / static_cast<double>(node.k)), 0.0);
        } else if constexpr (std::is_same_v<T, DegenerateNode>) {
          return C(std::cos(node.point * t), std::sin(node.point * t));
        } else if constexpr (std::is_same_v<T, StableNode>) {
          return C(std::exp(-node.lambda * std::pow(std::abs(t), node.alpha)), 0.0);
        } else if constexpr (std::is_same_v<T, GenLinnikNode>) {
          return C(std::pow(1.0 + node.lambda * std::pow(std::abs(t), node.alpha),
                            -node.beta),
                   0.0);
        } else if constexpr (std::is_same_v<T, ScalarCF::Node::LtComposeNode>) {
          const C hv = node.h(t);
          if (std::abs(hv.imag()) > kImagTol || !(hv.real() > 0.0)) {
            throw std::domain_error(detail::strf(
                "lt_compose: h(t) not real-positive at t=%.17g (h=%.3g%+.3gi)", t,
                hv.real(), hv.imag()));
          }
          const double x = -std::log(std::min(hv.real(), 1.0));
          return C(std::pow(1.0 + x, -node.phi_alpha), 0.0);
        } else if constexpr (std::is_same_v<T, ScalarCF::Node::ProductNode>) {
          return node.lhs(t) * node.rhs(t);
        } else if constexpr (std::is_same_v<T, ScalarCF::Node::MixtureNode>) {
          C acc(0.0, 0.0);
          for (std::size_t i = 0; i < node.parts.size(); ++i) {
            acc += node.weights[i] * node.parts[i](t);
          }
          return acc;
        } else {
          static_assert(std::is_same_v<T, ScalarCF::Node::EmpiricalNode>);
          const auto& xs = node.samples->values;
          double c = 0.0, s = 0.0;
          for (double x : xs) {
            c += std::cos(t * x);
            s += std::sin(t * x);
          }
          const double n = static_cast<double>(xs.size());
          return C(c / n, s / n);
        }
      },
      node_->v);
}

CfFamily ScalarCF::family() const {
  return std::visit(
      [](const auto& node) -> CfFamily {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, LaplaceNode>) return CfFamily::Laplace;
        else if constexpr (std::is_same_v<T, LinnikNode>) return CfFamily::Linnik;
        else if constexpr (std::is_same_v<T, SymGammaNode>) return CfFamily::SymmetricGammaMixture;
        else if constexpr (std::is_same_v<T, DegenerateNode>) return CfFamily::Degenerate;
        else if constexpr (std::is_same_v<T, StableNode>) return CfFamily::Stable;
        else if constexpr (std::is_same_v<T, GenLinnikNode>) return CfFamily::GeneralizedLinnik;
        else if constexpr (std::is_same_v<T, ScalarCF::Node::LtComposeNode>) return CfFamily::LtCompose;
        else if constexpr (std::is_same_v<T, ScalarCF::Node::ProductNode>) return CfFamily::Product;
        else if constexpr (std::is_same_v<T, ScalarCF::Node::MixtureNode>) return CfFamily::Mixture;
        else return CfFamily::Empirical;
      },
      node_->v);
}

std::vector<double> ScalarCF::params() const {
  return std::visit(
      [](const auto& node) -> std::vector<double> {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, LaplaceNode>) return {node.scale};
        else if constexpr (std::is_same_v<T, LinnikNode>) return {node.alpha, node.lambda};
        else if constexpr (std::is_same_v<T, SymGammaNode>) return {static_cast<double>(node.k)};
        else if constexpr (std::is_same_v<T, DegenerateNode>) return {node.point};
        else if constexpr (std::is_same_v<T, StableNode>) return {node.alpha, node.lambda};
        else if constexpr (std::is_same_v<T, GenLinnikNode>) return {node.alpha, node.lambda, node.beta};
        else if constexpr (std::is_same_v<T, ScalarCF::Node::LtComposeNode>) return {node.phi_alpha};
        else return {};
      },
      node_->v);
}

double ScalarCF::natural_scale() const {
  return std::visit(
      [](const auto& node) -> double {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, LaplaceNode>) {
          return node.scale;
        } else if constexpr (std::is_same_v<T, LinnikNode>) {
          return std::pow(node.lambda, 1.0 / node.alpha);
        } else if constexpr (std::is_same_v<T, SymGammaNode>) {
          return 1.0;
        } else if constexpr (std::is_same_v<T, DegenerateNode>) {
          return std::max(1.0, std::abs(node.point));
        } else if constexpr (std::is_same_v<T, StableNode>) {
          return std::pow(node.lambda, 1.0 / node.alpha);
        } else if constexpr (std::is_same_v<T, GenLinnikNode>) {
          return std::pow(node.lambda, 1.0 / node.alpha);
        } else if constexpr (std::is_same_v<T, ScalarCF::Node::LtComposeNode>) {
          return node.h.natural_scale();
        } else if constexpr (std::is_same_v<T, ScalarCF::Node::ProductNode>) {
          return std::max(node.lhs.natural_scale(), node.rhs.natural_scale());
        } else if constexpr (std::is_same_v<T, ScalarCF::Node::MixtureNode>) {
          double s = 0.0;
          for (const auto& p : node.parts) s = std::max(s, p.natural_scale());
          return s;
        } else {
          return 1.0;
        }
      },
      node_->v);
}

std::string ScalarCF::describe() const {
  return std::visit(
      [](const auto& node) -> std::string {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, LaplaceNode>) {
          return detail::strf("laplace(b=%g)", node.scale);
        } else if constexpr (std::is_same_v<T, LinnikNode>) {
          return detail::strf("linnik(alpha=%g,lambda=%g)", node.alpha, node.lambda);
        } else if constexpr (std::is_same_v<T, SymGammaNode>) {
          return detail::strf("sym-gamma-mixture(k=%d)", node.k);
        } else if constexpr (std::is_same_v<T, DegenerateNode>) {
          return detail::strf("degenerate(a=%g)", node.point);
        } else if constexpr (std::is_same_v<T, StableNode>) {
          return detail::strf("stable(alpha=%g,lambda=%g)", node.alpha, node.lambda);
        } else if constexpr (std::is_same_v<T, GenLinnikNode>) {
          return detail::strf("gen-linnik(alpha=%g,lambda=%g,beta=%g)", node.alpha,
                              node.lambda, node.beta);
        } else if constexpr (std::is_same_v<T, ScalarCF::Node::LtComposeNode>) {
          return detail::strf("lt-compose(phi-alpha=%g,h=%s)", node.phi_alpha,
                              node.h.describe().c_str());
        } else if constexpr (std::is_same_v<T, ScalarCF::Node::ProductNode>) {
          return "product(" + node.lhs.describe() + "," + node.rhs.describe() + ")";
        } else if constexpr (std::is_same_v<T, ScalarCF::Node::MixtureNode>) {
          std::string out = "mixture(";
          for (std::size_t i = 0; i < node.parts.size(); ++i) {
            if (i) out += ",";
            out += detail::strf("%g*", node.weights[i]) + node.parts[i].describe();
          }
          return out + ")";
        } else {
          return detail::strf("empirical(n=%zu,seed=%llu,id=%s)",
                              node.samples->count(),
                              static_cast<unsigned long long>(node.samples->seed),
                              node.samples->generator_id.c_str());
        }
      },
      node_->v);
}

const char* to_string(CfFamily family) {
  switch (family) {
    case CfFamily::Laplace: return "laplace";
    case CfFamily::Linnik: return "linnik";
    case CfFamily::SymmetricGammaMixture: return "sym-gamma-mixture";
    case CfFamily::Degenerate: return "degenerate";
    case CfFamily::Stable: return "stable";
    case CfFamily::GeneralizedLinnik: return "gen-linnik";
    case CfFamily::LtCompose: return "lt-compose";
    case CfFamily::Product: return "product";
    case CfFamily::Mixture: return "mixture";
    case CfFamily::Empirical: return "empirical";
  }
  return "unknown";
}

std::vector<std::complex<double>> eval_cf(const ScalarCF& f, const EvalGrid& grid) {
  std::vector<std::complex<double>> out;
  out.reserve(grid.size());
  for (double t : grid.points()) out.push_back(f(t));
  return out;
}

ScalarCF cf_product(const ScalarCF& f, const ScalarCF& g) {
  return ScalarCF::product_of(f, g);
}

EvalGrid default_grid(const ScalarCF& f) {
  return EvalGrid::symmetric(129, 10.0 * f.natural_scale());
}

Curve eval_curve(const ScalarCF& f, const EvalGrid& grid) {
  return Curve{grid, eval_cf(f, grid)};
}

EmpiricalCF::EmpiricalCF(SampleBatch samples, EvalGrid grid)
    : samples_(std::make_shared<const SampleBatch>(std::move(samples))),
      grid_(std::move(grid)),
      cos_sums_(grid_.size(), 0.0),
      sin_sums_(grid_.size(), 0.0) {
  if (samples_->count() < 2) {
    throw std::invalid_argument("empirical_cf: at least two samples required");
  }
  for (std::size_t i = 0; i < grid_.size(); ++i) {
    const double t = grid_[i];
    double c = 0.0, s = 0.0;
    for (double x : samples_->values) {
      c += std::cos(t * x);
      s += std::sin(t * x);
    }
    cos_sums_[i] = c;
    sin_sums_[i] = s;
  }
}

std::complex<double> EmpiricalCF::value(std::size_t i) const {
  const double n = static_cast<double>(samples_->count());
  return {cos_sums_[i] / n, sin_sums_[i] / n};
}

std::vector<std::complex<double>> EmpiricalCF::values() const {
  std::vector<std::complex<double>> out(grid_.size());
  for (std::size_t i = 0; i < grid_.size(); ++i) out[i] = value(i);
  return out;
}

Curve EmpiricalCF::curve() const { return Curve{grid_, values()}; }

EmpiricalCF empirical_cf(SampleBatch samples, const EvalGrid& grid) {
  return EmpiricalCF(std::move(samples), grid);
}

}  // namespace rsdlab
