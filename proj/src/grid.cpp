#include "rsdlab/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "rsdlab/detail/format.hpp"

namespace rsdlab {

const char* to_string(GridKind kind) {
  switch (kind) {
    case GridKind::SymmetricAboutZero: return "symmetric-about-zero";
    case GridKind::Nonnegative: return "nonnegative";
    case GridKind::UnitInterval: return "unit-interval";
  }
  return "unknown";
}

EvalGrid::EvalGrid(std::vector<double> points, GridKind kind)
    : points_(std::move(points)), kind_(kind) {
  if (points_.size() < 2) {
    throw std::invalid_argument("EvalGrid: at least two points required");
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!std::isfinite(points_[i])) {
      throw std::invalid_argument("EvalGrid: points must be finite");
    }
    if (i > 0 && !(points_[i] > points_[i - 1])) {
      throw std::invalid_argument("EvalGrid: points must be strictly increasing");
    }
  }
  const double scale = std::max(1.0, max_abs());
  if (kind_ == GridKind::SymmetricAboutZero) {
    const std::size_t n = points_.size();
    if (n % 2 == 0) {
      throw std::invalid_argument("EvalGrid: symmetric grid needs an odd point count");
    }
    if (points_[n / 2] != 0.0) {
      throw std::invalid_argument("EvalGrid: symmetric grid must contain 0");
    }
    for (std::size_t i = 0; i < n / 2; ++i) {
      if (std::abs(points_[i] + points_[n - 1 - i]) > 1e-12 * scale) {
        throw std::invalid_argument("EvalGrid: symmetric grid must be sign-symmetric");
      }
    }
  } else {
    if (points_.front() < 0.0) {
      throw std::invalid_argument(detail::strf(
          "EvalGrid: %s grid cannot contain negative points", to_string(kind_)));
    }
    if (kind_ == GridKind::UnitInterval && points_.back() > 1.0 + 1e-12) {
      throw std::invalid_argument("EvalGrid: unit-interval grid exceeds 1");
    }
  }
}

EvalGrid EvalGrid::symmetric(std::size_t count, double max_abs) {
  if (count < 3 || count % 2 == 0) {
    throw std::invalid_argument("EvalGrid::symmetric: count must be odd and >= 3");
  }
  if (!(max_abs > 0.0) || !std::isfinite(max_abs)) {
    throw std::invalid_argument("EvalGrid::symmetric: max_abs must be positive");
  }
  const std::size_t half = count / 2;
  const double step = max_abs / static_cast<double>(half);
  std::vector<double> pts(count);
  for (std::size_t i = 0; i < count; ++i) {
    // (i - half) is exact, so the grid is exactly sign-symmetric with a 0.
    pts[i] = (static_cast<double>(i) - static_cast<double>(half)) * step;
  }
  return EvalGrid(std::move(pts), GridKind::SymmetricAboutZero);
}

EvalGrid EvalGrid::nonnegative(std::size_t count, double max_value) {
  if (count < 2) {
    throw std::invalid_argument("EvalGrid::nonnegative: count must be >= 2");
  }
  if (!(max_value > 0.0) || !std::isfinite(max_value)) {
    throw std::invalid_argument("EvalGrid::nonnegative: max_value must be positive");
  }
  std::vector<double> pts(count);
  const double step = max_value / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) {
    pts[i] = static_cast<double>(i) * step;
  }
  pts.back() = max_value;
  return EvalGrid(std::move(pts), GridKind::Nonnegative);
}

EvalGrid EvalGrid::unit_interval(std::size_t count) {
  if (count < 2) {
    throw std::invalid_argument("EvalGrid::unit_interval: count must be >= 2");
  }
  std::vector<double> pts(count);
  const double step = 1.0 / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) {
    pts[i] = static_cast<double>(i) * step;
  }
  pts.back() = 1.0;
  return EvalGrid(std::move(pts), GridKind::UnitInterval);
}

EvalGrid EvalGrid::from_points(std::vector<double> points, GridKind kind) {
  return EvalGrid(std::move(points), kind);
}

double EvalGrid::max_abs() const {
  return std::max(std::abs(points_.front()), std::abs(points_.back()));
}

bool EvalGrid::uniform(double rel_tol) const {
  const double h0 = points_[1] - points_[0];
  for (std::size_t i = 2; i < points_.size(); ++i) {
    if (std::abs((points_[i] - points_[i - 1]) - h0) > rel_tol * std::abs(h0)) {
      return false;
    }
  }
  return true;
}

double EvalGrid::spacing() const {
  if (!uniform()) {
    throw std::logic_error("EvalGrid::spacing: grid is not uniform");
  }
  return points_[1] - points_[0];
}

EvalGrid EvalGrid::scaled(double factor) const {
  if (!(factor > 0.0) || !std::isfinite(factor)) {
    throw std::invalid_argument("EvalGrid::scaled: factor must be positive");
  }
  std::vector<double> pts(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) {
    pts[i] = factor * points_[i];
  }
  GridKind kind = kind_;
  if (kind == GridKind::UnitInterval && factor != 1.0) {
    kind = GridKind::Nonnegative;
  }
  return EvalGrid(std::move(pts), kind);
}

}  // namespace rsdlab
