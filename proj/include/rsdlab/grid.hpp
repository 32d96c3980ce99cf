#pragma once

#include <cstddef>
#include <vector>

namespace rsdlab {

enum class GridKind {
  SymmetricAboutZero,  // contains 0, sign-symmetric; CF evaluation
  Nonnegative,         // t or s >= 0; LT evaluation
  UnitInterval,        // s in [0,1]; PGF evaluation
};

const char* to_string(GridKind kind);

// Ordered evaluation abscissae. Strictly increasing; a symmetric grid
// contains 0 exactly and is exactly sign-symmetric.
class EvalGrid {
 public:
  // count must be odd so the grid contains 0.
  static EvalGrid symmetric(std::size_t count, double max_abs);
  static EvalGrid nonnegative(std::size_t count, double max_value);
  static EvalGrid unit_interval(std::size_t count);
  static EvalGrid from_points(std::vector<double> points, GridKind kind);

  const std::vector<double>& points() const { return points_; }
  GridKind kind() const { return kind_; }
  std::size_t size() const { return points_.size(); }
  double operator[](std::size_t i) const { return points_[i]; }
  double max_abs() const;

  bool uniform(double rel_tol = 1e-9) const;
  // Spacing of a uniform grid; throws std::logic_error otherwise.
  double spacing() const;

  // Pointwise scaling by factor > 0. A scaled unit-interval grid becomes
  // a plain nonnegative grid.
  EvalGrid scaled(double factor) const;

 private:
  EvalGrid(std::vector<double> points, GridKind kind);

  std::vector<double> points_;
  GridKind kind_;
};

}  // namespace rsdlab
