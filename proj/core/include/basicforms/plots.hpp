#pragma once

#include "basicforms/form.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace basicforms {

using Point = std::vector<double>;

/// A smooth map U -> R^n sampled on a grid in U, with Jacobians.
struct Plot {
  int param_dim = 0;
  int ambient_dim = 0;
  std::vector<Point> grid;
  std::vector<Point> values;
  /// Row-major n x param_dim per sample.
  std::vector<std::vector<double>> jacobians;

  [[nodiscard]] std::size_t size() const { return grid.size(); }
  /// Throws DimensionMismatch on inconsistent counts, std::invalid_argument on non-finite data.
  void validate() const;
};

/// `count` evenly spaced 1-d samples from start to stop inclusive.
[[nodiscard]] std::vector<Point> uniform_grid(double start, double stop, std::size_t count);
/// 2001 samples on [-1.5, 1.5]; t = 0 is sample 1000 exactly.
[[nodiscard]] std::vector<Point> z2_default_grid();
/// 4001 samples on [0, 1], fine enough for finite-difference gauges at tolerance 1e-6.
[[nodiscard]] std::vector<Point> so2_default_grid();

/// Registered plots with closed-form values and analytic Jacobians:
///   z2_p1, z2_p2     the flat pair R -> R that agree modulo x -> -x
///   line             t -> t in R
///   constant_r2      t -> (1, 2)
///   so2_arc          u -> (2 + cos u, sin u)
///   so2_arc_rotated  R(phi(u)) applied to so2_arc, phi(u) = u/2 + u^2/10
///   solenoid_p1      t -> (t, t^2)
///   solenoid_p2      solenoid_p1 moved by (1, 2) + t^3 (1, a); needs a binding for a
/// Throws std::invalid_argument for an unknown name.
[[nodiscard]] Plot builtin_plot(std::string_view name, const std::vector<Point>& grid,
                                std::optional<double> a = std::nullopt);
[[nodiscard]] std::vector<std::string> builtin_plot_names();

/// Samples a polynomial map together with its exact Jacobian.
[[nodiscard]] Plot sample_polymap(const PolyMap& f, const std::vector<Point>& grid, std::optional<double> a = std::nullopt);

/// Plot table: one row per sample `u_1 .. u_q | x_1 .. x_n | J row-major`,
/// whitespace separated; `#` starts a comment.
[[nodiscard]] Plot read_plot_table(std::istream& in);
void write_plot_table(std::ostream& out, const Plot& plot);

}  // namespace basicforms
