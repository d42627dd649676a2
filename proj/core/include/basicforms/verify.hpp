#pragma once

#include "basicforms/actions.hpp"
#include "basicforms/basic.hpp"
#include "basicforms/form.hpp"
#include "basicforms/plots.hpp"

#include <optional>
#include <string>
#include <vector>

namespace basicforms {

/// Default PASS tolerance for checks backed by exact or analytic data.
inline constexpr double kSymbolicTolerance = 1e-9;
/// Default PASS tolerance for checks that differentiate numerically.
inline constexpr double kFiniteDifferenceTolerance = 1e-6;

struct DeviationReport {
  double max_abs_deviation = 0.0;
  std::size_t argmax = 0;
  std::vector<double> per_sample;
  double tolerance = 0.0;
  bool pass = true;
};

/// Builds a report from per-sample deviations; argmax is the first maximal sample.
[[nodiscard]] DeviationReport make_deviation_report(std::vector<double> per_sample, double tolerance);

/// Pullback of a form along a sampled plot: per sample, the values of the
/// alternating tensor on every increasing k-tuple of parameter basis vectors.
struct PlotPullback {
  int grade = 0;
  std::vector<MultiIndex> tuples;
  std::vector<std::vector<double>> values;
};

[[nodiscard]] PlotPullback pullback_along_plot(const Plot& p, const Form& alpha, std::optional<double> a = std::nullopt);

/// max |p1^* alpha - p2^* alpha| over samples and basis tuples; PASS iff <= tol.
/// Throws DimensionMismatch if the plots do not share a grid.
[[nodiscard]] DeviationReport criterion_check(const Plot& p1, const Plot& p2, const Form& alpha, double tol,
                                              std::optional<double> a = std::nullopt);

/// Floating point affine map x -> A x + b, A row-major n x n.
struct NumericAffine {
  std::size_t dim = 0;
  std::vector<double> linear;
  std::vector<double> offset;
};

/// Group-valued function sampled on a 1-d grid.
struct GroupPath {
  std::vector<Point> grid;
  std::vector<NumericAffine> elements;
};

/// Registered paths: `so2_rotation` (rotation by phi(u) = u/2 + u^2/10, matching
/// so2_arc_rotated) and `identity2`.
[[nodiscard]] GroupPath builtin_group_path(std::string_view name, const std::vector<Point>& grid);

struct GaugeReport {
  DeviationReport deviation;
  /// Largest propagated finite-difference error in the constructed Jacobians.
  double derivative_error_estimate = 0.0;
  Plot transformed;
};

/// Forms p2(u) = a(u) p1(u), differentiating a(u) by finite differences, and runs
/// criterion_check(p1, p2, alpha, tol). Throws GridTooCoarse when the derivative
/// error estimate exceeds tol / 10.
[[nodiscard]] GaugeReport smooth_gauge_check(const Plot& p1, const GroupPath& path, const Form& alpha, double tol,
                                             std::optional<double> a = std::nullopt);

struct StagesReport {
  TruncationSpec induced_spec;
  TruncationSpec big_spec;
  std::vector<Form> induced_basis;
  std::vector<Form> pulled_back;
  std::vector<Form> big_basis;
  bool contained = false;
  /// Equality is decided only for affine quotient maps.
  bool equality_decided = false;
  bool equal = false;
};

/// Compares pi_K^* of the induced basic forms with the basic forms of the big
/// action, in the degree window spec.max_degree * deg(pi_K). Throws
/// IntertwiningError, naming the offending form and generator, if a pulled back
/// form is not invariant under the big action.
[[nodiscard]] StagesReport stages_check(const ActionSpec& big, const PolyMap& pi_k, const ActionSpec& induced,
                                        const TruncationSpec& spec);

}  // namespace basicforms
