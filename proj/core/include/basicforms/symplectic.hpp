#pragma once

#include "basicforms/form.hpp"
#include "basicforms/plots.hpp"
#include "basicforms/verify.hpp"

#include <optional>
#include <vector>

namespace basicforms {

/// A point of the level set together with an orthonormal basis of its tangent space.
struct LevelSample {
  Point point;
  std::vector<Point> tangent_basis;
};

/// Constant symplectic form, generator of a circle action, and its momentum map,
/// with sample points on the level set Phi = level.
///
/// Convention: i_xi omega = d Phi.
struct HamiltonianModel {
  int ambient_dim = 0;
  Form omega;
  VectorField xi;
  Polynomial phi;
  Scalar level;
  std::vector<LevelSample> level_samples;

  /// Checks that omega is a closed constant-coefficient nondegenerate 2-form and
  /// that every sample lies on the level set (|Phi - level| <= 1e-10) with an
  /// orthonormal basis tangent to it. Throws OffLevelSet or std::invalid_argument.
  void validate(std::optional<double> a = std::nullopt) const;
};

/// R^4 with coordinates (x1, y1, x2, y2), omega = dx1^dy1 + dx2^dy2, the diagonal
/// rotation xi = (-y1, x1, -y2, x2) and Phi = -(x1^2 + y1^2 + x2^2 + y2^2)/2,
/// sampled on the unit sphere (level -1/2).
[[nodiscard]] HamiltonianModel r4_rotation_model();

/// per_axis^3 points of S^3 in Hopf coordinates with the quaternionic frame
/// (i z, j z, k z) as tangent basis. per_axis = 4 gives 64 samples.
[[nodiscard]] std::vector<LevelSample> hopf_samples(std::size_t per_axis = 4);

/// i_xi omega - d Phi; the zero 1-form for a consistent Hamiltonian triple.
[[nodiscard]] Form momentum_residual(const HamiltonianModel& model);

struct SjamaarReport {
  /// |i_xi sigma| on tangent (k-1)-tuples.
  DeviationReport horizontal;
  /// |L_xi sigma| on tangent k-tuples.
  DeviationReport invariant;
  [[nodiscard]] bool pass() const { return horizontal.pass && invariant.pass; }
};

/// Checks the two consequences on the level set of sigma pulling back from the
/// quotient: horizontality and invariance, restricted to level-set tangents.
[[nodiscard]] SjamaarReport sjamaar_restriction_check(const HamiltonianModel& model, const Form& sigma, double tol,
                                                      std::optional<double> a = std::nullopt);

}  // namespace basicforms
