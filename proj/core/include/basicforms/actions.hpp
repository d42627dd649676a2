#pragma once

#include "basicforms/form.hpp"
#include "basicforms/matrix.hpp"

#include <cstddef>
#include <vector>

namespace basicforms {

/// Invertible affine map x -> A x + b on R^n with exact entries.
class AffineMap {
 public:
  /// Throws NotInvertible if `linear` is singular, DimensionMismatch on shape errors.
  AffineMap(Matrix linear, ScalarVector translation);

  static AffineMap identity(int n);
  static AffineMap translation(ScalarVector offset);
  static AffineMap linear_map(Matrix linear);

  [[nodiscard]] int dim() const { return static_cast<int>(translation_.size()); }
  [[nodiscard]] const Matrix& linear() const { return linear_; }
  [[nodiscard]] const ScalarVector& offset() const { return translation_; }
  [[nodiscard]] bool is_identity() const;
  [[nodiscard]] bool uses_parameter() const;

  /// The map as polynomial components (each of degree <= 1).
  [[nodiscard]] PolyMap as_polymap() const;

  friend bool operator==(const AffineMap&, const AffineMap&) = default;

 private:
  Matrix linear_;
  ScalarVector translation_;
};

/// (g o h)(x) = g(h(x)).
[[nodiscard]] AffineMap affine_compose(const AffineMap& g, const AffineMap& h);
[[nodiscard]] AffineMap affine_inverse(const AffineMap& g);

/// g^* alpha. Affine substitution keeps coefficient degrees.
[[nodiscard]] Form act_pullback(const AffineMap& g, const Form& alpha);

/// A group action on R^n: discrete affine generators plus infinitesimal
/// generators of the identity component.
struct ActionSpec {
  int ambient_dim = 0;
  std::vector<AffineMap> discrete_generators;
  std::vector<VectorField> infinitesimal_generators;

  /// Throws DimensionMismatch if some generator lives in another dimension.
  void validate() const;
  /// Largest infinitesimal generator degree (0 when there are none).
  [[nodiscard]] int field_degree() const;
};

/// All products of generators and their inverses, breadth first by word length,
/// identity first. Throws GroupNotFinite once more than `cap` elements appear.
[[nodiscard]] std::vector<AffineMap> group_closure(const std::vector<AffineMap>& generators, std::size_t cap);

/// Text rendering `x -> [[row], ...] x + [b]`.
[[nodiscard]] std::string to_string(const AffineMap& g);

}  // namespace basicforms

namespace basicforms {

/// Replaces the formal parameter by an exact rational value everywhere in the action.
[[nodiscard]] ActionSpec specialize_parameter(const ActionSpec& action, const mpq_class& value);

}  // namespace basicforms
