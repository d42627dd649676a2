#pragma once

#include "basicforms/actions.hpp"
#include "basicforms/basic.hpp"

#include <string>
#include <vector>

namespace basicforms {

/// Local uniformizing chart: a domain in R^n with a finite affine group acting.
struct OrbifoldChart {
  int ambient_dim = 0;
  std::vector<AffineMap> group;
  std::string label;

  /// Enumerates the group generated by `generators` (up to `cap` elements).
  static OrbifoldChart from_generators(const std::vector<AffineMap>& generators, std::string label, std::size_t cap = 256);
  /// Throws GroupNotClosed unless the group has the identity and is closed under
  /// products and inverses.
  void validate() const;
};

/// Invariant forms of the chart group in the window. Computed as the basic forms
/// of the finite action and cross-checked against the span of the Reynolds
/// projector applied to the monomial window; a disagreement throws std::logic_error.
[[nodiscard]] std::vector<Form> orbifold_invariant_forms(const OrbifoldChart& chart, const TruncationSpec& spec);

/// Exact test of transition^*(alpha_v) == alpha_u.
[[nodiscard]] bool chart_compatibility_check(const Form& alpha_u, const Form& alpha_v, const AffineMap& transition);

}  // namespace basicforms
