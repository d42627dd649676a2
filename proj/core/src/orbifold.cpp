#include "basicforms/orbifold.hpp"

#include "basicforms/errors.hpp"

#include <fmt/format.h>

#include <algorithm>

namespace basicforms {

OrbifoldChart OrbifoldChart::from_generators(const std::vector<AffineMap>& generators, std::string label, std::size_t cap) {
  OrbifoldChart chart;
  chart.group = group_closure(generators, cap);
  chart.ambient_dim = chart.group.front().dim();
  chart.label = std::move(label);
  return chart;
}

void OrbifoldChart::validate() const {
  if (group.empty()) throw GroupNotClosed(fmt::format("chart '{}' has an empty group", label));
  auto member = [&](const AffineMap& h) { return std::find(group.begin(), group.end(), h) != group.end(); };
  for (const auto& g : group)
    if (g.dim() != ambient_dim) throw DimensionMismatch(fmt::format("chart '{}' mixes dimensions", label));
  if (!member(AffineMap::identity(ambient_dim))) throw GroupNotClosed(fmt::format("chart '{}' group lacks the identity", label));
  for (std::size_t i = 0; i < group.size(); ++i) {
    if (!member(affine_inverse(group[i])))
      throw GroupNotClosed(fmt::format("chart '{}': inverse of element {} missing", label, i));
    for (std::size_t j = 0; j < group.size(); ++j)
      if (!member(affine_compose(group[i], group[j])))
        throw GroupNotClosed(fmt::format("chart '{}': product of elements {} and {} missing", label, i, j));
  }
}

std::vector<Form> orbifold_invariant_forms(const OrbifoldChart& chart, const TruncationSpec& spec) {
  chart.validate();
  const int n = chart.ambient_dim;
  ActionSpec action{n, {}, {}};
  for (const auto& g : chart.group)
    if (!g.is_identity()) action.discrete_generators.push_back(g);

  std::vector<Form> basic = basic_form_basis(action, spec);
  std::vector<Form> averaged;
  for (const auto& b : monomial_form_basis(n, spec)) averaged.push_back(reynolds_average(chart.group, b));
  if (!forms_span_equal(basic, averaged, n, spec.grade))
    throw std::logic_error(fmt::format("chart '{}': invariant forms disagree with the Reynolds image", chart.label));
  return basic;
}

bool chart_compatibility_check(const Form& alpha_u, const Form& alpha_v, const AffineMap& transition) {
  if (alpha_u.ambient_dim() != alpha_v.ambient_dim() || transition.dim() != alpha_u.ambient_dim())
    throw DimensionMismatch("chart forms and transition live on different spaces");
  return act_pullback(transition, alpha_v) == alpha_u;
}

}  // namespace basicforms
