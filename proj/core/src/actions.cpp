#include "basicforms/actions.hpp"

#include "basicforms/errors.hpp"
#include "basicforms/linalg.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <deque>

namespace basicforms {

AffineMap::AffineMap(Matrix linear, ScalarVector translation)
    : linear_(std::move(linear)), translation_(std::move(translation)) {
  if (linear_.rows() != linear_.cols() || linear_.rows() != translation_.size())
    throw DimensionMismatch("affine map needs an n x n linear part and an n-vector translation");
  if (translation_.empty()) throw DimensionMismatch("affine map on R^0");
  if (rank(linear_) != linear_.rows()) throw NotInvertible("affine map has a singular linear part");
}

AffineMap AffineMap::identity(int n) {
  return AffineMap(Matrix::identity(static_cast<std::size_t>(n)), ScalarVector(static_cast<std::size_t>(n)));
}

AffineMap AffineMap::translation(ScalarVector offset) {
  const std::size_t n = offset.size();
  return AffineMap(Matrix::identity(n), std::move(offset));
}

AffineMap AffineMap::linear_map(Matrix linear) {
  const std::size_t n = linear.rows();
  return AffineMap(std::move(linear), ScalarVector(n));
}

bool AffineMap::is_identity() const {
  return linear_ == Matrix::identity(translation_.size()) &&
         std::all_of(translation_.begin(), translation_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool AffineMap::uses_parameter() const {
  for (std::size_t i = 0; i < linear_.rows(); ++i)
    for (std::size_t j = 0; j < linear_.cols(); ++j)
      if (linear_(i, j).uses_parameter()) return true;
  return std::any_of(translation_.begin(), translation_.end(), [](const Scalar& s) { return s.uses_parameter(); });
}

PolyMap AffineMap::as_polymap() const {
  const int n = dim();
  std::vector<Polynomial> comps;
  for (int i = 0; i < n; ++i) {
    Polynomial c = Polynomial::constant(n, translation_[static_cast<std::size_t>(i)]);
    for (int j = 0; j < n; ++j)
      c += Polynomial::variable(n, j) * linear_(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    comps.push_back(std::move(c));
  }
  return PolyMap(n, std::move(comps));
}

AffineMap affine_compose(const AffineMap& g, const AffineMap& h) {
  if (g.dim() != h.dim()) throw DimensionMismatch("cannot compose affine maps of different dimensions");
  ScalarVector b = g.linear().apply(h.offset());
  for (std::size_t i = 0; i < b.size(); ++i) b[i] += g.offset()[i];
  return AffineMap(g.linear() * h.linear(), std::move(b));
}

AffineMap affine_inverse(const AffineMap& g) {
  Matrix inv = inverse(g.linear());
  ScalarVector b = inv.apply(g.offset());
  for (auto& s : b) s = -s;
  return AffineMap(std::move(inv), std::move(b));
}

Form act_pullback(const AffineMap& g, const Form& alpha) {
  if (g.dim() != alpha.ambient_dim()) throw DimensionMismatch("group element and form live on different spaces");
  return pullback(g.as_polymap(), alpha);
}

void ActionSpec::validate() const {
  if (ambient_dim < 1) throw DimensionMismatch("action needs a positive ambient dimension");
  for (const auto& g : discrete_generators)
    if (g.dim() != ambient_dim) throw DimensionMismatch("discrete generator has the wrong dimension");
  for (const auto& x : infinitesimal_generators)
    if (x.ambient_dim != ambient_dim) throw DimensionMismatch("infinitesimal generator has the wrong dimension");
}

int ActionSpec::field_degree() const {
  int deg = 0;
  for (const auto& x : infinitesimal_generators) deg = std::max(deg, x.degree());
  return deg;
}

std::vector<AffineMap> group_closure(const std::vector<AffineMap>& generators, std::size_t cap) {
  if (cap < 1) throw std::invalid_argument("group_closure cap must be positive");
  if (generators.empty()) throw std::invalid_argument("group_closure needs at least one generator");
  const int n = generators.front().dim();
  std::vector<AffineMap> letters;
  for (const auto& g : generators) {
    if (g.dim() != n) throw DimensionMismatch("generators act on different dimensions");
    letters.push_back(g);
    letters.push_back(affine_inverse(g));
  }

  std::vector<AffineMap> elements{AffineMap::identity(n)};
  std::deque<std::size_t> frontier{0};
  auto contains = [&](const AffineMap& h) { return std::find(elements.begin(), elements.end(), h) != elements.end(); };
  while (!frontier.empty()) {
    const std::size_t current = frontier.front();
    frontier.pop_front();
    for (const auto& s : letters) {
      AffineMap next = affine_compose(elements[current], s);
      if (contains(next)) continue;
      if (elements.size() == cap) throw GroupNotFinite(fmt::format("group not finite within cap {}", cap));
      elements.push_back(std::move(next));
      frontier.push_back(elements.size() - 1);
    }
  }
  return elements;
}

std::string to_string(const AffineMap& g) {
  std::string out = "x -> [";
  for (std::size_t i = 0; i < g.linear().rows(); ++i) {
    out += i > 0 ? ", [" : "[";
    for (std::size_t j = 0; j < g.linear().cols(); ++j) out += (j > 0 ? ", " : "") + g.linear()(i, j).to_string();
    out += "]";
  }
  out += "] x + [";
  for (std::size_t i = 0; i < g.offset().size(); ++i) out += (i > 0 ? ", " : "") + g.offset()[i].to_string();
  return out + "]";
}

}  // namespace basicforms

namespace basicforms {

ActionSpec specialize_parameter(const ActionSpec& action, const mpq_class& value) {
  auto sub = [&](const Scalar& s) { return s.substitute_parameter(value); };
  ActionSpec out{action.ambient_dim, {}, {}};
  for (const auto& g : action.discrete_generators) {
    Matrix lin = g.linear();
    for (std::size_t i = 0; i < lin.rows(); ++i)
      for (std::size_t j = 0; j < lin.cols(); ++j) lin(i, j) = sub(lin(i, j));
    ScalarVector b = g.offset();
    for (auto& s : b) s = sub(s);
    out.discrete_generators.emplace_back(std::move(lin), std::move(b));
  }
  for (const auto& x : action.infinitesimal_generators) {
    std::vector<Polynomial> comps;
    for (const auto& c : x.components) comps.push_back(c.map_coefficients(sub));
    out.infinitesimal_generators.emplace_back(x.ambient_dim, std::move(comps));
  }
  return out;
}

}  // namespace basicforms
