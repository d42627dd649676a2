#include "basicforms/basic.hpp"

#include "basicforms/errors.hpp"
#include "basicforms/linalg.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <random>

namespace basicforms {

namespace {

void exponents_of_degree(int n, int remaining, std::size_t pos, Exponent& current, std::vector<Exponent>& out) {
  if (pos + 1 == static_cast<std::size_t>(n)) {
    current[pos] = remaining;
    out.push_back(current);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    current[pos] = e;
    exponents_of_degree(n, remaining - e, pos + 1, current, out);
  }
}

void index_sets(int n, int k, int start, MultiIndex& current, std::vector<MultiIndex>& out) {
  if (static_cast<int>(current.size()) == k) {
    out.push_back(current);
    return;
  }
  for (int i = start; i < n; ++i) {
    current.push_back(i);
    index_sets(n, k, i + 1, current, out);
    current.pop_back();
  }
}

std::vector<MultiIndex> all_index_sets(int n, int k) {
  std::vector<MultiIndex> out;
  MultiIndex current;
  index_sets(n, k, 0, current, out);
  return out;
}

Matrix operator_matrix(const FormWindow& source, const FormWindow& target, const std::function<Form(const Form&)>& op) {
  std::vector<ScalarVector> columns;
  columns.reserve(source.size());
  for (const auto& b : source.basis()) columns.push_back(target.coordinates(op(b)));
  return Matrix::from_columns(target.size(), columns);
}

int window_degree(const std::vector<Form>& forms) {
  int deg = 0;
  for (const auto& f : forms) deg = std::max(deg, f.coefficient_degree());
  return deg;
}

}  // namespace

void TruncationSpec::validate(int n) const {
  if (grade < 0 || grade > n) throw std::invalid_argument(fmt::format("form grade {} outside [0, {}]", grade, n));
  if (max_degree < 0) throw std::invalid_argument("coefficient degree bound must be non-negative");
}

std::vector<Exponent> monomial_exponents(int n, int d) {
  std::vector<Exponent> out;
  Exponent current(static_cast<std::size_t>(n), 0);
  for (int t = 0; t <= d; ++t) exponents_of_degree(n, t, 0, current, out);
  return out;
}

std::vector<Form> monomial_form_basis(int n, const TruncationSpec& spec) { return FormWindow(n, spec).basis(); }

FormWindow::FormWindow(int n, const TruncationSpec& spec) : n_(n), spec_(spec) {
  spec.validate(n);
  const auto sets = all_index_sets(n, spec.grade);
  for (const auto& e : monomial_exponents(n, spec.max_degree)) {
    for (const auto& idx : sets) {
      index_.emplace(std::make_pair(e, idx), basis_.size());
      basis_.push_back(Form::term(n, idx, Polynomial::monomial(n, e)));
    }
  }
}

bool FormWindow::contains(const Form& alpha) const {
  if (alpha.ambient_dim() != n_ || alpha.grade() != spec_.grade) return false;
  for (const auto& [idx, p] : alpha.terms())
    for (const auto& [e, c] : p.terms())
      if (!index_.contains({e, idx})) return false;
  return true;
}

ScalarVector FormWindow::coordinates(const Form& alpha) const {
  if (alpha.ambient_dim() != n_) throw DimensionMismatch("form lives outside the window's ambient space");
  ScalarVector out(basis_.size());
  if (alpha.is_zero()) return out;
  if (alpha.grade() != spec_.grade) throw DimensionMismatch("form grade differs from the window grade");
  for (const auto& [idx, p] : alpha.terms())
    for (const auto& [e, c] : p.terms()) {
      auto it = index_.find({e, idx});
      if (it == index_.end())
        throw std::out_of_range(fmt::format("form term of degree {} lies outside the degree-{} window", total_degree(e),
                                            spec_.max_degree));
      out[it->second] = c;
    }
  return out;
}

Form FormWindow::form(std::span<const Scalar> coords) const {
  if (coords.size() != basis_.size()) throw DimensionMismatch("coordinate vector length differs from window size");
  Form out(n_, spec_.grade);
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (!coords[i].is_zero()) out += basis_[i] * coords[i];
  return out;
}

Matrix FormWindow::coordinate_matrix(const std::vector<Form>& forms) const {
  std::vector<ScalarVector> columns;
  columns.reserve(forms.size());
  for (const auto& f : forms) columns.push_back(coordinates(f));
  return Matrix::from_columns(size(), columns);
}

Matrix invariance_constraints(const ActionSpec& action, const TruncationSpec& spec) {
  action.validate();
  const int n = action.ambient_dim;
  const FormWindow source(n, spec);
  Matrix out(0, source.size());
  for (const auto& g : action.discrete_generators)
    out.append_rows(operator_matrix(source, source, [&](const Form& b) { return act_pullback(g, b) - b; }));
  for (const auto& xi : action.infinitesimal_generators) {
    const FormWindow target(n, {spec.grade, std::max(spec.max_degree + xi.degree() - 1, 0)});
    out.append_rows(operator_matrix(source, target, [&](const Form& b) { return lie_derivative(xi, b); }));
  }
  return out;
}

Matrix horizontality_constraints(const ActionSpec& action, const TruncationSpec& spec) {
  action.validate();
  const int n = action.ambient_dim;
  const FormWindow source(n, spec);
  Matrix out(0, source.size());
  if (spec.grade == 0) return out;
  for (const auto& xi : action.infinitesimal_generators) {
    const FormWindow target(n, {spec.grade - 1, spec.max_degree + xi.degree()});
    out.append_rows(operator_matrix(source, target, [&](const Form& b) { return interior(xi, b); }));
  }
  return out;
}

ConstraintSystem constraint_system(const ActionSpec& action, const TruncationSpec& spec) {
  ConstraintSystem sys{monomial_form_basis(action.ambient_dim, spec), invariance_constraints(action, spec)};
  sys.matrix.append_rows(horizontality_constraints(action, spec));
  return sys;
}

std::vector<Form> basic_form_basis(const ActionSpec& action, const TruncationSpec& spec) {
  const FormWindow window(action.ambient_dim, spec);
  Matrix constraints = invariance_constraints(action, spec);
  constraints.append_rows(horizontality_constraints(action, spec));
  std::vector<Form> out;
  if (constraints.rows() == 0) return window.basis();
  for (const auto& v : kernel_basis(constraints)) out.push_back(window.form(v));
  return out;
}

Form reynolds_average(const std::vector<AffineMap>& group, const Form& alpha) {
  if (group.empty()) throw GroupNotClosed("empty group");
  auto member = [&](const AffineMap& h) { return std::find(group.begin(), group.end(), h) != group.end(); };
  if (!member(AffineMap::identity(group.front().dim()))) throw GroupNotClosed("group does not contain the identity");

  const std::size_t order = group.size();
  constexpr std::size_t kMaxChecks = 4096;
  auto check_pair = [&](std::size_t i, std::size_t j) {
    if (!member(affine_compose(group[i], group[j])))
      throw GroupNotClosed(fmt::format("product of elements {} and {} is not in the group", i, j));
  };
  if (order * order <= kMaxChecks) {
    for (std::size_t i = 0; i < order; ++i)
      for (std::size_t j = 0; j < order; ++j) check_pair(i, j);
  } else {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<std::size_t> pick(0, order - 1);
    for (std::size_t t = 0; t < kMaxChecks; ++t) check_pair(pick(rng), pick(rng));
  }

  Form sum(alpha.ambient_dim(), alpha.grade());
  for (const auto& g : group) sum += act_pullback(g, alpha);
  return sum * (Scalar(1) / Scalar(static_cast<long>(order)));
}

std::vector<CohomologyRecord> truncated_basic_cohomology(const ActionSpec& action, int d) {
  if (d < 1) throw std::invalid_argument("cohomology window needs d >= 1");
  action.validate();
  const int n = action.ambient_dim;

  std::vector<std::vector<Form>> basic_at_d;
  std::vector<std::vector<Form>> basic_at_d1;
  for (int k = 0; k <= n; ++k) {
    basic_at_d.push_back(basic_form_basis(action, {k, d}));
    if (k < n) basic_at_d1.push_back(basic_form_basis(action, {k, d + 1}));
  }

  auto rank_of_d = [&](const std::vector<Form>& forms, int k) -> std::size_t {
    // ext_d lowers coefficient degree, so images of degree <= d+1 forms fit the degree-d window
    if (k + 1 > n || forms.empty()) return 0;
    const FormWindow target(n, {k + 1, d});
    std::vector<Form> images;
    for (const auto& f : forms) images.push_back(ext_d(f));
    return rank(target.coordinate_matrix(images));
  };

  std::vector<CohomologyRecord> out;
  for (int k = 0; k <= n; ++k) {
    CohomologyRecord rec;
    rec.grade = k;
    rec.window = d;
    const auto& basic = basic_at_d[static_cast<std::size_t>(k)];
    rec.basic_dim = basic.size();
    rec.closed_dim = basic.size() - rank_of_d(basic, k);
    rec.exact_dim = k == 0 ? 0 : rank_of_d(basic_at_d1[static_cast<std::size_t>(k - 1)], k - 1);
    if (rec.exact_dim > rec.closed_dim) throw std::logic_error("exact forms exceed closed forms in the basic complex");
    rec.cohomology_dim = rec.closed_dim - rec.exact_dim;
    out.push_back(rec);
  }
  return out;
}

bool forms_span_equal(const std::vector<Form>& lhs, const std::vector<Form>& rhs, int n, int k) {
  const FormWindow window(n, {k, std::max(window_degree(lhs), window_degree(rhs))});
  return column_span_equal(window.coordinate_matrix(lhs), window.coordinate_matrix(rhs));
}

bool forms_span_contains(const std::vector<Form>& outer, const std::vector<Form>& inner, int n, int k) {
  const FormWindow window(n, {k, std::max(window_degree(outer), window_degree(inner))});
  return column_span_contains(window.coordinate_matrix(outer), window.coordinate_matrix(inner));
}

}  // namespace basicforms
