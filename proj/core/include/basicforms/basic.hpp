#pragma once

#include "basicforms/actions.hpp"
#include "basicforms/form.hpp"
#include "basicforms/matrix.hpp"

#include <map>
#include <utility>
#include <vector>

namespace basicforms {

/// Finite window of k-forms whose coefficients have total degree <= d.
struct TruncationSpec {
  int grade = 0;
  int max_degree = 0;

  /// Throws std::invalid_argument unless 0 <= grade <= n and max_degree >= 0.
  void validate(int n) const;
};

/// Exponents of total degree <= d: ascending total degree, and within one degree
/// the larger power of the earlier variable first (1, x, y, x^2, x*y, y^2, ...).
[[nodiscard]] std::vector<Exponent> monomial_exponents(int n, int d);

/// All x^e dx_I in the window, ordered by exponent then lexicographically by I.
/// The count is C(n, k) * C(n + d, d).
[[nodiscard]] std::vector<Form> monomial_form_basis(int n, const TruncationSpec& spec);

/// Coordinates of forms with respect to monomial_form_basis.
class FormWindow {
 public:
  FormWindow(int n, const TruncationSpec& spec);

  [[nodiscard]] int ambient_dim() const { return n_; }
  [[nodiscard]] const TruncationSpec& spec() const { return spec_; }
  [[nodiscard]] std::size_t size() const { return basis_.size(); }
  [[nodiscard]] const std::vector<Form>& basis() const { return basis_; }

  [[nodiscard]] bool contains(const Form& alpha) const;
  /// Throws std::out_of_range if alpha has a term outside the window.
  [[nodiscard]] ScalarVector coordinates(const Form& alpha) const;
  [[nodiscard]] Form form(std::span<const Scalar> coords) const;
  /// Columns are the coordinate vectors of `forms`.
  [[nodiscard]] Matrix coordinate_matrix(const std::vector<Form>& forms) const;

 private:
  int n_;
  TruncationSpec spec_;
  std::vector<Form> basis_;
  std::map<std::pair<Exponent, MultiIndex>, std::size_t> index_;
};

/// Monomial window plus a matrix whose kernel (in window coordinates) is the
/// space of basic forms.
struct ConstraintSystem {
  std::vector<Form> basis;
  Matrix matrix;
};

/// Rows for g^* alpha - alpha = 0 per discrete generator (degree <= d target), then
/// L_xi alpha = 0 per infinitesimal generator (degree <= d + deg(xi) - 1 target).
[[nodiscard]] Matrix invariance_constraints(const ActionSpec& action, const TruncationSpec& spec);
/// Rows for i_xi alpha = 0, into the (k-1)-form window of degree <= d + deg(xi).
/// Empty (0 rows) when k = 0 or there are no infinitesimal generators.
[[nodiscard]] Matrix horizontality_constraints(const ActionSpec& action, const TruncationSpec& spec);
[[nodiscard]] ConstraintSystem constraint_system(const ActionSpec& action, const TruncationSpec& spec);

/// Canonical basis of the truncated space of basic (invariant and horizontal) forms.
[[nodiscard]] std::vector<Form> basic_form_basis(const ActionSpec& action, const TruncationSpec& spec);

/// (1/|G|) sum_g g^* alpha. Spot-checks closure of `group` first and throws
/// GroupNotClosed on a product that is missing.
[[nodiscard]] Form reynolds_average(const std::vector<AffineMap>& group, const Form& alpha);

struct CohomologyRecord {
  int grade = 0;
  int window = 0;
  std::size_t basic_dim = 0;
  std::size_t closed_dim = 0;
  std::size_t exact_dim = 0;
  std::size_t cohomology_dim = 0;
};

/// Dimensions of closed, exact and cohomology spaces of the basic complex at
/// coefficient window d, one record per grade 0..n. Exact forms are d of basic
/// forms in the degree d + 1 window.
[[nodiscard]] std::vector<CohomologyRecord> truncated_basic_cohomology(const ActionSpec& action, int d);

/// Span comparisons of k-forms on R^n, computed in the smallest common window.
[[nodiscard]] bool forms_span_equal(const std::vector<Form>& lhs, const std::vector<Form>& rhs, int n, int k);
/// True iff span(inner) is a subspace of span(outer).
[[nodiscard]] bool forms_span_contains(const std::vector<Form>& outer, const std::vector<Form>& inner, int n, int k);

}  // namespace basicforms
