#pragma once

#include "basicforms/matrix.hpp"
#include "basicforms/param_poly.hpp"

#include <vector>

namespace basicforms {

/// Row echelon form over Q[a] produced by fraction-free (Bareiss) elimination.
struct EchelonForm {
  std::size_t cols = 0;
  /// Nonzero rows only; rows[i] has its pivot in column pivots[i].
  std::vector<std::vector<ParamPoly>> rows;
  std::vector<std::size_t> pivots;

  [[nodiscard]] std::size_t rank() const { return pivots.size(); }
};

/// Bareiss elimination. Each row is first scaled into Q[a] by the lcm of its
/// denominators; pivots are the first nonzero entry in column order, taking
/// rows in their current order, so the output is deterministic.
[[nodiscard]] EchelonForm fraction_free_echelon(const Matrix& m);

/// Reduced row echelon form over Q(a), derived from the fraction-free echelon form.
/// Returns the nonzero rows and their pivot columns.
struct ReducedEchelon {
  Matrix rows;
  std::vector<std::size_t> pivots;
};
[[nodiscard]] ReducedEchelon reduced_echelon(const Matrix& m);

[[nodiscard]] std::size_t rank(const Matrix& m);

/// Canonical basis of the null space: one vector per free column (in column
/// order), each scaled by normalize_direction.
[[nodiscard]] std::vector<ScalarVector> kernel_basis(const Matrix& m);

/// True iff the column spaces coincide: rank(A) = rank(B) = rank([A|B]).
[[nodiscard]] bool column_span_equal(const Matrix& a, const Matrix& b);
/// True iff span(columns of inner) is contained in span(columns of outer).
[[nodiscard]] bool column_span_contains(const Matrix& outer, const Matrix& inner);

/// Exact inverse; throws NotInvertible for singular input.
[[nodiscard]] Matrix inverse(const Matrix& m);

/// Rescales a nonzero vector to its primitive representative: entries in Z[a]
/// with no common polynomial or integer factor, first nonzero entry having a
/// positive leading coefficient. The zero vector is returned unchanged.
[[nodiscard]] ScalarVector normalize_direction(ScalarVector v);

}  // namespace basicforms
