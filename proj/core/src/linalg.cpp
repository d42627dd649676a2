#include "basicforms/linalg.hpp"

#include "basicforms/errors.hpp"

#include <algorithm>

namespace basicforms {

namespace {

ParamPoly lcm(const ParamPoly& lhs, const ParamPoly& rhs) {
  if (lhs.is_one()) return rhs;
  if (rhs.is_one() || lhs == rhs) return lhs;
  return (lhs * rhs).exact_div(gcd(lhs, rhs)).monic();
}

std::vector<ParamPoly> row_to_polys(std::span<const Scalar> row) {
  ParamPoly common(mpq_class(1));
  for (const auto& s : row)
    if (!s.is_zero()) common = lcm(common, s.denominator());
  std::vector<ParamPoly> out;
  out.reserve(row.size());
  for (const auto& s : row) {
    if (s.is_zero()) {
      out.emplace_back();
    } else if (common.is_one()) {
      out.push_back(s.numerator());
    } else {
      out.push_back(s.numerator() * common.exact_div(s.denominator()));
    }
  }
  return out;
}

bool all_zero(const std::vector<ParamPoly>& row) {
  return std::all_of(row.begin(), row.end(), [](const ParamPoly& p) { return p.is_zero(); });
}

}  // namespace

EchelonForm fraction_free_echelon(const Matrix& m) {
  EchelonForm out;
  out.cols = m.cols();

  std::vector<std::vector<ParamPoly>> work;
  work.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = row_to_polys(m.row(r));
    if (!all_zero(row)) work.push_back(std::move(row));
  }

  ParamPoly previous(mpq_class(1));
  std::size_t top = 0;
  for (std::size_t c = 0; c < m.cols() && top < work.size(); ++c) {
    std::size_t pivot_row = top;
    while (pivot_row < work.size() && work[pivot_row][c].is_zero()) ++pivot_row;
    if (pivot_row == work.size()) continue;
    std::swap(work[top], work[pivot_row]);

    const std::vector<ParamPoly>& pivot = work[top];
    const ParamPoly& p = pivot[c];
    const bool same_scale = p == previous;
    for (std::size_t i = top + 1; i < work.size(); ++i) {
      auto& row = work[i];
      const ParamPoly factor = row[c];
      if (factor.is_zero() && same_scale) continue;
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        // Sylvester identity: (p * row[j] - factor * pivot[j]) / previous is exact
        ParamPoly next;
        if (!row[j].is_zero()) next = p * row[j];
        if (!factor.is_zero() && !pivot[j].is_zero()) next -= factor * pivot[j];
        if (!next.is_zero() && !previous.is_one()) next = next.exact_div(previous);
        row[j] = std::move(next);
      }
      row[c] = ParamPoly();
    }
    previous = p;
    out.pivots.push_back(c);
    ++top;
  }
  work.resize(top);
  out.rows = std::move(work);
  return out;
}

ReducedEchelon reduced_echelon(const Matrix& m) {
  EchelonForm ech = fraction_free_echelon(m);
  const std::size_t r = ech.rank();
  Matrix red(r, m.cols());
  for (std::size_t i = 0; i < r; ++i) {
    const ParamPoly& pivot = ech.rows[i][ech.pivots[i]];
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!ech.rows[i][j].is_zero()) red(i, j) = Scalar::ratio(ech.rows[i][j], pivot);
  }
  for (std::size_t i = r; i-- > 0;) {
    const std::size_t pc = ech.pivots[i];
    for (std::size_t h = 0; h < i; ++h) {
      const Scalar factor = red(h, pc);
      if (factor.is_zero()) continue;
      for (std::size_t j = pc; j < m.cols(); ++j)
        if (!red(i, j).is_zero()) red(h, j) -= factor * red(i, j);
    }
  }
  return {std::move(red), std::move(ech.pivots)};
}

std::size_t rank(const Matrix& m) { return fraction_free_echelon(m).rank(); }

std::vector<ScalarVector> kernel_basis(const Matrix& m) {
  ReducedEchelon red = reduced_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : red.pivots) is_pivot[p] = true;

  std::vector<ScalarVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    ScalarVector v(m.cols());
    v[f] = Scalar(1);
    for (std::size_t i = 0; i < red.pivots.size(); ++i) v[red.pivots[i]] = -red.rows(i, f);
    basis.push_back(normalize_direction(std::move(v)));
  }
  return basis;
}

bool column_span_equal(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("column_span_equal: row counts differ");
  const std::size_t ra = rank(a);
  if (ra != rank(b)) return false;
  return rank(hstack(a, b)) == ra;
}

bool column_span_contains(const Matrix& outer, const Matrix& inner) {
  if (outer.rows() != inner.rows()) throw DimensionMismatch("column_span_contains: row counts differ");
  return rank(hstack(outer, inner)) == rank(outer);
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw NotInvertible("only square matrices are invertible");
  const std::size_t n = m.rows();
  ReducedEchelon red = reduced_echelon(hstack(m, Matrix::identity(n)));
  if (red.pivots.size() != n || (n > 0 && red.pivots.back() != n - 1)) throw NotInvertible("matrix is singular");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = red.rows(i, n + j);
  return inv;
}

ScalarVector normalize_direction(ScalarVector v) {
  auto first = std::find_if(v.begin(), v.end(), [](const Scalar& s) { return !s.is_zero(); });
  if (first == v.end()) return v;

  ParamPoly common(mpq_class(1));
  for (const auto& s : v)
    if (!s.is_zero()) common = lcm(common, s.denominator());
  std::vector<ParamPoly> polys;
  polys.reserve(v.size());
  for (const auto& s : v)
    polys.push_back(s.is_zero() ? ParamPoly() : s.numerator() * common.exact_div(s.denominator()));

  ParamPoly g;
  for (const auto& p : polys)
    if (!p.is_zero()) g = gcd(g, p);
  if (!g.is_one())
    for (auto& p : polys)
      if (!p.is_zero()) p = p.exact_div(g);

  // integer content
  mpz_class den_lcm = 1;
  mpz_class num_gcd = 0;
  for (const auto& p : polys)
    for (const auto& c : p.coeffs()) {
      if (c == 0) continue;
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    }
  mpq_class scale(den_lcm, num_gcd);
  scale.canonicalize();
  const auto lead_index = static_cast<std::size_t>(first - v.begin());
  if (polys[lead_index].lead() < 0) scale = -scale;

  ScalarVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!polys[i].is_zero()) out[i] = Scalar(polys[i] * scale);
  return out;
}

}  // namespace basicforms
