#pragma once

#include "basicforms/polynomial.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace basicforms {

/// Strictly increasing list of coordinate indices labelling dx_{i1} ^ ... ^ dx_{ik}.
using MultiIndex = std::vector<int>;

/// A differential k-form on R^n with polynomial coefficients.
///
/// The grade may be n + 1 only for the zero form (the target of d on top forms,
/// or the clamped result of an over-full wedge).
class Form {
 public:
  using TermMap = std::map<MultiIndex, Polynomial>;

  Form(int ambient_dim, int grade);

  static Form zero(int ambient_dim, int grade) { return Form(ambient_dim, grade); }
  /// The 0-form f.
  static Form function(const Polynomial& f);
  /// f dx_I; I need not be sorted (a sign is applied) and repeated indices give zero.
  static Form term(int ambient_dim, MultiIndex indices, const Polynomial& coefficient);
  /// dx_i as a 1-form.
  static Form differential(int ambient_dim, int index);

  [[nodiscard]] int ambient_dim() const { return n_; }
  [[nodiscard]] int grade() const { return k_; }
  [[nodiscard]] const TermMap& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] Polynomial coefficient(const MultiIndex& indices) const;
  /// Largest coefficient degree, Polynomial::kZeroDegree for the zero form.
  [[nodiscard]] int coefficient_degree() const;
  [[nodiscard]] bool uses_parameter() const;

  /// Adds coefficient * dx_I for a sorted index list.
  void add_term(const MultiIndex& indices, const Polynomial& coefficient);

  Form& operator+=(const Form& rhs);
  Form& operator-=(const Form& rhs);
  Form& operator*=(const Scalar& c);
  friend Form operator+(Form lhs, const Form& rhs) { return lhs += rhs; }
  friend Form operator-(Form lhs, const Form& rhs) { return lhs -= rhs; }
  friend Form operator*(Form lhs, const Scalar& c) { return lhs *= c; }
  friend Form operator*(const Scalar& c, Form rhs) { return rhs *= c; }
  /// Multiplication by a 0-form coefficient.
  friend Form operator*(const Polynomial& f, const Form& form);
  Form operator-() const;

  friend bool operator==(const Form&, const Form&) = default;

  [[nodiscard]] Form map_coefficients(const std::function<Polynomial(const Polynomial&)>& f) const;

 private:
  int n_;
  int k_;
  TermMap terms_;
};

/// Polynomial vector field X = sum_i X^i d/dx_i on R^n.
struct VectorField {
  int ambient_dim = 0;
  std::vector<Polynomial> components;

  VectorField(int n, std::vector<Polynomial> comps);
  static VectorField zero(int n);

  /// Maximum component degree, 0 for the zero field.
  [[nodiscard]] int degree() const;
  [[nodiscard]] bool uses_parameter() const;
  friend bool operator==(const VectorField&, const VectorField&) = default;
};

/// Polynomial map F: R^m -> R^n given by n component polynomials in m variables.
struct PolyMap {
  int domain_dim = 0;
  int codomain_dim = 0;
  std::vector<Polynomial> components;

  PolyMap(int m, std::vector<Polynomial> comps);
  static PolyMap identity(int n);

  /// Maximum component degree (0 for constant maps).
  [[nodiscard]] int degree() const;
  /// (this o inner)(u) = this(inner(u)).
  [[nodiscard]] PolyMap after(const PolyMap& inner) const;
  friend bool operator==(const PolyMap&, const PolyMap&) = default;
};

/// Sign of the permutation sorting `indices`, 0 if an index repeats.
[[nodiscard]] int sort_sign(MultiIndex& indices);

[[nodiscard]] Form wedge(const Form& alpha, const Form& beta);
[[nodiscard]] Form ext_d(const Form& alpha);
/// Contraction i_X alpha. Throws std::invalid_argument for 0-forms.
[[nodiscard]] Form interior(const VectorField& x, const Form& alpha);
/// L_X alpha via Cartan's formula i_X d + d i_X.
[[nodiscard]] Form lie_derivative(const VectorField& x, const Form& alpha);
/// F^* alpha for a form on the codomain of F.
[[nodiscard]] Form pullback(const PolyMap& f, const Form& alpha);

/// alpha at `point` applied to `vectors` (k vectors of length n). Requires a binding
/// for `a` whenever the coefficients use it.
[[nodiscard]] double eval_form(const Form& alpha, std::span<const double> point,
                               const std::vector<std::vector<double>>& vectors,
                               std::optional<double> a = std::nullopt);

/// Floating point snapshot of a form for repeated evaluation at many points.
class CompiledForm {
 public:
  CompiledForm(const Form& alpha, std::optional<double> a);

  [[nodiscard]] int ambient_dim() const { return n_; }
  [[nodiscard]] int grade() const { return k_; }
  [[nodiscard]] double coefficient(std::size_t term, std::span<const double> point) const;
  [[nodiscard]] std::size_t term_count() const { return terms_.size(); }
  [[nodiscard]] const MultiIndex& indices(std::size_t term) const { return terms_[term].indices; }

  /// alpha|_point(v_1, ..., v_k) where vectors(i, j) = i-th coordinate of v_j
  /// is given as a row-major n x k array.
  [[nodiscard]] double evaluate(std::span<const double> point, std::span<const double> vectors_nk) const;

 private:
  struct Monomial {
    Exponent exponent;
    double coeff;
  };
  struct Term {
    MultiIndex indices;
    std::vector<Monomial> monomials;
  };
  int n_;
  int k_;
  std::vector<Term> terms_;
};

/// Determinant of a small dense matrix (row-major, size x size) by partial pivoting.
[[nodiscard]] double small_determinant(std::vector<double> m, std::size_t size);

/// Canonical rendering, e.g. `(2*x*y) dx^dy + (a) dx`; terms in lex order of the
/// index list; the zero form renders as `0`; 0-forms render as `(p)`.
[[nodiscard]] std::string to_string(const Form& alpha, std::span<const std::string> names);
[[nodiscard]] std::string to_string(const VectorField& x, std::span<const std::string> names);

}  // namespace basicforms
