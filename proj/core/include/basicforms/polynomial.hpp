#pragma once

#include "basicforms/scalar.hpp"

#include <climits>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace basicforms {

using Exponent = std::vector<int>;

[[nodiscard]] int total_degree(const Exponent& e);

/// Graded lexicographic order, largest first: higher total degree first, then the
/// exponent with the larger power of the earliest variable. x^2 > x*y > y^2 > x > y > 1.
struct GrlexGreater {
  bool operator()(const Exponent& lhs, const Exponent& rhs) const;
};

/// Sparse multivariate polynomial over Q(a). Zero coefficients are never stored.
class Polynomial {
 public:
  using TermMap = std::map<Exponent, Scalar, GrlexGreater>;

  /// Degree reported for the zero polynomial.
  static constexpr int kZeroDegree = INT_MIN;

  explicit Polynomial(int num_vars);

  static Polynomial constant(int num_vars, const Scalar& c);
  static Polynomial variable(int num_vars, int index);
  static Polynomial monomial(int num_vars, Exponent e, const Scalar& c = Scalar(1));

  [[nodiscard]] int num_vars() const { return num_vars_; }
  [[nodiscard]] const TermMap& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool is_constant() const;
  [[nodiscard]] Scalar coefficient(const Exponent& e) const;
  /// kZeroDegree for the zero polynomial.
  [[nodiscard]] int degree() const;
  [[nodiscard]] bool uses_parameter() const;

  /// Adds c * x^e in place.
  void add_term(const Exponent& e, const Scalar& c);

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Scalar& c);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator*(Polynomial lhs, const Scalar& c) { return lhs *= c; }
  friend Polynomial operator*(const Scalar& c, Polynomial rhs) { return rhs *= c; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  [[nodiscard]] Polynomial partial(int index) const;
  /// p(maps[0], ..., maps[n-1]); every map must share one variable count.
  [[nodiscard]] Polynomial substitute(std::span<const Polynomial> maps) const;
  [[nodiscard]] Polynomial pow(int exponent) const;
  [[nodiscard]] Polynomial map_coefficients(const std::function<Scalar(const Scalar&)>& f) const;

  [[nodiscard]] double eval(std::span<const double> point, std::optional<double> a = std::nullopt) const;

 private:
  int num_vars_;
  TermMap terms_;
};

/// Default coordinate names: x, y, z for up to three variables, x1..xn beyond.
[[nodiscard]] std::vector<std::string> default_variable_names(int n);

/// Canonical rendering in descending graded-lex order, e.g. `x^2 + 2*x*y - a*y + 1/2`.
[[nodiscard]] std::string to_string(const Polynomial& p, std::span<const std::string> names);

}  // namespace basicforms
