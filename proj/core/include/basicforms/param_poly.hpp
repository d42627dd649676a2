#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace basicforms {

/// Univariate polynomial with rational coefficients in the formal parameter `a`.
///
/// Coefficients are stored low degree first with no trailing zeros, so the zero
/// polynomial is the empty vector and has degree -1.
class ParamPoly {
 public:
  ParamPoly() = default;
  explicit ParamPoly(mpq_class constant);
  explicit ParamPoly(std::vector<mpq_class> coeffs);

  /// The polynomial `a`.
  static ParamPoly parameter();

  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] bool is_constant() const { return coeffs_.size() <= 1; }
  [[nodiscard]] bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  [[nodiscard]] const std::vector<mpq_class>& coeffs() const { return coeffs_; }
  [[nodiscard]] mpq_class coeff(int i) const;
  [[nodiscard]] const mpq_class& lead() const;
  [[nodiscard]] mpq_class constant_term() const { return coeffs_.empty() ? mpq_class(0) : coeffs_[0]; }

  ParamPoly& operator+=(const ParamPoly& other);
  ParamPoly& operator-=(const ParamPoly& other);
  ParamPoly& operator*=(const ParamPoly& other);
  ParamPoly& operator*=(const mpq_class& c);

  friend ParamPoly operator+(ParamPoly lhs, const ParamPoly& rhs) { return lhs += rhs; }
  friend ParamPoly operator-(ParamPoly lhs, const ParamPoly& rhs) { return lhs -= rhs; }
  friend ParamPoly operator*(const ParamPoly& lhs, const ParamPoly& rhs);
  friend ParamPoly operator*(ParamPoly lhs, const mpq_class& c) { return lhs *= c; }
  ParamPoly operator-() const;

  friend bool operator==(const ParamPoly&, const ParamPoly&) = default;

  /// Euclidean division: returns (quotient, remainder). Throws on a zero divisor.
  [[nodiscard]] std::pair<ParamPoly, ParamPoly> divmod(const ParamPoly& divisor) const;
  /// Division known to be exact; throws std::logic_error if a remainder is left.
  [[nodiscard]] ParamPoly exact_div(const ParamPoly& divisor) const;
  [[nodiscard]] ParamPoly monic() const;

  [[nodiscard]] mpq_class eval(const mpq_class& at) const;
  [[nodiscard]] double eval(double at) const;

  /// Renders with `a` as the variable, highest degree first, e.g. `a^2 - 1/2`.
  [[nodiscard]] std::string to_string() const;

 private:
  void trim();
  std::vector<mpq_class> coeffs_;
};

/// Monic greatest common divisor; gcd(0, 0) = 0.
ParamPoly gcd(ParamPoly lhs, ParamPoly rhs);

}  // namespace basicforms
