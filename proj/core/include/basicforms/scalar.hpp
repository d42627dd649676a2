#pragma once

#include "basicforms/param_poly.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>

namespace basicforms {

/// An element of Q(a): a ratio of coprime polynomials in the formal parameter `a`
/// with a monic denominator. Plain rationals are the elements with constant parts.
class Scalar {
 public:
  Scalar() : den_(mpq_class(1)) {}
  Scalar(long value) : num_(mpq_class(value)), den_(mpq_class(1)) {}  // NOLINT(google-explicit-constructor)
  Scalar(mpq_class value) : num_(std::move(value)), den_(mpq_class(1)) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(ParamPoly numerator) : num_(std::move(numerator)), den_(mpq_class(1)) {}

  /// num / den reduced to lowest terms. Throws std::domain_error if den is zero.
  static Scalar ratio(ParamPoly num, ParamPoly den);
  /// The formal parameter `a`.
  static Scalar parameter();

  [[nodiscard]] const ParamPoly& numerator() const { return num_; }
  [[nodiscard]] const ParamPoly& denominator() const { return den_; }

  [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
  [[nodiscard]] bool is_one() const { return num_.is_one() && den_.is_one(); }
  /// True when the value does not involve `a`.
  [[nodiscard]] bool is_rational() const { return num_.is_constant() && den_.is_one(); }
  [[nodiscard]] bool uses_parameter() const { return !is_rational(); }
  /// Requires is_rational().
  [[nodiscard]] mpq_class rational_value() const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
  Scalar operator-() const;

  friend bool operator==(const Scalar&, const Scalar&) = default;

  /// Numeric value; the binding for `a` is mandatory when the value depends on it.
  [[nodiscard]] double to_double(std::optional<double> a = std::nullopt) const;
  /// Exact specialisation a := value. Throws std::domain_error if the denominator vanishes.
  [[nodiscard]] Scalar substitute_parameter(const mpq_class& value) const;

  /// Sign of the leading numerator coefficient; used for canonical printing.
  [[nodiscard]] bool looks_negative() const;
  /// True when to_string() can be used as a factor without parentheses.
  [[nodiscard]] bool is_atomic() const;
  [[nodiscard]] std::string to_string() const;

 private:
  void normalize();

  ParamPoly num_;
  ParamPoly den_;
};

}  // namespace basicforms
