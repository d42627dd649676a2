#pragma once

#include "basicforms/form.hpp"
#include "basicforms/polynomial.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace basicforms {

/// Syntax or semantic error in an expression, with a 0-based character offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t position, std::vector<std::string> expected = {});

  [[nodiscard]] std::size_t position() const { return position_; }
  [[nodiscard]] const std::vector<std::string>& expected() const { return expected_; }
  [[nodiscard]] const std::string& detail() const { return detail_; }

 private:
  std::string detail_;
  std::size_t position_;
  std::vector<std::string> expected_;
};

/// Parses a polynomial over Q(a).
///
/// Grammar (whitespace is ignored):
///   expr   := term (('+' | '-') term)*
///   term   := unary (('*' | '/') unary)*       divisors must be nonzero constants
///   unary  := '-' unary | '+' unary | power
///   power  := atom ('^' integer)?
///   atom   := integer | identifier | '(' expr ')'
/// Identifiers are the given variable names or the parameter `a`.
[[nodiscard]] Polynomial parse_poly_expr(std::string_view text, std::span<const std::string> vars);

/// Parses a form written as a sum of `(coefficient) dv1^dv2...` terms, the format
/// produced by to_string(Form). A bare `(coefficient)` is a 0-form; `0` is the zero
/// form and then `grade` must be given. Differentials may be unsorted.
[[nodiscard]] Form parse_form(std::string_view text, std::span<const std::string> vars,
                              std::optional<int> grade = std::nullopt);

/// Rejects names that collide with the parameter, differentials or each other.
void validate_variable_names(std::span<const std::string> vars);

}  // namespace basicforms
