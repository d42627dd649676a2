#include "basicforms/expr.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cctype>
#include <set>

namespace basicforms {

ParseError::ParseError(std::string message, std::size_t position, std::vector<std::string> expected)
    : std::runtime_error(expected.empty()
                             ? fmt::format("{} at position {}", message, position)
                             : fmt::format("{} at position {} (expected one of: {})", message, position,
                                           fmt::join(expected, ", "))),
      detail_(std::move(message)),
      position_(position),
      expected_(std::move(expected)) {}

void validate_variable_names(std::span<const std::string> vars) {
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (v.empty() || !(std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_'))
      throw std::invalid_argument(fmt::format("invalid variable name '{}'", v));
    for (char ch : v)
      if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'))
        throw std::invalid_argument(fmt::format("invalid variable name '{}'", v));
    if (v == "a") throw std::invalid_argument("'a' is reserved for the formal parameter");
    if (v[0] == 'd') throw std::invalid_argument(fmt::format("variable name '{}' clashes with differential syntax", v));
    if (!seen.insert(v).second) throw std::invalid_argument(fmt::format("duplicate variable name '{}'", v));
  }
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::span<const std::string> vars) : text_(text), vars_(vars) {}

  Polynomial parse_polynomial() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_, {"'+'", "'-'", "'*'", "'/'", "'^'", "end of input"});
    return p;
  }

  Form parse_form(std::optional<int> grade) {
    const int n = static_cast<int>(vars_.size());
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '0' && rest_is_blank(pos_ + 1)) {
      if (!grade) throw ParseError("the zero form needs an explicit grade", pos_);
      return Form::zero(n, *grade);
    }
    std::optional<Form> total;
    bool negate = false;
    if (peek('-')) {
      negate = true;
      ++pos_;
    }
    for (;;) {
      skip_ws();
      const std::size_t term_start = pos_;
      Form piece = form_term();
      if (negate) piece = -piece;
      if (grade && piece.grade() != *grade)
        throw ParseError(fmt::format("term has grade {}, expected {}", piece.grade(), *grade), term_start);
      if (total && piece.grade() != total->grade())
        throw ParseError("terms of a form must share one grade", term_start);
      if (total) {
        *total += piece;
      } else {
        total = std::move(piece);
      }
      skip_ws();
      if (pos_ == text_.size()) break;
      if (text_[pos_] == '+' || text_[pos_] == '-') {
        negate = text_[pos_] == '-';
        ++pos_;
        continue;
      }
      throw ParseError("unexpected input after form term", pos_, {"'+'", "'-'", "end of input"});
    }
    return *total;
  }

 private:
  int nvars() const { return static_cast<int>(vars_.size()); }

  bool rest_is_blank(std::size_t from) const {
    return std::all_of(text_.begin() + static_cast<std::ptrdiff_t>(from), text_.end(),
                       [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; });
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  std::string identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  mpz_class integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected an integer", pos_, {"integer"});
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        acc = acc * unary();
      } else if (peek('/')) {
        ++pos_;
        skip_ws();
        const std::size_t at = pos_;
        Polynomial divisor = unary();
        if (!divisor.is_constant()) throw ParseError("division by an expression involving variables", at);
        if (divisor.is_zero()) throw ParseError("division by zero", at);
        acc *= Scalar(1) / divisor.terms().begin()->second;
      } else {
        return acc;
      }
    }
  }

  Polynomial unary() {
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (peek('^')) {
      ++pos_;
      skip_ws();
      const std::size_t at = pos_;
      if (pos_ < text_.size() && text_[pos_] == '-') throw ParseError("exponent must be a non-negative integer", at);
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        throw ParseError("exponent must be a non-negative integer", at, {"integer"});
      mpz_class e = integer();
      if (e > 1000) throw ParseError("exponent too large", at);
      return base.pow(static_cast<int>(e.get_si()));
    }
    return base;
  }

  Polynomial atom() {
    skip_ws();
    const int n = nvars();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_, {"integer", "identifier", "'('"});
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial::constant(n, Scalar(mpq_class(integer())));
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!peek(')')) throw ParseError("unbalanced parenthesis", pos_, {"')'"});
      ++pos_;
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t at = pos_;
      std::string name = identifier();
      if (name == "a") return Polynomial::constant(n, Scalar::parameter());
      auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end()) {
        std::vector<std::string> expected(vars_.begin(), vars_.end());
        expected.emplace_back("a");
        throw ParseError(fmt::format("unknown identifier '{}'", name), at, expected);
      }
      return Polynomial::variable(n, static_cast<int>(it - vars_.begin()));
    }
    throw ParseError(fmt::format("unexpected character '{}'", c), pos_, {"integer", "identifier", "'('", "'-'"});
  }

  // '(' expr ')' followed by an optional wedge of differentials, or a bare wedge.
  Form form_term() {
    const int n = nvars();
    Polynomial coeff = Polynomial::constant(n, Scalar(1));
    skip_ws();
    if (peek('(')) {
      ++pos_;
      coeff = expr();
      if (!peek(')')) throw ParseError("unbalanced parenthesis", pos_, {"')'"});
      ++pos_;
    }
    MultiIndex idx;
    skip_ws();
    while (pos_ < text_.size() && text_[pos_] == 'd') {
      const std::size_t at = pos_;
      std::string name = identifier();
      auto it = std::find(vars_.begin(), vars_.end(), name.substr(1));
      if (name.size() < 2 || it == vars_.end()) throw ParseError(fmt::format("unknown differential '{}'", name), at);
      idx.push_back(static_cast<int>(it - vars_.begin()));
      if (peek('^')) {
        ++pos_;
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != 'd') throw ParseError("expected a differential after '^'", pos_, {"d<variable>"});
        continue;
      }
      break;
    }
    if (idx.empty() && pos_ < text_.size() && !peek('+') && !peek('-'))
      throw ParseError("expected a differential or a new term", pos_, {"d<variable>", "'+'", "'-'", "end of input"});
    return Form::term(n, std::move(idx), coeff);
  }

  std::string_view text_;
  std::span<const std::string> vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly_expr(std::string_view text, std::span<const std::string> vars) {
  return Parser(text, vars).parse_polynomial();
}

Form parse_form(std::string_view text, std::span<const std::string> vars, std::optional<int> grade) {
  return Parser(text, vars).parse_form(grade);
}

}  // namespace basicforms
