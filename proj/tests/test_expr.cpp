#include "basicforms/errors.hpp"
#include "basicforms/expr.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace basicforms;

namespace {

const std::vector<std::string> kXY{"x", "y"};
Polynomial P(const char* text) { return parse_poly_expr(text, kXY); }

std::size_t error_position(std::string_view text) {
  try {
    (void)parse_poly_expr(text, kXY);
  } catch (const ParseError& e) {
    return e.position();
  }
  FAIL("expected a parse error for '" << std::string(text) << "'");
  return 0;
}

}  // namespace

TEST_SUITE("expr") {

TEST_CASE("parse_poly_expr examples") {
  Polynomial minus_y(2);
  minus_y.add_term({0, 1}, Scalar(-1));
  CHECK(P("-y") == minus_y);

  Polynomial affine(2);
  affine.add_term({1, 0}, Scalar::parameter());
  affine.add_term({0, 0}, Scalar(mpq_class(-1, 2)));
  CHECK(P("a*x - 1/2") == affine);

  Polynomial x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
  CHECK(P("x^2 + 2*x*y + y^2") == (x + y) * (x + y));
  CHECK(P("(x + y)^2") == (x + y) * (x + y));
  CHECK(P("x/2 + 3/4*y") == P("1/2*x + 3/4*y"));
  CHECK(P("--x") == x);
  CHECK(P("(a + 1)/3*x") == P("a*x/3 + x/3"));
  CHECK(P("  x  *  y ") == x * y);
}

TEST_CASE("parse errors carry positions") {
  CHECK(error_position("x +") == 3);
  CHECK(error_position("x * * y") == 4);
  CHECK(error_position("z + 1") == 0);
  CHECK(error_position("x^-1") == 2);
  CHECK(error_position("x^y") == 2);
  CHECK(error_position("1/x") == 2);
  CHECK(error_position("1/0") == 2);
  CHECK(error_position("(x + y") == 6);
  CHECK(error_position("x y") == 2);

  try {
    (void)P("w");
    FAIL("unknown identifier accepted");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("w") != std::string::npos);
    CHECK(std::find(e.expected().begin(), e.expected().end(), "a") != e.expected().end());
  }
}

TEST_CASE("parse_form") {
  Form alpha = parse_form("(a) dx + (-1) dy", kXY);
  CHECK(alpha.grade() == 1);
  CHECK(alpha.coefficient({0}) == P("a"));
  CHECK(alpha.coefficient({1}) == P("-1"));
  CHECK(parse_form("(1) dy^dx", kXY) == parse_form("(-1) dx^dy", kXY));
  CHECK(parse_form("-(x) dx", kXY) == parse_form("(-x) dx", kXY));
  CHECK(parse_form("(x^2)", kXY) == Form::function(P("x^2")));
  CHECK(parse_form("0", kXY, 2) == Form::zero(2, 2));
  CHECK_THROWS_AS((void)parse_form("0", kXY), ParseError);
  CHECK_THROWS_AS((void)parse_form("(1) dx + (1) dx^dy", kXY), ParseError);
  CHECK_THROWS_AS((void)parse_form("(1) dz", kXY), ParseError);
}

TEST_CASE("validate_variable_names") {
  CHECK_NOTHROW(validate_variable_names(std::vector<std::string>{"x1", "y1", "x2", "y2"}));
  CHECK_THROWS((validate_variable_names(std::vector<std::string>{"a", "x"})));
  CHECK_THROWS((validate_variable_names(std::vector<std::string>{"dx"})));
  CHECK_THROWS((validate_variable_names(std::vector<std::string>{"x", "x"})));
  CHECK_THROWS((validate_variable_names(std::vector<std::string>{"x-1"})));
}

TEST_CASE("canonical strings re-parse to equal forms") {
  oracle::Generator gen(61);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = gen.integer(1, 4);
    const int k = gen.integer(0, n);
    Form alpha = gen.form(n, k, 3);
    auto names = default_variable_names(n);
    CHECK(parse_form(to_string(alpha, names), names, k) == alpha);
    Polynomial p = gen.polynomial(n, 4);
    CHECK(parse_poly_expr(to_string(p, names), names) == p);
  }
}

}  // TEST_SUITE
