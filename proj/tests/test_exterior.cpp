#include "basicforms/errors.hpp"
#include "basicforms/expr.hpp"
#include "basicforms/form.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace basicforms;

namespace {

const std::vector<std::string> kXY{"x", "y"};
Polynomial P(const char* text) { return parse_poly_expr(text, kXY); }
Form F(const char* text, std::optional<int> grade = std::nullopt) { return parse_form(text, kXY, grade); }
Form dx() { return Form::differential(2, 0); }
Form dy() { return Form::differential(2, 1); }
VectorField field(const char* fx, const char* fy) { return VectorField(2, {P(fx), P(fy)}); }

}  // namespace

TEST_SUITE("exterior") {

TEST_CASE("wedge") {
  CHECK(wedge(dx(), dy()) == F("(1) dx^dy"));
  CHECK(wedge(dx(), dx()).is_zero());
  CHECK(wedge(P("x") * dy(), dx()) == F("(-x) dx^dy"));
  Form over = wedge(F("(1) dx^dy"), dx());
  CHECK(over.is_zero());
  CHECK(over.grade() == 3);
  CHECK_THROWS_AS((void)wedge(dx(), Form::differential(3, 0)), DimensionMismatch);
}

TEST_CASE("ext_d") {
  CHECK(ext_d(F("(x) dy")) == F("(1) dx^dy"));
  CHECK(ext_d(Form::function(P("x^2 + y^2"))) == F("(2*x) dx + (2*y) dy"));
  CHECK(ext_d(F("(a) dx + (-1) dy")).is_zero());
  Form top = ext_d(F("(x*y) dx^dy"));
  CHECK(top.is_zero());
  CHECK(top.grade() == 3);
}

TEST_CASE("interior") {
  VectorField solenoid = field("1", "a");
  CHECK(interior(solenoid, dx()) == Form::function(P("1")));
  CHECK(interior(solenoid, F("(1) dx^dy")) == F("(1) dy + (-a) dx"));
  CHECK(interior(field("-y", "x"), F("(1) dx^dy")) == F("(-y) dy + (-x) dx"));
  CHECK_THROWS_AS((void)interior(solenoid, Form::function(P("x"))), std::invalid_argument);
}

TEST_CASE("lie_derivative") {
  CHECK(lie_derivative(field("1", "0"), F("(x) dx")) == dx());
  CHECK(lie_derivative(field("-y", "x"), F("(x) dx + (y) dy")).is_zero());
  CHECK(lie_derivative(field("1", "a"), F("(a) dx + (-1) dy")).is_zero());
  CHECK(lie_derivative(field("-y", "x"), Form::function(P("x^2 + y^2"))).is_zero());
}

TEST_CASE("pullback") {
  const std::vector<std::string> x1{"x"};
  PolyMap neg(1, {parse_poly_expr("-x", x1)});
  CHECK(pullback(neg, Form::differential(1, 0)) == parse_form("(-1) dx", x1));

  PolyMap stage(2, {P("y - a*x")});
  CHECK(pullback(stage, Form::differential(1, 0)) == F("(1) dy + (-a) dx"));

  Form alpha = F("(x*y + a) dx^dy");
  CHECK(pullback(PolyMap::identity(2), alpha) == alpha);
  CHECK_THROWS_AS((void)pullback(stage, dx()), DimensionMismatch);
}

TEST_CASE("eval_form") {
  std::vector<double> pt{0.3, -0.7};
  CHECK(eval_form(F("(1) dx^dy"), pt, {{1, 0}, {0, 1}}) == doctest::Approx(1.0));
  CHECK(eval_form(F("(1) dx^dy"), pt, {{0, 1}, {1, 0}}) == doctest::Approx(-1.0));
  const std::vector<std::string> x1{"x"};
  std::vector<double> two{2.0};
  CHECK(eval_form(parse_form("(x) dx", x1), two, {{3}}) == doctest::Approx(6.0));
  CHECK_THROWS_AS((void)eval_form(F("(a) dx"), pt, {{1, 0}}), UnboundParameter);
  CHECK(eval_form(F("(a) dx"), pt, {{1, 0}}, 0.25) == doctest::Approx(0.25));
}

TEST_CASE("canonical rendering") {
  std::vector<std::string> names{"x", "y"};
  CHECK(to_string(F("(a) dx + (-1) dy"), names) == "(a) dx + (-1) dy");
  CHECK(to_string(Form::zero(2, 1), names) == "0");
  CHECK(to_string(Form::function(P("x^2 - 1/2")), names) == "(x^2 - 1/2)");
  CHECK(to_string(F("(1) dy^dx"), names) == "(-1) dx^dy");
}

TEST_CASE("d squared vanishes") {
  oracle::Generator gen(21);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = gen.integer(1, 4);
    const int k = gen.integer(0, n);
    Form alpha = gen.form(n, k, 3);
    CHECK(ext_d(ext_d(alpha)).is_zero());
  }
}

TEST_CASE("graded commutativity") {
  oracle::Generator gen(22);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = gen.integer(1, 4);
    const int k = gen.integer(0, n), l = gen.integer(0, n - k);
    Form alpha = gen.form(n, k, 2), beta = gen.form(n, l, 2);
    Form sign_fixed = (k * l) % 2 == 0 ? wedge(beta, alpha) : -wedge(beta, alpha);
    CHECK(wedge(alpha, beta) == sign_fixed);
  }
}

TEST_CASE("wedge associativity and Leibniz rule") {
  oracle::Generator gen(23);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = gen.integer(2, 4);
    const int k = gen.integer(0, 1), l = gen.integer(0, 1), m = gen.integer(0, n - k - l);
    Form a = gen.form(n, k, 2), b = gen.form(n, l, 2), c = gen.form(n, m, 2);
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
    Form leibniz = wedge(ext_d(a), b) + (k % 2 == 0 ? wedge(a, ext_d(b)) : -wedge(a, ext_d(b)));
    if (k + l < n) CHECK(ext_d(wedge(a, b)) == leibniz);
  }
}

TEST_CASE("Cartan formula agrees with coordinate Lie derivative") {
  oracle::Generator gen(24);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = gen.integer(1, 4);
    const int k = gen.integer(0, n);
    VectorField x = gen.field(n, 2);
    Form alpha = gen.form(n, k, 3);
    CHECK(lie_derivative(x, alpha) == oracle::lie_coordinate(x, alpha));
  }
}

TEST_CASE("pullback naturality and functoriality") {
  oracle::Generator gen(25);
  for (int trial = 0; trial < 200; ++trial) {
    const int p = gen.integer(1, 3), m = gen.integer(1, 3), n = gen.integer(1, 3);
    PolyMap f = gen.polymap(m, n, 2);   // R^m -> R^n
    PolyMap g = gen.polymap(p, m, 2);   // R^p -> R^m
    const int k = gen.integer(0, n);
    Form alpha = gen.form(n, k, 2);
    CHECK(pullback(f, ext_d(alpha)) == ext_d(pullback(f, alpha)));
    // grades beyond the domain dimension collapse to clamped zero forms
    Form direct = pullback(f.after(g), alpha), staged = pullback(g, pullback(f, alpha));
    CHECK((direct == staged || (direct.is_zero() && staged.is_zero())));
    const int l = gen.integer(0, n - k);
    Form beta = gen.form(n, l, 1);
    CHECK(pullback(f, wedge(alpha, beta)) == wedge(pullback(f, alpha), pullback(f, beta)));
  }
}

TEST_CASE("interior twice vanishes and is an antiderivation") {
  oracle::Generator gen(26);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = gen.integer(2, 4);
    VectorField x = gen.field(n, 2);
    Form alpha = gen.form(n, gen.integer(2, n), 2);
    CHECK(interior(x, interior(x, alpha)).is_zero());
    Form u = gen.form(n, 1, 2), v = gen.form(n, 1, 2);
    CHECK(interior(x, wedge(u, v)) == wedge(interior(x, u), v) - wedge(u, interior(x, v)));
  }
}

TEST_CASE("compiled evaluation matches eval_form") {
  oracle::Generator gen(27);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = gen.integer(1, 4);
    const int k = gen.integer(0, n);
    Form alpha = gen.form(n, k, 3);
    std::vector<double> pt;
    std::vector<std::vector<double>> vecs(static_cast<std::size_t>(k));
    std::vector<double> flat(static_cast<std::size_t>(n * k));
    for (int i = 0; i < n; ++i) pt.push_back(gen.integer(-20, 20) / 10.0);
    for (int j = 0; j < k; ++j)
      for (int i = 0; i < n; ++i) {
        double v = gen.integer(-10, 10) / 5.0;
        vecs[static_cast<std::size_t>(j)].push_back(v);
        flat[static_cast<std::size_t>(i * k + j)] = v;
      }
    CompiledForm compiled(alpha, 0.75);
    CHECK(compiled.evaluate(pt, flat) == doctest::Approx(eval_form(alpha, pt, vecs, 0.75)).epsilon(1e-12));
  }
}

}  // TEST_SUITE
