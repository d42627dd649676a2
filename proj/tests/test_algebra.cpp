#include "basicforms/errors.hpp"
#include "basicforms/expr.hpp"
#include "basicforms/linalg.hpp"
#include "basicforms/polynomial.hpp"
#include "basicforms/scalar.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace basicforms;

namespace {

const std::vector<std::string> kXY{"x", "y"};
Polynomial P(const char* text) { return parse_poly_expr(text, kXY); }
Scalar A() { return Scalar::parameter(); }

}  // namespace

TEST_SUITE("algebra") {

TEST_CASE("scalar field Q(a) normalizes") {
  Scalar r = Scalar::ratio(ParamPoly(std::vector<mpq_class>{-1, 0, 1}), ParamPoly(std::vector<mpq_class>{-1, 1}));  // (a^2 - 1)/(a - 1)
  CHECK(r == A() + Scalar(1));
  CHECK(r.denominator().is_one());

  Scalar q = Scalar(1) / (Scalar(2) * A());
  CHECK(q.denominator() == ParamPoly::parameter());
  CHECK(q.numerator() == ParamPoly(mpq_class(1, 2)));
  CHECK((q * A()) == Scalar(mpq_class(1, 2)));
  CHECK((A() - A()).is_zero());
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), std::domain_error);
  CHECK_THROWS_AS((void)A().to_double(), UnboundParameter);
  CHECK(A().to_double(2.5) == doctest::Approx(2.5));
  CHECK(((A() + Scalar(1)) / (A() - Scalar(1))).substitute_parameter(3) == Scalar(2));
}

TEST_CASE("poly_add") {
  CHECK(P("x^2 + 1") + P("-x^2") == P("1"));
  CHECK(P("x*y - 3") + Polynomial(2) == P("x*y - 3"));
  CHECK(P("x + a*y") + P("x - a*y") == P("2*x"));
  CHECK_THROWS_AS(P("x") + Polynomial(3), DimensionMismatch);
  CHECK(Polynomial(2).degree() == Polynomial::kZeroDegree);
  CHECK((P("x^2 + y") + P("-x^2")).degree() == 1);
}

TEST_CASE("poly_mul") {
  CHECK(P("(x + y)") * P("x - y") == P("x^2 - y^2"));
  CHECK(P("3*x*y + a") * P("1") == P("3*x*y + a"));
  CHECK((P("x") * P("0")).is_zero());
  CHECK((P("x^2 + y") * P("x*y^3 - 1")).degree() == 6);
  CHECK_THROWS_AS(P("x") * Polynomial(1), DimensionMismatch);
}

TEST_CASE("poly_partial") {
  CHECK(P("x^2*y").partial(0) == P("2*x*y"));
  CHECK(P("x^2").partial(1).is_zero());
  CHECK(P("a*x").partial(0) == P("a"));
  CHECK_THROWS_AS((void)P("x").partial(2), std::out_of_range);
}

TEST_CASE("poly_substitute") {
  const std::vector<std::string> x1{"x"};
  Polynomial cube = parse_poly_expr("x^3", x1);
  std::vector<Polynomial> neg{parse_poly_expr("-x", x1)};
  CHECK(cube.substitute(neg) == parse_poly_expr("-x^3", x1));

  std::vector<Polynomial> shift{P("x + 1"), P("y")};
  CHECK(P("x^2").substitute(shift) == P("x^2 + 2*x + 1"));

  const std::vector<std::string> s1{"s"};
  std::vector<Polynomial> stages{P("y - a*x")};
  CHECK(parse_poly_expr("s", s1).substitute(stages) == P("-a*x + y"));

  CHECK_THROWS_AS((void)P("x").substitute(stages), DimensionMismatch);
}

TEST_CASE("kernel_basis examples") {
  Matrix horizontal = Matrix::from_rows({{Scalar(1), A()}});
  auto k = kernel_basis(horizontal);
  REQUIRE(k.size() == 1);
  // canonical scaling of (-a, 1)
  CHECK(k[0] == ScalarVector{A(), Scalar(-1)});
  CHECK(horizontal.apply(k[0]) == ScalarVector{Scalar(0)});

  CHECK(kernel_basis(Matrix::identity(3)).empty());

  auto full = kernel_basis(Matrix(2, 3));
  CHECK(full.size() == 3);
  CHECK(rank(Matrix::from_columns(3, full)) == 3);
}

TEST_CASE("column_span_equal examples") {
  CHECK(column_span_equal(Matrix::from_rows({{Scalar(1)}, {Scalar(0)}}), Matrix::from_rows({{Scalar(2)}, {Scalar(0)}})));
  CHECK_FALSE(column_span_equal(Matrix::from_rows({{Scalar(1)}, {Scalar(0)}}), Matrix::from_rows({{Scalar(0)}, {Scalar(1)}})));
  CHECK(column_span_equal(Matrix::from_rows({{-A()}, {Scalar(1)}}), Matrix::from_rows({{A()}, {Scalar(-1)}})));
  CHECK_THROWS_AS((void)column_span_equal(Matrix(2, 1), Matrix(3, 1)), DimensionMismatch);
}

TEST_CASE("inverse over Q(a)") {
  Matrix m = Matrix::from_rows({{Scalar(1), A()}, {Scalar(2), Scalar(1)}});
  CHECK(m * inverse(m) == Matrix::identity(2));
  CHECK_THROWS_AS((void)inverse(Matrix::from_rows({{Scalar(1), Scalar(2)}, {Scalar(2), Scalar(4)}})), NotInvertible);
}

TEST_CASE("normalize_direction clears denominators and fixes sign") {
  ScalarVector v{Scalar(mpq_class(-1, 2)), Scalar(1) / A(), Scalar(0)};
  // times -2a: (a, -2, 0)
  CHECK(normalize_direction(v) == ScalarVector{A(), Scalar(-2), Scalar(0)});
}

TEST_CASE("ring laws on random polynomials") {
  oracle::Generator gen(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = gen.integer(1, 3);
    Polynomial p = gen.polynomial(n, 3), q = gen.polynomial(n, 3), r = gen.polynomial(n, 3);
    CHECK((p + q) + r == p + (q + r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p * q == q * p);
  }
}

TEST_CASE("substitution is functorial") {
  oracle::Generator gen(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = gen.integer(1, 3), m = gen.integer(1, 3), l = gen.integer(1, 3);
    Polynomial p = gen.polynomial(n, 3);
    std::vector<Polynomial> f, g;
    for (int i = 0; i < n; ++i) f.push_back(gen.polynomial(m, 2, 3));
    for (int i = 0; i < m; ++i) g.push_back(gen.polynomial(l, 2, 3));
    std::vector<Polynomial> composed;
    for (const auto& fi : f) composed.push_back(fi.substitute(g));
    CHECK(p.substitute(f).substitute(g) == p.substitute(composed));
  }
}

TEST_CASE("kernel_basis is sound and complete on random matrices") {
  oracle::Generator gen(3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto rows = static_cast<std::size_t>(gen.integer(1, 6));
    const auto cols = static_cast<std::size_t>(gen.integer(1, 6));
    const bool with_parameter = trial % 3 == 0;
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (gen.coin(0.6)) m(i, j) = gen.scalar(with_parameter);
    // force some rank deficiency
    if (rows > 1 && gen.coin()) {
      for (std::size_t j = 0; j < cols; ++j) m(rows - 1, j) = m(0, j) * Scalar(mpq_class(3, 2));
    }
    auto basis = kernel_basis(m);
    for (const auto& v : basis)
      for (const auto& entry : m.apply(v)) CHECK(entry.is_zero());

    // generic rank over Q(a) via the brute-force oracle at several rational points
    std::size_t oracle_rank = 0;
    for (mpq_class at : {mpq_class(7, 3), mpq_class(-11, 5), mpq_class(13)})
      oracle_rank = std::max(oracle_rank, oracle::rank_q(oracle::specialise(m, at)));
    CHECK(basis.size() == cols - oracle_rank);
    if (!basis.empty()) CHECK(rank(Matrix::from_columns(cols, basis)) == basis.size());
  }
}

}  // TEST_SUITE
