#include "basicforms/errors.hpp"
#include "basicforms/expr.hpp"
#include "basicforms/plots.hpp"
#include "basicforms/verify.hpp"
#include "models.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace basicforms;

namespace {

Form F(const char* text) { return parse_form(text, models::xy()); }
Form F1(const char* text) { return parse_form(text, models::x1()); }

double flat(double t) { return t == 0.0 ? 0.0 : std::exp(-1.0 / (t * t)); }
double flat_prime(double t) { return t == 0.0 ? 0.0 : 2.0 / (t * t * t) * std::exp(-1.0 / (t * t)); }

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("builtin z2 plots") {
  auto grid = z2_default_grid();
  REQUIRE(grid.size() == 2001);
  CHECK(grid[1000][0] == 0.0);
  CHECK(grid.front()[0] == -1.5);
  CHECK(grid.back()[0] == 1.5);

  Plot p1 = builtin_plot("z2_p1", grid), p2 = builtin_plot("z2_p2", grid);
  CHECK(p1.values[1000][0] == 0.0);
  CHECK(p1.jacobians[1000][0] == 0.0);
  for (std::size_t s = 0; s < grid.size(); ++s) {
    const double t = grid[s][0];
    if (t > 0) {
      CHECK(p1.values[s][0] == -p2.values[s][0]);
      CHECK(p1.values[s][0] == doctest::Approx(flat(t)));
    } else if (t < 0) {
      CHECK(p1.values[s][0] == p2.values[s][0]);
    }
  }
  CHECK_THROWS_AS((void)builtin_plot("no_such_plot", grid), std::invalid_argument);
  CHECK_THROWS_AS((void)builtin_plot("solenoid_p2", grid), UnboundParameter);
}

TEST_CASE("pullback_along_plot") {
  auto grid = uniform_grid(-1.0, 1.0, 21);
  PlotPullback line = pullback_along_plot(builtin_plot("line", grid), F1("(x) dx"));
  for (std::size_t s = 0; s < grid.size(); ++s) CHECK(line.values[s][0] == doctest::Approx(grid[s][0]));

  PlotPullback still = pullback_along_plot(builtin_plot("constant_r2", grid), F("(x*y + 3) dx + (a) dy"), 2.0);
  for (const auto& v : still.values) CHECK(v[0] == 0.0);

  auto z2 = z2_default_grid();
  PlotPullback q1 = pullback_along_plot(builtin_plot("z2_p1", z2), F1("(x) dx"));
  PlotPullback q2 = pullback_along_plot(builtin_plot("z2_p2", z2), F1("(x) dx"));
  for (std::size_t s = 0; s < z2.size(); ++s) {
    const double t = z2[s][0];
    CHECK(q1.values[s][0] == doctest::Approx(flat(t) * flat_prime(t)).epsilon(1e-12));
    CHECK(q1.values[s][0] == q2.values[s][0]);
  }

  // two-form along a one-parameter plot has no basis tuples
  PlotPullback none = pullback_along_plot(builtin_plot("constant_r2", grid), F("(1) dx^dy"));
  CHECK(none.tuples.empty());

  CHECK_THROWS_AS((void)pullback_along_plot(builtin_plot("line", grid), F("(1) dx")), DimensionMismatch);
  CHECK_THROWS_AS((void)pullback_along_plot(builtin_plot("constant_r2", grid), F("(a) dx")), UnboundParameter);
}

TEST_CASE("criterion_check") {
  auto grid = z2_default_grid();
  Plot p1 = builtin_plot("z2_p1", grid), p2 = builtin_plot("z2_p2", grid);

  auto basic = criterion_check(p1, p2, F1("(x) dx"), 1e-9);
  CHECK(basic.pass);
  CHECK(basic.max_abs_deviation <= 1e-9);
  CHECK(basic.per_sample.size() == grid.size());

  auto naive = criterion_check(p1, p2, F1("(1) dx"), 1e-9);
  CHECK_FALSE(naive.pass);
  const double t = grid[naive.argmax][0];
  CHECK(t > 0);
  CHECK(naive.max_abs_deviation == doctest::Approx(2.0 * std::abs(flat_prime(t))));
  CHECK(naive.max_abs_deviation >= 1e-3);

  auto same = criterion_check(p1, p1, F1("(x^2 + 1) dx"), 0.0);
  CHECK(same.pass);
  CHECK(same.max_abs_deviation == 0.0);

  Plot shorter = builtin_plot("z2_p2", uniform_grid(-1.5, 1.5, 11));
  CHECK_THROWS_AS((void)criterion_check(p1, shorter, F1("(x) dx"), 1e-9), DimensionMismatch);
}

TEST_CASE("solenoid plots agree on basic forms only") {
  auto grid = uniform_grid(-1.0, 1.0, 201);
  const double a = std::sqrt(2.0);
  Plot p1 = builtin_plot("solenoid_p1", grid), p2 = builtin_plot("solenoid_p2", grid, a);
  for (const auto& alpha : basic_form_basis(models::solenoid(), {1, 2}))
    CHECK(criterion_check(p1, p2, alpha, 1e-8, a).pass);
  CHECK(criterion_check(p1, p2, F("(1) dx"), 1e-8, a).max_abs_deviation >= 1e-3);
}

TEST_CASE("smooth_gauge_check") {
  auto grid = so2_default_grid();
  Plot arc = builtin_plot("so2_arc", grid);
  GroupPath rotation = builtin_group_path("so2_rotation", grid);

  auto radial = smooth_gauge_check(arc, rotation, F("(x) dx + (y) dy"), kFiniteDifferenceTolerance);
  CHECK(radial.deviation.pass);
  CHECK(radial.deviation.max_abs_deviation <= 1e-6);
  CHECK(radial.derivative_error_estimate <= kFiniteDifferenceTolerance / 10);

  // the transformed plot is the rotated arc up to finite-difference error
  Plot rotated = builtin_plot("so2_arc_rotated", grid);
  for (std::size_t s = 0; s < grid.size(); s += 400) {
    CHECK(radial.transformed.values[s][0] == doctest::Approx(rotated.values[s][0]).epsilon(1e-12));
    CHECK(std::abs(radial.transformed.jacobians[s][1] - rotated.jacobians[s][1]) < 1e-6);
  }

  auto naive = smooth_gauge_check(arc, rotation, F("(1) dx"), kFiniteDifferenceTolerance);
  CHECK_FALSE(naive.deviation.pass);
  CHECK(naive.deviation.max_abs_deviation >= 1e-3);

  auto still = smooth_gauge_check(arc, builtin_group_path("identity2", grid), F("(1) dx"), kFiniteDifferenceTolerance);
  CHECK(still.deviation.max_abs_deviation == 0.0);

  auto coarse = uniform_grid(0.0, 1.0, 12);
  CHECK_THROWS_AS((void)smooth_gauge_check(builtin_plot("so2_arc", coarse), builtin_group_path("so2_rotation", coarse),
                                           F("(x) dx + (y) dy"), 1e-12),
                  GridTooCoarse);
}

TEST_CASE("stages_check") {
  for (int k = 0; k <= 1; ++k) {
    auto report = stages_check(models::solenoid(), models::solenoid_projection(), models::solenoid_induced(), {k, 0});
    CHECK(report.contained);
    CHECK(report.equality_decided);
    CHECK(report.equal);
  }
  auto one_forms = stages_check(models::solenoid(), models::solenoid_projection(), models::solenoid_induced(), {1, 0});
  REQUIRE(one_forms.pulled_back.size() == 1);
  CHECK(forms_span_equal(one_forms.pulled_back, {F("(a) dx + (-1) dy")}, 2, 1));

  auto functions = stages_check(models::solenoid(), models::solenoid_projection(), models::solenoid_induced(), {0, 0});
  REQUIRE(functions.big_basis.size() == 1);
  CHECK(functions.big_basis[0] == F("(1)"));

  auto trivial = stages_check(models::trivial(2), PolyMap::identity(2), models::trivial(2), {1, 2});
  CHECK(trivial.equal);

  ActionSpec line{1, {}, {}};
  CHECK_THROWS_AS((void)stages_check(models::rotation(), PolyMap(2, {parse_poly_expr("x", models::xy())}), line, {1, 0}),
                  IntertwiningError);
}

TEST_CASE("polynomial plots agree with symbolic pullback") {
  oracle::Generator gen(41);
  for (int trial = 0; trial < 60; ++trial) {
    const int q = gen.integer(1, 3), n = gen.integer(1, 3);
    PolyMap f = gen.polymap(q, n, 2);
    const int k = gen.integer(0, std::min(q, n));
    Form alpha = gen.form(n, k, 2);
    std::vector<Point> grid;
    for (int s = 0; s < 7; ++s) {
      Point u;
      for (int i = 0; i < q; ++i) u.push_back(gen.integer(-10, 10) / 8.0);
      grid.push_back(u);
    }
    const double a = 1.25;
    PlotPullback numeric = pullback_along_plot(sample_polymap(f, grid, a), alpha, a);
    Form symbolic = pullback(f, alpha);
    for (std::size_t s = 0; s < grid.size(); ++s)
      for (std::size_t t = 0; t < numeric.tuples.size(); ++t) {
        std::vector<std::vector<double>> basis;
        for (int i : numeric.tuples[t]) {
          std::vector<double> e(static_cast<std::size_t>(q), 0.0);
          e[static_cast<std::size_t>(i)] = 1.0;
          basis.push_back(e);
        }
        const double expected = eval_form(symbolic, grid[s], basis, a);
        CHECK(std::abs(numeric.values[s][t] - expected) <= 1e-12 * std::max(1.0, std::abs(expected)));
      }
  }
}

TEST_CASE("plot tables round trip") {
  Plot arc = builtin_plot("so2_arc", uniform_grid(0.0, 1.0, 17));
  std::stringstream buffer;
  write_plot_table(buffer, arc);
  Plot back = read_plot_table(buffer);
  CHECK(back.param_dim == 1);
  CHECK(back.ambient_dim == 2);
  CHECK(back.grid == arc.grid);
  CHECK(back.values == arc.values);
  CHECK(back.jacobians == arc.jacobians);

  std::istringstream bad("0 | 1 2 | 3\n");
  CHECK_THROWS_AS((void)read_plot_table(bad), DimensionMismatch);
  std::istringstream junk("# nothing\n0 | 1 | zz\n");
  CHECK_THROWS_AS((void)read_plot_table(junk), std::invalid_argument);
}

}  // TEST_SUITE
