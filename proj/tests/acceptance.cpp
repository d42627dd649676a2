// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "basicforms/basic.hpp"
#include "basicforms/linalg.hpp"
#include "basicforms/orbifold.hpp"
#include "basicforms/plots.hpp"
#include "basicforms/symplectic.hpp"
#include "basicforms/verify.hpp"
#include "models.hpp"
#include "oracles.hpp"

#include <fmt/format.h>

#include <chrono>
#include <functional>
#include <string>

using namespace basicforms;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += "failed: " + what;
    }
  }
};

Form F(const char* text) { return parse_form(text, models::xy()); }
Form F1(const char* text) { return parse_form(text, models::x1()); }

Outcome irrational_torus() {
  Outcome out;
  for (int d = 0; d <= 5; ++d) {
    auto functions = basic_form_basis(models::irrational_torus(), {0, d});
    auto one_forms = basic_form_basis(models::irrational_torus(), {1, d});
    out.require(functions.size() == 1 && functions[0] == F1("(1)"), fmt::format("k=0 basis at d={}", d));
    out.require(one_forms.size() == 1 && one_forms[0] == F1("(1) dx"), fmt::format("k=1 basis at d={}", d));
  }
  if (out.pass) out.detail = "span{1} and span{dx} for d = 0..5";
  return out;
}

Outcome solenoid_basis() {
  Outcome out;
  for (int d = 0; d <= 2; ++d) {
    auto one_forms = basic_form_basis(models::solenoid(), {1, d});
    out.require(one_forms.size() == 1 && forms_span_equal(one_forms, {F("(a) dx + (-1) dy")}, 2, 1),
                fmt::format("1-forms at d={}", d));
    out.require(basic_form_basis(models::solenoid(), {2, d}).empty(), fmt::format("2-forms at d={}", d));
  }
  if (out.pass) out.detail = "basic 1-forms = span{(a) dx + (-1) dy}, basic 2-forms = 0 for d = 0..2";
  return out;
}

Outcome solenoid_cohomology() {
  Outcome out;
  std::string dims;
  for (int d : {2, 4}) {
    auto records = truncated_basic_cohomology(models::solenoid(), d);
    const bool ok = records.size() == 3 && records[0].cohomology_dim == 1 && records[1].cohomology_dim == 1 &&
                    records[2].cohomology_dim == 0;
    out.require(ok, fmt::format("window d={}", d));
    dims += fmt::format("{}d={}: ({}, {}, {})", dims.empty() ? "" : ", ", d, records[0].cohomology_dim,
                        records[1].cohomology_dim, records[2].cohomology_dim);
  }
  if (out.pass) out.detail = dims;
  return out;
}

Outcome z2_basis() {
  Outcome out;
  auto basis = basic_form_basis(models::z2(), {1, 3});
  out.require(basis.size() == 2 && basis[0] == F1("(x) dx") && basis[1] == F1("(x^3) dx"), "basis {x dx, x^3 dx}");

  // by hand: x^e dx -> (-x)^e (-dx) = (-1)^(e+1) x^e dx, invariant iff e is odd
  std::vector<Form> oracle;
  std::vector<Form> averaged;
  auto group = group_closure({models::reflection()}, 2);
  for (int e = 0; e <= 3; ++e) {
    Form m = Form::term(1, {0}, Polynomial::monomial(1, {e}));
    if (e % 2 == 1) oracle.push_back(m);
    averaged.push_back(reynolds_average(group, m));
  }
  out.require(forms_span_equal(basis, oracle, 1, 1), "basis matches brute force");
  out.require(forms_span_equal(averaged, oracle, 1, 1), "Reynolds image matches brute force");
  if (out.pass) out.detail = "{x dx, x^3 dx}; Reynolds image equal";
  return out;
}

Outcome plot_criterion() {
  Outcome out;
  auto grid = z2_default_grid();
  Plot p1 = builtin_plot("z2_p1", grid), p2 = builtin_plot("z2_p2", grid);
  auto basic = criterion_check(p1, p2, F1("(x) dx"), 1e-9);
  auto naive = criterion_check(p1, p2, F1("(1) dx"), 1e-9);
  out.require(grid.size() == 2001, "2001-point grid");
  out.require(basic.max_abs_deviation <= 1e-9, "x dx deviation <= 1e-9");
  out.require(naive.max_abs_deviation >= 1e-3, "dx deviation >= 1e-3");
  out.detail = fmt::format("x dx: {:.3g}, dx: {:.3g}{}", basic.max_abs_deviation, naive.max_abs_deviation,
                           out.pass ? "" : "; " + out.detail);
  return out;
}

Outcome smooth_gauge() {
  Outcome out;
  auto grid = so2_default_grid();
  Plot arc = builtin_plot("so2_arc", grid);
  GroupPath path = builtin_group_path("so2_rotation", grid);
  auto radial = smooth_gauge_check(arc, path, F("(x) dx + (y) dy"), kFiniteDifferenceTolerance);
  auto naive = smooth_gauge_check(arc, path, F("(1) dx"), kFiniteDifferenceTolerance);
  out.require(radial.deviation.max_abs_deviation <= 1e-6, "x dx + y dy deviation <= 1e-6");
  out.require(naive.deviation.max_abs_deviation >= 1e-3, "dx deviation >= 1e-3");
  out.detail = fmt::format("x dx + y dy: {:.3g}, dx: {:.3g}{}", radial.deviation.max_abs_deviation,
                           naive.deviation.max_abs_deviation, out.pass ? "" : "; " + out.detail);
  return out;
}

Outcome stages() {
  Outcome out;
  for (int k = 0; k <= 1; ++k) {
    auto report = stages_check(models::solenoid(), models::solenoid_projection(), models::solenoid_induced(), {k, 0});
    out.require(report.contained && report.equality_decided && report.equal, fmt::format("span equality at k={}", k));
  }
  if (out.pass) out.detail = "pi_K(x,y) = y - a*x: spans equal at k = 0, 1";
  return out;
}

Outcome orbifold() {
  Outcome out;
  auto chart = OrbifoldChart::from_generators({models::quarter_turn()}, "c4");
  auto area = orbifold_invariant_forms(chart, {2, 0});
  out.require(area.size() == 1 && forms_span_equal(area, {F("(1) dx^dy")}, 2, 2), "2-forms = span{dx^dy}");
  out.require(orbifold_invariant_forms(chart, {1, 0}).empty(), "1-forms = 0");
  std::size_t checked = 0;
  for (int k = 0; k <= 2; ++k)
    for (int d = 0; d <= 3; ++d)
      for (const auto& f : monomial_form_basis(2, {k, d})) {
        Form once = reynolds_average(chart.group, f);
        out.require(reynolds_average(chart.group, once) == once, "Reynolds idempotent");
        ++checked;
      }
  if (out.pass) out.detail = fmt::format("span{{dx^dy}}, no 1-forms, projector idempotent on {} monomials", checked);
  return out;
}

Outcome symplectic() {
  Outcome out;
  HamiltonianModel model = r4_rotation_model();
  out.require(momentum_residual(model).is_zero(), "momentum residual is zero");
  out.require(model.level_samples.size() == 64, "64 samples");
  auto report = sjamaar_restriction_check(model, model.omega, 1e-9);
  out.require(report.pass(), "Sjamaar restriction at 1e-9");
  out.detail = fmt::format("residual 0, horizontal {:.3g}, invariant {:.3g}{}", report.horizontal.max_abs_deviation,
                           report.invariant.max_abs_deviation, out.pass ? "" : "; " + out.detail);
  return out;
}

Outcome properties() {
  constexpr int kInstances = 250;
  oracle::Generator gen(20240601);
  int d2 = 0, graded = 0, cartan = 0, functor = 0, kernel = 0;
  for (int t = 0; t < kInstances; ++t) {
    const int n = gen.integer(1, 4);
    Form alpha = gen.form(n, gen.integer(0, n), 3);
    if (!ext_d(ext_d(alpha)).is_zero()) ++d2;
  }
  for (int t = 0; t < kInstances; ++t) {
    const int n = gen.integer(1, 4);
    const int k = gen.integer(0, n), l = gen.integer(0, n - k);
    Form alpha = gen.form(n, k, 2), beta = gen.form(n, l, 2);
    Form swapped = wedge(beta, alpha);
    if (wedge(alpha, beta) != ((k * l) % 2 == 0 ? swapped : -swapped)) ++graded;
  }
  for (int t = 0; t < kInstances; ++t) {
    const int n = gen.integer(1, 4);
    VectorField x = gen.field(n, 2);
    Form alpha = gen.form(n, gen.integer(0, n), 3);
    if (lie_derivative(x, alpha) != oracle::lie_coordinate(x, alpha)) ++cartan;
  }
  for (int t = 0; t < kInstances; ++t) {
    const int p = gen.integer(1, 3), m = gen.integer(1, 3), n = gen.integer(1, 3);
    PolyMap f = gen.polymap(m, n, 2), g = gen.polymap(p, m, 2);
    Form alpha = gen.form(n, gen.integer(0, n), 2);
    Form direct = pullback(f.after(g), alpha), staged = pullback(g, pullback(f, alpha));
    const bool same = direct == staged || (direct.is_zero() && staged.is_zero());
    if (!same || pullback(f, ext_d(alpha)) != ext_d(pullback(f, alpha))) ++functor;
  }
  for (int t = 0; t < kInstances; ++t) {
    const auto rows = static_cast<std::size_t>(gen.integer(1, 6)), cols = static_cast<std::size_t>(gen.integer(1, 6));
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (gen.coin(0.6)) m(i, j) = gen.scalar(t % 3 == 0);
    if (rows > 1 && gen.coin())
      for (std::size_t j = 0; j < cols; ++j) m(rows - 1, j) = m(0, j) * Scalar(-2);
    auto basis = kernel_basis(m);
    bool ok = true;
    for (const auto& v : basis)
      for (const auto& e : m.apply(v)) ok = ok && e.is_zero();
    std::size_t generic_rank = 0;
    for (mpq_class at : {mpq_class(7, 3), mpq_class(-11, 5), mpq_class(13)})
      generic_rank = std::max(generic_rank, oracle::rank_q(oracle::specialise(m, at)));
    ok = ok && basis.size() == cols - generic_rank;
    if (!ok) ++kernel;
  }
  Outcome out;
  out.require(d2 == 0, fmt::format("d^2 = 0 ({} failures)", d2));
  out.require(graded == 0, fmt::format("graded commutativity ({} failures)", graded));
  out.require(cartan == 0, fmt::format("Cartan consistency ({} failures)", cartan));
  out.require(functor == 0, fmt::format("pullback functoriality ({} failures)", functor));
  out.require(kernel == 0, fmt::format("kernel soundness ({} failures)", kernel));
  if (out.pass) out.detail = fmt::format("5 properties x {} instances, 0 failures", kInstances);
  return out;
}

struct Criterion {
  int id;
  const char* name;
  double time_limit;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "irrational torus basic forms", 1.0, irrational_torus},
      {2, "solenoid basic forms", 1.0, solenoid_basis},
      {3, "solenoid basic cohomology", 5.0, solenoid_cohomology},
      {4, "Z2 basic forms and Reynolds image", 1.0, z2_basis},
      {5, "plot-pair criterion", 1.0, plot_criterion},
      {6, "smooth gauge", 1.0, smooth_gauge},
      {7, "quotient in stages", 1.0, stages},
      {8, "orbifold C4 chart", 1.0, orbifold},
      {9, "symplectic R4 model", 1.0, symplectic},
      {10, "property suites", 60.0, properties},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail = fmt::format("exception: {}", e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.time_limit) {
      outcome.pass = false;
      outcome.detail += fmt::format("; exceeded {:.0f} s limit", c.time_limit);
    }
    if (!outcome.pass) ++failures;
    fmt::print("{} [{:>2}] {}: {} ({:.3f} s)\n", outcome.pass ? "PASS" : "FAIL", c.id, c.name, outcome.detail, seconds);
  }
  fmt::print("{} of {} criteria passed\n", criteria.size() - static_cast<std::size_t>(failures), criteria.size());
  return failures == 0 ? 0 : 1;
}
