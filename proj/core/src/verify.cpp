#include "basicforms/verify.hpp"

#include "basicforms/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>

namespace basicforms {

DeviationReport make_deviation_report(std::vector<double> per_sample, double tolerance) {
  DeviationReport r;
  r.tolerance = tolerance;
  for (std::size_t i = 0; i < per_sample.size(); ++i)
    if (per_sample[i] > r.max_abs_deviation || std::isnan(per_sample[i])) {
      r.max_abs_deviation = per_sample[i];
      r.argmax = i;
      if (std::isnan(per_sample[i])) break;
    }
  r.pass = !std::isnan(r.max_abs_deviation) && r.max_abs_deviation <= tolerance;
  r.per_sample = std::move(per_sample);
  return r;
}

namespace {

std::vector<MultiIndex> increasing_tuples(int q, int k) {
  std::vector<MultiIndex> out;
  if (k > q) return out;
  MultiIndex cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i;
  for (;;) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == q - k + i) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

// Derivative at xs[at] of the quadratic through (xs[i], fs[i]), i = 0..2.
double lagrange3_derivative(const double xs[3], const double fs[3], int at) {
  const double x = xs[at];
  double d = 0.0;
  // offset by fs[at] so constant series differentiate to exactly zero
  for (int i = 0; i < 3; ++i) {
    if (i == at) continue;
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    const double denom = (xs[i] - xs[j]) * (xs[i] - xs[k]);
    d += (fs[i] - fs[at]) * ((x - xs[j]) + (x - xs[k])) / denom;
  }
  return d;
}

// Derivative of a sampled scalar at node i using the three-node stencil with
// spacing `step` (in samples); centred when possible, one-sided at the ends.
double stencil_derivative(const std::vector<double>& us, const std::vector<double>& fs, std::size_t i, std::size_t step) {
  const std::size_t n = us.size();
  std::size_t first;
  int at;
  if (i >= step && i + step < n) {
    first = i - step;
    at = 1;
  } else if (i + 2 * step < n) {
    first = i;
    at = 0;
  } else {
    first = i - 2 * step;
    at = 2;
  }
  const double xs[3] = {us[first], us[first + step], us[first + 2 * step]};
  const double ys[3] = {fs[first], fs[first + step], fs[first + 2 * step]};
  return lagrange3_derivative(xs, ys, at);
}

}  // namespace

PlotPullback pullback_along_plot(const Plot& p, const Form& alpha, std::optional<double> a) {
  p.validate();
  if (alpha.ambient_dim() != p.ambient_dim) throw DimensionMismatch("form does not live on the plot's target space");
  const CompiledForm compiled(alpha, a);
  PlotPullback out;
  out.grade = alpha.grade();
  out.tuples = increasing_tuples(p.param_dim, alpha.grade());
  const auto n = static_cast<std::size_t>(p.ambient_dim);
  const auto q = static_cast<std::size_t>(p.param_dim);
  const auto k = static_cast<std::size_t>(alpha.grade());
  std::vector<double> vecs(n * k);
  out.values.reserve(p.size());
  for (std::size_t s = 0; s < p.size(); ++s) {
    std::vector<double> row;
    row.reserve(out.tuples.size());
    for (const auto& tuple : out.tuples) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j) vecs[i * k + j] = p.jacobians[s][i * q + static_cast<std::size_t>(tuple[j])];
      row.push_back(compiled.evaluate(p.values[s], vecs));
    }
    out.values.push_back(std::move(row));
  }
  return out;
}

DeviationReport criterion_check(const Plot& p1, const Plot& p2, const Form& alpha, double tol, std::optional<double> a) {
  if (p1.param_dim != p2.param_dim || p1.size() != p2.size()) throw DimensionMismatch("plots do not share a parameter grid");
  for (std::size_t s = 0; s < p1.size(); ++s)
    for (std::size_t j = 0; j < p1.grid[s].size(); ++j)
      if (std::abs(p1.grid[s][j] - p2.grid[s][j]) > 1e-12) throw DimensionMismatch(fmt::format("grids differ at sample {}", s));

  const PlotPullback lhs = pullback_along_plot(p1, alpha, a);
  const PlotPullback rhs = pullback_along_plot(p2, alpha, a);
  std::vector<double> dev(p1.size(), 0.0);
  for (std::size_t s = 0; s < dev.size(); ++s)
    for (std::size_t t = 0; t < lhs.tuples.size(); ++t)
      dev[s] = std::max(dev[s], std::abs(lhs.values[s][t] - rhs.values[s][t]));
  return make_deviation_report(std::move(dev), tol);
}

GroupPath builtin_group_path(std::string_view name, const std::vector<Point>& grid) {
  GroupPath path;
  path.grid = grid;
  for (const auto& u : grid) {
    if (u.size() != 1) throw DimensionMismatch("group paths are sampled on one-dimensional grids");
    if (name == "so2_rotation") {
      const double phi = 0.5 * u[0] + 0.1 * u[0] * u[0];
      const double c = std::cos(phi), s = std::sin(phi);
      path.elements.push_back({2, {c, -s, s, c}, {0.0, 0.0}});
    } else if (name == "identity2") {
      path.elements.push_back({2, {1.0, 0.0, 0.0, 1.0}, {0.0, 0.0}});
    } else {
      throw std::invalid_argument(fmt::format("unknown group path '{}'", name));
    }
  }
  return path;
}

GaugeReport smooth_gauge_check(const Plot& p1, const GroupPath& path, const Form& alpha, double tol,
                               std::optional<double> a) {
  p1.validate();
  if (p1.param_dim != 1) throw DimensionMismatch("gauge checks need a one-parameter plot");
  if (path.elements.size() != p1.size() || path.grid.size() != p1.size())
    throw DimensionMismatch("group path and plot have different sample counts");
  for (std::size_t s = 0; s < p1.size(); ++s)
    if (std::abs(path.grid[s][0] - p1.grid[s][0]) > 1e-12) throw DimensionMismatch("group path and plot grids differ");
  if (p1.size() < 9) throw GridTooCoarse("finite differences need at least nine samples");
  const auto n = static_cast<std::size_t>(p1.ambient_dim);
  for (const auto& g : path.elements)
    if (g.dim != n || g.linear.size() != n * n || g.offset.size() != n)
      throw DimensionMismatch("group path element has the wrong dimension");

  const std::size_t count = p1.size();
  std::vector<double> us(count);
  for (std::size_t s = 0; s < count; ++s) us[s] = p1.grid[s][0];

  // derivative of every entry of (A, b) along the path, with a Richardson error estimate
  const std::size_t entries = n * n + n;
  std::vector<std::vector<double>> deriv(count, std::vector<double>(entries));
  std::vector<double> err_linear(count, 0.0), err_offset(count, 0.0);
  std::vector<double> series(count);
  for (std::size_t e = 0; e < entries; ++e) {
    for (std::size_t s = 0; s < count; ++s)
      series[s] = e < n * n ? path.elements[s].linear[e] : path.elements[s].offset[e - n * n];
    for (std::size_t s = 0; s < count; ++s) {
      const double fine = stencil_derivative(us, series, s, 1);
      const double coarse = stencil_derivative(us, series, s, 2);
      deriv[s][e] = fine;
      auto& err = e < n * n ? err_linear[s] : err_offset[s];
      err = std::max(err, std::abs(fine - coarse) / 3.0);
    }
  }

  GaugeReport report;
  Plot& p2 = report.transformed;
  p2.param_dim = 1;
  p2.ambient_dim = p1.ambient_dim;
  p2.grid = p1.grid;
  for (std::size_t s = 0; s < count; ++s) {
    const auto& g = path.elements[s];
    const auto& x = p1.values[s];
    const auto& jac = p1.jacobians[s];
    Point value(n);
    std::vector<double> j2(n);
    double norm1 = 0.0;
    for (double xi : x) norm1 += std::abs(xi);
    for (std::size_t i = 0; i < n; ++i) {
      double v = g.offset[i], dv = deriv[s][n * n + i];
      for (std::size_t k = 0; k < n; ++k) {
        v += g.linear[i * n + k] * x[k];
        dv += deriv[s][i * n + k] * x[k] + g.linear[i * n + k] * jac[k];
      }
      value[i] = v;
      j2[i] = dv;
    }
    report.derivative_error_estimate = std::max(report.derivative_error_estimate, err_linear[s] * norm1 + err_offset[s]);
    p2.values.push_back(std::move(value));
    p2.jacobians.push_back(std::move(j2));
  }
  if (report.derivative_error_estimate > tol / 10.0)
    throw GridTooCoarse(fmt::format("finite-difference error estimate {:.3g} exceeds tol/10 = {:.3g}",
                                    report.derivative_error_estimate, tol / 10.0));
  report.deviation = criterion_check(p1, p2, alpha, tol, a);
  return report;
}

StagesReport stages_check(const ActionSpec& big, const PolyMap& pi_k, const ActionSpec& induced, const TruncationSpec& spec) {
  big.validate();
  induced.validate();
  if (pi_k.domain_dim != big.ambient_dim || pi_k.codomain_dim != induced.ambient_dim)
    throw DimensionMismatch("quotient map does not go from the big space to the induced space");

  StagesReport report;
  report.induced_spec = spec;
  report.big_spec = {spec.grade, spec.max_degree * pi_k.degree()};
  report.induced_basis = basic_form_basis(induced, spec);
  for (const auto& beta : report.induced_basis) report.pulled_back.push_back(pullback(pi_k, beta));

  const auto names = default_variable_names(big.ambient_dim);
  for (std::size_t i = 0; i < report.pulled_back.size(); ++i) {
    const Form& beta = report.pulled_back[i];
    for (std::size_t g = 0; g < big.discrete_generators.size(); ++g)
      if (act_pullback(big.discrete_generators[g], beta) != beta)
        throw IntertwiningError(fmt::format("pulled back form {} is not invariant under discrete generator {}",
                                            to_string(beta, names), g));
    for (std::size_t x = 0; x < big.infinitesimal_generators.size(); ++x)
      if (!lie_derivative(big.infinitesimal_generators[x], beta).is_zero())
        throw IntertwiningError(fmt::format("pulled back form {} is not invariant under infinitesimal generator {}",
                                            to_string(beta, names), x));
  }

  report.big_basis = basic_form_basis(big, report.big_spec);
  const int n = big.ambient_dim;
  report.contained = forms_span_contains(report.big_basis, report.pulled_back, n, spec.grade);
  report.equality_decided = pi_k.degree() <= 1;
  if (report.equality_decided) report.equal = forms_span_equal(report.big_basis, report.pulled_back, n, spec.grade);
  return report;
}

}  // namespace basicforms
