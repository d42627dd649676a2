#include "basicforms/symplectic.hpp"

#include "basicforms/errors.hpp"
#include "basicforms/linalg.hpp"

#include <fmt/format.h>

#include <cmath>
#include <numbers>

namespace basicforms {

namespace {

std::vector<MultiIndex> tuples_of(std::size_t count, int k) {
  std::vector<MultiIndex> out;
  MultiIndex cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < static_cast<int>(count); ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

double max_over_tuples(const CompiledForm& form, const LevelSample& sample) {
  const auto n = static_cast<std::size_t>(form.ambient_dim());
  const auto k = static_cast<std::size_t>(form.grade());
  std::vector<double> vecs(n * k);
  double worst = 0.0;
  for (const auto& tuple : tuples_of(sample.tangent_basis.size(), form.grade())) {
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < n; ++i) vecs[i * k + j] = sample.tangent_basis[static_cast<std::size_t>(tuple[j])][i];
    worst = std::max(worst, std::abs(form.evaluate(sample.point, vecs)));
  }
  return worst;
}

}  // namespace

void HamiltonianModel::validate(std::optional<double> a) const {
  const int n = ambient_dim;
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("symplectic models need an even ambient dimension");
  if (omega.ambient_dim() != n || xi.ambient_dim != n || phi.num_vars() != n)
    throw DimensionMismatch("model components live on different spaces");
  if (omega.grade() != 2) throw std::invalid_argument("omega must be a 2-form");
  if (!ext_d(omega).is_zero()) throw std::invalid_argument("omega is not closed");

  Matrix w(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (const auto& [idx, p] : omega.terms()) {
    if (!p.is_constant()) throw std::invalid_argument("omega must have constant coefficients");
    const Scalar c = p.coefficient(Exponent(static_cast<std::size_t>(n), 0));
    const auto i = static_cast<std::size_t>(idx[0]), j = static_cast<std::size_t>(idx[1]);
    w(i, j) = c;
    w(j, i) = -c;
  }
  if (rank(w) != static_cast<std::size_t>(n)) throw std::invalid_argument("omega is degenerate");

  const double target = level.to_double(a);
  std::vector<Polynomial> gradient;
  for (int i = 0; i < n; ++i) gradient.push_back(phi.partial(i));
  for (std::size_t s = 0; s < level_samples.size(); ++s) {
    const auto& sample = level_samples[s];
    if (static_cast<int>(sample.point.size()) != n) throw DimensionMismatch(fmt::format("level sample {} has the wrong dimension", s));
    const double value = phi.eval(sample.point, a);
    if (std::abs(value - target) > 1e-10)
      throw OffLevelSet(fmt::format("sample {} is off the level set: Phi - level = {:.3g}", s, value - target));
    std::vector<double> grad;
    double grad_norm = 0.0;
    for (const auto& g : gradient) {
      grad.push_back(g.eval(sample.point, a));
      grad_norm = std::max(grad_norm, std::abs(grad.back()));
    }
    const auto& basis = sample.tangent_basis;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (static_cast<int>(basis[i].size()) != n) throw DimensionMismatch("tangent vector has the wrong dimension");
      double along_gradient = 0.0;
      for (std::size_t c = 0; c < grad.size(); ++c) along_gradient += grad[c] * basis[i][c];
      if (std::abs(along_gradient) > 1e-10 * std::max(1.0, grad_norm))
        throw OffLevelSet(fmt::format("tangent vector {} of sample {} leaves the level set", i, s));
      for (std::size_t j = i; j < basis.size(); ++j) {
        double dot = 0.0;
        for (std::size_t c = 0; c < basis[i].size(); ++c) dot += basis[i][c] * basis[j][c];
        if (std::abs(dot - (i == j ? 1.0 : 0.0)) > 1e-10)
          throw std::invalid_argument(fmt::format("tangent basis of sample {} is not orthonormal", s));
      }
    }
  }
}

std::vector<LevelSample> hopf_samples(std::size_t per_axis) {
  std::vector<LevelSample> out;
  const double pi = std::numbers::pi;
  const double m = static_cast<double>(per_axis);
  for (std::size_t i = 0; i < per_axis; ++i) {
    const double eta = (static_cast<double>(i) + 0.5) * pi / (2.0 * m);
    for (std::size_t j = 0; j < per_axis; ++j) {
      const double t1 = 2.0 * pi * static_cast<double>(j) / m + 0.3;
      for (std::size_t k = 0; k < per_axis; ++k) {
        const double t2 = 2.0 * pi * static_cast<double>(k) / m + 0.7;
        const double a = std::cos(eta) * std::cos(t1), b = std::cos(eta) * std::sin(t1);
        const double c = std::sin(eta) * std::cos(t2), d = std::sin(eta) * std::sin(t2);
        out.push_back({{a, b, c, d}, {{-b, a, -d, c}, {-c, d, a, -b}, {-d, -c, b, a}}});
      }
    }
  }
  return out;
}

HamiltonianModel r4_rotation_model() {
  constexpr int n = 4;
  auto var = [](int i) { return Polynomial::variable(n, i); };
  Form omega = Form::term(n, {0, 1}, Polynomial::constant(n, Scalar(1))) + Form::term(n, {2, 3}, Polynomial::constant(n, Scalar(1)));
  VectorField xi(n, {-var(1), var(0), -var(3), var(2)});
  Polynomial phi(n);
  for (int i = 0; i < n; ++i) phi += var(i) * var(i);
  phi *= Scalar(mpq_class(-1, 2));
  return HamiltonianModel{n, std::move(omega), std::move(xi), std::move(phi), Scalar(mpq_class(-1, 2)), hopf_samples(4)};
}

Form momentum_residual(const HamiltonianModel& model) { return interior(model.xi, model.omega) - ext_d(Form::function(model.phi)); }

SjamaarReport sjamaar_restriction_check(const HamiltonianModel& model, const Form& sigma, double tol, std::optional<double> a) {
  model.validate(a);
  if (model.level_samples.empty()) throw std::invalid_argument("model has no level-set samples");
  if (sigma.ambient_dim() != model.ambient_dim) throw DimensionMismatch("sigma lives on a different space than the model");

  std::vector<double> horizontal(model.level_samples.size(), 0.0);
  std::vector<double> invariant(model.level_samples.size(), 0.0);
  const CompiledForm lie(lie_derivative(model.xi, sigma), a);
  std::optional<CompiledForm> contracted;
  if (sigma.grade() > 0) contracted.emplace(interior(model.xi, sigma), a);
  for (std::size_t s = 0; s < model.level_samples.size(); ++s) {
    const auto& sample = model.level_samples[s];
    if (contracted) horizontal[s] = max_over_tuples(*contracted, sample);
    invariant[s] = max_over_tuples(lie, sample);
  }
  return {make_deviation_report(std::move(horizontal), tol), make_deviation_report(std::move(invariant), tol)};
}

}  // namespace basicforms
