#include "basicforms/plots.hpp"

#include "basicforms/errors.hpp"

#include <fmt/format.h>

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

namespace basicforms {

void Plot::validate() const {
  if (param_dim < 1 || ambient_dim < 1) throw DimensionMismatch("plot dimensions must be positive");
  if (values.size() != grid.size() || jacobians.size() != grid.size())
    throw DimensionMismatch("plot needs one value and one Jacobian per grid sample");
  const auto q = static_cast<std::size_t>(param_dim);
  const auto n = static_cast<std::size_t>(ambient_dim);
  for (std::size_t s = 0; s < grid.size(); ++s) {
    if (grid[s].size() != q || values[s].size() != n || jacobians[s].size() != n * q)
      throw DimensionMismatch(fmt::format("plot sample {} has the wrong shape", s));
    for (double v : jacobians[s])
      if (!std::isfinite(v)) throw std::invalid_argument(fmt::format("non-finite Jacobian at sample {}", s));
    for (double v : values[s])
      if (!std::isfinite(v)) throw std::invalid_argument(fmt::format("non-finite value at sample {}", s));
  }
}

std::vector<Point> uniform_grid(double start, double stop, std::size_t count) {
  if (count < 2) throw std::invalid_argument("a grid needs at least two samples");
  std::vector<Point> out;
  out.reserve(count);
  const double span = stop - start;
  for (std::size_t i = 0; i < count; ++i)
    out.push_back({start + span * static_cast<double>(i) / static_cast<double>(count - 1)});
  return out;
}

std::vector<Point> z2_default_grid() { return uniform_grid(-1.5, 1.5, 2001); }

std::vector<Point> so2_default_grid() { return uniform_grid(0.0, 1.0, 4001); }

namespace {

// e^{-1/t^2} and its derivative 2 t^{-3} e^{-1/t^2}, both 0 at t = 0
double flat(double t) { return t == 0.0 ? 0.0 : std::exp(-1.0 / (t * t)); }
double flat_prime(double t) { return t == 0.0 ? 0.0 : 2.0 / (t * t * t) * std::exp(-1.0 / (t * t)); }

double so2_phase(double u) { return 0.5 * u + 0.1 * u * u; }
double so2_phase_prime(double u) { return 0.5 + 0.2 * u; }

Plot one_param_plot(int n, const std::vector<Point>& grid) {
  Plot p;
  p.param_dim = 1;
  p.ambient_dim = n;
  p.grid = grid;
  for (const auto& u : grid)
    if (u.size() != 1) throw DimensionMismatch("this plot needs a one-dimensional parameter grid");
  p.values.reserve(grid.size());
  p.jacobians.reserve(grid.size());
  return p;
}

}  // namespace

std::vector<std::string> builtin_plot_names() {
  return {"z2_p1", "z2_p2", "line", "constant_r2", "so2_arc", "so2_arc_rotated", "solenoid_p1", "solenoid_p2"};
}

Plot builtin_plot(std::string_view name, const std::vector<Point>& grid, std::optional<double> a) {
  if (name == "z2_p1" || name == "z2_p2") {
    const bool first = name == "z2_p1";
    Plot p = one_param_plot(1, grid);
    for (const auto& u : grid) {
      const double t = u[0];
      // p1 = sign(t) e^{-1/t^2}, p2 = -e^{-1/t^2}
      const double sign = first && t > 0 ? 1.0 : -1.0;
      p.values.push_back({sign * flat(t)});
      p.jacobians.push_back({sign * flat_prime(t)});
    }
    return p;
  }
  if (name == "line") {
    Plot p = one_param_plot(1, grid);
    for (const auto& u : grid) {
      p.values.push_back({u[0]});
      p.jacobians.push_back({1.0});
    }
    return p;
  }
  if (name == "constant_r2") {
    Plot p = one_param_plot(2, grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      p.values.push_back({1.0, 2.0});
      p.jacobians.push_back({0.0, 0.0});
    }
    return p;
  }
  if (name == "so2_arc" || name == "so2_arc_rotated") {
    const bool rotated = name == "so2_arc_rotated";
    Plot p = one_param_plot(2, grid);
    for (const auto& pt : grid) {
      const double u = pt[0];
      const double x = 2.0 + std::cos(u), y = std::sin(u);
      const double dx = -std::sin(u), dy = std::cos(u);
      if (!rotated) {
        p.values.push_back({x, y});
        p.jacobians.push_back({dx, dy});
        continue;
      }
      const double phi = so2_phase(u), dphi = so2_phase_prime(u);
      const double c = std::cos(phi), s = std::sin(phi);
      p.values.push_back({c * x - s * y, s * x + c * y});
      // d/du [R(phi) p] = phi' R'(phi) p + R(phi) p'
      p.jacobians.push_back({dphi * (-s * x - c * y) + (c * dx - s * dy), dphi * (c * x - s * y) + (s * dx + c * dy)});
    }
    return p;
  }
  if (name == "solenoid_p1") {
    Plot p = one_param_plot(2, grid);
    for (const auto& u : grid) {
      const double t = u[0];
      p.values.push_back({t, t * t});
      p.jacobians.push_back({1.0, 2.0 * t});
    }
    return p;
  }
  if (name == "solenoid_p2") {
    if (!a) throw UnboundParameter();
    Plot p = one_param_plot(2, grid);
    for (const auto& u : grid) {
      const double t = u[0];
      const double s = t * t * t, ds = 3.0 * t * t;
      p.values.push_back({t + 1.0 + s, t * t + 2.0 + *a * s});
      p.jacobians.push_back({1.0 + ds, 2.0 * t + *a * ds});
    }
    return p;
  }
  throw std::invalid_argument(fmt::format("unknown plot '{}'", name));
}

Plot sample_polymap(const PolyMap& f, const std::vector<Point>& grid, std::optional<double> a) {
  Plot p;
  p.param_dim = f.domain_dim;
  p.ambient_dim = f.codomain_dim;
  p.grid = grid;
  std::vector<std::vector<Polynomial>> partials;
  for (const auto& c : f.components) {
    std::vector<Polynomial> row;
    for (int j = 0; j < f.domain_dim; ++j) row.push_back(c.partial(j));
    partials.push_back(std::move(row));
  }
  for (const auto& u : grid) {
    if (static_cast<int>(u.size()) != f.domain_dim) throw DimensionMismatch("grid point has wrong dimension for the map");
    Point value;
    std::vector<double> jac;
    for (std::size_t i = 0; i < f.components.size(); ++i) {
      value.push_back(f.components[i].eval(u, a));
      for (const auto& d : partials[i]) jac.push_back(d.eval(u, a));
    }
    p.values.push_back(std::move(value));
    p.jacobians.push_back(std::move(jac));
  }
  return p;
}

Plot read_plot_table(std::istream& in) {
  Plot p;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;

    std::vector<std::vector<double>> parts(1);
    std::istringstream fields(line);
    std::string tok;
    while (fields >> tok) {
      if (tok == "|") {
        parts.emplace_back();
        continue;
      }
      try {
        std::size_t used = 0;
        parts.back().push_back(std::stod(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw std::invalid_argument(fmt::format("plot table line {}: bad number '{}'", line_no, tok));
      }
    }
    if (parts.size() != 3) throw std::invalid_argument(fmt::format("plot table line {}: expected 'u | x | J'", line_no));
    if (p.grid.empty()) {
      p.param_dim = static_cast<int>(parts[0].size());
      p.ambient_dim = static_cast<int>(parts[1].size());
    }
    if (static_cast<int>(parts[0].size()) != p.param_dim || static_cast<int>(parts[1].size()) != p.ambient_dim ||
        parts[2].size() != parts[0].size() * parts[1].size())
      throw DimensionMismatch(fmt::format("plot table line {}: inconsistent column counts", line_no));
    p.grid.push_back(std::move(parts[0]));
    p.values.push_back(std::move(parts[1]));
    p.jacobians.push_back(std::move(parts[2]));
  }
  if (p.grid.empty()) throw std::invalid_argument("plot table has no samples");
  p.validate();
  return p;
}

void write_plot_table(std::ostream& out, const Plot& plot) {
  out << "# u | x | J (row-major " << plot.ambient_dim << "x" << plot.param_dim << ")\n";
  auto put = [&](const std::vector<double>& xs) {
    for (double x : xs) out << ' ' << fmt::format("{:.17g}", x);
  };
  for (std::size_t s = 0; s < plot.size(); ++s) {
    put(plot.grid[s]);
    out << " |";
    put(plot.values[s]);
    out << " |";
    put(plot.jacobians[s]);
    out << '\n';
  }
}

}  // namespace basicforms
