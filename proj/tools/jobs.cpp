#include "jobs.hpp"

#include "basicforms/basic.hpp"
#include "basicforms/errors.hpp"
#include "basicforms/expr.hpp"
#include "basicforms/orbifold.hpp"
#include "basicforms/plots.hpp"
#include "basicforms/symplectic.hpp"
#include "basicforms/verify.hpp"
#include "basicforms/version.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace basicforms::jobs {

namespace {

class JobError : public std::runtime_error {
 public:
  JobError(std::string where, const std::string& message) : std::runtime_error(message), where_(std::move(where)) {}
  [[nodiscard]] const std::string& where() const { return where_; }

 private:
  std::string where_;
};

class ExprError : public std::runtime_error {
 public:
  ExprError(std::string where, const ParseError& e) : std::runtime_error(e.what()), where_(std::move(where)), position_(e.position()) {}
  [[nodiscard]] const std::string& where() const { return where_; }
  [[nodiscard]] std::size_t position() const { return position_; }

 private:
  std::string where_;
  std::size_t position_;
};

std::string child(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string item(const std::string& path, std::size_t i) { return fmt::format("{}[{}]", path, i); }

const Json& require(const Json& obj, const std::string& path, const char* key) {
  if (!obj.is_object()) throw JobError(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw JobError(child(path, key), "required field is missing");
  return *it;
}

const Json* optional(const Json& obj, const char* key) {
  if (!obj.is_object()) return nullptr;
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

int as_int(const Json& node, const std::string& path) {
  if (!node.is_number_integer()) throw JobError(path, "expected an integer");
  return node.get<int>();
}

double as_double(const Json& node, const std::string& path) {
  if (!node.is_number()) throw JobError(path, "expected a number");
  return node.get<double>();
}

const std::string& as_string(const Json& node, const std::string& path) {
  if (!node.is_string()) throw JobError(path, "expected a string");
  return node.get_ref<const std::string&>();
}

const Json& as_array(const Json& node, const std::string& path) {
  if (!node.is_array()) throw JobError(path, "expected an array");
  return node;
}

Polynomial parse_poly_at(const Json& node, const std::string& path, const std::vector<std::string>& names) {
  std::string text;
  if (node.is_number_integer()) {
    text = std::to_string(node.get<long long>());
  } else if (node.is_string()) {
    text = node.get<std::string>();
  } else {
    throw JobError(path, "expected an expression string (exact values such as \"1/2\" rather than floats)");
  }
  try {
    return parse_poly_expr(text, names);
  } catch (const ParseError& e) {
    throw ExprError(path, e);
  }
}

Scalar parse_scalar_at(const Json& node, const std::string& path) {
  static const std::vector<std::string> none;
  return parse_poly_at(node, path, none).coefficient({});
}

Form parse_form_at(const Json& node, const std::string& path, const std::vector<std::string>& names,
                   std::optional<int> grade = std::nullopt) {
  try {
    return parse_form(as_string(node, path), names, grade);
  } catch (const ParseError& e) {
    throw ExprError(path, e);
  }
}

Json form_json(const Form& alpha, const std::vector<std::string>& names) {
  Json terms = Json::array();
  for (const auto& [idx, coef] : alpha.terms()) {
    Json diffs = Json::array();
    for (int i : idx) diffs.push_back("d" + names[static_cast<std::size_t>(i)]);
    terms.push_back(Json{{"differentials", diffs}, {"indices", idx}, {"coefficient", to_string(coef, names)}});
  }
  return Json{{"text", to_string(alpha, names)}, {"grade", alpha.grade()}, {"terms", terms}};
}

Json forms_json(const std::vector<Form>& forms, const std::vector<std::string>& names) {
  Json out = Json::array();
  for (const auto& f : forms) out.push_back(form_json(f, names));
  return out;
}

struct Space {
  int dim = 0;
  std::vector<std::string> names;
};

Space read_space(const Json& node, const std::string& path, const Space* fallback = nullptr) {
  Space s;
  if (const Json* d = optional(node, "dimension")) {
    s.dim = as_int(*d, child(path, "dimension"));
  } else if (fallback) {
    s.dim = fallback->dim;
  } else {
    throw JobError(child(path, "dimension"), "required field is missing");
  }
  if (s.dim < 1) throw JobError(child(path, "dimension"), "dimension must be positive");
  if (const Json* v = optional(node, "variables")) {
    const auto vp = child(path, "variables");
    for (std::size_t i = 0; i < as_array(*v, vp).size(); ++i) s.names.push_back(as_string((*v)[i], item(vp, i)));
    if (static_cast<int>(s.names.size()) != s.dim)
      throw JobError(vp, fmt::format("{} names given for dimension {}", s.names.size(), s.dim));
    try {
      validate_variable_names(s.names);
    } catch (const std::invalid_argument& e) {
      throw JobError(vp, e.what());
    }
  } else if (fallback && fallback->dim == s.dim) {
    s.names = fallback->names;
  } else {
    s.names = default_variable_names(s.dim);
  }
  return s;
}

AffineMap read_affine(const Json& node, const std::string& path, const Space& space) {
  const auto n = static_cast<std::size_t>(space.dim);
  Matrix linear = Matrix::identity(n);
  ScalarVector offset(n);
  if (!node.is_object()) throw JobError(path, "expected an object with 'linear' and/or 'translation'");
  if (const Json* l = optional(node, "linear")) {
    const auto lp = child(path, "linear");
    if (as_array(*l, lp).size() != n) throw JobError(lp, fmt::format("expected {} rows", n));
    for (std::size_t i = 0; i < n; ++i) {
      const auto rp = item(lp, i);
      if (as_array((*l)[i], rp).size() != n) throw JobError(rp, fmt::format("expected {} entries", n));
      for (std::size_t j = 0; j < n; ++j) linear(i, j) = parse_scalar_at((*l)[i][j], item(rp, j));
    }
  }
  if (const Json* t = optional(node, "translation")) {
    const auto tp = child(path, "translation");
    if (as_array(*t, tp).size() != n) throw JobError(tp, fmt::format("expected {} entries", n));
    for (std::size_t i = 0; i < n; ++i) offset[i] = parse_scalar_at((*t)[i], item(tp, i));
  }
  try {
    return AffineMap(std::move(linear), std::move(offset));
  } catch (const NotInvertible&) {
    throw JobError(path, "linear part is not invertible");
  }
}

Json affine_json(const AffineMap& g) {
  Json linear = Json::array();
  for (std::size_t i = 0; i < g.linear().rows(); ++i) {
    Json row = Json::array();
    for (const auto& e : g.linear().row(i)) row.push_back(e.to_string());
    linear.push_back(row);
  }
  Json translation = Json::array();
  for (const auto& e : g.offset()) translation.push_back(e.to_string());
  return Json{{"linear", linear}, {"translation", translation}};
}

struct ParsedAction {
  Space space;
  ActionSpec action;
  Json echo;
};

ParsedAction read_action(const Json& node, const std::string& path, const Space& space) {
  ParsedAction out{space, ActionSpec{space.dim, {}, {}}, Json::object()};
  Json discrete = Json::array(), infinitesimal = Json::array();
  if (const Json* d = optional(node, "discrete")) {
    const auto dp = child(path, "discrete");
    for (std::size_t i = 0; i < as_array(*d, dp).size(); ++i) {
      out.action.discrete_generators.push_back(read_affine((*d)[i], item(dp, i), space));
      discrete.push_back(affine_json(out.action.discrete_generators.back()));
    }
  }
  if (const Json* f = optional(node, "infinitesimal")) {
    const auto fp = child(path, "infinitesimal");
    for (std::size_t i = 0; i < as_array(*f, fp).size(); ++i) {
      const auto ip = item(fp, i);
      const Json& comps = as_array((*f)[i], ip);
      if (comps.size() != static_cast<std::size_t>(space.dim))
        throw JobError(ip, fmt::format("expected {} components", space.dim));
      std::vector<Polynomial> polys;
      Json echo = Json::array();
      for (std::size_t j = 0; j < comps.size(); ++j) {
        polys.push_back(parse_poly_at(comps[j], item(ip, j), space.names));
        echo.push_back(to_string(polys.back(), space.names));
      }
      out.action.infinitesimal_generators.emplace_back(space.dim, std::move(polys));
      infinitesimal.push_back(echo);
    }
  }
  Json proper = nullptr;
  if (const Json* p = optional(node, "identity_component_proper")) {
    if (!p->is_boolean()) throw JobError(child(path, "identity_component_proper"), "expected true or false");
    proper = *p;
  }
  out.echo = Json{{"dimension", space.dim},
                  {"variables", space.names},
                  {"discrete", discrete},
                  {"infinitesimal", infinitesimal},
                  {"identity_component_proper", proper.is_null() ? Json("not asserted") : proper}};
  return out;
}

/// Grades from `k` (an integer or an array) and the window `d`.
std::pair<std::vector<int>, int> read_truncation(const Json& job, const std::string& path, int dim) {
  const Json& t = require(job, path, "truncation");
  const auto tp = child(path, "truncation");
  const Json& k = require(t, tp, "k");
  std::vector<int> grades;
  if (k.is_array()) {
    for (std::size_t i = 0; i < k.size(); ++i) grades.push_back(as_int(k[i], item(child(tp, "k"), i)));
  } else {
    grades.push_back(as_int(k, child(tp, "k")));
  }
  const int d = as_int(require(t, tp, "d"), child(tp, "d"));
  for (int g : grades)
    if (g < 0 || g > dim) throw JobError(child(tp, "k"), fmt::format("grade {} outside 0..{}", g, dim));
  if (d < 0) throw JobError(child(tp, "d"), "window degree must be non-negative");
  return {grades, d};
}

struct Context {
  std::optional<double> a;
  std::optional<double> tol_override;
  std::filesystem::path base_dir;
  bool include_samples = false;

  [[nodiscard]] double tol(const Json& job, double fallback) const {
    if (tol_override) return *tol_override;
    if (const Json* t = optional(job, "tol")) return as_double(*t, "tol");
    return fallback;
  }
};

Json deviation_json(const DeviationReport& r, const Context& ctx, const std::vector<Point>* grid = nullptr) {
  Json out{{"max_abs_deviation", r.max_abs_deviation}, {"argmax_sample", r.argmax}};
  if (grid && r.argmax < grid->size()) out["argmax_parameter"] = (*grid)[r.argmax];
  out["samples"] = r.per_sample.size();
  out["tolerance"] = r.tolerance;
  out["pass"] = r.pass;
  if (ctx.include_samples) out["per_sample"] = r.per_sample;
  return out;
}

struct Outcome {
  Json config = Json::object();
  Json results = Json::object();
  bool pass = true;
};

Outcome run_basis(const Json& job) {
  Outcome out;
  const Space space = read_space(job, "");
  const Json empty = Json::object();
  const Json* node = optional(job, "action");
  ParsedAction pa = read_action(node ? *node : empty, "action", space);
  auto [grades, d] = read_truncation(job, "", space.dim);
  out.config["action"] = pa.echo;
  out.config["truncation"] = Json{{"k", grades}, {"d", d}};
  Json per_grade = Json::array();
  for (int k : grades) {
    auto basis = basic_form_basis(pa.action, {k, d});
    per_grade.push_back(Json{{"grade", k},
                             {"window", d},
                             {"window_size", monomial_form_basis(space.dim, {k, d}).size()},
                             {"dimension", basis.size()},
                             {"forms", forms_json(basis, space.names)}});
  }
  out.results["bases"] = per_grade;
  return out;
}

Outcome run_cohomology(const Json& job) {
  Outcome out;
  const Space space = read_space(job, "");
  const Json empty = Json::object();
  const Json* node = optional(job, "action");
  ParsedAction pa = read_action(node ? *node : empty, "action", space);
  const int d = as_int(require(job, "", "window"), "window");
  if (d < 1) throw JobError("window", "window must be at least 1");
  out.config["action"] = pa.echo;
  out.config["window"] = d;
  Json windows = Json::array();
  for (int w : {d, d + 2}) {
    Json grades = Json::array();
    for (const auto& r : truncated_basic_cohomology(pa.action, w))
      grades.push_back(Json{{"grade", r.grade},
                            {"basic_dim", r.basic_dim},
                            {"closed_dim", r.closed_dim},
                            {"exact_dim", r.exact_dim},
                            {"cohomology_dim", r.cohomology_dim}});
    windows.push_back(Json{{"window", w}, {"grades", grades}});
  }
  out.results["windows"] = windows;
  out.results["note"] = "dimensions are computed at truncation windows; a second window is reported to observe stabilisation";
  return out;
}

Outcome run_stages(const Json& job) {
  Outcome out;
  const Json& big_node = require(job, "", "big");
  const Json& induced_node = require(job, "", "induced");
  const Space big_space = read_space(big_node, "big");
  const Space induced_space = read_space(induced_node, "induced");
  ParsedAction big = read_action(big_node, "big", big_space);
  ParsedAction induced = read_action(induced_node, "induced", induced_space);

  const Json& proj = as_array(require(job, "", "projection"), "projection");
  if (proj.size() != static_cast<std::size_t>(induced_space.dim))
    throw JobError("projection", fmt::format("expected {} components (the induced dimension)", induced_space.dim));
  std::vector<Polynomial> comps;
  Json proj_echo = Json::array();
  for (std::size_t i = 0; i < proj.size(); ++i) {
    comps.push_back(parse_poly_at(proj[i], item("projection", i), big_space.names));
    proj_echo.push_back(to_string(comps.back(), big_space.names));
  }
  PolyMap pi_k(big_space.dim, std::move(comps));
  auto [grades, d] = read_truncation(job, "", std::min(big_space.dim, induced_space.dim));
  out.config["big"] = big.echo;
  out.config["induced"] = induced.echo;
  out.config["projection"] = proj_echo;
  out.config["truncation"] = Json{{"k", grades}, {"d", d}};

  Json per_grade = Json::array();
  for (int k : grades) {
    auto r = stages_check(big.action, pi_k, induced.action, {k, d});
    Json entry{{"grade", k},
               {"induced_window", r.induced_spec.max_degree},
               {"big_window", r.big_spec.max_degree},
               {"induced_basis", forms_json(r.induced_basis, induced_space.names)},
               {"pulled_back", forms_json(r.pulled_back, big_space.names)},
               {"big_basis", forms_json(r.big_basis, big_space.names)},
               {"contained", r.contained}};
    entry["equal"] = r.equality_decided ? Json(r.equal) : Json("undecided (projection is not affine)");
    const bool pass = r.contained && (!r.equality_decided || r.equal);
    entry["pass"] = pass;
    out.pass = out.pass && pass;
    per_grade.push_back(entry);
  }
  out.results["grades"] = per_grade;
  return out;
}

std::vector<Point> read_grid(const Json& node, const std::string& path) {
  if (node.is_string()) {
    const auto& name = node.get_ref<const std::string&>();
    if (name == "z2_default") return z2_default_grid();
    if (name == "so2_default") return so2_default_grid();
    throw JobError(path, fmt::format("unknown grid '{}' (known: z2_default, so2_default)", name));
  }
  if (node.is_object()) {
    const double start = as_double(require(node, path, "start"), child(path, "start"));
    const double stop = as_double(require(node, path, "stop"), child(path, "stop"));
    const int count = as_int(require(node, path, "count"), child(path, "count"));
    if (count < 2) throw JobError(child(path, "count"), "a grid needs at least two samples");
    return uniform_grid(start, stop, static_cast<std::size_t>(count));
  }
  throw JobError(path, "expected a grid name or {start, stop, count}");
}

std::vector<Point> default_grid_for(const std::string& plot) {
  if (plot.rfind("z2_", 0) == 0) return z2_default_grid();
  if (plot.rfind("so2_", 0) == 0) return so2_default_grid();
  return uniform_grid(-1.0, 1.0, 201);
}

Plot read_plot(const Json& node, const std::string& path, const Json* grid_node, const Context& ctx, Json& echo) {
  if (node.is_string() || optional(node, "builtin")) {
    const std::string name = node.is_string() ? node.get<std::string>() : as_string(node["builtin"], child(path, "builtin"));
    auto grid = grid_node ? read_grid(*grid_node, "grid") : default_grid_for(name);
    echo = Json{{"builtin", name}, {"samples", grid.size()}};
    try {
      return builtin_plot(name, grid, ctx.a);
    } catch (const UnboundParameter&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw JobError(path, e.what());
    }
  }
  if (const Json* table = optional(node, "table")) {
    const auto file = ctx.base_dir / as_string(*table, child(path, "table"));
    std::ifstream in(file);
    if (!in) throw JobError(child(path, "table"), fmt::format("cannot open plot table '{}'", file.string()));
    Plot p;
    try {
      p = read_plot_table(in);
    } catch (const std::invalid_argument& e) {
      throw JobError(child(path, "table"), e.what());
    }
    echo = Json{{"table", table->get<std::string>()}, {"samples", p.size()}};
    return p;
  }
  throw JobError(path, "expected a builtin plot name or {\"table\": file}");
}

std::optional<int> read_grade(const Json& job) {
  if (const Json* g = optional(job, "grade")) return as_int(*g, "grade");
  return std::nullopt;
}

Outcome run_criterion(const Json& job, const Context& ctx) {
  Outcome out;
  const Space space = read_space(job, "");
  const Json& plots = as_array(require(job, "", "plots"), "plots");
  if (plots.size() != 2) throw JobError("plots", "expected exactly two plots");
  const Json* grid_node = optional(job, "grid");
  Json e1, e2;
  Plot p1 = read_plot(plots[0], item("plots", 0), grid_node, ctx, e1);
  Plot p2 = read_plot(plots[1], item("plots", 1), grid_node, ctx, e2);
  Form alpha = parse_form_at(require(job, "", "form"), "form", space.names, read_grade(job));
  const double tol = ctx.tol(job, kSymbolicTolerance);
  out.config["dimension"] = space.dim;
  out.config["variables"] = space.names;
  out.config["plots"] = Json::array({e1, e2});
  out.config["form"] = form_json(alpha, space.names);
  out.config["tolerance"] = tol;
  auto report = criterion_check(p1, p2, alpha, tol, ctx.a);
  out.results["deviation"] = deviation_json(report, ctx, &p1.grid);
  out.results["note"] = "only the listed plot pair is tested; agreement on all plot pairs cannot be certified numerically";
  out.pass = report.pass;
  return out;
}

Outcome run_gauge(const Json& job, const Context& ctx) {
  Outcome out;
  const Space space = read_space(job, "");
  const Json* grid_node = optional(job, "grid");
  Json echo;
  Plot p1 = read_plot(require(job, "", "plot"), "plot", grid_node, ctx, echo);
  const std::string& path_name = as_string(require(job, "", "path"), "path");
  GroupPath path;
  try {
    path = builtin_group_path(path_name, p1.grid);
  } catch (const std::invalid_argument& e) {
    throw JobError("path", e.what());
  }
  Form alpha = parse_form_at(require(job, "", "form"), "form", space.names, read_grade(job));
  const double tol = ctx.tol(job, kFiniteDifferenceTolerance);
  out.config["dimension"] = space.dim;
  out.config["variables"] = space.names;
  out.config["plot"] = echo;
  out.config["path"] = path_name;
  out.config["form"] = form_json(alpha, space.names);
  out.config["tolerance"] = tol;
  auto report = smooth_gauge_check(p1, path, alpha, tol, ctx.a);
  out.results["deviation"] = deviation_json(report.deviation, ctx, &p1.grid);
  out.results["derivative_error_estimate"] = report.derivative_error_estimate;
  out.pass = report.deviation.pass;
  return out;
}

Outcome run_orbifold(const Json& job) {
  Outcome out;
  const Json& chart_node = require(job, "", "chart");
  const Space space = read_space(chart_node, "chart");
  const Json& gens = as_array(require(chart_node, "chart", "generators"), "chart.generators");
  std::vector<AffineMap> generators;
  for (std::size_t i = 0; i < gens.size(); ++i) generators.push_back(read_affine(gens[i], item("chart.generators", i), space));
  if (generators.empty()) generators.push_back(AffineMap::identity(space.dim));
  std::string label = "chart";
  if (const Json* l = optional(chart_node, "label")) label = as_string(*l, "chart.label");
  int cap = 256;
  if (const Json* c = optional(chart_node, "cap")) cap = as_int(*c, "chart.cap");
  if (cap < 1) throw JobError("chart.cap", "cap must be positive");
  auto chart = OrbifoldChart::from_generators(generators, label, static_cast<std::size_t>(cap));
  auto [grades, d] = read_truncation(job, "", space.dim);

  Json gen_echo = Json::array();
  for (const auto& g : generators) gen_echo.push_back(affine_json(g));
  out.config["chart"] = Json{{"label", label}, {"dimension", space.dim}, {"variables", space.names}, {"generators", gen_echo}};
  out.config["truncation"] = Json{{"k", grades}, {"d", d}};
  out.results["group_order"] = chart.group.size();

  Json per_grade = Json::array();
  bool idempotent = true;
  for (int k : grades) {
    auto forms = orbifold_invariant_forms(chart, {k, d});
    for (const auto& f : monomial_form_basis(space.dim, {k, d})) {
      Form once = reynolds_average(chart.group, f);
      idempotent = idempotent && reynolds_average(chart.group, once) == once;
    }
    per_grade.push_back(Json{{"grade", k}, {"window", d}, {"dimension", forms.size()}, {"forms", forms_json(forms, space.names)}});
  }
  out.results["invariant_forms"] = per_grade;
  out.results["reynolds_idempotent"] = idempotent;
  out.pass = idempotent;

  if (const Json* compat = optional(job, "compatibility")) {
    Json checks = Json::array();
    for (std::size_t i = 0; i < as_array(*compat, "compatibility").size(); ++i) {
      const auto cp = item("compatibility", i);
      const Json& c = (*compat)[i];
      Form alpha_u = parse_form_at(require(c, cp, "alpha_u"), child(cp, "alpha_u"), space.names);
      Form alpha_v = parse_form_at(require(c, cp, "alpha_v"), child(cp, "alpha_v"), space.names);
      AffineMap transition = read_affine(require(c, cp, "transition"), child(cp, "transition"), space);
      bool expect = true;
      if (const Json* e = optional(c, "expect")) {
        if (!e->is_boolean()) throw JobError(child(cp, "expect"), "expected true or false");
        expect = e->get<bool>();
      }
      const bool compatible = chart_compatibility_check(alpha_u, alpha_v, transition);
      checks.push_back(Json{{"alpha_u", form_json(alpha_u, space.names)},
                            {"alpha_v", form_json(alpha_v, space.names)},
                            {"transition", affine_json(transition)},
                            {"compatible", compatible},
                            {"expected", expect},
                            {"pass", compatible == expect}});
      out.pass = out.pass && compatible == expect;
    }
    out.results["compatibility"] = checks;
  }
  return out;
}

Outcome run_symplectic(const Json& job, const Context& ctx) {
  Outcome out;
  const std::string model_name = optional(job, "model") ? as_string(job["model"], "model") : "r4_rotation";
  if (model_name != "r4_rotation") throw JobError("model", fmt::format("unknown model '{}' (known: r4_rotation)", model_name));
  HamiltonianModel model = r4_rotation_model();
  const std::vector<std::string> names{"x1", "y1", "x2", "y2"};
  const double tol = ctx.tol(job, kSymbolicTolerance);

  std::vector<Form> sigmas;
  if (const Json* s = optional(job, "sigma")) {
    for (std::size_t i = 0; i < as_array(*s, "sigma").size(); ++i)
      sigmas.push_back(parse_form_at((*s)[i], item("sigma", i), names, 2));
  } else {
    sigmas.push_back(model.omega);
  }
  out.config["model"] = Json{{"name", model_name},
                             {"variables", names},
                             {"omega", form_json(model.omega, names)},
                             {"xi", to_string(model.xi, names)},
                             {"phi", to_string(model.phi, names)},
                             {"level", model.level.to_string()},
                             {"convention", "i_xi omega = d Phi"},
                             {"samples", model.level_samples.size()}};
  out.config["tolerance"] = tol;

  Form residual = momentum_residual(model);
  out.results["momentum_residual"] = form_json(residual, names);
  out.results["residual_zero"] = residual.is_zero();
  out.pass = residual.is_zero();
  Json checks = Json::array();
  for (const auto& sigma : sigmas) {
    auto r = sjamaar_restriction_check(model, sigma, tol, ctx.a);
    checks.push_back(Json{{"sigma", form_json(sigma, names)},
                          {"horizontal", deviation_json(r.horizontal, ctx)},
                          {"invariant", deviation_json(r.invariant, ctx)},
                          {"pass", r.pass()}});
    out.pass = out.pass && r.pass();
  }
  out.results["checks"] = checks;
  return out;
}

Json provenance(const Context& ctx) {
  Json p{{"tool", "basicforms"}, {"version", std::string(kVersion)}, {"scalar_field", "Q(a), a formal"}};
  if (ctx.a) p["parameter_binding"] = Json{{"a", *ctx.a}, {"applies_to", "numeric evaluation only"}};
  return p;
}

Json error_block(const std::string& kind, const std::string& message, Json location = nullptr) {
  Json e{{"kind", kind}, {"message", message}};
  if (!location.is_null()) e["location"] = std::move(location);
  return e;
}

Json text_location(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return Json{{"line", line}, {"column", column}};
}

}  // namespace

JobResult run_job(std::string_view json_text, const Overrides& overrides) {
  JobResult result;
  Json& report = result.report;
  report["command"] = overrides.command ? Json(*overrides.command) : Json(nullptr);
  Context ctx{overrides.bind_a, overrides.tol, overrides.base_dir, false};

  auto fail = [&](int code, Json error) {
    result.exit_code = code;
    report["status"] = "error";
    report["error"] = std::move(error);
    report["provenance"] = provenance(ctx);
  };

  Json job;
  try {
    job = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    // nlohmann reports the byte just past the offending character
    fail(kParseError, error_block("parse_error", e.what(), text_location(json_text, e.byte > 0 ? e.byte - 1 : 0)));
    return result;
  }

  try {
    if (!job.is_object()) throw JobError("", "a job must be a JSON object");
    std::string command;
    if (const Json* c = optional(job, "command")) command = as_string(*c, "command");
    if (overrides.command) {
      if (!command.empty() && command != *overrides.command)
        throw JobError("command", fmt::format("job is a '{}' job but '{}' was requested", command, *overrides.command));
      command = *overrides.command;
    }
    if (command.empty()) throw JobError("command", "required field is missing");
    if (std::find(std::begin(kCommands), std::end(kCommands), command) == std::end(kCommands))
      throw JobError("command", fmt::format("unknown command '{}'", command));
    report["command"] = command;

    if (!ctx.a) {
      if (const Json* p = optional(job, "parameter")) {
        if (p->is_number()) {
          ctx.a = p->get<double>();
        } else if (!(p->is_string() && p->get<std::string>() == "formal")) {
          throw JobError("parameter", "expected \"formal\" or a number");
        }
      }
    }
    if (const Json* s = optional(job, "include_samples")) {
      if (!s->is_boolean()) throw JobError("include_samples", "expected true or false");
      ctx.include_samples = s->get<bool>();
    }

    Outcome outcome;
    if (command == "basis") outcome = run_basis(job);
    else if (command == "cohomology") outcome = run_cohomology(job);
    else if (command == "stages") outcome = run_stages(job);
    else if (command == "criterion") outcome = run_criterion(job, ctx);
    else if (command == "gauge") outcome = run_gauge(job, ctx);
    else if (command == "orbifold") outcome = run_orbifold(job);
    else outcome = run_symplectic(job, ctx);

    const bool is_check = command != "basis" && command != "cohomology";
    report["status"] = !is_check ? "ok" : outcome.pass ? "pass" : "fail";
    outcome.config["parameter"] = ctx.a ? Json(*ctx.a) : Json("formal");
    report["config"] = std::move(outcome.config);
    report["results"] = std::move(outcome.results);
    report["provenance"] = provenance(ctx);
    result.exit_code = outcome.pass ? kOk : kCheckFailed;
  } catch (const ExprError& e) {
    fail(kParseError, error_block("expression_error", e.what(), Json{{"field", e.where()}, {"offset", e.position()}}));
  } catch (const JobError& e) {
    fail(kValidationError, error_block("validation_error", e.what(), Json{{"field", e.where()}}));
  } catch (const UnboundParameter&) {
    fail(kValidationError,
         error_block("validation_error",
                     "this job evaluates forms numerically and uses the formal parameter 'a'; "
                     "bind it with --bind-a or a numeric \"parameter\" field"));
  } catch (const DimensionMismatch& e) {
    fail(kValidationError, error_block("dimension_mismatch", e.what()));
  } catch (const OffLevelSet& e) {
    fail(kValidationError, error_block("off_level_set", e.what()));
  } catch (const GroupNotFinite& e) {
    fail(kComputationError, error_block("group_not_finite", e.what()));
  } catch (const GroupNotClosed& e) {
    fail(kComputationError, error_block("group_not_closed", e.what()));
  } catch (const IntertwiningError& e) {
    fail(kComputationError, error_block("intertwining_error", e.what()));
  } catch (const GridTooCoarse& e) {
    fail(kComputationError, error_block("grid_too_coarse", e.what()));
  } catch (const std::invalid_argument& e) {
    fail(kValidationError, error_block("validation_error", e.what()));
  } catch (const std::exception& e) {
    fail(kComputationError, error_block("computation_error", e.what()));
  }
  return result;
}

JobResult run_job_file(const std::filesystem::path& path, Overrides overrides) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    JobResult result;
    result.exit_code = kValidationError;
    result.report = Json{{"command", overrides.command ? Json(*overrides.command) : Json(nullptr)},
                         {"status", "error"},
                         {"error", error_block("io_error", fmt::format("cannot read job file '{}'", path.string()))},
                         {"provenance", provenance(Context{overrides.bind_a, overrides.tol, {}, false})}};
    return result;
  }
  std::ostringstream text;
  text << in.rdbuf();
  if (overrides.base_dir == ".") overrides.base_dir = path.has_parent_path() ? path.parent_path() : ".";
  return run_job(text.str(), overrides);
}

std::string render_report(const Json& report) { return report.dump(2) + "\n"; }

}  // namespace basicforms::jobs
