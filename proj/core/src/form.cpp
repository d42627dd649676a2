#include "basicforms/form.hpp"

#include "basicforms/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace basicforms {

namespace {

void check_grade(int n, int k) {
  if (n < 1) throw std::invalid_argument("ambient dimension must be positive");
  if (k < 0 || k > n + 1) throw std::invalid_argument(fmt::format("grade {} outside [0, {}]", k, n + 1));
}

void check_same_space(const Form& a, const Form& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("forms live on different ambient spaces");
}

}  // namespace

int sort_sign(MultiIndex& indices) {
  int sign = 1;
  // insertion sort, counting transpositions
  for (std::size_t i = 1; i < indices.size(); ++i)
    for (std::size_t j = i; j > 0 && indices[j - 1] >= indices[j]; --j) {
      if (indices[j - 1] == indices[j]) return 0;
      std::swap(indices[j - 1], indices[j]);
      sign = -sign;
    }
  return sign;
}

Form::Form(int ambient_dim, int grade) : n_(ambient_dim), k_(grade) { check_grade(ambient_dim, grade); }

Form Form::function(const Polynomial& f) {
  Form out(f.num_vars(), 0);
  out.add_term({}, f);
  return out;
}

Form Form::term(int ambient_dim, MultiIndex indices, const Polynomial& coefficient) {
  if (coefficient.num_vars() != ambient_dim) throw DimensionMismatch("coefficient variable count differs from ambient dimension");
  const int k = static_cast<int>(indices.size());
  Form out(ambient_dim, std::min(k, ambient_dim + 1));
  for (int i : indices)
    if (i < 0 || i >= ambient_dim) throw std::out_of_range("differential index out of range");
  const int sign = sort_sign(indices);
  if (sign == 0) return out;
  out.add_term(indices, sign > 0 ? coefficient : -coefficient);
  return out;
}

Form Form::differential(int ambient_dim, int index) {
  return term(ambient_dim, {index}, Polynomial::constant(ambient_dim, Scalar(1)));
}

Polynomial Form::coefficient(const MultiIndex& indices) const {
  auto it = terms_.find(indices);
  return it == terms_.end() ? Polynomial(n_) : it->second;
}

int Form::coefficient_degree() const {
  int deg = Polynomial::kZeroDegree;
  for (const auto& [idx, p] : terms_) deg = std::max(deg, p.degree());
  return deg;
}

bool Form::uses_parameter() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.uses_parameter(); });
}

void Form::add_term(const MultiIndex& indices, const Polynomial& coefficient) {
  if (static_cast<int>(indices.size()) != k_) throw std::invalid_argument("index list length differs from grade");
  if (coefficient.num_vars() != n_) throw DimensionMismatch("coefficient variable count differs from ambient dimension");
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(indices, coefficient);
  if (inserted) return;
  it->second += coefficient;
  if (it->second.is_zero()) terms_.erase(it);
}

Form& Form::operator+=(const Form& rhs) {
  check_same_space(*this, rhs);
  if (rhs.k_ != k_) throw std::invalid_argument("cannot add forms of different grades");
  for (const auto& [idx, p] : rhs.terms_) add_term(idx, p);
  return *this;
}

Form& Form::operator-=(const Form& rhs) {
  check_same_space(*this, rhs);
  if (rhs.k_ != k_) throw std::invalid_argument("cannot subtract forms of different grades");
  for (const auto& [idx, p] : rhs.terms_) add_term(idx, -p);
  return *this;
}

Form& Form::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [idx, p] : terms_) p *= c;
  return *this;
}

Form operator*(const Polynomial& f, const Form& form) {
  if (f.num_vars() != form.n_) throw DimensionMismatch("function and form live on different spaces");
  Form out(form.n_, form.k_);
  for (const auto& [idx, p] : form.terms_) out.add_term(idx, f * p);
  return out;
}

Form Form::operator-() const {
  Form out = *this;
  for (auto& [idx, p] : out.terms_) p = -p;
  return out;
}

Form Form::map_coefficients(const std::function<Polynomial(const Polynomial&)>& f) const {
  Form out(n_, k_);
  for (const auto& [idx, p] : terms_) out.add_term(idx, f(p));
  return out;
}

VectorField::VectorField(int n, std::vector<Polynomial> comps) : ambient_dim(n), components(std::move(comps)) {
  if (static_cast<int>(components.size()) != n) throw DimensionMismatch("vector field needs one component per coordinate");
  for (const auto& c : components)
    if (c.num_vars() != n) throw DimensionMismatch("vector field component has wrong variable count");
}

VectorField VectorField::zero(int n) { return VectorField(n, std::vector<Polynomial>(static_cast<std::size_t>(n), Polynomial(n))); }

int VectorField::degree() const {
  int deg = 0;
  for (const auto& c : components) deg = std::max(deg, c.degree());
  return deg;
}

bool VectorField::uses_parameter() const {
  return std::any_of(components.begin(), components.end(), [](const Polynomial& p) { return p.uses_parameter(); });
}

PolyMap::PolyMap(int m, std::vector<Polynomial> comps)
    : domain_dim(m), codomain_dim(static_cast<int>(comps.size())), components(std::move(comps)) {
  for (const auto& c : components)
    if (c.num_vars() != m) throw DimensionMismatch("map component has wrong variable count");
}

PolyMap PolyMap::identity(int n) {
  std::vector<Polynomial> comps;
  for (int i = 0; i < n; ++i) comps.push_back(Polynomial::variable(n, i));
  return PolyMap(n, std::move(comps));
}

int PolyMap::degree() const {
  int deg = 0;
  for (const auto& c : components) deg = std::max(deg, c.degree());
  return deg;
}

PolyMap PolyMap::after(const PolyMap& inner) const {
  if (inner.codomain_dim != domain_dim) throw DimensionMismatch("cannot compose maps: dimensions disagree");
  std::vector<Polynomial> comps;
  for (const auto& c : components) comps.push_back(c.substitute(inner.components));
  return PolyMap(inner.domain_dim, std::move(comps));
}

Form wedge(const Form& alpha, const Form& beta) {
  check_same_space(alpha, beta);
  const int n = alpha.ambient_dim();
  const int grade = alpha.grade() + beta.grade();
  Form out(n, std::min(grade, n + 1));
  if (grade > n) return out;
  MultiIndex merged;
  for (const auto& [ia, pa] : alpha.terms()) {
    for (const auto& [ib, pb] : beta.terms()) {
      merged = ia;
      merged.insert(merged.end(), ib.begin(), ib.end());
      const int sign = sort_sign(merged);
      if (sign == 0) continue;
      Polynomial prod = pa * pb;
      out.add_term(merged, sign > 0 ? prod : -prod);
    }
  }
  return out;
}

Form ext_d(const Form& alpha) {
  const int n = alpha.ambient_dim();
  Form out(n, std::min(alpha.grade() + 1, n + 1));
  if (alpha.grade() >= n) return out;
  MultiIndex idx;
  for (const auto& [ia, p] : alpha.terms()) {
    for (int j = 0; j < n; ++j) {
      Polynomial dp = p.partial(j);
      if (dp.is_zero()) continue;
      idx.assign(1, j);
      idx.insert(idx.end(), ia.begin(), ia.end());
      const int sign = sort_sign(idx);
      if (sign == 0) continue;
      out.add_term(idx, sign > 0 ? dp : -dp);
    }
  }
  return out;
}

Form interior(const VectorField& x, const Form& alpha) {
  if (x.ambient_dim != alpha.ambient_dim()) throw DimensionMismatch("vector field and form live on different spaces");
  if (alpha.grade() == 0) throw std::invalid_argument("cannot contract a 0-form");
  const int n = alpha.ambient_dim();
  Form out(n, alpha.grade() - 1);
  for (const auto& [ia, p] : alpha.terms()) {
    for (std::size_t l = 0; l < ia.size(); ++l) {
      const Polynomial& comp = x.components[static_cast<std::size_t>(ia[l])];
      if (comp.is_zero()) continue;
      MultiIndex rest = ia;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(l));
      Polynomial c = comp * p;
      out.add_term(rest, l % 2 == 0 ? c : -c);
    }
  }
  return out;
}

Form lie_derivative(const VectorField& x, const Form& alpha) {
  if (x.ambient_dim != alpha.ambient_dim()) throw DimensionMismatch("vector field and form live on different spaces");
  if (alpha.grade() == 0) return interior(x, ext_d(alpha));
  if (alpha.grade() > alpha.ambient_dim()) return alpha;
  return interior(x, ext_d(alpha)) + ext_d(interior(x, alpha));
}

Form pullback(const PolyMap& f, const Form& alpha) {
  if (alpha.ambient_dim() != f.codomain_dim) throw DimensionMismatch("form does not live on the codomain of the map");
  const int m = f.domain_dim;
  Form out(m, std::min(alpha.grade(), m + 1));
  if (alpha.grade() > m) return out;

  std::vector<Form> dfs;
  dfs.reserve(f.components.size());
  for (const auto& c : f.components) {
    Form dc(m, 1);
    for (int j = 0; j < m; ++j) dc.add_term({j}, c.partial(j));
    dfs.push_back(std::move(dc));
  }
  for (const auto& [ia, p] : alpha.terms()) {
    Form piece = Form::function(p.substitute(f.components));
    for (int i : ia) {
      piece = wedge(piece, dfs[static_cast<std::size_t>(i)]);
      if (piece.is_zero()) break;
    }
    if (!piece.is_zero()) out += piece;
  }
  return out;
}

double small_determinant(std::vector<double> m, std::size_t size) {
  double det = 1.0;
  for (std::size_t c = 0; c < size; ++c) {
    std::size_t best = c;
    for (std::size_t r = c + 1; r < size; ++r)
      if (std::abs(m[r * size + c]) > std::abs(m[best * size + c])) best = r;
    if (m[best * size + c] == 0.0) return 0.0;
    if (best != c) {
      for (std::size_t j = 0; j < size; ++j) std::swap(m[c * size + j], m[best * size + j]);
      det = -det;
    }
    const double pivot = m[c * size + c];
    det *= pivot;
    for (std::size_t r = c + 1; r < size; ++r) {
      const double factor = m[r * size + c] / pivot;
      if (factor == 0.0) continue;
      for (std::size_t j = c; j < size; ++j) m[r * size + j] -= factor * m[c * size + j];
    }
  }
  return det;
}

CompiledForm::CompiledForm(const Form& alpha, std::optional<double> a) : n_(alpha.ambient_dim()), k_(alpha.grade()) {
  for (const auto& [idx, p] : alpha.terms()) {
    Term t{idx, {}};
    for (const auto& [e, c] : p.terms()) t.monomials.push_back({e, c.to_double(a)});
    terms_.push_back(std::move(t));
  }
}

double CompiledForm::coefficient(std::size_t term, std::span<const double> point) const {
  double acc = 0.0;
  for (const auto& mono : terms_[term].monomials) {
    double v = mono.coeff;
    for (std::size_t i = 0; i < mono.exponent.size(); ++i)
      for (int j = 0; j < mono.exponent[i]; ++j) v *= point[i];
    acc += v;
  }
  return acc;
}

double CompiledForm::evaluate(std::span<const double> point, std::span<const double> vectors_nk) const {
  if (static_cast<int>(point.size()) != n_) throw DimensionMismatch("evaluation point has wrong dimension");
  const auto k = static_cast<std::size_t>(k_);
  if (vectors_nk.size() != static_cast<std::size_t>(n_) * k) throw DimensionMismatch("wrong number of tangent vectors");
  double total = 0.0;
  std::vector<double> minor(k * k);
  for (std::size_t t = 0; t < terms_.size(); ++t) {
    const double c = coefficient(t, point);
    if (c == 0.0) continue;
    const auto& idx = terms_[t].indices;
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t j = 0; j < k; ++j) minor[r * k + j] = vectors_nk[static_cast<std::size_t>(idx[r]) * k + j];
    total += c * (k == 0 ? 1.0 : small_determinant(minor, k));
  }
  return total;
}

double eval_form(const Form& alpha, std::span<const double> point, const std::vector<std::vector<double>>& vectors,
                 std::optional<double> a) {
  const auto n = static_cast<std::size_t>(alpha.ambient_dim());
  if (static_cast<int>(vectors.size()) != alpha.grade()) throw DimensionMismatch("need exactly one vector per form grade");
  std::vector<double> packed(n * vectors.size());
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    if (vectors[j].size() != n) throw DimensionMismatch("tangent vector has wrong dimension");
    for (std::size_t i = 0; i < n; ++i) packed[i * vectors.size() + j] = vectors[j][i];
  }
  return CompiledForm(alpha, a).evaluate(point, packed);
}

std::string to_string(const Form& alpha, std::span<const std::string> names) {
  if (static_cast<int>(names.size()) != alpha.ambient_dim()) throw DimensionMismatch("variable name count differs from form");
  if (alpha.is_zero()) return "0";
  std::string out;
  for (const auto& [idx, p] : alpha.terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + to_string(p, names) + ")";
    if (!idx.empty()) {
      out += " ";
      for (std::size_t l = 0; l < idx.size(); ++l) {
        if (l > 0) out += "^";
        out += "d" + names[static_cast<std::size_t>(idx[l])];
      }
    }
  }
  return out;
}

std::string to_string(const VectorField& x, std::span<const std::string> names) {
  std::string out = "[";
  for (std::size_t i = 0; i < x.components.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(x.components[i], names);
  }
  return out + "]";
}

}  // namespace basicforms
