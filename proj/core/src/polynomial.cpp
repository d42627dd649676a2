#include "basicforms/polynomial.hpp"

#include "basicforms/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <numeric>

namespace basicforms {

int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool GrlexGreater::operator()(const Exponent& lhs, const Exponent& rhs) const {
  const int dl = total_degree(lhs);
  const int dr = total_degree(rhs);
  if (dl != dr) return dl > dr;
  return lhs > rhs;
}

Polynomial::Polynomial(int num_vars) : num_vars_(num_vars) {
  if (num_vars < 0) throw std::invalid_argument("negative variable count");
}

Polynomial Polynomial::constant(int num_vars, const Scalar& c) {
  Polynomial p(num_vars);
  p.add_term(Exponent(static_cast<std::size_t>(num_vars), 0), c);
  return p;
}

Polynomial Polynomial::variable(int num_vars, int index) {
  if (index < 0 || index >= num_vars) throw std::out_of_range("variable index out of range");
  Exponent e(static_cast<std::size_t>(num_vars), 0);
  e[static_cast<std::size_t>(index)] = 1;
  return monomial(num_vars, std::move(e));
}

Polynomial Polynomial::monomial(int num_vars, Exponent e, const Scalar& c) {
  if (static_cast<int>(e.size()) != num_vars) throw DimensionMismatch("exponent length differs from variable count");
  Polynomial p(num_vars);
  p.add_term(e, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

Scalar Polynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar() : it->second;
}

int Polynomial::degree() const {
  // the map is ordered by descending total degree
  return terms_.empty() ? kZeroDegree : total_degree(terms_.begin()->first);
}

bool Polynomial::uses_parameter() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.uses_parameter(); });
}

void Polynomial::add_term(const Exponent& e, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.num_vars_ != num_vars_) throw DimensionMismatch("polynomial variable counts differ");
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.num_vars_ != num_vars_) throw DimensionMismatch("polynomial variable counts differ");
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.num_vars_ != rhs.num_vars_) throw DimensionMismatch("polynomial variable counts differ");
  Polynomial out(lhs.num_vars_);
  Exponent e(static_cast<std::size_t>(lhs.num_vars_));
  for (const auto& [el, cl] : lhs.terms_) {
    for (const auto& [er, cr] : rhs.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = el[i] + er[i];
      out.add_term(e, cl * cr);
    }
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Polynomial Polynomial::partial(int index) const {
  if (index < 0 || index >= num_vars_) throw std::out_of_range("partial derivative index out of range");
  const auto i = static_cast<std::size_t>(index);
  Polynomial out(num_vars_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponent lowered = e;
    --lowered[i];
    out.add_term(lowered, c * Scalar(static_cast<long>(e[i])));
  }
  return out;
}

Polynomial Polynomial::pow(int exponent) const {
  if (exponent < 0) throw std::invalid_argument("negative polynomial power");
  Polynomial result = constant(num_vars_, Scalar(1));
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> maps) const {
  if (static_cast<int>(maps.size()) != num_vars_) throw DimensionMismatch("substitution arity differs from variable count");
  if (maps.empty()) return *this;
  const int m = maps[0].num_vars();
  for (const auto& q : maps)
    if (q.num_vars() != m) throw DimensionMismatch("substituted polynomials disagree on variable count");

  // powers[i][j] = maps[i]^j, filled lazily
  std::vector<std::vector<Polynomial>> powers(maps.size());
  auto power = [&](std::size_t i, int j) -> const Polynomial& {
    auto& row = powers[i];
    if (row.empty()) row.push_back(constant(m, Scalar(1)));
    while (static_cast<int>(row.size()) <= j) row.push_back(row.back() * maps[i]);
    return row[static_cast<std::size_t>(j)];
  };

  Polynomial out(m);
  for (const auto& [e, c] : terms_) {
    Polynomial term = constant(m, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) term = term * power(i, e[i]);
    out += term;
  }
  return out;
}

Polynomial Polynomial::map_coefficients(const std::function<Scalar(const Scalar&)>& f) const {
  Polynomial out(num_vars_);
  for (const auto& [e, c] : terms_) out.add_term(e, f(c));
  return out;
}

double Polynomial::eval(std::span<const double> point, std::optional<double> a) const {
  if (static_cast<int>(point.size()) != num_vars_) throw DimensionMismatch("evaluation point has wrong dimension");
  double acc = 0.0;
  for (const auto& [e, c] : terms_) {
    double term = c.to_double(a);
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int j = 0; j < e[i]; ++j) term *= point[i];
    acc += term;
  }
  return acc;
}

std::vector<std::string> default_variable_names(int n) {
  static const char* kSmall[] = {"x", "y", "z"};
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(n <= 3 ? std::string(kSmall[i]) : fmt::format("x{}", i + 1));
  return names;
}

namespace {

std::string monomial_string(const Exponent& e, std::span<const std::string> names) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += names[i];
    if (e[i] > 1) out += fmt::format("^{}", e[i]);
  }
  return out;
}

}  // namespace

std::string to_string(const Polynomial& p, std::span<const std::string> names) {
  if (static_cast<int>(names.size()) != p.num_vars()) throw DimensionMismatch("variable name count differs from polynomial");
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = c.looks_negative();
    const Scalar mag = negative ? -c : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const std::string mono = monomial_string(e, names);
    if (mono.empty()) {
      out += mag.is_atomic() ? mag.to_string() : "(" + mag.to_string() + ")";
    } else if (mag.is_one()) {
      out += mono;
    } else {
      out += (mag.is_atomic() ? mag.to_string() : "(" + mag.to_string() + ")") + "*" + mono;
    }
  }
  return out;
}

}  // namespace basicforms
