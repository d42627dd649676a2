#include "basicforms/param_poly.hpp"

#include <fmt/format.h>

#include <stdexcept>

namespace basicforms {

ParamPoly::ParamPoly(mpq_class constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

ParamPoly::ParamPoly(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

ParamPoly ParamPoly::parameter() { return ParamPoly(std::vector<mpq_class>{0, 1}); }

void ParamPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpq_class ParamPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

const mpq_class& ParamPoly::lead() const {
  if (coeffs_.empty()) throw std::logic_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

ParamPoly operator*(const ParamPoly& lhs, const ParamPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<mpq_class> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return ParamPoly(std::move(out));
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& other) { return *this = *this * other; }

ParamPoly& ParamPoly::operator*=(const mpq_class& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly out = *this;
  for (auto& x : out.coeffs_) x = -x;
  return out;
}

std::pair<ParamPoly, ParamPoly> ParamPoly::divmod(const ParamPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  if (degree() < divisor.degree()) return {ParamPoly{}, *this};
  std::vector<mpq_class> rem = coeffs_;
  std::vector<mpq_class> quot(coeffs_.size() - divisor.coeffs_.size() + 1);
  const mpq_class& lc = divisor.lead();
  const std::size_t dd = divisor.coeffs_.size() - 1;
  for (std::size_t i = rem.size(); i-- > dd;) {
    if (rem[i] == 0) continue;
    mpq_class q = rem[i] / lc;
    quot[i - dd] = q;
    for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= q * divisor.coeffs_[j];
  }
  return {ParamPoly(std::move(quot)), ParamPoly(std::move(rem))};
}

ParamPoly ParamPoly::exact_div(const ParamPoly& divisor) const {
  if (divisor.is_constant()) {
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    ParamPoly out = *this;
    out *= mpq_class(1) / divisor.coeffs_[0];
    return out;
  }
  auto [q, r] = divmod(divisor);
  if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
  return q;
}

ParamPoly ParamPoly::monic() const {
  if (is_zero()) return {};
  ParamPoly out = *this;
  out *= mpq_class(1) / lead();
  return out;
}

mpq_class ParamPoly::eval(const mpq_class& at) const {
  mpq_class acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * at + coeffs_[i];
  return acc;
}

double ParamPoly::eval(double at) const {
  double acc = 0.0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * at + coeffs_[i].get_d();
  return acc;
}

std::string ParamPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const mpq_class& c = coeffs_[i];
    if (c == 0) continue;
    mpq_class mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (i == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += i == 1 ? std::string("a") : fmt::format("a^{}", i);
  }
  return out;
}

ParamPoly gcd(ParamPoly lhs, ParamPoly rhs) {
  while (!rhs.is_zero()) {
    ParamPoly r = lhs.divmod(rhs).second;
    lhs = std::move(rhs);
    rhs = std::move(r);
  }
  return lhs.monic();
}

}  // namespace basicforms
