#include "basicforms/scalar.hpp"

#include "basicforms/errors.hpp"

#include <stdexcept>

namespace basicforms {

Scalar Scalar::ratio(ParamPoly num, ParamPoly den) {
  if (den.is_zero()) throw std::domain_error("division by zero in Q(a)");
  Scalar out;
  out.num_ = std::move(num);
  out.den_ = std::move(den);
  out.normalize();
  return out;
}

Scalar Scalar::parameter() { return Scalar(ParamPoly::parameter()); }

void Scalar::normalize() {
  if (num_.is_zero()) {
    den_ = ParamPoly(mpq_class(1));
    return;
  }
  if (!den_.is_constant()) {
    ParamPoly g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = num_.exact_div(g);
      den_ = den_.exact_div(g);
    }
  }
  if (!den_.is_one()) {
    mpq_class inv = mpq_class(1) / den_.lead();
    num_ *= inv;
    den_ *= inv;
  }
}

mpq_class Scalar::rational_value() const {
  if (!is_rational()) throw std::logic_error("scalar depends on the formal parameter");
  return num_.constant_term();
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  if (den_.is_one() && rhs.den_.is_one()) {
    num_ += rhs.num_;
    return *this;
  }
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ = den_ * rhs.den_;
  }
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  if (den_.is_one() && rhs.den_.is_one()) {
    num_ -= rhs.num_;
    return *this;
  }
  if (den_ == rhs.den_) {
    num_ -= rhs.num_;
  } else {
    num_ = num_ * rhs.den_ - rhs.num_ * den_;
    den_ = den_ * rhs.den_;
  }
  normalize();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  if (is_zero() || rhs.is_zero()) return *this = Scalar();
  if (den_.is_one() && rhs.den_.is_one()) {
    num_ = num_ * rhs.num_;
    return *this;
  }
  num_ = num_ * rhs.num_;
  den_ = den_ * rhs.den_;
  normalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero in Q(a)");
  if (is_zero()) return *this;
  if (rhs.is_rational()) {
    num_ *= mpq_class(1) / rhs.num_.constant_term();
    return *this;
  }
  num_ = num_ * rhs.den_;
  den_ = den_ * rhs.num_;
  normalize();
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  out.num_ = -out.num_;
  return out;
}

double Scalar::to_double(std::optional<double> a) const {
  if (is_rational()) return num_.constant_term().get_d();
  if (!a) throw UnboundParameter();
  return num_.eval(*a) / den_.eval(*a);
}

Scalar Scalar::substitute_parameter(const mpq_class& value) const {
  mpq_class d = den_.eval(value);
  if (d == 0) throw std::domain_error("denominator vanishes at the substituted parameter value");
  return Scalar(mpq_class(num_.eval(value) / d));
}

bool Scalar::looks_negative() const { return !num_.is_zero() && num_.lead() < 0; }

namespace {

bool single_term(const ParamPoly& p) {
  int nonzero = 0;
  for (const auto& c : p.coeffs()) nonzero += c != 0 ? 1 : 0;
  return nonzero <= 1;
}

std::string wrapped(const ParamPoly& p) {
  return single_term(p) ? p.to_string() : "(" + p.to_string() + ")";
}

}  // namespace

bool Scalar::is_atomic() const { return den_.is_one() && single_term(num_); }

std::string Scalar::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return wrapped(num_) + "/" + wrapped(den_);
}

}  // namespace basicforms
