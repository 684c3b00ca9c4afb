#include "dh/rational.hpp"

#include <stdexcept>

namespace dh {

RatFunc::RatFunc(unsigned q) : num_(q), den_(q, {1}) {}

RatFunc::RatFunc(PolyA num) : num_(std::move(num)), den_(num_.q(), {1}) {}

RatFunc::RatFunc(PolyA num, PolyA den) : num_(std::move(num)), den_(std::move(den)) {
  if (num_.q() != den_.q()) throw std::invalid_argument("mixed coefficient fields in rational function");
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = PolyA(num_.q(), {1});
    return;
  }
  PolyA g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
  FqElem lead = den_.leading_coeff();
  if (!lead.is_one()) {
    FqElem inv = lead.inverse();
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inverse(); }

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in F_" + std::to_string(q()) + "(T)");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  RatFunc r = one_like();
  RatFunc b = *this;
  unsigned long u = static_cast<unsigned long>(e);
  while (u) {
    if (u & 1) r = r * b;
    b = b * b;
    u >>= 1;
  }
  return r;
}

unsigned RatFunc::max_degree() const {
  int dn = num_.degree(), dd = den_.degree();
  int m = dn > dd ? dn : dd;
  return m < 0 ? 0 : static_cast<unsigned>(m);
}

std::string RatFunc::to_string() const {
  if (is_polynomial()) return num_.to_string();
  auto wrap = [](const std::string& s) {
    return s.find('+') == std::string::npos ? s : "(" + s + ")";
  };
  return wrap(num_.to_string()) + "/" + wrap(den_.to_string());
}

}  // namespace dh
