#pragma once

#include <string>

#include "dh/poly.hpp"

namespace dh {

// The rational function field k = F_q(T).  Canonical form: gcd(num, den) = 1
// and den monic; zero is 0/1.
class RatFunc {
 public:
  explicit RatFunc(unsigned q);  // zero
  RatFunc(PolyA num);            // num/1  (implicit on purpose)
  RatFunc(PolyA num, PolyA den);
  static RatFunc T(unsigned q) { return RatFunc(PolyA::T(q)); }
  static RatFunc one(unsigned q) { return RatFunc(PolyA(q, {1})); }
  static RatFunc constant(FqElem c) { return RatFunc(PolyA::constant(c)); }

  unsigned q() const { return num_.q(); }
  const PolyA& num() const { return num_; }
  const PolyA& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  RatFunc operator+(const RatFunc&) const;
  RatFunc operator-(const RatFunc&) const;
  RatFunc operator*(const RatFunc&) const;
  RatFunc operator/(const RatFunc&) const;
  RatFunc operator-() const;
  RatFunc inverse() const;
  RatFunc pow(long e) const;   // negative exponents need a nonzero base
  RatFunc frob() const { return pow(static_cast<long>(q())); }  // x -> x^q

  bool operator==(const RatFunc&) const = default;
  // canonical order (by denominator, then numerator), for deterministic output
  bool operator<(const RatFunc& o) const {
    return den_ == o.den_ ? num_ < o.num_ : den_ < o.den_;
  }

  // Context witnesses for generic code.
  RatFunc zero_like() const { return RatFunc(q()); }
  RatFunc one_like() const { return RatFunc::one(q()); }

  // max(deg num, deg den); this is the Weil height of an element of k.
  unsigned max_degree() const;

  std::string to_string() const;

 private:
  void normalize();
  PolyA num_, den_;
};

}  // namespace dh
