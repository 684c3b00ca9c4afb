#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "dh/fq.hpp"

namespace dh {

// Polynomials in T over F_q (the ring A = F_q[T]).  Canonical dense form:
// coefficient i is the coefficient of T^i, no trailing zeros; the zero
// polynomial is the empty sequence and has degree -1.
class PolyA {
 public:
  explicit PolyA(unsigned q);  // zero
  PolyA(unsigned q, std::initializer_list<unsigned> low_to_high);
  PolyA(unsigned q, std::vector<uint8_t> low_to_high);
  static PolyA T(unsigned q) { return PolyA(q, {0, 1}); }
  static PolyA constant(FqElem c);
  static PolyA monomial(FqElem c, unsigned k);

  unsigned q() const { return q_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  FqElem coeff(unsigned i) const;
  FqElem leading_coeff() const;  // rejects the zero polynomial
  PolyA monic() const;           // divide by the leading coefficient

  PolyA operator+(const PolyA&) const;
  PolyA operator-(const PolyA&) const;
  PolyA operator*(const PolyA&) const;
  PolyA operator-() const;
  PolyA operator*(FqElem c) const;
  PolyA pow(unsigned e) const;

  struct DivMod;
  DivMod divmod(const PolyA& d) const;  // rejects division by zero
  PolyA operator/(const PolyA& d) const;
  PolyA operator%(const PolyA& d) const;

  PolyA derivative() const;
  FqElem eval(FqElem x) const;

  bool operator==(const PolyA&) const = default;
  // Canonical enumeration order: by degree, then lexicographically from the
  // top coefficient down (by element index).
  bool operator<(const PolyA& o) const;

  std::string to_string(const std::string& var = "T") const;

 private:
  void trim();
  unsigned q_;
  std::vector<uint8_t> c_;
};

struct PolyA::DivMod {
  PolyA quo, rem;
};

inline PolyA PolyA::operator/(const PolyA& d) const { return divmod(d).quo; }
inline PolyA PolyA::operator%(const PolyA& d) const { return divmod(d).rem; }

PolyA poly_gcd(PolyA a, PolyA b);  // monic, gcd(0,0) = 0
struct PolyXGcd { PolyA g, s, t; };  // s*a + t*b = g, g monic (or zero)
PolyXGcd poly_xgcd(const PolyA& a, const PolyA& b);

// All polynomials of degree < d (q^d of them, canonical order, 0 first).
std::vector<PolyA> polys_of_degree_below(unsigned q, unsigned d);
// All monic polynomials of degree exactly d, canonical order.
std::vector<PolyA> monic_polys_of_degree(unsigned q, unsigned d);

}  // namespace dh
