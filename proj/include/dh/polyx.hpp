#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dh {

// Dense polynomials over a coefficient field F.  F needs value semantics,
// +,-,*,/ and unary -, inverse(), is_zero(), ==, and context witnesses
// zero_like()/one_like() (coefficient fields here carry runtime context: q,
// modulus, ambient).  The zero polynomial keeps an explicit zero witness.
template <class F>
class Poly {
 public:
  explicit Poly(F zero_witness) : zero_(std::move(zero_witness)) {
    if (!zero_.is_zero()) throw std::invalid_argument("Poly: witness must be the field zero");
  }
  Poly(std::vector<F> coeffs, F zero_witness) : zero_(std::move(zero_witness)), c_(std::move(coeffs)) {
    if (!zero_.is_zero()) throw std::invalid_argument("Poly: witness must be the field zero");
    trim();
  }
  static Poly constant(const F& c) { return Poly({c}, c.zero_like()); }
  static Poly X(const F& witness) {
    return Poly({witness.zero_like(), witness.one_like()}, witness.zero_like());
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == c_[0].one_like(); }
  bool is_monic() const { return !c_.empty() && c_.back() == zero_.one_like(); }
  const F& zero_witness() const { return zero_; }
  const F& coeff(unsigned i) const { return i < c_.size() ? c_[i] : zero_; }
  const F& leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of the zero polynomial");
    return c_.back();
  }

  Poly operator+(const Poly& o) const {
    std::vector<F> r;
    size_t n = std::max(c_.size(), o.c_.size());
    r.reserve(n);
    for (size_t i = 0; i < n; ++i) r.push_back(coeff(i) + o.coeff(i));
    return Poly(std::move(r), zero_);
  }
  Poly operator-(const Poly& o) const { return *this + (-o); }
  Poly operator-() const {
    std::vector<F> r;
    r.reserve(c_.size());
    for (const F& x : c_) r.push_back(-x);
    return Poly(std::move(r), zero_);
  }
  Poly operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly(zero_);
    std::vector<F> r(c_.size() + o.c_.size() - 1, zero_);
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      for (size_t j = 0; j < o.c_.size(); ++j) {
        if (o.c_[j].is_zero()) continue;
        r[i + j] = r[i + j] + c_[i] * o.c_[j];
      }
    }
    return Poly(std::move(r), zero_);
  }
  Poly operator*(const F& s) const {
    std::vector<F> r;
    r.reserve(c_.size());
    for (const F& x : c_) r.push_back(x * s);
    return Poly(std::move(r), zero_);
  }

  struct DivMod { Poly quo, rem; };
  DivMod divmod(const Poly& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    Poly quo(zero_);
    Poly rem = *this;
    F dinv = d.leading().inverse();
    int dd = d.degree();
    while (rem.degree() >= dd) {
      unsigned k = static_cast<unsigned>(rem.degree() - dd);
      F c = rem.leading() * dinv;
      Poly t = monomial(c, k);
      quo = quo + t;
      rem = rem - t * d;
    }
    return {quo, rem};
  }
  Poly operator/(const Poly& d) const { return divmod(d).quo; }
  Poly operator%(const Poly& d) const { return divmod(d).rem; }

  Poly monic() const { return *this * leading().inverse(); }

  Poly derivative(unsigned characteristic) const {
    if (c_.size() <= 1) return Poly(zero_);
    std::vector<F> r;
    r.reserve(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) {
      unsigned m = static_cast<unsigned>(i % characteristic);
      F acc = zero_;
      for (unsigned j = 0; j < m; ++j) acc = acc + c_[i];
      r.push_back(acc);
    }
    return Poly(std::move(r), zero_);
  }

  F eval(const F& x) const {
    F r = zero_;
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
  }

  // Smallest i with coefficient i nonzero; rejects the zero polynomial.
  unsigned order() const {
    if (is_zero()) throw std::domain_error("order of the zero polynomial");
    unsigned i = 0;
    while (c_[i].is_zero()) ++i;
    return i;
  }

  static Poly monomial(const F& c, unsigned k) {
    std::vector<F> r(k + 1, c.zero_like());
    r[k] = c;
    return Poly(std::move(r), c.zero_like());
  }

  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  std::string to_string(const std::string& var,
                        const std::function<std::string(const F&)>& coeff_str) const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = c_.size(); i-- > 0;) {
      if (c_[i].is_zero()) continue;
      if (!out.empty()) out += "+";
      std::string cs = coeff_str(c_[i]);
      bool is_unit_one = (c_[i] == c_[i].one_like());
      if (i == 0) {
        out += cs;
        continue;
      }
      // coefficients with internal structure need parentheses when multiplied
      if (cs.find('+') != std::string::npos || cs.find('/') != std::string::npos)
        cs = "(" + cs + ")";
      if (!is_unit_one) out += cs + "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  F zero_;
  std::vector<F> c_;
};

template <class F>
Poly<F> poly_gcd(Poly<F> a, Poly<F> b) {
  while (!b.is_zero()) {
    Poly<F> r = a % b;
    a = b;
    b = r;
  }
  return a.is_zero() ? a : a.monic();
}

template <class F>
struct PolyXGcdT {
  Poly<F> g, s, t;
};

// s*a + t*b = g with g monic (or zero).
template <class F>
PolyXGcdT<F> poly_xgcd(const Poly<F>& a, const Poly<F>& b) {
  const F& z = a.zero_witness();
  Poly<F> r0 = a, r1 = b;
  Poly<F> s0 = Poly<F>::constant(z.one_like()), s1(z);
  Poly<F> t0(z), t1 = Poly<F>::constant(z.one_like());
  while (!r1.is_zero()) {
    auto dm = r0.divmod(r1);
    Poly<F> r2 = dm.rem, s2 = s0 - dm.quo * s1, t2 = t0 - dm.quo * t1;
    r0 = r1; r1 = r2;
    s0 = s1; s1 = s2;
    t0 = t1; t1 = t2;
  }
  if (r0.is_zero()) return {r0, s0, t0};
  F inv = r0.leading().inverse();
  return {r0 * inv, s0 * inv, t0 * inv};
}

}  // namespace dh
