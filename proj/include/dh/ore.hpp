#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dh/polyx.hpp"

namespace dh {

// The twisted polynomial ring L{tau} with the commutation rule tau*c = c^q*tau.
// Coefficients need the Poly<F> field interface plus frob() (x -> x^q).
// Multiplication is noncommutative; only right division is defined (the
// leading-term cancellation needs q-th powers of the divisor's leading
// coefficient, never roots).
template <class F>
class OrePoly {
 public:
  explicit OrePoly(F zero_witness) : zero_(std::move(zero_witness)) {
    if (!zero_.is_zero()) throw std::invalid_argument("OrePoly: witness must be the field zero");
  }
  OrePoly(std::vector<F> coeffs, F zero_witness)
      : zero_(std::move(zero_witness)), c_(std::move(coeffs)) {
    if (!zero_.is_zero()) throw std::invalid_argument("OrePoly: witness must be the field zero");
    trim();
  }
  static OrePoly constant(const F& c) { return OrePoly({c}, c.zero_like()); }
  static OrePoly tau(const F& witness, unsigned i = 1) {
    std::vector<F> c(i + 1, witness.zero_like());
    c[i] = witness.one_like();
    return OrePoly(std::move(c), witness.zero_like());
  }

  int deg_tau() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const F& zero_witness() const { return zero_; }
  const F& coeff(unsigned i) const { return i < c_.size() ? c_[i] : zero_; }
  const F& leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of the zero twisted polynomial");
    return c_.back();
  }
  // The crude differential D: the tau^0 coefficient.
  const F& constant_term() const { return coeff(0); }

  OrePoly operator+(const OrePoly& o) const {
    std::vector<F> r;
    size_t n = std::max(c_.size(), o.c_.size());
    r.reserve(n);
    for (size_t i = 0; i < n; ++i) r.push_back(coeff(i) + o.coeff(i));
    return OrePoly(std::move(r), zero_);
  }
  OrePoly operator-(const OrePoly& o) const { return *this + (-o); }
  OrePoly operator-() const {
    std::vector<F> r;
    r.reserve(c_.size());
    for (const F& x : c_) r.push_back(-x);
    return OrePoly(std::move(r), zero_);
  }
  OrePoly operator*(const F& s) const {
    std::vector<F> r;
    r.reserve(c_.size());
    for (const F& x : c_) r.push_back(x * s);
    return OrePoly(std::move(r), zero_);
  }

  // (sum a_i tau^i)(sum b_j tau^j) = sum_{i,j} a_i * b_j^(q^i) tau^(i+j).
  OrePoly operator*(const OrePoly& o) const {
    if (is_zero() || o.is_zero()) return OrePoly(zero_);
    std::vector<F> r(c_.size() + o.c_.size() - 1, zero_);
    // twisted rows: o's coefficients raised to q^i as i walks up
    std::vector<F> row = o.c_;
    for (size_t i = 0; i < c_.size(); ++i) {
      if (!c_[i].is_zero())
        for (size_t j = 0; j < row.size(); ++j) {
          if (row[j].is_zero()) continue;
          r[i + j] = r[i + j] + c_[i] * row[j];
        }
      if (i + 1 < c_.size())
        for (F& x : row) x = x.frob();
    }
    return OrePoly(std::move(r), zero_);
  }

  OrePoly pow(unsigned e) const {
    OrePoly r = OrePoly::constant(zero_.one_like());
    OrePoly b = *this;
    while (e) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

  struct DivMod { OrePoly quo, rem; };
  // Right division: *this = quo * d + rem with deg_tau rem < deg_tau d.
  DivMod right_divmod(const OrePoly& d) const {
    if (d.is_zero()) throw std::domain_error("twisted division by zero");
    OrePoly quo(zero_), rem = *this;
    int dd = d.deg_tau();
    while (rem.deg_tau() >= dd) {
      unsigned k = static_cast<unsigned>(rem.deg_tau() - dd);
      F lead = d.leading();
      for (unsigned i = 0; i < k; ++i) lead = lead.frob();
      F s = rem.leading() * lead.inverse();
      OrePoly t = OrePoly::constant(s) * OrePoly::tau(zero_, k);
      quo = quo + t;
      rem = rem - t * d;
    }
    return {quo, rem};
  }

  // Evaluation as an additive operator: x -> sum lift(a_i) x^(q^i).
  template <class G, class Lift>
  G eval(const G& x, Lift lift) const {
    G acc = lift(zero_);
    G p = x;
    for (size_t i = 0; i < c_.size(); ++i) {
      if (!c_[i].is_zero()) acc = acc + lift(c_[i]) * p;
      if (i + 1 < c_.size()) p = p.frob();
    }
    return acc;
  }
  // Evaluation inside the coefficient field itself.
  F eval(const F& x) const {
    return eval(x, [](const F& c) { return c; });
  }

  // The additive polynomial sum a_i X^(q^i) as a dense member of L[X].
  Poly<F> associated_additive_polynomial(unsigned q) const {
    if (is_zero()) return Poly<F>(zero_);
    unsigned long deg = 1;
    for (int i = 0; i < deg_tau(); ++i) {
      deg *= q;
      if (deg > (1ul << 20))
        throw std::length_error("additive polynomial degree exceeds the size budget");
    }
    std::vector<F> r(deg + 1, zero_);
    unsigned long e = 1;
    for (size_t i = 0; i < c_.size(); ++i) {
      r[e] = c_[i];
      e *= q;
    }
    return Poly<F>(std::move(r), zero_);
  }

  bool operator==(const OrePoly& o) const { return c_ == o.c_; }
  bool operator!=(const OrePoly& o) const { return !(*this == o); }

  std::string to_string(const std::function<std::string(const F&)>& coeff_str) const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      if (!out.empty()) out += "+";
      out += coeff_str(c_[i]) + "*t" + std::to_string(i);
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

}  // namespace dh
