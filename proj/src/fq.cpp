#include "dh/fq.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace dh {

namespace {

struct FqCtx {
  unsigned q = 0, p = 0, s = 0;
  std::vector<uint8_t> mul;  // q*q
  std::vector<uint8_t> add;  // q*q
  std::vector<uint8_t> neg;  // q
  std::vector<uint8_t> inv;  // q (0 slot unused)
};

// Modulus digits (low to high) for the non-prime fields.
std::vector<unsigned> modulus_digits(unsigned q) {
  switch (q) {
    case 4: return {1, 1, 1};     // g^2+g+1
    case 8: return {1, 1, 0, 1};  // g^3+g+1
    case 9: return {2, 2, 1};     // g^2+2g+2
    default: throw std::logic_error("modulus_digits: prime q");
  }
}

void to_digits(unsigned v, unsigned p, unsigned s, unsigned* d) {
  for (unsigned i = 0; i < s; ++i) {
    d[i] = v % p;
    v /= p;
  }
}

unsigned from_digits(const unsigned* d, unsigned p, unsigned s) {
  unsigned v = 0;
  for (unsigned i = s; i-- > 0;) v = v * p + d[i];
  return v;
}

FqCtx build_ctx(unsigned q) {
  FqCtx c;
  c.q = q;
  switch (q) {
    case 2: case 3: case 5: case 7: c.p = q; c.s = 1; break;
    case 4: c.p = 2; c.s = 2; break;
    case 8: c.p = 2; c.s = 3; break;
    case 9: c.p = 3; c.s = 2; break;
    default: throw std::invalid_argument("unsupported coefficient field F_" + std::to_string(q) +
                                         " (supported: q = 2,3,4,5,7,8,9)");
  }
  c.mul.assign(q * q, 0);
  c.add.assign(q * q, 0);
  c.neg.assign(q, 0);
  c.inv.assign(q, 0);
  std::vector<unsigned> mod;
  if (c.s > 1) mod = modulus_digits(q);
  for (unsigned a = 0; a < q; ++a) {
    unsigned da[4], db[4];
    to_digits(a, c.p, c.s, da);
    // negation
    unsigned dn[4];
    for (unsigned i = 0; i < c.s; ++i) dn[i] = (c.p - da[i]) % c.p;
    c.neg[a] = static_cast<uint8_t>(from_digits(dn, c.p, c.s));
    for (unsigned b = 0; b < q; ++b) {
      to_digits(b, c.p, c.s, db);
      unsigned ds[4];
      for (unsigned i = 0; i < c.s; ++i) ds[i] = (da[i] + db[i]) % c.p;
      c.add[a * q + b] = static_cast<uint8_t>(from_digits(ds, c.p, c.s));
      // product of digit polynomials, reduced mod the modulus
      unsigned prod[8] = {0};
      for (unsigned i = 0; i < c.s; ++i)
        for (unsigned j = 0; j < c.s; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % c.p;
      if (c.s > 1) {
        for (unsigned k = 2 * c.s - 2; k >= c.s; --k) {
          unsigned t = prod[k];
          if (t == 0) continue;
          prod[k] = 0;
          // g^k = g^(k-s) * (-(mod lower part))
          for (unsigned i = 0; i < c.s; ++i) {
            unsigned sub = (t * mod[i]) % c.p;
            prod[k - c.s + i] = (prod[k - c.s + i] + c.p - sub) % c.p;
          }
        }
      }
      c.mul[a * q + b] = static_cast<uint8_t>(from_digits(prod, c.p, c.s));
    }
  }
  for (unsigned a = 1; a < q; ++a)
    for (unsigned b = 1; b < q; ++b)
      if (c.mul[a * q + b] == 1) c.inv[a] = static_cast<uint8_t>(b);
  return c;
}

const FqCtx& ctx(unsigned q) {
  static const std::array<FqCtx, 10> all = [] {
    std::array<FqCtx, 10> a{};
    for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) a[q] = build_ctx(q);
    return a;
  }();
  if (q > 9 || all[q].q == 0)
    throw std::invalid_argument("unsupported coefficient field F_" + std::to_string(q) +
                                " (supported: q = 2,3,4,5,7,8,9)");
  return all[q];
}

void check_same(const FqElem& a, const FqElem& b) {
  if (a.q() != b.q())
    throw std::invalid_argument("mixed coefficient fields F_" + std::to_string(a.q()) + " and F_" +
                                std::to_string(b.q()));
}

}  // namespace

bool fq_supported(unsigned q) {
  switch (q) {
    case 2: case 3: case 4: case 5: case 7: case 8: case 9: return true;
    default: return false;
  }
}

unsigned fq_char(unsigned q) { return ctx(q).p; }
unsigned fq_degree(unsigned q) { return ctx(q).s; }

FqElem::FqElem(unsigned q, unsigned value) : q_(static_cast<uint16_t>(q)), v_(static_cast<uint8_t>(value)) {
  const FqCtx& c = ctx(q);
  if (value >= c.q) throw std::invalid_argument("coefficient value out of range for F_" + std::to_string(q));
}

FqElem FqElem::gen(unsigned q) {
  if (fq_degree(q) == 1) throw std::invalid_argument("F_" + std::to_string(q) + " is prime; no generator tag g");
  return FqElem(q, fq_char(q));  // digits (0,1)
}

FqElem FqElem::operator+(FqElem o) const {
  check_same(*this, o);
  return FqElem(q_, ctx(q_).add[v_ * q_ + o.v_]);
}

FqElem FqElem::operator-(FqElem o) const { return *this + (-o); }

FqElem FqElem::operator*(FqElem o) const {
  check_same(*this, o);
  return FqElem(q_, ctx(q_).mul[v_ * q_ + o.v_]);
}

FqElem FqElem::operator/(FqElem o) const { return *this * o.inverse(); }

FqElem FqElem::operator-() const { return FqElem(q_, ctx(q_).neg[v_]); }

FqElem FqElem::inverse() const {
  if (v_ == 0) throw std::domain_error("division by zero in F_" + std::to_string(q_));
  return FqElem(q_, ctx(q_).inv[v_]);
}

FqElem FqElem::pow(unsigned long e) const {
  FqElem r = FqElem::one(q_);
  FqElem b = *this;
  if (is_zero()) return e == 0 ? r : *this;
  e %= (q_ - 1);  // nonzero elements have order dividing q-1
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

std::string FqElem::to_string() const {
  const FqCtx& c = ctx(q_);
  if (c.s == 1) return std::to_string(v_);
  unsigned d[4];
  to_digits(v_, c.p, c.s, d);
  std::string out;
  for (unsigned i = c.s; i-- > 0;) {
    if (d[i] == 0) continue;
    if (!out.empty()) out += "+";
    std::string term;
    if (i == 0) {
      term = std::to_string(d[i]);
    } else {
      if (d[i] != 1) term = std::to_string(d[i]) + "*";
      term += "g";
      if (i > 1) term += "^" + std::to_string(i);
    }
    out += term;
  }
  return out.empty() ? "0" : out;
}

bool FqElem::needs_parens() const {
  return to_string().find('+') != std::string::npos;
}

}  // namespace dh
