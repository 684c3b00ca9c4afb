#pragma once

#include <cstdint>
#include <string>

namespace dh {

// Coefficient fields F_q for q in {2,3,4,5,7,8,9}.
//
// Prime q: integers mod p.  Non-prime q: F_p[g]/(modulus) with the fixed
// moduli
//   F4 = F2[g]/(g^2+g+1),  F8 = F2[g]/(g^3+g+1),  F9 = F3[g]/(g^2+2g+2),
// elements stored as indices 0..q-1 whose base-p digits are the coordinates
// in the basis 1, g, g^2.

bool fq_supported(unsigned q);
unsigned fq_char(unsigned q);    // p
unsigned fq_degree(unsigned q);  // s with q = p^s

class FqElem {
 public:
  FqElem(unsigned q, unsigned value);
  static FqElem zero(unsigned q) { return FqElem(q, 0); }
  static FqElem one(unsigned q) { return FqElem(q, 1); }
  static FqElem gen(unsigned q);  // the class of g; rejects prime q

  unsigned q() const { return q_; }
  unsigned value() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  FqElem operator+(FqElem o) const;
  FqElem operator-(FqElem o) const;
  FqElem operator*(FqElem o) const;
  FqElem operator/(FqElem o) const;
  FqElem operator-() const;
  FqElem inverse() const;
  FqElem pow(unsigned long e) const;

  bool operator==(const FqElem&) const = default;

  std::string to_string() const;  // "2", "g", "g^2+1", ...
  // True if to_string needs parentheses when used as a coefficient.
  bool needs_parens() const;

 private:
  uint16_t q_;
  uint8_t v_;
};

}  // namespace dh
