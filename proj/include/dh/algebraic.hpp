#pragma once

#include <memory>
#include <string>
#include <vector>

#include "dh/newton.hpp"
#include "dh/polyx.hpp"
#include "dh/rational.hpp"

namespace dh {

class Ambient;
class AlgebraicElement;
using AmbientPtr = std::shared_ptr<const Ambient>;

// Polynomial in X with coefficients in A (integral, denominator-free form of
// a minimal polynomial).  Canonical: primitive (content 1) with the leading
// coefficient monic in A.
struct IntPolyX {
  unsigned q = 0;
  std::vector<PolyA> c;  // low to high, no trailing zero coefficients
  int degree() const { return static_cast<int>(c.size()) - 1; }
  const PolyA& coeff(unsigned i) const;
  PolyK to_polyk() const;
  std::string to_string(const std::string& var = "X") const;
  bool operator==(const IntPolyX&) const = default;
};

// A finite extension M = k[x]/(f) with f certified irreducible over k.
// Immutable and shared by the elements living in it.
class Ambient : public std::enable_shared_from_this<Ambient> {
 public:
  enum class Certificate { kRationalField, kLinear, kNoRationalRoot, kEisenstein };

  // M = k itself (degree 1).
  static AmbientPtr rational(unsigned q);
  // General constructor: certifies irreducibility (degree 1 trivially,
  // degrees 2-3 by the exact rational-root test, degree >= 4 only when an
  // Eisenstein prime is found among the primes of the constant coefficient).
  static AmbientPtr create(const PolyK& f, const std::string& generator_name = "x");
  // Constructor with an explicit Eisenstein certificate at P (validated).
  static AmbientPtr eisenstein(const PolyK& f, const PolyA& P, const std::string& generator_name);

  unsigned q() const { return q_; }
  unsigned degree() const { return static_cast<unsigned>(modulus_.degree()); }
  const PolyK& modulus() const { return modulus_; }  // monic over k
  const IntPolyX& primitive_modulus() const { return primitive_; }
  Certificate certificate() const { return cert_; }
  const PolyA& eisenstein_prime() const;  // kEisenstein only
  const std::string& generator_name() const { return gen_name_; }

  AlgebraicElement zero() const;
  AlgebraicElement one() const;
  AlgebraicElement generator() const;  // the class of X (for k: the element 0)
  AlgebraicElement from_k(const RatFunc& c) const;
  AlgebraicElement element(std::vector<RatFunc> coords) const;

  bool same_as(const Ambient& o) const;

 private:
  Ambient(unsigned q, PolyK modulus, IntPolyX primitive, Certificate cert, PolyA eis,
          std::string gen_name);
  unsigned q_;
  PolyK modulus_;
  IntPolyX primitive_;
  Certificate cert_;
  PolyA eis_prime_;
  std::string gen_name_;
};

// An element of an ambient extension, stored by its coordinates in the power
// basis 1, x, ..., x^(D-1).
class AlgebraicElement {
 public:
  AlgebraicElement(AmbientPtr ambient, std::vector<RatFunc> coords);

  const AmbientPtr& ambient() const { return amb_; }
  const std::vector<RatFunc>& coords() const { return co_; }
  unsigned q() const { return amb_->q(); }
  bool is_zero() const;
  bool is_one() const;
  // The element as a member of k; rejects elements with nonzero higher
  // coordinates.
  RatFunc as_k() const;
  bool in_k() const;

  AlgebraicElement operator+(const AlgebraicElement&) const;
  AlgebraicElement operator-(const AlgebraicElement&) const;
  AlgebraicElement operator*(const AlgebraicElement&) const;
  AlgebraicElement operator/(const AlgebraicElement&) const;
  AlgebraicElement operator-() const;
  AlgebraicElement inverse() const;
  AlgebraicElement pow(long e) const;
  AlgebraicElement frob() const { return pow(static_cast<long>(q())); }

  bool operator==(const AlgebraicElement& o) const;
  bool operator!=(const AlgebraicElement& o) const { return !(*this == o); }
  // canonical order on coordinates, for deterministic output
  bool operator<(const AlgebraicElement& o) const;

  AlgebraicElement zero_like() const { return amb_->zero(); }
  AlgebraicElement one_like() const { return amb_->one(); }

  // Minimal polynomial over k, denominator-cleared, content 1, leading
  // coefficient monic in A.
  IntPolyX min_poly() const;
  PolyK min_poly_monic() const;

  std::string to_string() const;

 private:
  AmbientPtr amb_;
  std::vector<RatFunc> co_;
};

// Valuations of the conjugates of x over k at extensions of v, ascending with
// multiplicity (Newton polygon of the minimal polynomial; size equals
// deg min_poly).  Rejects x = 0.
std::vector<Rat> conjugate_valuations(const AlgebraicElement& x, const Place& v);

}  // namespace dh
