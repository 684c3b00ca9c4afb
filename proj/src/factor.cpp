#include "dh/factor.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <random>
#include <stdexcept>

namespace dh {

namespace {

PolyA poly_one(unsigned q) { return PolyA(q, {1}); }

// p-th root of a polynomial all of whose exponents are multiples of p
// (coefficient p-th roots exist; x -> x^(q/p) inverts Frobenius on F_q).
PolyA pth_root(const PolyA& a) {
  unsigned q = a.q();
  unsigned p = fq_char(q);
  unsigned root_exp = 1;
  for (unsigned i = 1; i < fq_degree(q); ++i) root_exp *= p;  // p^(s-1)
  std::vector<uint8_t> out;
  for (int i = 0; i <= a.degree(); i += static_cast<int>(p))
    out.push_back(static_cast<uint8_t>(a.coeff(static_cast<unsigned>(i)).pow(root_exp).value()));
  return PolyA(q, std::move(out));
}

// Squarefree decomposition in characteristic p: returns (g, multiplicity)
// pairs with g squarefree monic, multiplicities distinct.
std::vector<std::pair<PolyA, unsigned>> squarefree_decompose(PolyA f, unsigned mult = 1) {
  std::vector<std::pair<PolyA, unsigned>> out;
  if (f.degree() <= 0) return out;
  f = f.monic();
  PolyA d = f.derivative();
  unsigned q = f.q();
  unsigned p = fq_char(q);
  if (d.is_zero()) {
    // f = g(T^p)
    for (auto& [g, m] : squarefree_decompose(pth_root(f), mult * p)) out.emplace_back(g, m);
    return out;
  }
  PolyA c = poly_gcd(f, d);
  PolyA w = f / c;  // product of squarefree part factors with multiplicity not divisible by p
  unsigned i = 1;
  while (!w.is_one()) {
    PolyA y = poly_gcd(w, c);
    PolyA fac = w / y;
    if (fac.degree() > 0) out.emplace_back(fac.monic(), i * mult);
    w = y;
    c = c / y;
    ++i;
  }
  if (!c.is_one()) {
    // remaining part is a p-th power
    for (auto& [g, m] : squarefree_decompose(pth_root(c), mult * p)) out.emplace_back(g, m);
  }
  return out;
}

// X^(q^k) mod f via iterated powmod of T... (base is the class of T).
PolyA frobenius_power(const PolyA& f, unsigned k) {
  unsigned q = f.q();
  PolyA t = PolyA::T(q) % f;
  PolyA r = t;
  mpz_class e = q;
  for (unsigned i = 0; i < k; ++i) r = poly_powmod(r, e, f);
  return r;
}

// Random polynomial of degree < d with coefficients drawn from the rng.
PolyA random_poly(unsigned q, unsigned d, std::mt19937_64& rng) {
  std::vector<uint8_t> c(d);
  for (auto& v : c) v = static_cast<uint8_t>(rng() % q);
  return PolyA(q, std::move(c));
}

// Split a product of distinct monic irreducibles, all of degree d.
void equal_degree_split(const PolyA& f, unsigned d, std::mt19937_64& rng, std::vector<PolyA>& out) {
  unsigned q = f.q();
  if (f.degree() == static_cast<int>(d)) {
    out.push_back(f.monic());
    return;
  }
  unsigned p = fq_char(q);
  PolyA g(q);
  while (true) {
    PolyA h = random_poly(q, static_cast<unsigned>(f.degree()), rng);
    if (h.degree() < 1) continue;
    if (p != 2) {
      // h^((q^d - 1)/2) - 1
      mpz_class e;
      mpz_ui_pow_ui(e.get_mpz_t(), q, d);
      e = (e - 1) / 2;
      PolyA t = poly_powmod(h, e, f) - poly_one(q);
      g = poly_gcd(t, f);
    } else {
      // trace map over F_2: h + h^2 + h^4 + ... (s*d summands for q = 2^s)
      unsigned rounds = fq_degree(q) * d;
      PolyA t(q), acc = h % f;
      for (unsigned i = 0; i < rounds; ++i) {
        t = t + acc;
        acc = (acc * acc) % f;
      }
      g = poly_gcd(t, f);
    }
    if (g.degree() > 0 && g.degree() < f.degree()) break;
  }
  equal_degree_split(g, d, rng, out);
  equal_degree_split(f / g, d, rng, out);
}

std::map<std::pair<unsigned, unsigned>, std::vector<PolyA>>& table_cache() {
  static std::map<std::pair<unsigned, unsigned>, std::vector<PolyA>> c;
  return c;
}

std::vector<PolyA> irreducibles_of_degree(unsigned q, unsigned n) {
  // Try the disk cache first.
  const char* dir = std::getenv("DH_CACHE_DIR");
  std::string path;
  if (dir && *dir) {
    path = std::string(dir) + "/irred_q" + std::to_string(q) + "_d" + std::to_string(n) + ".txt";
    std::ifstream in(path);
    if (in) {
      std::vector<PolyA> out;
      std::string line;
      while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<uint8_t> digits;
        for (char ch : line) digits.push_back(static_cast<uint8_t>(ch - '0'));
        out.emplace_back(q, std::move(digits));
      }
      if (out.size() == count_monic_irreducibles(q, n)) return out;
    }
  }
  std::vector<PolyA> out;
  for (const PolyA& f : monic_polys_of_degree(q, n))
    if (is_irreducible(f)) out.push_back(f);
  if (out.size() != count_monic_irreducibles(q, n))
    throw std::logic_error("irreducible table size disagrees with the counting formula");
  if (!path.empty()) {
    std::ofstream outf(path);
    if (outf) {
      for (const PolyA& f : out) {
        std::string line;
        for (int i = 0; i <= f.degree(); ++i)
          line += static_cast<char>('0' + f.coeff(static_cast<unsigned>(i)).value());
        outf << line << "\n";
      }
    }
  }
  return out;
}

}  // namespace

PolyA poly_powmod(const PolyA& base, const mpz_class& e, const PolyA& m) {
  if (e < 0) throw std::domain_error("poly_powmod: negative exponent");
  PolyA r = poly_one(base.q()) % m;
  PolyA b = base % m;
  mpz_class k = e;
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) r = (r * b) % m;
    b = (b * b) % m;
    k >>= 1;
  }
  return r;
}

bool is_irreducible(const PolyA& a) {
  int n = a.degree();
  if (n <= 0) return false;
  if (n == 1) return true;
  unsigned q = a.q();
  PolyA f = a.monic();
  // T^(q^n) = T mod f, and gcd(T^(q^(n/r)) - T, f) = 1 for prime r | n.
  PolyA t = PolyA::T(q) % f;
  PolyA x = frobenius_power(f, static_cast<unsigned>(n));
  if (!(x == t)) return false;
  for (unsigned r = 2; r <= static_cast<unsigned>(n); ++r) {
    if (static_cast<unsigned>(n) % r != 0) continue;
    bool prime = true;
    for (unsigned s = 2; s * s <= r; ++s)
      if (r % s == 0) { prime = false; break; }
    if (!prime) continue;
    PolyA y = frobenius_power(f, static_cast<unsigned>(n) / r);
    if (poly_gcd(y - t, f).degree() != 0) return false;
  }
  return true;
}

Factorization factorize(const PolyA& a, uint64_t seed) {
  if (a.is_zero()) throw std::domain_error("factorize: zero polynomial");
  unsigned q = a.q();
  Factorization out{a.leading_coeff(), {}};
  if (a.degree() == 0) return out;
  std::mt19937_64 rng(seed);
  for (auto& [g, mult] : squarefree_decompose(a.monic())) {
    // distinct-degree on the squarefree factor
    PolyA rest = g;
    PolyA h = PolyA::T(q) % rest;  // T^(q^d) mod rest, updated as d grows
    unsigned d = 0;
    while (rest.degree() > 0 && rest.degree() > 2 * static_cast<int>(d)) {
      ++d;
      h = poly_powmod(h, mpz_class(q), rest);
      PolyA t = h - (PolyA::T(q) % rest);
      PolyA factor_d = t.is_zero() ? rest : poly_gcd(t, rest);
      if (factor_d.degree() > 0) {
        std::vector<PolyA> split;
        equal_degree_split(factor_d, d, rng, split);
        for (PolyA& p : split) out.factors.emplace_back(std::move(p), mult);
        rest = rest / factor_d;
        h = h % rest;
      }
    }
    if (rest.degree() > 0) out.factors.emplace_back(rest.monic(), mult);
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

uint64_t count_monic_irreducibles(unsigned q, unsigned n) {
  if (n == 0) throw std::domain_error("count_monic_irreducibles: degree must be positive");
  auto mobius = [](unsigned m) -> int {
    int mu = 1;
    for (unsigned p = 2; p * p <= m; ++p) {
      if (m % p == 0) {
        m /= p;
        if (m % p == 0) return 0;
        mu = -mu;
      }
    }
    if (m > 1) mu = -mu;
    return mu;
  };
  long long total = 0;
  for (unsigned d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    uint64_t qp = 1;
    for (unsigned i = 0; i < n / d; ++i) qp *= q;
    total += static_cast<long long>(mobius(d)) * static_cast<long long>(qp);
  }
  return static_cast<uint64_t>(total / n);
}

std::vector<PolyA> irreducibles_up_to(unsigned q, unsigned maxdeg) {
  std::vector<PolyA> out;
  for (unsigned n = 1; n <= maxdeg; ++n) {
    auto key = std::make_pair(q, n);
    auto it = table_cache().find(key);
    if (it == table_cache().end())
      it = table_cache().emplace(key, irreducibles_of_degree(q, n)).first;
    out.insert(out.end(), it->second.begin(), it->second.end());
  }
  return out;
}

std::vector<PolyA> monic_divisors(const PolyA& a, uint64_t seed) {
  Factorization f = factorize(a, seed);
  std::vector<PolyA> out{poly_one(a.q())};
  for (const auto& [p, e] : f.factors) {
    if (out.size() * (e + 1) > (1u << 16)) throw std::length_error("monic_divisors: too many divisors");
    std::vector<PolyA> next;
    next.reserve(out.size() * (e + 1));
    for (const PolyA& d : out) {
      PolyA cur = d;
      next.push_back(cur);
      for (unsigned i = 1; i <= e; ++i) {
        cur = cur * p;
        next.push_back(cur);
      }
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace dh
