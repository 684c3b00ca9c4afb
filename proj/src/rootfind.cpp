#include "dh/rootfind.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "dh/factor.hpp"
#include "dh/fq.hpp"

namespace dh {

namespace {

constexpr unsigned long kResidueBudget = 1ul << 14;  // residue fields we enumerate
constexpr unsigned kPrecisionCap = 512;              // max deg_T of the working modulus u^N
constexpr unsigned long kTupleBudget = 1ul << 20;

PolyA inv_mod(const PolyA& a, const PolyA& m) {
  PolyXGcd xg = poly_xgcd(a % m, m);
  if (xg.g.degree() != 0) throw std::domain_error("non-unit in u-adic residue ring");
  return xg.s % m;
}

// ---- the residue field A/u (used for squarefreeness checks and residue roots) ----

struct ResCtx {
  PolyA u;
};

class ResElem {
 public:
  ResElem(const ResCtx* ctx, PolyA v) : ctx_(ctx), v_(std::move(v) % ctx->u) {}
  const PolyA& value() const { return v_; }
  unsigned q() const { return ctx_->u.q(); }
  bool is_zero() const { return v_.is_zero(); }
  ResElem zero_like() const { return ResElem(ctx_, PolyA(q())); }
  ResElem one_like() const { return ResElem(ctx_, PolyA(q(), {1})); }
  ResElem operator+(const ResElem& o) const { return ResElem(ctx_, v_ + o.v_); }
  ResElem operator-(const ResElem& o) const { return ResElem(ctx_, v_ - o.v_); }
  ResElem operator-() const { return ResElem(ctx_, -v_); }
  ResElem operator*(const ResElem& o) const { return ResElem(ctx_, v_ * o.v_); }
  ResElem inverse() const { return ResElem(ctx_, inv_mod(v_, ctx_->u)); }
  ResElem operator/(const ResElem& o) const { return *this * o.inverse(); }
  bool operator==(const ResElem& o) const { return v_ == o.v_; }

 private:
  const ResCtx* ctx_;
  PolyA v_;
};

using ResPoly = Poly<ResElem>;

ResPoly to_res(const std::vector<PolyA>& coeffs, const ResCtx& ctx) {
  std::vector<ResElem> c;
  c.reserve(coeffs.size());
  for (const PolyA& a : coeffs) c.emplace_back(&ctx, a);
  return ResPoly(std::move(c), ResElem(&ctx, PolyA(ctx.u.q())));
}

bool squarefree_mod(const ResPoly& f, unsigned p) {
  if (f.is_zero()) return false;
  ResPoly d = f.derivative(p);
  if (d.is_zero()) return false;
  return poly_gcd(f, d).degree() == 0;
}

std::vector<PolyA> residue_roots(const ResPoly& f, const ResCtx& ctx) {
  std::vector<PolyA> roots;
  for (const PolyA& cand : polys_of_degree_below(ctx.u.q(), static_cast<unsigned>(ctx.u.degree())))
    if (f.eval(ResElem(&ctx, cand)).is_zero()) roots.push_back(cand);
  return roots;
}

// ---- u-adic lifting ----

PolyA eval_mod(const std::vector<PolyA>& h, const PolyA& x, const PolyA& m) {
  PolyA acc(m.q());
  for (size_t i = h.size(); i-- > 0;) acc = (acc * x + h[i]) % m;
  return acc;
}

std::vector<PolyA> formal_derivative(const std::vector<PolyA>& h, unsigned p) {
  std::vector<PolyA> d;
  for (size_t i = 1; i < h.size(); ++i) {
    unsigned m = static_cast<unsigned>(i % p);
    PolyA acc(h[i].q());
    for (unsigned j = 0; j < m; ++j) acc = acc + h[i];
    d.push_back(acc);
  }
  return d;
}

// Hensel: a simple root r of h mod u climbs to a root mod u^N.
PolyA newton_lift(const std::vector<PolyA>& h, PolyA r, const PolyA& u, unsigned N) {
  std::vector<PolyA> hp = formal_derivative(h, fq_char(u.q()));
  unsigned prec = 1;
  while (prec < N) {
    prec = std::min(2 * prec, N);
    PolyA m = u.pow(prec);
    PolyA hv = eval_mod(h, r, m);
    PolyA hd = eval_mod(hp, r, m);
    r = (r - hv * inv_mod(hd, m)) % m;
  }
  return r;
}

// image of x in A/m under theta -> th (m = u^N; denominators must be units)
PolyA embed(const AlgebraicElement& x, const PolyA& th, const PolyA& m) {
  PolyA acc(m.q());
  PolyA pw(m.q(), {1});
  for (const RatFunc& c : x.coords()) {
    if (!c.is_zero()) {
      PolyA cv = ((c.num() % m) * inv_mod(c.den(), m)) % m;
      acc = (acc + cv * pw) % m;
    }
    pw = (pw * th) % m;
  }
  return acc;
}

// Gaussian elimination over A/u^N; the pivots exist because the Vandermonde
// determinant of distinct-mod-u values is a unit.
std::vector<PolyA> solve_mod(std::vector<std::vector<PolyA>> mat, std::vector<PolyA> rhs,
                             const PolyA& u, const PolyA& uN) {
  size_t n = rhs.size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = n;
    for (size_t r = col; r < n; ++r)
      if (!(mat[r][col] % u).is_zero()) {
        piv = r;
        break;
      }
    if (piv == n) throw std::logic_error("u-adic linear system lost its unit pivot");
    std::swap(mat[piv], mat[col]);
    std::swap(rhs[piv], rhs[col]);
    PolyA inv = inv_mod(mat[col][col], uN);
    for (size_t c = col; c < n; ++c) mat[col][c] = (mat[col][c] * inv) % uN;
    rhs[col] = (rhs[col] * inv) % uN;
    for (size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      PolyA f = mat[r][col];
      if (f.is_zero()) continue;
      for (size_t c = col; c < n; ++c) mat[r][c] = (mat[r][c] - f * mat[col][c]) % uN;
      rhs[r] = (rhs[r] - f * rhs[col]) % uN;
    }
  }
  return rhs;
}

// Pade-style reconstruction: w mod m -> n/d with deg n, deg d <= (deg m - 1)/2.
std::optional<RatFunc> rat_reconstruct(const PolyA& w, const PolyA& m) {
  unsigned q = m.q();
  PolyA r0 = m, r1 = w % m;
  if (r1.is_zero()) return RatFunc(q);
  int bound = (m.degree() - 1) / 2;
  PolyA t0(q), t1(q, {1});
  while (!r1.is_zero() && r1.degree() > bound) {
    auto dm = r0.divmod(r1);
    PolyA r2 = dm.rem;
    PolyA t2 = t0 - dm.quo * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (t1.is_zero() || t1.degree() > bound || r1.is_zero()) return std::nullopt;
  return RatFunc(r1, t1);
}

struct UChoice {
  PolyA u;
  std::vector<PolyA> theta_bar;               // the D roots of the defining polynomial mod u
  std::vector<std::vector<PolyA>> rho_bar;    // residue roots of the embedded g, per embedding
};

}  // namespace

PolyM lift_to_ambient(const PolyK& g, const AmbientPtr& M) {
  std::vector<AlgebraicElement> c;
  c.reserve(static_cast<size_t>(g.degree() + 1));
  for (int i = 0; i <= g.degree(); ++i) c.push_back(M->from_k(g.coeff(static_cast<unsigned>(i))));
  return PolyM(std::move(c), M->zero());
}

std::vector<AlgebraicElement> roots_in_ambient(const PolyK& g, const AmbientPtr& M) {
  return roots_in_ambient(lift_to_ambient(g, M), M);
}

std::vector<AlgebraicElement> roots_in_ambient(const PolyM& g, const AmbientPtr& M) {
  if (g.is_zero()) throw std::domain_error("root search for the zero polynomial");
  if (g.degree() == 0) return {};
  unsigned q = M->q();
  unsigned p = fq_char(q);
  unsigned D = M->degree();
  if (M->modulus().derivative(p).is_zero())
    throw std::invalid_argument("root search needs a separable defining polynomial");
  PolyM gp = g.derivative(p);
  if (gp.is_zero())
    throw std::invalid_argument("root search needs a polynomial outside M[X^p]");
  // same root set, all roots simple; inseparable factors have no roots in M
  PolyM gred = g / poly_gcd(g, gp);

  const std::vector<PolyA>& F = M->primitive_modulus().c;

  std::vector<PolyA> bad_dens;
  for (int i = 0; i <= gred.degree(); ++i)
    for (const RatFunc& c : gred.coeff(static_cast<unsigned>(i)).coords())
      if (!c.is_zero() && c.den().degree() > 0) bad_dens.push_back(c.den());

  // ---- pick a monic irreducible u with split defining polynomial ----
  std::optional<UChoice> choice;
  unsigned long size = q;
  for (unsigned e = 1; size <= kResidueBudget && !choice; ++e, size *= q) {
    for (const PolyA& u : irreducibles_up_to(q, e)) {
      if (u.degree() != static_cast<int>(e)) continue;
      if ((F.back() % u).is_zero()) continue;
      bool ok = true;
      for (const PolyA& d : bad_dens)
        if ((d % u).is_zero()) {
          ok = false;
          break;
        }
      if (!ok) continue;
      ResCtx ctx{u};
      ResPoly Fbar = to_res(F, ctx);
      std::vector<PolyA> th = residue_roots(Fbar, ctx);
      if (th.size() != D) continue;
      // per embedding, the reduced image of gred must be squarefree
      std::vector<std::vector<PolyA>> rho;
      for (unsigned j = 0; j < D && ok; ++j) {
        std::vector<PolyA> gj;
        for (int i = 0; i <= gred.degree(); ++i)
          gj.push_back(embed(gred.coeff(static_cast<unsigned>(i)), th[j], u));
        ResPoly gbar = to_res(gj, ctx);
        if (!squarefree_mod(gbar, p)) {
          ok = false;
          break;
        }
        rho.push_back(residue_roots(gbar, ctx));
      }
      if (!ok) continue;
      choice = UChoice{u, std::move(th), std::move(rho)};
      break;
    }
  }
  if (!choice)
    throw std::length_error("no usable reduction prime within the residue field budget");

  const PolyA& u = choice->u;
  unsigned e = static_cast<unsigned>(u.degree());
  unsigned long tuples = 1;
  for (const auto& r : choice->rho_bar) {
    tuples *= std::max<size_t>(r.size(), 1);
    if (tuples > kTupleBudget) throw std::length_error("root candidate tuple budget exceeded");
  }

  // ---- precision ladder: stop when the verified root set is stable ----
  std::vector<AlgebraicElement> prev;
  bool have_prev = false;
  for (unsigned N = 4; N * e <= kPrecisionCap; N *= 2) {
    PolyA uN = u.pow(N);
    std::vector<PolyA> theta;
    std::vector<std::vector<PolyA>> rho;
    std::vector<std::vector<PolyA>> vrow;
    for (unsigned j = 0; j < D; ++j) {
      theta.push_back(newton_lift(F, choice->theta_bar[j], u, N));
      std::vector<PolyA> gj;
      for (int i = 0; i <= gred.degree(); ++i)
        gj.push_back(embed(gred.coeff(static_cast<unsigned>(i)), theta[j], uN));
      std::vector<PolyA> lifted;
      for (const PolyA& r0 : choice->rho_bar[j]) lifted.push_back(newton_lift(gj, r0, u, N));
      rho.push_back(std::move(lifted));
      std::vector<PolyA> row;
      PolyA pw(q, {1});
      for (unsigned t = 0; t < D; ++t) {
        row.push_back(pw);
        pw = (pw * theta[j]) % uN;
      }
      vrow.push_back(std::move(row));
    }

    std::vector<AlgebraicElement> found;
    bool any_empty = false;
    for (const auto& r : rho)
      if (r.empty()) any_empty = true;
    if (!any_empty) {
      std::vector<size_t> idx(D, 0);
      while (true) {
        std::vector<PolyA> rhs;
        for (unsigned j = 0; j < D; ++j) rhs.push_back(rho[j][idx[j]]);
        std::vector<PolyA> coords_mod = solve_mod(vrow, rhs, u, uN);
        std::vector<RatFunc> coords;
        bool good = true;
        for (const PolyA& cm : coords_mod) {
          std::optional<RatFunc> c = rat_reconstruct(cm, uN);
          if (!c) {
            good = false;
            break;
          }
          coords.push_back(*c);
        }
        if (good) {
          AlgebraicElement x = M->element(std::move(coords));
          if (g.eval(x).is_zero()) found.push_back(std::move(x));
        }
        unsigned j = 0;
        while (j < D && ++idx[j] == rho[j].size()) idx[j++] = 0;
        if (j == D) break;
      }
    }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    if (have_prev && found == prev) return found;
    prev = std::move(found);
    have_prev = true;
  }
  throw std::length_error("root reconstruction did not stabilize within the precision budget");
}

}  // namespace dh
