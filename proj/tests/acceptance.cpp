// Acceptance suite: ten end-to-end criteria, one line of output each.
// Exit status 0 iff every criterion passes within its time budget.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dh/checks.hpp"
#include "dh/factor.hpp"
#include "dh/heights.hpp"

using namespace dh;

namespace {

RatFunc random_ratfunc(unsigned q, std::mt19937_64& rng) {
  auto rand_poly = [&](int maxdeg) {
    std::vector<uint8_t> c(static_cast<size_t>(rng() % (maxdeg + 1)) + 1);
    for (auto& v : c) v = static_cast<uint8_t>(rng() % q);
    return PolyA(q, std::move(c));
  };
  PolyA den = rand_poly(2);
  while (den.is_zero()) den = rand_poly(2);
  return RatFunc(rand_poly(3), den);
}

AlgebraicElement random_element(const AmbientPtr& amb, std::mt19937_64& rng) {
  std::vector<RatFunc> co;
  for (unsigned i = 0; i < amb->degree(); ++i) co.push_back(random_ratfunc(amb->q(), rng));
  return amb->element(std::move(co));
}

AlgebraicElement random_nonzero(const AmbientPtr& amb, std::mt19937_64& rng) {
  AlgebraicElement x = random_element(amb, rng);
  while (x.is_zero()) x = random_element(amb, rng);
  return x;
}

AmbientPtr quadratic(unsigned q) {
  RatFunc t = RatFunc::T(q), one = RatFunc::one(q), z(q);
  return Ambient::create(PolyK({t, one, one}, z), "s");  // X^2 + X + T
}

AmbientPtr cubic(unsigned q) {
  if (q == 2) return cyclotomic_field(PolyA(q, {1, 1, 1})).field;
  RatFunc t = RatFunc::T(q), one = RatFunc::one(q), z(q);
  return Ambient::create(PolyK({-t, -one, z, one}, z), "s");  // X^3 - X - T
}

AlgebraicElement embed(const AmbientPtr& amb, const RatFunc& c) {
  std::vector<RatFunc> co(amb->degree(), RatFunc(amb->q()));
  co[0] = c;
  return amb->element(std::move(co));
}

std::vector<PolyA> irreducibles(unsigned q, unsigned d) {
  std::vector<PolyA> out;
  for (PolyA& p : monic_polys_of_degree(q, d))
    if (is_irreducible(p)) out.push_back(std::move(p));
  return out;
}

// The full P-division kernel as the residue span of the division point.
// Exhibiting q^{deg P} distinct roots of the degree-q^{deg P} separable
// division polynomial proves the set is the whole kernel.
std::vector<AlgebraicElement> division_kernel(const DrinfeldModule& c, const CyclotomicField& kP) {
  std::set<AlgebraicElement> ker;
  for (const PolyA& a : polys_of_degree_below(c.q(), static_cast<unsigned>(kP.P.degree())))
    ker.insert(c.act(a, kP.lambda));
  size_t expect = 1;
  for (int i = 0; i < kP.P.degree(); ++i) expect *= c.q();
  if (ker.size() != expect) throw std::runtime_error("division kernel span is too small");
  for (const AlgebraicElement& x : ker)
    if (!c.act(kP.P, x).is_zero()) throw std::runtime_error("span element not killed by P");
  return {ker.begin(), ker.end()};
}

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& msg) {
  if (!ok) throw Failure(msg);
}

// ------------------------------------------------------------ criterion 1

std::string frobenius_congruence() {
  size_t count = 0;
  for (unsigned q : {2u, 3u})
    for (unsigned d = 1; d <= 4; ++d)
      for (const PolyA& P : irreducibles(q, d)) {
        ++count;
        require(carlitz_frobenius_congruence(P), "congruence fails at " + P.to_string());
      }
  return std::to_string(count) + " irreducibles, exhaustive q=2,3 deg<=4";
}

// ------------------------------------------------------------ criterion 2

std::string weil_oracle() {
  std::mt19937_64 rng(20260823);
  size_t rational = 0, extension = 0;
  for (unsigned q : {2u, 3u}) {
    AmbientPtr k = Ambient::rational(q);
    auto rand_poly8 = [&] {
      std::vector<uint8_t> c(static_cast<size_t>(rng() % 9) + 1);
      for (auto& v : c) v = static_cast<uint8_t>(rng() % q);
      return PolyA(q, std::move(c));
    };
    while (rational < 100 * (q == 2 ? 1 : 2)) {
      PolyA a = rand_poly8(), b = rand_poly8();
      if (a.is_zero() || b.is_zero()) continue;
      PolyA g = poly_gcd(a, b);
      a = a / g;
      b = b / g;
      Rat h = weil_height(k->from_k(RatFunc(a, b)));
      require(h == Rat(std::max(a.degree(), b.degree())),
              "rational height mismatch at (" + a.to_string() + ")/(" + b.to_string() + ")");
      ++rational;
    }
    for (const AmbientPtr& amb : {quadratic(q), cubic(q)})
      for (int i = 0; i < 5; ++i) {
        AlgebraicElement x = random_nonzero(amb, rng);
        require(weil_height(x) == weil_height_place_sum(x),
                "place-sum oracle mismatch at " + x.to_string());
        ++extension;
      }
  }
  return std::to_string(rational) + " rational pairs vs max-degree, " +
         std::to_string(extension) + " extension elements vs place sum";
}

// ------------------------------------------------------------ criterion 3

std::string height_axioms() {
  std::mt19937_64 rng(20260824);
  size_t pairs = 0;
  for (unsigned q : {2u, 3u})
    for (const AmbientPtr& amb : {Ambient::rational(q), quadratic(q)})
      for (int i = 0; i < 25; ++i) {
        AlgebraicElement x = random_element(amb, rng), y = random_element(amb, rng);
        Rat hx = weil_height(x), hy = weil_height(y);
        require(weil_height(x + y) <= hx + hy, "h(x+y) > h(x)+h(y)");
        require(weil_height(x * y) <= hx + hy, "h(xy) > h(x)+h(y)");
        for (long n = 1; n <= 3; ++n) {
          require(weil_height(x.pow(n)) == n * hx, "h(x^n) != n h(x)");
          if (!x.is_zero())
            require(weil_height(x.pow(-n)) == n * hx, "h(x^-n) != n h(x)");
        }
        ++pairs;
      }
  return std::to_string(pairs) + " pairs, powers n=-3..3 exact, sub-additivity exact";
}

// ------------------------------------------------------------ criterion 4

std::string functional_equation() {
  std::mt19937_64 rng(20260825);
  Rat tol(1, 8);
  size_t cases = 0;
  auto random_a = [&](unsigned q, unsigned maxdeg) {
    PolyA a(q, {0});
    while (a.is_zero()) {
      std::vector<uint8_t> co(static_cast<size_t>(rng() % (maxdeg + 1)) + 1);
      for (auto& v : co) v = static_cast<uint8_t>(rng() % q);
      a = PolyA(q, std::move(co));
    }
    return a;
  };
  // exact rational orbit arithmetic grows like q^(deg a * steps), so the
  // q=3 extension samples keep small coordinates and deg a = 1
  auto small_coord = [&](unsigned q) {
    std::vector<uint8_t> c(static_cast<size_t>(rng() % 2) + 1);
    for (auto& v : c) v = static_cast<uint8_t>(rng() % q);
    return PolyA(q, std::move(c));
  };
  for (unsigned q : {2u, 3u}) {
    DrinfeldModule c = DrinfeldModule::carlitz(q);
    AmbientPtr k = Ambient::rational(q);
    AmbientPtr M = quadratic(q);
    for (int i = 0; i < 15; ++i) {
      AlgebraicElement x = k->from_k(random_ratfunc(q, rng));
      PolyA a = random_a(q, 2);
      if (i % 3 == 2) {
        if (q == 2) {
          x = random_element(M, rng);
        } else {
          x = M->element({RatFunc(small_coord(q)), RatFunc(small_coord(q))});
          a = random_a(q, 1);
        }
      }
      IntervalCheck r = check_functional_equation(c, x, a, tol);
      require(r.pass, "interval mismatch at x=" + x.to_string() + ", a=" + a.to_string());
      ++cases;
    }
  }
  return std::to_string(cases) + " random (x,a) with deg a<=2, tol 1/8, q=2,3";
}

// ------------------------------------------------------------ criterion 5

std::string torsion_certificates() {
  std::mt19937_64 rng(20260826);
  Rat tol(1, 8);
  size_t points = 0, translations = 0;
  for (unsigned q : {2u, 3u}) {
    DrinfeldModule c = DrinfeldModule::carlitz(q);
    for (unsigned d = 1; d <= 2; ++d)
      for (const PolyA& P : irreducibles(q, d)) {
        CyclotomicField kP = cyclotomic_field(P);
        for (const AlgebraicElement& x : division_kernel(c, kP)) {
          TorsionDecision td = is_torsion(c, x);
          require(td.torsion, "kernel point not certified torsion: " + x.to_string());
          CanonicalHeight ch = canonical_height(c, x, tol);
          require(ch.lo == 0 && ch.hi >= 0 && ch.hi <= tol,
                  "torsion interval misses 0 at " + x.to_string());
          ++points;
        }
      }
  }
  // translation by torsion points leaves the canonical height unchanged
  DrinfeldModule c2 = DrinfeldModule::carlitz(2);
  CyclotomicField kP = cyclotomic_field(PolyA(2, {1, 1, 1}));
  std::vector<AlgebraicElement> ker = division_kernel(c2, kP);
  for (int i = 0; i < 10; ++i) {
    AlgebraicElement x = random_element(kP.field, rng);
    const AlgebraicElement& t = ker[1 + static_cast<size_t>(i) % (ker.size() - 1)];
    TorsionPoint tp{t, torsion_annihilator(c2, t, kP.P)};
    IntervalCheck r = check_translation_invariance(c2, x, tp, tol);
    require(r.pass, "translation by " + t.to_string() + " moved the height interval");
    ++translations;
  }
  return std::to_string(points) + " kernel points certified with interval at 0, " +
         std::to_string(translations) + " translation checks";
}

// ------------------------------------------------------------ criterion 6

std::string isogeny_relation() {
  unsigned q = 2;
  std::mt19937_64 rng(20260827);
  RatFunc t = RatFunc::T(q), z(q);
  DrinfeldModule c = DrinfeldModule::carlitz(q);
  AmbientPtr k = Ambient::rational(q);
  Rat tol(1, 8);
  size_t cases = 0;

  for (const PolyA& a :
       {PolyA::T(q), PolyA(q, {1, 1}), PolyA(q, {1, 1, 1}), PolyA(q, {0, 0, 1}), PolyA(q, {1, 0, 1})}) {
    AlgebraicElement x = k->from_k(random_ratfunc(q, rng));
    IntervalCheck r = check_isogeny_relation(c, c.phi_T(), c.action(a), x, tol);
    require(r.pass, "self-isogeny fails for a=" + a.to_string());
    ++cases;
  }
  for (const RatFunc& u : {t, t + RatFunc::one(q), t * t, t.inverse(), t * t + RatFunc::one(q)}) {
    // conjugating the Carlitz module by the scalar u twists the tau
    // coefficient by u^(1-q)
    OreK target({t, u.pow(1 - static_cast<long>(q))}, z);
    AlgebraicElement x = k->from_k(random_ratfunc(q, rng));
    IntervalCheck r = check_isogeny_relation(c, target, OreK::constant(u), x, tol);
    require(r.pass, "scalar conjugation fails for u=" + u.to_string());
    ++cases;
  }
  return std::to_string(cases) + " samples: 5 self-isogeny, 5 scalar conjugation";
}

// ------------------------------------------------------------ criterion 7

std::string pigeonhole_witnesses() {
  unsigned q = 2;
  DrinfeldModule c = DrinfeldModule::carlitz(q);
  PolyA m = PolyA::T(q);
  size_t groups = 0, witnesses = 0;
  bool error_path = false;
  for (unsigned e : {4u, 5u, 6u})
    for (unsigned B : {2u, 3u}) {
      UnitGroup G = unit_group(m, e);
      std::vector<Subgroup> subs = subgroups_of_unit_group(G, B);
      require(subgroups_by_closure(G, B) == subs, "closure oracle disagrees");
      ++groups;
      if (e == 4 && B == 3) {
        // q^e = 16 < 2NB = 24: the pigeonhole precondition must reject
        try {
          pigeonhole_find(G, subs.front(), B);
          require(false, "missing precondition rejection at e=4, B=3");
        } catch (const std::invalid_argument&) {
          error_path = true;
        }
        continue;
      }
      mpz_class window_want = 2 * 4 * B;  // 2 N B q^{d_m}, N=q^2=4, d_m=deg m-1=0
      for (const Subgroup& H : subs) {
        PigeonholePair r = pigeonhole_find(G, H, B);
        mpz_class sep;
        mpz_ui_pow_ui(sep.get_mpz_t(), q, r.diff_degree);
        require(2 < sep && sep < window_want && r.window == window_want,
                "window violated in the plain pigeonhole");
        require(std::binary_search(H.begin(), H.end(), r.a) &&
                    std::binary_search(H.begin(), H.end(), r.b) && !(r.a == r.b),
                "pigeonhole pair not two distinct subgroup members");
        RefinedPair rr = pigeonhole_refined(G, H, B, c);
        require(rr.a.degree() == rr.b.degree() && rr.a.is_monic() && rr.b.is_monic(),
                "refined pair degrees differ");
        require(rr.mu_a == rr.mu_b, "refined leading coefficients differ");
        mpz_ui_pow_ui(sep.get_mpz_t(), q, rr.diff_degree);
        require(2 < sep && sep < rr.window && rr.window == window_want,
                "window violated in the refined pigeonhole");
        PolyA me = m.pow(e);
        require(std::binary_search(H.begin(), H.end(), rr.a % me) &&
                    std::binary_search(H.begin(), H.end(), rr.b % me),
                "refined pair residues left the subgroup");
        ++witnesses;
      }
    }
  require(error_path, "e=4, B=3 precondition path never exercised");
  return std::to_string(witnesses) + " witness pairs over " + std::to_string(groups) +
         " (e,B) groups, oracle-checked, precondition path hit";
}

// ------------------------------------------------------------ criterion 8

std::string ultrametric_estimates() {
  unsigned q = 2;
  std::mt19937_64 rng(20260828);
  DrinfeldModule c = DrinfeldModule::carlitz(q);
  size_t growth_n = 0, dev_n = 0, accel_sat = 0, accel_vac = 0;

  // exhaustive division-kernel sets for deg P <= 2, plus non-torsion mixes
  for (unsigned d = 1; d <= 2; ++d)
    for (const PolyA& P : irreducibles(q, d)) {
      PowerCongruence pc = power_congruence_params(P, d);
      CyclotomicField kP = cyclotomic_field(P);
      std::vector<AlgebraicElement> xs = division_kernel(c, kP);
      AlgebraicElement lam = kP.lambda;
      xs.push_back(lam + kP.field->one());
      xs.push_back(lam * lam + lam);
      xs.push_back(lam / embed(kP.field, RatFunc(P)));
      for (const AlgebraicElement& x : xs) {
        for (const Place& v : {Place::finite(P), Place::finite(PolyA::T(q))}) {
          ProfileCheck g = check_growth_identity(pc, x, v);
          require(g.pass, "growth identity fails: " + g.detail);
          ++growth_n;
        }
        ProfileCheck dv = check_power_deviation(pc, x);
        require(dv.pass, "deviation bound fails: " + dv.detail);
        ++dev_n;
      }
      // acceleration with an exactly tight hypothesis at the ramified place
      for (const AlgebraicElement& x : {lam, lam + kP.field->one(), lam * lam + lam})
        for (unsigned cc = 1; cc <= 2; ++cc) {
          AlgebraicElement y = x + lam.pow(cc);
          for (unsigned l = 0; l <= 2; ++l) {
            AccelerationCheck r = check_acceleration(pc, x, y, cc, l, Place::finite(P));
            require(r.hypothesis, "constructed deep pair fails the hypothesis");
            require(r.pass, "acceleration fails: " + r.detail);
            ++accel_sat;
          }
        }
    }

  // 100 random samples across ambients of degree 1, 2, 3
  PowerCongruence pcT = power_congruence_params(PolyA::T(q), 1);
  std::vector<AmbientPtr> ambients{Ambient::rational(q), quadratic(q), cubic(q)};
  Place vT = Place::finite(PolyA::T(q));
  for (int i = 0; i < 100; ++i) {
    AlgebraicElement x = random_element(ambients[static_cast<size_t>(i) % 3], rng);
    ProfileCheck g = check_growth_identity(pcT, x, vT);
    require(g.pass, "random growth identity fails: " + g.detail);
    ++growth_n;
    ProfileCheck dv = check_power_deviation(pcT, x);
    require(dv.pass, "random deviation bound fails: " + dv.detail);
    ++dev_n;
  }

  // rational acceleration pairs: gap above the pole masses is guaranteed,
  // shallow integral pairs must be reported as vacuous
  AmbientPtr k = Ambient::rational(q);
  RatFunc T = RatFunc::T(q);
  for (int i = 0; i < 10; ++i) {
    AlgebraicElement x = k->from_k(random_ratfunc(q, rng));
    unsigned cc = 1 + static_cast<unsigned>(i % 2);
    long m = 0;
    if (!x.is_zero()) {
      Rat w = conjugate_valuations(x, vT)[0];
      if (w < 0) m = -static_cast<long>(mpz_class(w.get_num() / w.get_den()).get_si());
    }
    AlgebraicElement y = x + embed(k, T.pow(static_cast<long>(cc) + 2 * m));
    for (unsigned l = 0; l <= 2; ++l) {
      AccelerationCheck r = check_acceleration(pcT, x, y, cc, l, vT);
      require(r.hypothesis && r.pass, "rational deep pair fails: " + r.detail);
      ++accel_sat;
    }
    AlgebraicElement xs = embed(k, T.pow(static_cast<long>(i % 3)));
    AccelerationCheck shallow = check_acceleration(pcT, xs, xs + k->one(), 1, 1, vT);
    require(!shallow.hypothesis && shallow.pass, "shallow pair not vacuous");
    ++accel_vac;
  }

  std::ostringstream s;
  s << growth_n << " growth, " << dev_n << " deviation, " << accel_sat
    << " acceleration (hypothesis tight), " << accel_vac << " vacuous, l=0,1,2";
  return s.str();
}

// ------------------------------------------------------------ criterion 9

std::string carlitz_height_floor() {
  unsigned q = 2;
  CyclotomicField kP = cyclotomic_field(PolyA(q, {1, 1, 1}));
  AlgebraicElement lam = kP.lambda;
  std::vector<AlgebraicElement> xs{lam + kP.field->one(), lam + embed(kP.field, RatFunc::T(q)),
                                   lam * lam + lam};
  std::vector<FloorRow> rows = check_carlitz_floor(kP, xs);
  require(rows.size() == 3, "row count");
  require(rows[0].torsion && rows[1].torsion && !rows[2].torsion,
          "classification of the three samples is wrong");
  mpz_class denom;
  mpz_ui_pow_ui(denom.get_mpz_t(), 2, 44);  // floor = q^{-11 q gamma}, gamma = 2
  require(rows[2].floor == Rat(1, denom), "floor is not 2^-44");
  require(rows[2].lo > rows[2].floor, "lower endpoint does not clear the floor");
  require(rows[2].margin > 1, "margin not above 1");
  for (const FloorRow& r : rows) require(r.pass, "row failed: " + r.element);
  return "l+1, l+T torsion; l^2+l free with hhat_lo=" + rat_str(rows[2].lo) +
         " > 2^-44, margin=" + rat_str(rows[2].margin);
}

// ------------------------------------------------------------ criterion 10

std::string determinism() {
  const std::string cli = DHCLI_PATH;
  const std::string f1 = "acceptance_all_1.json", f2 = "acceptance_all_2.json";
  auto run = [&](const std::string& out) {
    std::string cmd = cli + " verify all --seed 7 > " + out + " 2>&1";
    require(std::system(cmd.c_str()) == 0, "verify all --seed 7 did not pass");
  };
  auto slurp = [](const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  run(f1);
  run(f2);
  std::string a = slurp(f1), b = slurp(f2);
  std::remove(f1.c_str());
  std::remove(f2.c_str());
  require(!a.empty(), "verify all produced no output");
  require(a == b, "two seeded runs differ");
  return "verify all --seed 7 twice: " + std::to_string(a.size()) + " bytes, byte-identical";
}

}  // namespace

int main() {
  std::setvbuf(stdout, nullptr, _IONBF, 0);
  struct Criterion {
    int id;
    const char* name;
    double limit;  // seconds; 0 = no budget stated
    std::function<std::string()> run;
  };
  const std::vector<Criterion> table{
      {1, "frobenius-congruence", 10, frobenius_congruence},
      {2, "weil-oracle", 30, weil_oracle},
      {3, "height-axioms", 30, height_axioms},
      {4, "functional-equation", 120, functional_equation},
      {5, "torsion-certificates", 120, torsion_certificates},
      {6, "isogeny-relation", 60, isogeny_relation},
      {7, "pigeonhole-witnesses", 60, pigeonhole_witnesses},
      {8, "ultrametric-estimates", 120, ultrametric_estimates},
      {9, "carlitz-height-floor", 300, carlitz_height_floor},
      {10, "determinism", 0, determinism},
  };
  int failures = 0;
  for (const Criterion& c : table) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    try {
      detail = c.run();
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (ok && c.limit > 0 && secs > c.limit) {
      ok = false;
      detail += " [time budget exceeded]";
    }
    if (!ok) ++failures;
    std::printf("%s %2d %-22s %s (%.1fs)\n", ok ? "pass" : "FAIL", c.id, c.name, detail.c_str(),
                secs);
  }
  if (failures) std::printf("FAILED: %d of 10 criteria\n", failures);
  else std::printf("all 10 criteria passed\n");
  return failures ? 1 : 0;
}
