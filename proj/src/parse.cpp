#include "dh/parse.hpp"

#include <cctype>
#include <memory>
#include <vector>

namespace dh {

namespace {

struct Node;
using NodePtr = std::unique_ptr<Node>;

struct Node {
  enum Kind { kNum, kSym, kAdd, kSub, kMul, kDiv, kNeg, kPow } kind;
  unsigned long long num = 0;   // kNum
  std::string sym;              // kSym
  unsigned exp = 0;             // kPow
  NodePtr a, b;
};

NodePtr make(Node::Kind k, NodePtr a = nullptr, NodePtr b = nullptr) {
  NodePtr n = std::make_unique<Node>();
  n->kind = k;
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) {}
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool done() {
    skip();
    return i_ >= s_.size();
  }
  char peek() {
    skip();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  char take() {
    skip();
    if (i_ >= s_.size()) throw ParseError("unexpected end of expression");
    return s_[i_++];
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++i_;
    return true;
  }
  unsigned long long integer() {
    skip();
    if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_])))
      throw ParseError("expected a number");
    unsigned long long v = 0;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      if (v > (1ull << 50)) throw ParseError("number too large");
      v = v * 10 + static_cast<unsigned long long>(s_[i_++] - '0');
    }
    return v;
  }
  std::string ident() {
    skip();
    std::string out;
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_'))
      out += s_[i_++];
    if (out.empty()) throw ParseError("expected a symbol");
    return out;
  }

 private:
  const std::string& s_;
  size_t i_ = 0;
};

NodePtr parse_expr(Lexer& lx);

NodePtr parse_atom(Lexer& lx) {
  char c = lx.peek();
  if (c == '(') {
    lx.take();
    NodePtr e = parse_expr(lx);
    if (!lx.accept(')')) throw ParseError("missing ')'");
    return e;
  }
  if (std::isdigit(static_cast<unsigned char>(c))) {
    NodePtr n = make(Node::kNum);
    n->num = lx.integer();
    return n;
  }
  if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
    NodePtr n = make(Node::kSym);
    n->sym = lx.ident();
    return n;
  }
  if (c == '\0') throw ParseError("unexpected end of input");
  throw ParseError(std::string("unexpected character '") + c + "'");
}

NodePtr parse_factor(Lexer& lx) {
  NodePtr base = parse_atom(lx);
  if (lx.accept('^')) {
    unsigned long long e = lx.integer();
    if (e > 4096) throw ParseError("exponent too large");
    NodePtr n = make(Node::kPow, std::move(base));
    n->exp = static_cast<unsigned>(e);
    return n;
  }
  return base;
}

NodePtr parse_term(Lexer& lx) {
  NodePtr t = parse_factor(lx);
  while (true) {
    if (lx.accept('*'))
      t = make(Node::kMul, std::move(t), parse_factor(lx));
    else if (lx.accept('/'))
      t = make(Node::kDiv, std::move(t), parse_factor(lx));
    else
      return t;
  }
}

NodePtr parse_expr(Lexer& lx) {
  NodePtr e = lx.accept('-') ? make(Node::kNeg, parse_term(lx)) : parse_term(lx);
  while (true) {
    if (lx.accept('+'))
      e = make(Node::kAdd, std::move(e), parse_term(lx));
    else if (lx.accept('-'))
      e = make(Node::kSub, std::move(e), parse_term(lx));
    else
      return e;
  }
}

NodePtr parse_text(const std::string& text) {
  Lexer lx(text);
  NodePtr e = parse_expr(lx);
  if (!lx.done()) throw ParseError("trailing input after expression");
  return e;
}

// An evaluation context supplies literals, symbols, and division; +,-,* come
// from the value type itself.
template <class V, class Ctx>
V eval(const Node& n, const Ctx& ctx) {
  switch (n.kind) {
    case Node::kNum:
      return ctx.literal(n.num);
    case Node::kSym:
      return ctx.symbol(n.sym);
    case Node::kAdd:
      return eval<V>(*n.a, ctx) + eval<V>(*n.b, ctx);
    case Node::kSub:
      return eval<V>(*n.a, ctx) - eval<V>(*n.b, ctx);
    case Node::kMul:
      return eval<V>(*n.a, ctx) * eval<V>(*n.b, ctx);
    case Node::kDiv:
      return ctx.divide(eval<V>(*n.a, ctx), eval<V>(*n.b, ctx));
    case Node::kNeg:
      return ctx.negate(eval<V>(*n.a, ctx));
    case Node::kPow: {
      V base = eval<V>(*n.a, ctx);
      V r = ctx.literal(1);
      for (unsigned i = 0; i < n.exp; ++i) r = r * base;
      return r;
    }
  }
  throw ParseError("corrupt expression tree");
}

FqElem constant_in_fq(unsigned q, unsigned long long n) {
  unsigned p = 2;
  while (q % p != 0) ++p;
  FqElem c = FqElem::zero(q), one = FqElem::one(q);
  for (unsigned long long i = 0; i < n % p; ++i) c = c + one;
  return c;
}

struct RatCtx {
  unsigned q;
  RatFunc literal(unsigned long long n) const {
    return RatFunc::constant(constant_in_fq(q, n));
  }
  RatFunc symbol(const std::string& s) const {
    if (s == "T") return RatFunc::T(q);
    if (s == "g") {
      if (q == 2 || q == 3 || q == 5 || q == 7)
        throw ParseError("the symbol g needs a non-prime constant field");
      return RatFunc::constant(FqElem::gen(q));
    }
    throw ParseError("unknown symbol '" + s + "'");
  }
  RatFunc divide(const RatFunc& a, const RatFunc& b) const {
    if (b.is_zero()) throw ParseError("division by zero");
    return a / b;
  }
  RatFunc negate(const RatFunc& a) const { return -a; }
};

struct PolyKCtx {
  unsigned q;
  PolyK literal(unsigned long long n) const {
    return PolyK::constant(RatCtx{q}.literal(n));
  }
  PolyK symbol(const std::string& s) const {
    if (s == "X") return PolyK::X(RatFunc(q));
    return PolyK::constant(RatCtx{q}.symbol(s));
  }
  PolyK divide(const PolyK& a, const PolyK& b) const {
    if (b.is_zero()) throw ParseError("division by zero");
    if (b.degree() > 0)
      throw ParseError("a defining polynomial may only be divided by constants");
    return a * b.coeff(0).inverse();
  }
  PolyK negate(const PolyK& a) const { return -a; }
};

struct ElemCtx {
  const AmbientPtr& amb;
  AlgebraicElement embed(const RatFunc& c) const {
    std::vector<RatFunc> co(amb->degree(), RatFunc(amb->q()));
    co[0] = c;
    return amb->element(std::move(co));
  }
  AlgebraicElement literal(unsigned long long n) const {
    return embed(RatCtx{amb->q()}.literal(n));
  }
  AlgebraicElement symbol(const std::string& s) const {
    if (s == amb->generator_name()) return amb->generator();
    return embed(RatCtx{amb->q()}.symbol(s));
  }
  AlgebraicElement divide(const AlgebraicElement& a, const AlgebraicElement& b) const {
    if (b.is_zero()) throw ParseError("division by zero");
    return a / b;
  }
  AlgebraicElement negate(const AlgebraicElement& a) const { return -a; }
};

struct OreCtx {
  unsigned q;
  OreK literal(unsigned long long n) const {
    return OreK::constant(RatCtx{q}.literal(n));
  }
  OreK symbol(const std::string& s) const {
    if (s.size() >= 2 && s[0] == 't' &&
        s.find_first_not_of("0123456789", 1) == std::string::npos) {
      if (s.size() > 3) throw ParseError("tau power too large");
      unsigned long i = std::stoul(s.substr(1));
      if (i > 8) throw ParseError("tau power too large");
      return OreK::tau(RatFunc(q), static_cast<unsigned>(i));
    }
    return OreK::constant(RatCtx{q}.symbol(s));
  }
  OreK divide(const OreK& a, const OreK& b) const {
    // coefficients live in k, so constants divide; tau does not
    if (a.deg_tau() > 0 || b.deg_tau() > 0)
      throw ParseError("twisted polynomials cannot be divided");
    if (b.is_zero()) throw ParseError("division by zero");
    return OreK::constant(a.constant_term() / b.constant_term());
  }
  OreK negate(const OreK& a) const { return a * RatFunc::constant(-FqElem::one(q)); }
};

}  // namespace

RatFunc parse_ratfunc(unsigned q, const std::string& text) {
  return eval<RatFunc>(*parse_text(text), RatCtx{q});
}

PolyA parse_poly(unsigned q, const std::string& text) {
  RatFunc r = parse_ratfunc(q, text);
  if (!r.is_polynomial()) throw ParseError("expected a polynomial in T, got a fraction");
  return r.num();
}

PolyK parse_polyk(unsigned q, const std::string& text) {
  return eval<PolyK>(*parse_text(text), PolyKCtx{q});
}

AlgebraicElement parse_element(const AmbientPtr& amb, const std::string& text) {
  return eval<AlgebraicElement>(*parse_text(text), ElemCtx{amb});
}

OreK parse_ore(unsigned q, const std::string& text) {
  return eval<OreK>(*parse_text(text), OreCtx{q});
}

std::string render_ore(const OreK& op) {
  if (op.is_zero()) return "0";
  std::string out;
  for (int i = 0; i <= op.deg_tau(); ++i) {
    const RatFunc& c = op.coeff(static_cast<unsigned>(i));
    if (c.is_zero()) continue;
    if (!out.empty()) out += "+";
    if (!c.is_one()) {
      std::string cs = c.to_string();
      bool wrap = cs.find('+') != std::string::npos || cs.find('/') != std::string::npos;
      out += (wrap ? "(" + cs + ")" : cs) + "*";
    }
    out += "t" + std::to_string(i);
  }
  return out;
}

}  // namespace dh
