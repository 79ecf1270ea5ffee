#include "unipoly.hpp"

#include <algorithm>

namespace reebforge {

void ZPoly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Integer ZPoly::eval(const Integer& x) const {
  Integer acc(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational ZPoly::eval(const Rational& x) const {
  // p(a/b) = (sum c_i a^i b^(n-i)) / b^n
  if (c.empty()) return Rational(0);
  const Integer& a = x.get_num();
  const Integer& b = x.get_den();
  Integer acc(0);
  Integer bp(1);
  // Horner in a with trailing powers of b
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * a + *it * bp, bp *= b;
  // bp overshoots by one factor of b
  Integer den;
  mpz_pow_ui(den.get_mpz_t(), b.get_mpz_t(), c.size() - 1);
  return make_rat(acc, den);
}

int ZPoly::sign_at(const Rational& x) const {
  if (c.empty()) return 0;
  const Integer& a = x.get_num();
  const Integer& b = x.get_den();
  Integer acc(0), bp(1);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * a + *it * bp, bp *= b;
  return sgn(acc);
}

ZPoly ZPoly::derivative() const {
  ZPoly d;
  for (size_t i = 1; i < c.size(); ++i) d.c.push_back(c[i] * (long)i);
  d.trim();
  return d;
}

ZPoly ZPoly::negated() const {
  ZPoly r = *this;
  for (auto& v : r.c) v = -v;
  return r;
}

ZPoly ZPoly::mul(const ZPoly& o) const {
  if (c.empty() || o.c.empty()) return {};
  ZPoly r;
  r.c.assign(c.size() + o.c.size() - 1, Integer(0));
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
  r.trim();
  return r;
}

ZPoly ZPoly::scaled(const Integer& k) const {
  if (k == 0) return {};
  ZPoly r = *this;
  for (auto& v : r.c) v *= k;
  return r;
}

Integer ZPoly::content() const {
  Integer g(0);
  for (const auto& v : c) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly ZPoly::primitive_part() const {
  if (c.empty()) return {};
  Integer g = content();
  if (sgn(c.back()) < 0) g = -g;
  ZPoly r;
  r.c.reserve(c.size());
  for (const auto& v : c) r.c.push_back(v / g);
  return r;
}

ZPoly ZPoly::primitive_keep_sign() const {
  if (c.empty()) return {};
  Integer g = content();
  ZPoly r;
  r.c.reserve(c.size());
  for (const auto& v : c) r.c.push_back(v / g);
  return r;
}

ZPoly pseudo_rem(const ZPoly& f, const ZPoly& g) {
  if (g.is_zero()) throw ReebError(ErrKind::Internal, "pseudo_rem by zero");
  ZPoly r = f;
  int dg = g.degree();
  const Integer& glc = g.lc();
  int steps = f.degree() - dg + 1;
  if (steps <= 0) return r;
  while (!r.is_zero() && r.degree() >= dg) {
    int k = r.degree() - dg;
    Integer rl = r.lc();
    for (auto& v : r.c) v *= glc;
    for (int i = 0; i <= dg; ++i) r.c[k + i] -= rl * g.c[i];
    r.trim();
    --steps;
  }
  // keep the multiplier power consistent (even power keeps sign analysis easy)
  while (steps-- > 0)
    for (auto& v : r.c) v *= glc;
  return r;
}

ZPoly zpoly_gcd(const ZPoly& a, const ZPoly& b) {
  ZPoly f = a.primitive_part(), g = b.primitive_part();
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  if (f.degree() < g.degree()) std::swap(f, g);
  while (!g.is_zero()) {
    ZPoly r = pseudo_rem(f, g).primitive_part();
    f = std::move(g);
    g = std::move(r);
  }
  return f;
}

ZPoly zpoly_divexact(const ZPoly& f, const ZPoly& g) {
  if (g.is_zero()) throw ReebError(ErrKind::Internal, "divexact by zero");
  if (f.is_zero()) return {};
  ZPoly r = f, q;
  int dg = g.degree();
  if (f.degree() < dg) throw ReebError(ErrKind::Internal, "divexact: degree mismatch");
  q.c.assign(f.degree() - dg + 1, Integer(0));
  while (!r.is_zero() && r.degree() >= dg) {
    int k = r.degree() - dg;
    Integer t, rem;
    mpz_tdiv_qr(t.get_mpz_t(), rem.get_mpz_t(), r.lc().get_mpz_t(), g.lc().get_mpz_t());
    if (rem != 0) throw ReebError(ErrKind::Internal, "divexact: not exact");
    q.c[k] = t;
    for (int i = 0; i <= dg; ++i) r.c[k + i] -= t * g.c[i];
    r.trim();
  }
  if (!r.is_zero()) throw ReebError(ErrKind::Internal, "divexact: nonzero remainder");
  q.trim();
  return q;
}

ZPoly zpoly_squarefree(const ZPoly& p) {
  if (p.is_zero()) throw ReebError(ErrKind::ZeroPolynomial, "squarefree of zero");
  if (p.degree() == 0) return ZPoly::from_coeffs({Integer(1)});
  ZPoly g = zpoly_gcd(p, p.derivative());
  if (g.degree() == 0) return p.primitive_part();
  return zpoly_divexact(p.primitive_part(), g).primitive_part();
}

SturmChain::SturmChain(const ZPoly& p) {
  ZPoly f = p.primitive_keep_sign();
  if (f.is_zero()) throw ReebError(ErrKind::ZeroPolynomial, "Sturm chain of zero");
  seq.push_back(f);
  ZPoly d = f.derivative();
  if (d.is_zero()) return;
  seq.push_back(d.primitive_keep_sign());
  while (true) {
    const ZPoly& a = seq[seq.size() - 2];
    const ZPoly& b = seq.back();
    if (b.degree() < 0) break;
    int delta = a.degree() - b.degree();
    ZPoly r = pseudo_rem(a, b);
    if (r.is_zero()) break;
    // pseudo_rem scaled a by lc(b)^(delta+1); compensate so the stored element
    // is -(a mod b) times a positive factor
    bool mul_neg = (sgn(b.lc()) < 0) && ((delta + 1) % 2 == 1);
    ZPoly next = mul_neg ? r.primitive_keep_sign() : r.negated().primitive_keep_sign();
    seq.push_back(std::move(next));
    if (seq.back().degree() == 0) break;
  }
}

static int variations(const std::vector<int>& signs) {
  int v = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

int SturmChain::variations_at(const Rational& x) const {
  std::vector<int> s;
  s.reserve(seq.size());
  for (const auto& p : seq) s.push_back(p.sign_at(x));
  return variations(s);
}

int SturmChain::variations_at_neg_inf() const {
  std::vector<int> s;
  for (const auto& p : seq) {
    int ls = p.is_zero() ? 0 : sgn(p.lc());
    if (p.degree() % 2 == 1) ls = -ls;
    s.push_back(ls);
  }
  return variations(s);
}

int SturmChain::variations_at_pos_inf() const {
  std::vector<int> s;
  for (const auto& p : seq) s.push_back(p.is_zero() ? 0 : sgn(p.lc()));
  return variations(s);
}

int SturmChain::count(const Rational& a, const Rational& b) const {
  return variations_at(a) - variations_at(b);
}

int SturmChain::count_all() const {
  return variations_at_neg_inf() - variations_at_pos_inf();
}

UniPoly UniPoly::constant(const Rational& r) {
  UniPoly p;
  if (sgn(r) != 0) p.coeffs.push_back(r);
  return p;
}

void UniPoly::trim() {
  while (!coeffs.empty() && sgn(coeffs.back()) == 0) coeffs.pop_back();
}

Rational UniPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  UniPoly d;
  for (size_t i = 1; i < coeffs.size(); ++i) d.coeffs.push_back(coeffs[i] * make_rat((long)i));
  d.trim();
  return d;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  UniPoly r;
  r.coeffs.resize(std::max(coeffs.size(), o.coeffs.size()), Rational(0));
  for (size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] += coeffs[i];
  for (size_t i = 0; i < o.coeffs.size(); ++i) r.coeffs[i] += o.coeffs[i];
  r.trim();
  return r;
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
  UniPoly r;
  r.coeffs.resize(std::max(coeffs.size(), o.coeffs.size()), Rational(0));
  for (size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] += coeffs[i];
  for (size_t i = 0; i < o.coeffs.size(); ++i) r.coeffs[i] -= o.coeffs[i];
  r.trim();
  return r;
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  UniPoly r;
  r.coeffs.assign(coeffs.size() + o.coeffs.size() - 1, Rational(0));
  for (size_t i = 0; i < coeffs.size(); ++i)
    for (size_t j = 0; j < o.coeffs.size(); ++j) r.coeffs[i + j] += coeffs[i] * o.coeffs[j];
  r.trim();
  return r;
}

UniPoly UniPoly::scaled(const Rational& k) const {
  if (sgn(k) == 0) return {};
  UniPoly r = *this;
  for (auto& v : r.coeffs) v *= k;
  return r;
}

ZPoly UniPoly::cleared() const {
  Integer l(1);
  for (const auto& v : coeffs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
  ZPoly z;
  z.c.reserve(coeffs.size());
  for (const auto& v : coeffs) {
    Rational t = v * Rational(l);
    t.canonicalize();
    z.c.push_back(t.get_num());
  }
  z.trim();
  return z.primitive_keep_sign();
}

Rational root_bound(const ZPoly& p) {
  if (p.is_zero() || p.degree() == 0) return make_rat(1);
  Integer mx(0);
  for (size_t i = 0; i + 1 < p.c.size(); ++i) {
    Integer a = abs(p.c[i]);
    if (a > mx) mx = a;
  }
  Integer lead = abs(p.lc());
  // 1 + max|c_i| / |lc|, rounded up to an integer
  Integer q = mx / lead + 2;
  return Rational(q);
}

int count_real_roots(const UniPoly& u) {
  if (u.is_zero()) throw ReebError(ErrKind::ZeroPolynomial, "root count of zero polynomial");
  if (u.degree() == 0) return 0;
  ZPoly z = zpoly_squarefree(u.cleared());
  if (z.degree() <= 0) return 0;
  return SturmChain(z).count_all();
}

std::vector<IsolatingInterval> isolate_real_roots_z(const ZPoly& sf) {
  std::vector<IsolatingInterval> out;
  if (sf.degree() <= 0) return out;
  SturmChain chain(sf);
  Rational b = root_bound(sf);
  struct Seg {
    Rational lo, hi;
    int n;
  };
  std::vector<Seg> stack;
  int total = chain.count(-b, b);
  if (total == 0) return out;
  stack.push_back({-b, b, total});
  while (!stack.empty()) {
    Seg s = stack.back();
    stack.pop_back();
    if (s.n == 0) continue;
    if (s.n == 1) {
      // endpoints are never roots here: the outer bound exceeds the root
      // bound and every cut point is checked before use
      if (sf.sign_at(s.lo) == 0 || sf.sign_at(s.hi) == 0)
        throw ReebError(ErrKind::Internal, "isolate: root at segment endpoint");
      out.push_back({s.lo, s.hi, true});
      continue;
    }
    Rational m = midpoint(s.lo, s.hi);
    // avoid a root exactly at the cut
    int tries = 0;
    while (sf.sign_at(m) == 0 && tries < 64) {
      m = midpoint(s.lo, m);
      ++tries;
    }
    if (sf.sign_at(m) == 0)
      throw ReebError(ErrKind::Internal, "isolate: could not find a root-free cut");
    int left = chain.count(s.lo, m);
    stack.push_back({s.lo, m, left});
    stack.push_back({m, s.hi, s.n - left});
  }
  std::sort(out.begin(), out.end(),
            [](const IsolatingInterval& a, const IsolatingInterval& b) { return a.lo < b.lo; });
  return out;
}

std::vector<IsolatingInterval> isolate_real_roots(const UniPoly& u) {
  if (u.is_zero()) throw ReebError(ErrKind::ZeroPolynomial, "isolate roots of zero polynomial");
  if (u.degree() == 0) return {};
  ZPoly sf = zpoly_squarefree(u.cleared());
  return isolate_real_roots_z(sf);
}

IsolatingInterval refine_root_z(const ZPoly& p, const SturmChain& chain,
                                const IsolatingInterval& iv, const Rational& width) {
  if (sgn(width) <= 0) throw ReebError(ErrKind::BadInput, "refine: width must be positive");
  Rational lo = iv.lo, hi = iv.hi;
  int sl = p.sign_at(lo);
  int sh = p.sign_at(hi);
  if (sl == 0 || sh == 0 || chain.count(lo, hi) != 1)
    throw ReebError(ErrKind::BadInput, "refine: interval does not isolate a root");
  bool sign_bracket = (sl != sh);
  while (hi - lo > width) {
    Rational m = midpoint(lo, hi);
    int sm = p.sign_at(m);
    if (sm == 0) {
      // exact rational root at m; pick a tight bracket around it
      Rational w = (hi - lo) / 8;
      if (w > width / 4) w = width / 4;
      lo = m - w;
      hi = m + w;
      if (p.sign_at(lo) == 0) lo = m - w / 3;
      if (p.sign_at(hi) == 0) hi = m + w / 3;
      break;
    }
    if (sign_bracket) {
      if (sm == sl) lo = m; else hi = m;
    } else {
      if (chain.count(lo, m) == 1) hi = m; else lo = m;
    }
  }
  return {lo, hi, true};
}

IsolatingInterval refine_root(const UniPoly& u, const IsolatingInterval& iv,
                              const Rational& width) {
  if (u.is_zero()) throw ReebError(ErrKind::ZeroPolynomial, "refine on zero polynomial");
  ZPoly z = zpoly_squarefree(u.cleared());
  SturmChain chain(z);
  return refine_root_z(z, chain, iv, width);
}

}  // namespace reebforge
