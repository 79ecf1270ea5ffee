#include "resultant.hpp"

namespace reebforge {

namespace {

// polynomial in y with Z[x] coefficients, lowest y-power first
using BiPoly = std::vector<ZPoly>;

int bdeg(const BiPoly& p) {
  int d = static_cast<int>(p.size()) - 1;
  while (d >= 0 && p[d].is_zero()) --d;
  return d;
}

void btrim(BiPoly& p) { p.resize(static_cast<size_t>(bdeg(p) + 1)); }

BiPoly from_multipoly(const MultiPoly& p) {
  Integer l(1);
  for (const auto& [m, c] : p.terms())
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  BiPoly out(static_cast<size_t>(p.degree_in(2)) + 1);
  for (const auto& [m, c] : p.terms()) {
    Rational t = c * Rational(l);
    t.canonicalize();
    ZPoly& zc = out[m[1]];
    if (zc.c.size() <= m[0]) zc.c.resize(m[0] + 1, Integer(0));
    zc.c[m[0]] = t.get_num();
  }
  for (auto& zc : out) zc.trim();
  btrim(out);
  return out;
}

ZPoly bi_content(const BiPoly& p) {
  ZPoly g;
  for (const auto& c : p) {
    if (c.is_zero()) continue;
    g = zpoly_gcd(g, c);
    if (g.degree() == 0) break;
  }
  return g;
}

BiPoly bi_div_scalar(const BiPoly& p, const ZPoly& s) {
  BiPoly out;
  out.reserve(p.size());
  for (const auto& c : p) out.push_back(c.is_zero() ? ZPoly{} : zpoly_divexact(c, s));
  return out;
}

// lc(g)^(deg f - deg g + 1) * f mod g, exactly that multiplier
BiPoly bi_prem(const BiPoly& f, const BiPoly& g) {
  int dg = bdeg(g);
  const ZPoly& glc = g[dg];
  BiPoly r = f;
  int steps = bdeg(f) - dg + 1;
  int dr = bdeg(r);
  while (dr >= dg) {
    ZPoly rl = r[dr];
    for (auto& c : r) c = c.mul(glc);
    for (int i = 0; i <= dg; ++i) {
      ZPoly t = rl.mul(g[i]);
      ZPoly& dst = r[dr - dg + i];
      // dst -= t
      if (dst.c.size() < t.c.size()) dst.c.resize(t.c.size(), Integer(0));
      for (size_t j = 0; j < t.c.size(); ++j) dst.c[j] -= t.c[j];
      dst.trim();
    }
    btrim(r);
    dr = bdeg(r);
    --steps;
  }
  ZPoly pad = glc;
  while (steps-- > 0)
    for (auto& c : r) c = c.mul(pad);
  return r;
}

ZPoly zpow(const ZPoly& p, int e) {
  ZPoly r = ZPoly::from_coeffs({Integer(1)});
  for (int i = 0; i < e; ++i) r = r.mul(p);
  return r;
}

// Subresultant PRS resultant over Z[x].
ZPoly bi_resultant(BiPoly A, BiPoly B) {
  int da = bdeg(A), db = bdeg(B);
  if (da < 0 || db < 0) return {};
  int s = 1;
  if (da < db) {
    std::swap(A, B);
    std::swap(da, db);
    if (da % 2 == 1 && db % 2 == 1) s = -s;
  }
  if (db == 0) {
    if (da == 0) return ZPoly::from_coeffs({Integer(1)});
    return zpow(B[0], da);
  }
  ZPoly ca = bi_content(A), cb = bi_content(B);
  A = bi_div_scalar(A, ca);
  B = bi_div_scalar(B, cb);
  ZPoly t = zpow(ca, db).mul(zpow(cb, da));
  ZPoly g = ZPoly::from_coeffs({Integer(1)});
  ZPoly h = g;
  while (true) {
    da = bdeg(A);
    db = bdeg(B);
    int delta = da - db;
    if (da % 2 == 1 && db % 2 == 1) s = -s;
    BiPoly R = bi_prem(A, B);
    if (bdeg(R) < 0) return {};  // common factor of positive y-degree
    A = std::move(B);
    ZPoly divisor = g.mul(zpow(h, delta));
    B = bi_div_scalar(R, divisor);
    g = A[bdeg(A)];
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      h = zpoly_divexact(zpow(g, delta), zpow(h, delta - 1));
    }
    if (bdeg(B) <= 0) break;
  }
  if (bdeg(B) < 0) return {};
  int dA = bdeg(A);
  ZPoly lB = B[0];
  ZPoly hf = (dA <= 1) ? zpow(lB, dA) : zpoly_divexact(zpow(lB, dA), zpow(h, dA - 1));
  ZPoly res = hf.mul(t);
  if (s < 0) res = res.negated();
  return res;
}

UniPoly to_unipoly_q(const ZPoly& z) {
  std::vector<Rational> c;
  c.reserve(z.c.size());
  for (const auto& v : z.c) c.emplace_back(v);
  return UniPoly(std::move(c));
}

}  // namespace

UniPoly resultant_wrt_second(const MultiPoly& p, const MultiPoly& r) {
  if (p.nvars() != 2 || r.nvars() != 2)
    throw ReebError(ErrKind::ArityError, "resultant needs 2-variable polynomials");
  if (p.is_zero() || r.is_zero())
    throw ReebError(ErrKind::ZeroPolynomial, "resultant of zero polynomial");
  return to_unipoly_q(bi_resultant(from_multipoly(p), from_multipoly(r)));
}

UniPoly resultant_wrt_first(const MultiPoly& p, const MultiPoly& r) {
  return resultant_wrt_second(p.swap_vars(1, 2), r.swap_vars(1, 2));
}

}  // namespace reebforge
