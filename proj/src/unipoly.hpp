#ifndef REEBFORGE_UNIPOLY_HPP
#define REEBFORGE_UNIPOLY_HPP

#include <vector>

#include "rational.hpp"

namespace reebforge {

// Dense integer polynomial, lowest degree first. The workhorse for gcd /
// Sturm / isolation; rational polynomials are cleared to this form.
struct ZPoly {
  std::vector<Integer> c;

  void trim();
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
  const Integer& lc() const { return c.back(); }

  Integer eval(const Integer& x) const;
  Rational eval(const Rational& x) const;
  // sign of p(a/b) for b > 0, without building a Rational
  int sign_at(const Rational& x) const;
  ZPoly derivative() const;
  ZPoly negated() const;
  ZPoly mul(const ZPoly& o) const;
  ZPoly scaled(const Integer& k) const;
  Integer content() const;        // nonnegative gcd of coefficients
  ZPoly primitive_part() const;   // content and leading-sign normalized out
  ZPoly primitive_keep_sign() const;  // divide by positive content only

  static ZPoly from_coeffs(std::vector<Integer> v) {
    ZPoly p{std::move(v)};
    p.trim();
    return p;
  }
};

// Pseudo-remainder: lc(g)^(deg f - deg g + 1) * f = q*g + r. Returns r.
ZPoly pseudo_rem(const ZPoly& f, const ZPoly& g);

// gcd via primitive PRS; result is primitive with positive leading coefficient.
ZPoly zpoly_gcd(const ZPoly& a, const ZPoly& b);

// Exact division (throws Internal if not exact).
ZPoly zpoly_divexact(const ZPoly& f, const ZPoly& g);

ZPoly zpoly_squarefree(const ZPoly& p);

// Sturm chain of p (primitive, sign-preserving remainders).
struct SturmChain {
  std::vector<ZPoly> seq;
  explicit SturmChain(const ZPoly& p);
  int variations_at(const Rational& x) const;
  int variations_at_neg_inf() const;
  int variations_at_pos_inf() const;
  // number of distinct real roots in (a, b]
  int count(const Rational& a, const Rational& b) const;
  int count_all() const;
};

struct IsolatingInterval {
  Rational lo, hi;
  bool multiplicity_one = true;
};

// Univariate polynomial over Q, dense, lowest degree first.
class UniPoly {
public:
  std::vector<Rational> coeffs;

  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> c) : coeffs(std::move(c)) { trim(); }
  static UniPoly zero() { return UniPoly(); }
  static UniPoly constant(const Rational& r);

  void trim();
  bool is_zero() const { return coeffs.empty(); }
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  Rational eval(const Rational& x) const;
  UniPoly derivative() const;
  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly scaled(const Rational& k) const;
  bool operator==(const UniPoly& o) const { return coeffs == o.coeffs; }

  // integer multiple with content removed
  ZPoly cleared() const;
};

int count_real_roots(const UniPoly& u);
std::vector<IsolatingInterval> isolate_real_roots(const UniPoly& u);
IsolatingInterval refine_root(const UniPoly& u, const IsolatingInterval& iv,
                              const Rational& width);

// Refinement against a prebuilt chain/poly (used heavily by the sweep).
IsolatingInterval refine_root_z(const ZPoly& p, const SturmChain& chain,
                                const IsolatingInterval& iv, const Rational& width);
std::vector<IsolatingInterval> isolate_real_roots_z(const ZPoly& p);

// Cauchy-style bound: all real roots lie in (-B, B).
Rational root_bound(const ZPoly& p);

}  // namespace reebforge

#endif
