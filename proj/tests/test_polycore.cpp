#include <random>

#include "doctest.h"
#include "multipoly.hpp"

using namespace reebforge;

namespace {

MultiPoly P(const std::string& s, int n = 2) { return parse_poly(s, n); }

// random sparse polynomial for round-trip style properties
MultiPoly random_poly(std::mt19937& rng, int nvars, int maxdeg, int nterms) {
  MultiPoly p(nvars);
  std::uniform_int_distribution<int> dexp(0, maxdeg);
  std::uniform_int_distribution<long> dnum(-40, 40);
  std::uniform_int_distribution<long> dden(1, 9);
  for (int t = 0; t < nterms; ++t) {
    Monomial m(nvars);
    for (int i = 0; i < nvars; ++i) m[i] = dexp(rng);
    p.add_term(m, make_rat(dnum(rng), dden(rng)));
  }
  return p;
}

}  // namespace

TEST_CASE("parse literal transcriptions") {
  MultiPoly disc = P("1 - x^2 - y^2");
  CHECK(disc.evaluate({Rational(0), Rational(0)}) == 1);
  CHECK(disc.total_degree() == 2);
  CHECK(P("0") == MultiPoly(2));
  CHECK(P("0").is_zero());

  MultiPoly annulus = P("(x^2+y^2-1)*(4-x^2-y^2)");
  MultiPoly expanded = P("x^2+y^2-1") * P("4-x^2-y^2");
  CHECK(annulus == expanded);
  CHECK(parse_poly(format_poly(annulus), 2) == annulus);
}

TEST_CASE("parse errors carry position and arity info") {
  CHECK_THROWS_AS(P("1 + "), ReebError);
  CHECK_THROWS_AS(P("2 ** 3"), ReebError);
  CHECK_THROWS_AS(P("x*(y+1"), ReebError);
  CHECK_THROWS_AS(P("1 - z", 2), ReebError);  // arity
  CHECK_THROWS_AS(P("x3 + 1", 2), ReebError);
  CHECK(P("x3 + 1", 3).degree_in(3) == 1);
  // implicit multiplication is not part of the grammar
  CHECK_THROWS_AS(P("2x"), ReebError);
}

TEST_CASE("format canonical forms") {
  CHECK(format_poly(MultiPoly(2)) == "0");
  MultiPoly m2y = P("0 - 2*y");
  CHECK(format_poly(m2y) == "-2*y");
  CHECK(format_poly(P("y + x")) == "x + y");
  CHECK(format_poly(P("1/2 - 3/4*x")) == "-3/4*x + 1/2");
}

TEST_CASE("format/parse round trip is a fixed point on random polynomials") {
  std::mt19937 rng(7);
  for (int it = 0; it < 60; ++it) {
    int nv = 1 + it % 3;
    MultiPoly p = random_poly(rng, nv, 5, 6);
    std::string s1 = format_poly(p);
    MultiPoly q = parse_poly(s1, nv);
    CHECK(q == p);
    CHECK(format_poly(q) == s1);
  }
}

TEST_CASE("partial derivatives") {
  CHECK(P("1 - x^2 - y^2").partial_derivative(2) == P("0-2*y"));
  CHECK(P("5").partial_derivative(1).is_zero());
  MultiPoly annulus = P("(x^2+y^2-1)*(4-x^2-y^2)");
  MultiPoly byhand = P("2*x*(4-x^2-y^2) - 2*x*(x^2+y^2-1)", 2);
  CHECK(annulus.partial_derivative(1) == byhand);
}

TEST_CASE("exact evaluation") {
  MultiPoly disc = P("1 - x^2 - y^2");
  CHECK(disc.evaluate({Rational(1), Rational(0)}) == 0);
  MultiPoly annulus = P("(x^2+y^2-1)*(4-x^2-y^2)");
  CHECK(annulus.evaluate({make_rat(3, 2), Rational(0)}) == make_rat(35, 16));
}

TEST_CASE("fiber restriction q(a, .)") {
  MultiPoly disc = P("1 - x^2 - y^2");
  UniPoly f0 = disc.substitute_first(Rational(0));
  CHECK(f0.degree() == 2);
  CHECK(f0.eval(Rational(0)) == 1);
  UniPoly f1 = disc.substitute_first(Rational(1));
  CHECK(f1.coeffs == std::vector<Rational>{Rational(0), Rational(0), Rational(-1)});
  MultiPoly annulus = P("(x^2+y^2-1)*(4-x^2-y^2)");
  UniPoly g = annulus.substitute_first(Rational(0));
  UniPoly byhand = P("(y^2-1)*(4-y^2)").to_unipoly_in(2);
  CHECK(g == byhand);
}

TEST_CASE("top form") {
  CHECK(P("1 - x^2 - y^2").top_form() == P("0 - x^2 - y^2"));
  CHECK(P("x^3 - x - y^2").top_form() == P("x^3"));
  MultiPoly annulus = P("(x^2+y^2-1)*(4-x^2-y^2)");
  CHECK(annulus.top_form() == -(P("(x^2+y^2)^2")));
  CHECK_THROWS_AS(MultiPoly(2).top_form(), ReebError);
}

TEST_CASE("negative definite top form decision") {
  CHECK(is_negdef_top_form_2d(P("1 - x^2 - y^2")));
  CHECK_FALSE(is_negdef_top_form_2d(P("x^3 - x - y^2")));
  CHECK(is_negdef_top_form_2d(P("(x^2+y^2-1)*(4-x^2-y^2)")));
  CHECK_FALSE(is_negdef_top_form_2d(P("x^2 + y^2")));
  // definite but positive
  CHECK_FALSE(is_negdef_top_form_2d(P("x^2 + y^2 - 1")));
  // degenerate direction: vanishes along x axis
  CHECK_FALSE(is_negdef_top_form_2d(P("0 - y^2 - 1")));
}

TEST_CASE("negdef implies eventually negative on sampled rays") {
  std::mt19937 rng(3);
  MultiPoly q = P("(x^2+y^2-1)*(4-x^2-y^2) + 3*x - 1");
  REQUIRE(is_negdef_top_form_2d(q));
  Rational R = negdef_bounding_radius(q);
  std::uniform_int_distribution<long> d(-50, 50);
  for (int i = 0; i < 200; ++i) {
    long a = d(rng), b = d(rng);
    if (a == 0 && b == 0) continue;
    // scale (a, b) to length >= R: factor R works since |(a,b)| >= 1
    Rational x = Rational(a) * R, y = Rational(b) * R;
    CHECK(sgn(q.evaluate({x, y})) < 0);
  }
}

TEST_CASE("squarefree part") {
  MultiPoly disc = P("1 - x^2 - y^2");
  MultiPoly sq = disc * disc;
  MultiPoly sf = squarefree_part(sq);
  // equal up to rational scaling
  CHECK(poly_divexact(sf, disc).is_constant());
  MultiPoly already = P("x^2 + y^2 - 1");
  CHECK(poly_divexact(squarefree_part(already), already).is_constant());
  MultiPoly cube = P("(x-y)^3*(x+y)");
  MultiPoly expect = P("(x-y)*(x+y)");
  CHECK(poly_divexact(squarefree_part(cube), expect).is_constant());
}

TEST_CASE("multiplicity split") {
  MultiPoly p = P("(x-y)^3*(x+y)");
  auto sp = multiplicity_split(p);
  CHECK_FALSE(sp.even_nonconstant);
  CHECK(poly_divexact(sp.odd, P("(x-y)*(x+y)")).is_constant());
  auto sq = multiplicity_split(P("(1-x^2-y^2)^2"));
  CHECK(sq.even_nonconstant);
  CHECK(sq.odd.is_constant());
}

TEST_CASE("sign certification on boxes") {
  MultiPoly disc = P("1 - x^2 - y^2");
  Box2 small{{make_rat(-1, 4), make_rat(1, 4)}, {make_rat(-1, 4), make_rat(1, 4)}};
  CHECK(sign_on_box(disc, small, 16) == BoxSign::Positive);
  Box2 strad{{make_rat(-1, 2), make_rat(1, 2)}, {make_rat(-1, 2), make_rat(1, 2)}};
  CHECK(sign_on_box(P("x"), strad, 16) == BoxSign::ZeroPossible);
  Box2 tight{{make_rat(-33, 32), make_rat(-31, 32)}, {make_rat(-1, 32), make_rat(1, 32)}};
  CHECK(sign_on_box(P("0-2*x"), tight, 16) == BoxSign::Positive);
}

TEST_CASE("finite differences track the derivative to first order") {
  // |f(p+h e_i) - f(p) - h df_i(p)| <= C h^2 with C from the exact remainder;
  // checked by halving h and watching the quotient stay bounded
  std::mt19937 rng(11);
  for (int it = 0; it < 12; ++it) {
    MultiPoly p = random_poly(rng, 2, 4, 5);
    MultiPoly dp = p.partial_derivative(1);
    std::vector<Rational> pt{make_rat(1, 3), make_rat(-2, 5)};
    Rational f0 = p.evaluate(pt);
    Rational d0 = dp.evaluate(pt);
    Rational h = make_rat(1, 8);
    Rational prev_ratio(0);
    for (int k = 0; k < 3; ++k) {
      Rational fh = p.evaluate({pt[0] + h, pt[1]});
      Rational err = rat_abs(fh - f0 - h * d0);
      Rational ratio = err / (h * h);
      if (k > 0) CHECK(ratio <= prev_ratio * 4 + 1);
      prev_ratio = ratio;
      h /= 2;
    }
  }
}
