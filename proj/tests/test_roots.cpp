#include <random>

#include "doctest.h"
#include "multipoly.hpp"

using namespace reebforge;

namespace {

UniPoly U(const std::string& s) { return parse_poly(s, 1).to_unipoly_in(1); }

// independent oracle: count sign changes of u over a fine grid
int grid_scan_roots(const UniPoly& u, const Rational& lo, const Rational& hi, int cells) {
  int count = 0;
  int prev = 0;
  for (int i = 0; i <= cells; ++i) {
    Rational t = lo + (hi - lo) * make_rat(i, cells);
    int s = sgn(u.eval(t));
    if (s == 0) {
      ++count;  // grid point hits a root exactly
      prev = 0;
      continue;
    }
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

}  // namespace

TEST_CASE("isolation of simple fixtures") {
  auto roots = isolate_real_roots(U("x^2 - 2"));
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].lo >= -2);
  CHECK(roots[0].hi <= 0);
  CHECK(roots[1].lo >= 0);
  CHECK(roots[1].hi <= 2);

  CHECK(isolate_real_roots(U("x^2 + 1")).empty());

  auto four = isolate_real_roots(U("(x^2-1)*(4-x^2)"));
  REQUIRE(four.size() == 4);
  Rational expect[] = {Rational(-2), Rational(-1), Rational(1), Rational(2)};
  for (int i = 0; i < 4; ++i) {
    CHECK(four[i].lo < expect[i]);
    CHECK(four[i].hi > expect[i]);
  }
}

TEST_CASE("repeated roots are isolated once") {
  auto roots = isolate_real_roots(U("(x-1)^3*(x+2)^2"));
  REQUIRE(roots.size() == 2);
}

TEST_CASE("refinement") {
  UniPoly u = U("x^2 - 2");
  IsolatingInterval iv{Rational(1), Rational(2), true};
  auto r = refine_root(u, iv, make_rat(1, 16));
  CHECK(r.hi - r.lo <= make_rat(1, 16));
  CHECK(sgn(u.eval(r.lo)) != sgn(u.eval(r.hi)));

  UniPoly third = U("x - 1/3");
  auto r2 = refine_root(third, {Rational(0), Rational(1), true}, make_rat(1, 100));
  CHECK(r2.lo < make_rat(1, 3));
  CHECK(r2.hi > make_rat(1, 3));
  CHECK(r2.hi - r2.lo <= make_rat(1, 100));
}

TEST_CASE("refining twice nests") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> c(-9, 9);
  for (int it = 0; it < 40; ++it) {
    std::vector<Rational> cs;
    for (int i = 0; i < 6; ++i) cs.emplace_back(make_rat(c(rng)));
    UniPoly u(std::move(cs));
    if (u.degree() < 1) continue;
    auto roots = isolate_real_roots(u);
    for (const auto& iv : roots) {
      Rational w = (iv.hi - iv.lo) / 8;
      if (sgn(w) == 0) continue;
      auto a = refine_root(u, iv, w);
      auto b = refine_root(u, a, w / 2);
      CHECK(b.lo >= a.lo);
      CHECK(b.hi <= a.hi);
      CHECK(a.lo >= iv.lo);
      CHECK(a.hi <= iv.hi);
    }
  }
}

TEST_CASE("refine rejects non-isolating intervals") {
  UniPoly u = U("x^2 - 2");
  CHECK_THROWS_AS(refine_root(u, {Rational(-2), Rational(2), true}, make_rat(1, 4)), ReebError);
}

TEST_CASE("isolation count equals Sturm count and the grid-scan oracle") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<long> c(-12, 12);
  for (int it = 0; it < 120; ++it) {
    int deg = 1 + it % 8;
    std::vector<Rational> cs;
    for (int i = 0; i <= deg; ++i) cs.emplace_back(make_rat(c(rng)));
    UniPoly u(std::move(cs));
    if (u.is_zero() || u.degree() < 1) continue;
    auto roots = isolate_real_roots(u);
    CHECK((int)roots.size() == count_real_roots(u));
    // the grid scan sees at least sign changes; with a fine enough grid and
    // refined disjoint intervals it sees each root exactly once
    ZPoly sf = zpoly_squarefree(u.cleared());
    Rational b = root_bound(sf);
    int scanned = grid_scan_roots(UniPoly([&] {
                                    std::vector<Rational> qs;
                                    for (auto& z : sf.c) qs.emplace_back(z);
                                    return qs;
                                  }()),
                                  -b, b, 4096);
    CHECK(scanned == (int)roots.size());
  }
}
