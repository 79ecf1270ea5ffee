#ifndef REEBFORGE_RATIONAL_HPP
#define REEBFORGE_RATIONAL_HPP

#include <gmpxx.h>
#include <optional>
#include <stdexcept>
#include <string>

namespace reebforge {

using Rational = mpq_class;
using Integer = mpz_class;

// Error taxonomy shared by the whole engine. Values past Ok mirror the CLI
// exit codes where one exists.
enum class ErrKind {
  Ok = 0,
  NoOrientation = 1,
  ParseError = 2,
  Singular = 3,
  DegenerateInput = 3,   // positive-dimensional boundary overlap
  NotCompact = 4,
  NotStable = 5,
  NotMorse = 5,
  PrecisionExhausted = 6,
  UnrealizableEmbedding = 7,
  RealizationFailed = 8,
  ArityError = 10,
  ZeroPolynomial = 10,
  BadInput = 10,
  Internal = 9,
};

class ReebError : public std::runtime_error {
public:
  ReebError(ErrKind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
  ErrKind kind;
};

inline Rational make_rat(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline Rational make_rat(const Integer& n, const Integer& d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline int sign_of(const Rational& r) { return sgn(r); }

inline Rational rat_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

inline Rational midpoint(const Rational& a, const Rational& b) {
  Rational m = (a + b) / 2;
  m.canonicalize();
  return m;
}

// "p/q" or "p"; also accepts a decimal like "1.25" for convenience.
inline Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash != std::string::npos) {
      Integer n(s.substr(0, slash)), d(s.substr(slash + 1));
      if (d <= 0) throw std::invalid_argument("nonpositive denominator");
      return make_rat(n, d);
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      Integer n(digits);
      Integer d(1);
      for (size_t i = dot + 1; i < s.size(); ++i) d *= 10;
      return make_rat(n, d);
    }
    return Rational(Integer(s));
  } catch (const std::invalid_argument&) {
    throw ReebError(ErrKind::ParseError, "bad rational literal: " + s);
  }
}

inline std::string rat_str(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Closed rational interval. Arithmetic is the usual exact interval extension.
struct RatInterval {
  Rational lo, hi;

  RatInterval() : lo(0), hi(0) {}
  RatInterval(const Rational& v) : lo(v), hi(v) {}
  RatInterval(const Rational& a, const Rational& b) : lo(a), hi(b) {}

  bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
  bool strictly_positive() const { return sgn(lo) > 0; }
  bool strictly_negative() const { return sgn(hi) < 0; }
  Rational width() const { return hi - lo; }
  Rational mid() const { return midpoint(lo, hi); }

  RatInterval operator+(const RatInterval& o) const { return {lo + o.lo, hi + o.hi}; }
  RatInterval operator-(const RatInterval& o) const { return {lo - o.hi, hi - o.lo}; }
  RatInterval operator-() const { return {-hi, -lo}; }

  RatInterval operator*(const RatInterval& o) const {
    Rational a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
    Rational mn = a, mx = a;
    for (const Rational* v : {&b, &c, &d}) {
      if (*v < mn) mn = *v;
      if (*v > mx) mx = *v;
    }
    return {mn, mx};
  }

  RatInterval pow_nat(unsigned long e) const {
    if (e == 0) return RatInterval(Rational(1));
    if (e % 2 == 1 || sgn(lo) >= 0) {
      Rational a, b;
      mpz_pow_ui(a.get_num_mpz_t(), lo.get_num_mpz_t(), e);
      mpz_pow_ui(a.get_den_mpz_t(), lo.get_den_mpz_t(), e);
      mpz_pow_ui(b.get_num_mpz_t(), hi.get_num_mpz_t(), e);
      mpz_pow_ui(b.get_den_mpz_t(), hi.get_den_mpz_t(), e);
      if (sgn(lo) >= 0 || e % 2 == 1) return {a, b};
    }
    // even power straddling or negative
    Rational alo = rat_abs(lo), ahi = rat_abs(hi);
    Rational mx = alo > ahi ? alo : ahi;
    Rational top;
    mpz_pow_ui(top.get_num_mpz_t(), mx.get_num_mpz_t(), e);
    mpz_pow_ui(top.get_den_mpz_t(), mx.get_den_mpz_t(), e);
    if (sgn(hi) <= 0) {
      Rational mn = ahi < alo ? ahi : alo;
      Rational bot;
      mpz_pow_ui(bot.get_num_mpz_t(), mn.get_num_mpz_t(), e);
      mpz_pow_ui(bot.get_den_mpz_t(), mn.get_den_mpz_t(), e);
      return {bot, top};
    }
    return {Rational(0), top};
  }

  bool intersects(const RatInterval& o) const { return !(hi < o.lo || o.hi < lo); }
  std::optional<RatInterval> intersect(const RatInterval& o) const {
    Rational a = lo > o.lo ? lo : o.lo;
    Rational b = hi < o.hi ? hi : o.hi;
    if (a > b) return std::nullopt;
    return RatInterval(a, b);
  }
  // strict containment in the interior of o
  bool inside_interior(const RatInterval& o) const { return o.lo < lo && hi < o.hi; }
};

struct Box2 {
  RatInterval x, y;
  Rational max_width() const {
    Rational wx = x.width(), wy = y.width();
    return wx > wy ? wx : wy;
  }
};

enum class BoxSign { Negative, ZeroPossible, Positive };

}  // namespace reebforge

#endif
