#include "multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace reebforge {

static Rational rat_pow(const Rational& r, unsigned e) {
  if (e == 0) return Rational(1);
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), r.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), r.get_den_mpz_t(), e);
  return out;
}

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
  MultiPoly p(nvars);
  if (sgn(c) != 0) p.terms_[Monomial(nvars, 0)] = c;
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int index) {
  if (index < 1 || index > nvars)
    throw ReebError(ErrKind::ArityError, "variable index out of range");
  MultiPoly p(nvars);
  Monomial m(nvars, 0);
  m[index - 1] = 1;
  p.terms_[m] = Rational(1);
  return p;
}

MultiPoly MultiPoly::from_unipoly(const UniPoly& u, int nvars, int index) {
  MultiPoly p(nvars);
  for (size_t i = 0; i < u.coeffs.size(); ++i) {
    if (sgn(u.coeffs[i]) == 0) continue;
    Monomial m(nvars, 0);
    m[index - 1] = static_cast<unsigned>(i);
    p.terms_[m] = u.coeffs[i];
  }
  return p;
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return 0;
  unsigned d = 0;
  for (unsigned e : terms_.begin()->first) d += e;
  return static_cast<int>(d);
}

int MultiPoly::degree_in(int index) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m[index - 1]));
  return d;
}

const Rational& MultiPoly::leading_coeff() const {
  if (terms_.empty()) throw ReebError(ErrKind::ZeroPolynomial, "leading coeff of zero");
  return terms_.begin()->second;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (static_cast<int>(m.size()) != nvars_)
    throw ReebError(ErrKind::ArityError, "monomial arity mismatch");
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    if (sgn(c) != 0) terms_[m] = c;
  } else {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  if (nvars_ != o.nvars_) throw ReebError(ErrKind::ArityError, "arity mismatch in +");
  MultiPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  if (nvars_ != o.nvars_) throw ReebError(ErrKind::ArityError, "arity mismatch in -");
  MultiPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, Rational(-c));
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(nvars_);
  for (const auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  if (nvars_ != o.nvars_) throw ReebError(ErrKind::ArityError, "arity mismatch in *");
  MultiPoly r(nvars_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m(nvars_);
      for (int i = 0; i < nvars_; ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

MultiPoly MultiPoly::scaled(const Rational& k) const {
  MultiPoly r(nvars_);
  if (sgn(k) == 0) return r;
  for (const auto& [m, c] : terms_) r.terms_[m] = c * k;
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly r = constant(nvars_, Rational(1));
  MultiPoly base = *this;
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

MultiPoly MultiPoly::partial_derivative(int index) const {
  if (index < 1 || index > nvars_)
    throw ReebError(ErrKind::ArityError, "derivative index out of range");
  MultiPoly r(nvars_);
  for (const auto& [m, c] : terms_) {
    unsigned e = m[index - 1];
    if (e == 0) continue;
    Monomial mm = m;
    mm[index - 1] = e - 1;
    r.add_term(mm, c * make_rat((long)e));
  }
  return r;
}

Rational MultiPoly::evaluate(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw ReebError(ErrKind::ArityError, "point arity mismatch");
  Rational acc(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < nvars_; ++i)
      if (m[i]) t *= rat_pow(point[i], m[i]);
    acc += t;
  }
  return acc;
}

RatInterval MultiPoly::evaluate_interval(const std::vector<RatInterval>& box) const {
  if (static_cast<int>(box.size()) != nvars_)
    throw ReebError(ErrKind::ArityError, "box arity mismatch");
  RatInterval acc(Rational(0));
  for (const auto& [m, c] : terms_) {
    RatInterval t{c, c};
    for (int i = 0; i < nvars_; ++i)
      if (m[i]) t = t * box[i].pow_nat(m[i]);
    acc = acc + t;
  }
  return acc;
}

UniPoly MultiPoly::substitute_first(const Rational& a) const {
  if (nvars_ != 2) throw ReebError(ErrKind::ArityError, "substitute_first needs 2 variables");
  size_t dy = static_cast<size_t>(degree_in(2));
  std::vector<Rational> out(dy + 1, Rational(0));
  for (const auto& [m, c] : terms_) out[m[1]] += c * rat_pow(a, m[0]);
  return UniPoly(std::move(out));
}

UniPoly MultiPoly::to_unipoly() const {
  int idx = 0;
  for (int i = 1; i <= nvars_; ++i)
    if (degree_in(i) > 0) {
      if (idx) throw ReebError(ErrKind::ArityError, "not univariate");
      idx = i;
    }
  return to_unipoly_in(idx ? idx : 1);
}

UniPoly MultiPoly::to_unipoly_in(int index) const {
  std::vector<Rational> out(static_cast<size_t>(degree_in(index)) + 1, Rational(0));
  for (const auto& [m, c] : terms_) {
    for (int i = 0; i < nvars_; ++i)
      if (i != index - 1 && m[i] != 0)
        throw ReebError(ErrKind::ArityError, "polynomial depends on another variable");
    out[m[index - 1]] += c;
  }
  return UniPoly(std::move(out));
}

MultiPoly MultiPoly::swap_vars(int i, int j) const {
  MultiPoly r(nvars_);
  for (const auto& [m, c] : terms_) {
    Monomial mm = m;
    std::swap(mm[i - 1], mm[j - 1]);
    r.terms_[mm] = c;
  }
  return r;
}

MultiPoly MultiPoly::substitute_linear(int index, const Rational& a, const Rational& b) const {
  // x_index := a*x_index + b, expanded by binomials
  MultiPoly r(nvars_);
  for (const auto& [m, c] : terms_) {
    unsigned e = m[index - 1];
    if (e == 0) {
      r.add_term(m, c);
      continue;
    }
    // (a x + b)^e
    Integer binom(1);
    for (unsigned k = 0; k <= e; ++k) {
      if (k > 0) binom = binom * (e - k + 1) / k;
      Rational coef = c * Rational(binom) * rat_pow(a, k) * rat_pow(b, e - k);
      if (sgn(coef) == 0) continue;
      Monomial mm = m;
      mm[index - 1] = k;
      r.add_term(mm, coef);
    }
  }
  return r;
}

MultiPoly MultiPoly::append_var() const {
  MultiPoly r(nvars_ + 1);
  for (const auto& [m, c] : terms_) {
    Monomial mm = m;
    mm.push_back(0);
    r.terms_[mm] = c;
  }
  return r;
}

MultiPoly MultiPoly::top_form() const {
  if (terms_.empty()) throw ReebError(ErrKind::ZeroPolynomial, "top form of zero polynomial");
  unsigned d = static_cast<unsigned>(total_degree());
  MultiPoly r(nvars_);
  for (const auto& [m, c] : terms_) {
    unsigned s = 0;
    for (unsigned e : m) s += e;
    if (s == d) r.terms_[m] = c;
  }
  return r;
}

// ---------------------------------------------------------------- parsing

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;
  int nvars;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw ReebError(ErrKind::ParseError,
                    "parse error at position " + std::to_string(pos) + ": " + msg);
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  Integer natural() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected digits");
    return Integer(s.substr(start, pos - start));
  }

  MultiPoly base() {
    skip_ws();
    if (pos >= s.size()) fail("unexpected end of input");
    char c = s[pos];
    if (c == '(') {
      ++pos;
      MultiPoly e = expression();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      bool neg = false;
      if (c == '-') {
        neg = true;
        ++pos;
        skip_ws();
      }
      Integer num = natural();
      Integer den(1);
      if (eat('/')) {
        den = natural();
        if (den <= 0) fail("denominator must be positive");
      }
      Rational r = make_rat(neg ? Integer(-num) : num, den);
      return MultiPoly::constant(nvars, r);
    }
    if (c == 'x' || c == 'y' || c == 'z') {
      ++pos;
      if (c == 'x' && pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        Integer k = natural();
        if (k < 1) fail("variable index must be at least 1");
        if (k > nvars)
          throw ReebError(ErrKind::ArityError,
                          "variable x" + k.get_str() + " exceeds arity " + std::to_string(nvars));
        return MultiPoly::variable(nvars, static_cast<int>(k.get_si()));
      }
      int idx = (c == 'x') ? 1 : (c == 'y') ? 2 : 3;
      if (idx > nvars)
        throw ReebError(ErrKind::ArityError,
                        std::string("variable ") + c + " exceeds arity " + std::to_string(nvars));
      return MultiPoly::variable(nvars, idx);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  MultiPoly factor() {
    MultiPoly b = base();
    if (eat('^')) {
      Integer e = natural();
      if (e > 64)
        fail("exponent too large");
      return b.pow(static_cast<unsigned>(e.get_ui()));
    }
    return b;
  }

  MultiPoly term() {
    MultiPoly f = factor();
    while (eat('*')) f = f * factor();
    return f;
  }

  MultiPoly expression() {
    skip_ws();
    bool neg = false;
    if (peek() == '+' || peek() == '-') {
      neg = (peek() == '-');
      // a leading sign followed by a digit belongs to the literal
      size_t save = pos;
      ++pos;
      skip_ws();
      if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])) && neg) {
        pos = save;
        neg = false;
      } else if (!neg) {
        // leading '+': just consumed
      }
    }
    MultiPoly acc = term();
    if (neg) acc = -acc;
    while (true) {
      char c = peek();
      if (c == '+') {
        ++pos;
        acc = acc + term();
      } else if (c == '-') {
        ++pos;
        acc = acc - term();
      } else {
        break;
      }
    }
    return acc;
  }
};

std::string var_name(int nvars, int index) {
  if (nvars <= 3) {
    static const char* names[] = {"x", "y", "z"};
    return names[index - 1];
  }
  return "x" + std::to_string(index);
}

}  // namespace

MultiPoly parse_poly(const std::string& text, int nvars) {
  if (nvars < 1) throw ReebError(ErrKind::ArityError, "nvars must be positive");
  Parser p{text, 0, nvars};
  MultiPoly r = p.expression();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return r;
}

std::string MultiPoly::format() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = rat_abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
      first = false;
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    bool has_vars = false;
    for (unsigned e : m)
      if (e) has_vars = true;
    if (!has_vars || a != 1) {
      os << rat_str(a);
      if (has_vars) os << "*";
    }
    bool firstv = true;
    for (int i = 0; i < nvars_; ++i) {
      if (!m[i]) continue;
      if (!firstv) os << "*";
      firstv = false;
      os << var_name(nvars_, i + 1);
      if (m[i] > 1) os << "^" << m[i];
    }
  }
  return os.str();
}

int infer_nvars(const std::string& text) {
  int n = 1;
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == 'y') n = std::max(n, 2);
    if (c == 'z') n = std::max(n, 3);
    if (c == 'x' && i + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
      size_t j = i + 1;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      n = std::max(n, std::stoi(text.substr(i + 1, j - i - 1)));
    }
  }
  return n;
}

bool is_negdef_top_form_2d(const MultiPoly& p) {
  if (p.is_zero()) throw ReebError(ErrKind::ZeroPolynomial, "top form of zero polynomial");
  if (p.nvars() != 2) throw ReebError(ErrKind::ArityError, "expected 2 variables");
  int d = p.total_degree();
  if (d % 2 != 0) return false;
  MultiPoly top = p.top_form();
  // value along the vertical direction
  Rational at01 = top.evaluate({Rational(0), Rational(1)});
  if (sgn(at01) >= 0) return false;
  // u(t) = top(1, t): no real roots and negative somewhere
  MultiPoly line = top.substitute_linear(1, Rational(0), Rational(1));  // x := 1
  UniPoly u = line.to_unipoly_in(2);
  if (u.is_zero()) return false;
  if (sgn(u.eval(Rational(0))) >= 0) return false;
  if (u.degree() > 0 && count_real_roots(u) != 0) return false;
  return true;
}

// ----------------------------------------------------- gcd and squarefree

namespace {

int last_active_var(const MultiPoly& a, const MultiPoly& b) {
  for (int i = std::max(a.nvars(), b.nvars()); i >= 1; --i)
    if (a.degree_in(i) > 0 || b.degree_in(i) > 0) return i;
  return 0;
}

std::vector<MultiPoly> coeffs_in(const MultiPoly& p, int k) {
  std::vector<MultiPoly> out(static_cast<size_t>(p.degree_in(k)) + 1, MultiPoly(p.nvars()));
  for (const auto& [m, c] : p.terms()) {
    Monomial mm = m;
    unsigned e = mm[k - 1];
    mm[k - 1] = 0;
    out[e].add_term(mm, c);
  }
  return out;
}

MultiPoly assemble_in(const std::vector<MultiPoly>& cs, int k, int nvars) {
  MultiPoly r(nvars);
  MultiPoly x = MultiPoly::variable(nvars, k);
  MultiPoly xp = MultiPoly::constant(nvars, Rational(1));
  for (size_t i = 0; i < cs.size(); ++i) {
    if (i) xp = xp * x;
    r = r + cs[i] * xp;
  }
  return r;
}

// normalize: integer-primitive with positive leading (grlex) coefficient
MultiPoly normalize_poly(const MultiPoly& p) {
  if (p.is_zero()) return p;
  Integer l(1);
  for (const auto& [m, c] : p.terms())
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  Integer g(0);
  for (const auto& [m, c] : p.terms()) {
    Rational t = c * Rational(l);
    t.canonicalize();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.get_num().get_mpz_t());
  }
  Rational k = make_rat(l, g);
  if (sgn(p.leading_coeff()) < 0) k = -k;
  return p.scaled(k);
}

MultiPoly prem_in(const MultiPoly& f, const MultiPoly& g, int k) {
  std::vector<MultiPoly> fc = coeffs_in(f, k);
  std::vector<MultiPoly> gc = coeffs_in(g, k);
  int dg = static_cast<int>(gc.size()) - 1;
  const MultiPoly& glc = gc.back();
  std::vector<MultiPoly> r = fc;
  auto deg = [&]() {
    int d = static_cast<int>(r.size()) - 1;
    while (d >= 0 && r[d].is_zero()) --d;
    return d;
  };
  int dr = deg();
  while (dr >= dg) {
    MultiPoly rl = r[dr];
    for (auto& v : r) v = v * glc;
    for (int i = 0; i <= dg; ++i) r[dr - dg + i] = r[dr - dg + i] - rl * gc[i];
    r.resize(dr);  // top coefficient canceled
    dr = deg();
  }
  std::vector<MultiPoly> rr(r.begin(), r.begin() + (dr + 1));
  return assemble_in(rr, k, f.nvars());
}

MultiPoly content_in(const MultiPoly& p, int k);

MultiPoly gcd_rec(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return normalize_poly(b);
  if (b.is_zero()) return normalize_poly(a);
  int k = last_active_var(a, b);
  if (k == 0) return MultiPoly::constant(a.nvars(), Rational(1));
  int da = a.degree_in(k), db = b.degree_in(k);
  if (da == 0 || db == 0) {
    MultiPoly ca = da == 0 ? a : content_in(a, k);
    MultiPoly cb = db == 0 ? b : content_in(b, k);
    return gcd_rec(ca, cb);
  }
  MultiPoly ca = content_in(a, k), cb = content_in(b, k);
  MultiPoly f = poly_divexact(a, ca), g = poly_divexact(b, cb);
  MultiPoly c = gcd_rec(ca, cb);
  if (f.degree_in(k) < g.degree_in(k)) std::swap(f, g);
  while (true) {
    MultiPoly r = prem_in(f, g, k);
    if (r.is_zero()) break;
    if (r.degree_in(k) == 0) return normalize_poly(c);  // coprime in x_k
    MultiPoly cr = content_in(r, k);
    f = g;
    g = poly_divexact(r, cr);
  }
  return normalize_poly(c * poly_divexact(g, content_in(g, k)));
}

MultiPoly content_in(const MultiPoly& p, int k) {
  std::vector<MultiPoly> cs = coeffs_in(p, k);
  MultiPoly g(p.nvars());
  for (const auto& c : cs) {
    if (c.is_zero()) continue;
    g = gcd_rec(g, c);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

}  // namespace

MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars() != b.nvars()) throw ReebError(ErrKind::ArityError, "gcd arity mismatch");
  return gcd_rec(a, b);
}

MultiPoly poly_divexact(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw ReebError(ErrKind::ZeroPolynomial, "division by zero polynomial");
  MultiPoly r = a;
  MultiPoly q(a.nvars());
  const auto& blead = *b.terms().begin();
  while (!r.is_zero()) {
    const auto& rlead = *r.terms().begin();
    Monomial m(a.nvars());
    for (int i = 0; i < a.nvars(); ++i) {
      if (rlead.first[i] < blead.first[i])
        throw ReebError(ErrKind::Internal, "divexact: not divisible");
      m[i] = rlead.first[i] - blead.first[i];
    }
    Rational c = rlead.second / blead.second;
    MultiPoly t(a.nvars());
    t.add_term(m, c);
    q = q + t;
    r = r - t * b;
  }
  return q;
}

MultiPoly squarefree_part(const MultiPoly& p) {
  if (p.is_zero()) throw ReebError(ErrKind::ZeroPolynomial, "squarefree part of zero");
  if (p.is_constant()) return MultiPoly::constant(p.nvars(), Rational(1));
  MultiPoly g = p;
  for (int i = 1; i <= p.nvars(); ++i) {
    MultiPoly d = p.partial_derivative(i);
    if (!d.is_zero()) g = poly_gcd(g, d);
    if (g.is_constant()) break;
  }
  if (g.is_constant()) return normalize_poly(p);
  return normalize_poly(poly_divexact(p, g));
}

MultiplicitySplit multiplicity_split(const MultiPoly& p) {
  // peel p = prod a_i^i: s_j = squarefree part of remaining, b_j = s_j / s_{j+1}
  MultiPoly cur = normalize_poly(p);
  std::vector<MultiPoly> s;  // s_1, s_2, ...
  while (!cur.is_constant()) {
    MultiPoly sj = squarefree_part(cur);
    s.push_back(sj);
    cur = poly_divexact(cur, sj);
  }
  MultiPoly odd = MultiPoly::constant(p.nvars(), Rational(1));
  bool even_nc = false;
  for (size_t j = 0; j < s.size(); ++j) {
    MultiPoly bj = (j + 1 < s.size()) ? poly_divexact(s[j], s[j + 1]) : s[j];
    if (bj.is_constant()) continue;
    if ((j + 1) % 2 == 1)
      odd = odd * bj;
    else
      even_nc = true;
  }
  return {normalize_poly(odd), even_nc};
}

BoxSign sign_on_box(const MultiPoly& p, const Box2& b, int budget) {
  if (p.nvars() != 2) throw ReebError(ErrKind::ArityError, "sign_on_box needs 2 variables");
  std::vector<Box2> queue{b};
  int used = 0;
  int seen_sign = 0;
  while (!queue.empty()) {
    Box2 cur = queue.back();
    queue.pop_back();
    RatInterval v = p.evaluate_interval({cur.x, cur.y});
    if (v.strictly_positive()) {
      if (seen_sign < 0) return BoxSign::ZeroPossible;
      seen_sign = 1;
      continue;
    }
    if (v.strictly_negative()) {
      if (seen_sign > 0) return BoxSign::ZeroPossible;
      seen_sign = -1;
      continue;
    }
    if (used >= budget) return BoxSign::ZeroPossible;
    ++used;
    Rational mx = cur.x.mid(), my = cur.y.mid();
    queue.push_back({{cur.x.lo, mx}, {cur.y.lo, my}});
    queue.push_back({{mx, cur.x.hi}, {cur.y.lo, my}});
    queue.push_back({{cur.x.lo, mx}, {my, cur.y.hi}});
    queue.push_back({{mx, cur.x.hi}, {my, cur.y.hi}});
  }
  return seen_sign > 0 ? BoxSign::Positive : BoxSign::Negative;
}

Rational negdef_bounding_radius(const MultiPoly& q) {
  if (!is_negdef_top_form_2d(q))
    throw ReebError(ErrKind::NotCompact, "bounding radius needs a negative-definite top form");
  MultiPoly top = q.top_form();
  int d = q.total_degree();
  // certified positive lower bound of -top on the unit circle, via the two
  // charts (1,t) and (t,1), |t| <= 1
  auto chart_min = [&](bool xchart) -> Rational {
    MultiPoly line = xchart ? top.substitute_linear(1, Rational(0), Rational(1))
                            : top.substitute_linear(2, Rational(0), Rational(1));
    UniPoly u = xchart ? line.to_unipoly_in(2) : line.to_unipoly_in(1);
    UniPoly nu = u.scaled(Rational(-1));
    // bisect [-1,1] until interval arithmetic certifies a positive floor
    struct Seg {
      Rational lo, hi;
    };
    std::vector<Seg> segs{{Rational(-1), Rational(1)}};
    Rational floor_val(0);
    bool have = false;
    int rounds = 0;
    while (!segs.empty()) {
      if (++rounds > 4096)
        throw ReebError(ErrKind::PrecisionExhausted, "bounding radius: chart refinement stalled");
      Seg s = segs.back();
      segs.pop_back();
      RatInterval t(s.lo, s.hi);
      RatInterval acc(Rational(0));
      for (auto it = nu.coeffs.rbegin(); it != nu.coeffs.rend(); ++it)
        acc = acc * t + RatInterval(*it);
      if (acc.strictly_positive()) {
        if (!have || acc.lo < floor_val) {
          floor_val = acc.lo;
          have = true;
        }
        continue;
      }
      Rational m = midpoint(s.lo, s.hi);
      segs.push_back({s.lo, m});
      segs.push_back({m, s.hi});
    }
    if (!have) throw ReebError(ErrKind::Internal, "bounding radius: empty chart");
    return floor_val;
  };
  Rational c1 = chart_min(true), c2 = chart_min(false);
  Rational c = (c1 < c2 ? c1 : c2);
  // scale chart floor to the unit circle: |(1,t)| <= sqrt(2)
  c /= rat_pow(Rational(2), (d + 2) / 2);
  // l1 mass of the lower-degree part
  Rational mass(0);
  for (const auto& [m, co] : q.terms()) {
    unsigned s = 0;
    for (unsigned e : m) s += e;
    if (static_cast<int>(s) < d) mass += rat_abs(co);
  }
  Rational r = mass / c + 2;
  if (r < 2) r = Rational(2);
  return r;
}

}  // namespace reebforge
