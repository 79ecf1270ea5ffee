#ifndef REEBFORGE_MULTIPOLY_HPP
#define REEBFORGE_MULTIPOLY_HPP

#include <map>
#include <string>
#include <vector>

#include "rational.hpp"
#include "unipoly.hpp"

namespace reebforge {

using Monomial = std::vector<unsigned>;

// Graded lex, leading term first.
struct GrlexDesc {
  bool operator()(const Monomial& a, const Monomial& b) const {
    unsigned da = 0, db = 0;
    for (unsigned e : a) da += e;
    for (unsigned e : b) db += e;
    if (da != db) return da > db;
    return a > b;
  }
};

// Sparse multivariate polynomial with exact rational coefficients.
class MultiPoly {
public:
  using TermMap = std::map<Monomial, Rational, GrlexDesc>;

  explicit MultiPoly(int nvars = 1) : nvars_(nvars) {
    if (nvars < 1) throw ReebError(ErrKind::BadInput, "nvars must be positive");
  }

  static MultiPoly constant(int nvars, const Rational& c);
  static MultiPoly variable(int nvars, int index);  // 1-based
  static MultiPoly from_unipoly(const UniPoly& u, int nvars, int index);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && total_degree() == 0); }
  int total_degree() const;  // degree of zero polynomial is 0
  int degree_in(int index) const;
  const TermMap& terms() const { return terms_; }
  const Rational& leading_coeff() const;

  void add_term(const Monomial& m, const Rational& c);

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator-() const;
  bool operator==(const MultiPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
  MultiPoly scaled(const Rational& k) const;
  MultiPoly pow(unsigned e) const;

  MultiPoly partial_derivative(int index) const;  // 1-based
  Rational evaluate(const std::vector<Rational>& point) const;
  RatInterval evaluate_interval(const std::vector<RatInterval>& box) const;

  UniPoly substitute_first(const Rational& a) const;  // 2 vars: q(a, .)
  UniPoly to_unipoly() const;                         // requires effectively univariate
  UniPoly to_unipoly_in(int index) const;             // other vars must not appear
  MultiPoly swap_vars(int i, int j) const;
  MultiPoly substitute_linear(int index, const Rational& a, const Rational& b) const;  // x_i := a*x_i + b
  MultiPoly append_var() const;  // same polynomial in nvars+1 variables

  MultiPoly top_form() const;

  std::string format() const;

private:
  int nvars_;
  TermMap terms_;
};

MultiPoly parse_poly(const std::string& text, int nvars);
inline std::string format_poly(const MultiPoly& p) { return p.format(); }

bool is_negdef_top_form_2d(const MultiPoly& p);

// gcd over Q[x1..xn], integer-primitive with positive leading coefficient
MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);
MultiPoly poly_divexact(const MultiPoly& a, const MultiPoly& b);

MultiPoly squarefree_part(const MultiPoly& p);

// p = odd * (even square factors); see multiplicity chain. even_nonconstant is
// set when some factor has even multiplicity.
struct MultiplicitySplit {
  MultiPoly odd;
  bool even_nonconstant;
};
MultiplicitySplit multiplicity_split(const MultiPoly& p);

BoxSign sign_on_box(const MultiPoly& p, const Box2& b, int budget);

// Certified R with {q >= 0} inside the open disc of radius R, for q with a
// negative-definite top form.
Rational negdef_bounding_radius(const MultiPoly& q);

int infer_nvars(const std::string& text);

}  // namespace reebforge

#endif
