#pragma once
// Specialization of M_v at q^a t^b = 1 and checks of factorization identities.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "macdo/cyclo.hpp"
#include "macdo/denom.hpp"

namespace macdo {

using UPolyX = Poly<UPoly>;
using SpecPolyX = Poly<CycloFraction>;

// q = zeta_a^omega u^{-b/d}, t = u^{a/d}
struct SpecPoint {
  int a = 1, b = 1, d = 1;
  int omega = 1;  // exponent of zeta_a; needs gcd(omega, d) = 1

  static SpecPoint make(int a, int b, std::optional<int> omega = std::nullopt);
  // "q^2*t^3=1", "q*t^2=1", "qt=1"
  static SpecPoint parse(const std::string& s, std::optional<int> omega = std::nullopt);
  int order() const { return a; }
  Cyclo q_unit() const { return Cyclo::zeta(a, omega); }
  int q_exp() const { return -b / d; }
  int t_exp() const { return a / d; }
  std::string str() const;
};

struct DegeneratePolynomial : std::domain_error {
  std::string factor;
  explicit DegeneratePolynomial(const std::string& f)
      : std::domain_error("polynomial degenerates: factor " + f + " vanishes"), factor(f) {}
};

// q^i t^j at the point
UPoly spec_monomial(const SpecPoint& p, int i, int j);
UPoly specialize(const QtPoly& c, const SpecPoint& p);

// (1): a factor (a',b') of Den_v is a multiple of (a,b); throws NotProductForm
bool degenerates(const Composition& v, int a, int b);
// (2): 1 - q^a t^b divides Den_v, on atoms
bool degenerates_divides(const Composition& v, int a, int b);
// (3): some denominator atom vanishes at the point
bool degenerates_subst(const Composition& v, const SpecPoint& p);
// same three tests on a single bivariate factor 1 - q^a' t^b'
bool factor_degenerates(int a2, int b2, int a, int b);
bool factor_degenerates_divides(int a2, int b2, int a, int b);
bool factor_degenerates_subst(int a2, int b2, const SpecPoint& p);

// numerator of M_v at the point and the common denominator; the denominator
// is nonzero unless the polynomial degenerates
struct SpecializedRep {
  UPolyX num;
  UPoly den;
};
SpecializedRep specialize_rep(const MacRep& m, const SpecPoint& p);
// exact M_v at the point, reduced coefficients; throws DegeneratePolynomial
SpecPolyX specialize_mac(const Composition& v, const SpecPoint& p);

// x_i -> images[i], each image a polynomial in the target variables
template <class C>
Poly<C> substitute_x(const Poly<C>& p, const std::vector<Poly<C>>& images, int target_vars) {
  if (int(images.size()) != p.nvars()) throw std::invalid_argument("substitute_x: image count");
  for (auto& im : images)
    if (im.nvars() != target_vars) throw std::invalid_argument("substitute_x: image variables");
  // powers of each image, built on demand
  std::vector<std::vector<Poly<C>>> pw(images.size());
  auto power = [&](size_t i, int e) -> const Poly<C>& {
    auto& v = pw[i];
    if (v.empty()) v.push_back(Poly<C>::constant(target_vars, C(1)));
    while (int(v.size()) <= e) v.push_back(v.back() * images[i]);
    return v[size_t(e)];
  };
  std::vector<typename Poly<C>::Term> raw;
  for (auto& [m, c] : p.terms()) {
    Poly<C> r = Poly<C>::constant(target_vars, c);
    for (int i = 0; i < p.nvars(); ++i)
      if (int e = m.get(i)) r = r * power(size_t(i), e);
    for (auto& tm : r.terms()) raw.push_back(tm);
  }
  return Poly<C>::from_terms(target_vars, std::move(raw));
}

// Expressions over target variables, q, t, the parameter u (under a chosen name)
// and w = zeta_a: integers, + - * ^ and parentheses.
UPolyX parse_expression(const std::string& text, const std::vector<std::string>& vars,
                        const SpecPoint& p, const std::string& param = "u");

// Identity file, one directive per line, '#' comments:
//   name   <label>
//   mac    <composition>
//   point  q^a*t^b=1 [omega=k]
//   param  <name of u>
//   vars   <target variable names>
//   xsub   <image of x_1>, <image of x_2>, ...     (optional; identity otherwise)
//   rhs    <expression>                            (may continue on following lines
//                                                   starting with whitespace)
struct Identity {
  std::string name;
  Composition v;
  SpecPoint point;
  std::string param = "u";
  std::vector<std::string> vars;
  std::vector<std::string> xsub;
  std::string rhs;
};
Identity parse_identity(const std::string& text);
Identity load_identity(const std::string& path);

struct IdentityResult {
  bool degenerate = false;
  bool equal = false;
  int lhs_degree = -1, rhs_degree = -1;
  // lhs / rhs when it is a scalar in Q(zeta_a)(u), else empty
  std::optional<CycloFraction> ratio;
  std::string detail;
};
IdentityResult check_identity(const Identity& id);

}  // namespace macdo
