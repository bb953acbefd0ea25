#pragma once
// Irreducible factors of binomials 1 - q^a t^b.
//
// Every 1 - q^a t^b with g = gcd(a, b) splits as prod_{d | g} Phi_d(q^(a/g) t^(b/g))
// with Phi_1(m) normalized to 1 - m. These "atoms" are irreducible and
// pairwise coprime, so products of them are compared by exponent vectors.

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "macdo/qtpoly.hpp"

namespace macdo {

struct Atom {
  int d;      // cyclotomic index >= 1
  int alpha;  // primitive direction, alpha > 0 or (alpha == 0, beta > 0)
  int beta;
  auto operator<=>(const Atom&) const = default;
  std::string str() const;
};

// integer coefficients of the d-th cyclotomic polynomial, low degree first
const std::vector<long long>& cyclotomic_coeffs(int d);
int euler_phi(int d);
int moebius(int n);

// direction and multiplier of q^a t^b: (a, b) = g * (alpha, beta)
struct Direction {
  int g, alpha, beta;
};
Direction direction_of(int a, int b);

QtPoly atom_poly(const Atom& x);
bool atom_divides(const Atom& x, const QtPoly& p);
QtPoly atom_divide(const Atom& x, const QtPoly& p);  // throws when inexact
// largest e with x^e | p
int atom_multiplicity(const Atom& x, QtPoly& p);  // divides p in place

// Multiset of atoms.
class AtomProduct {
 public:
  AtomProduct() = default;
  // atoms of 1 - q^a t^b (times a unit when (a, b) is not normalized)
  static AtomProduct of_binomial(int a, int b);

  const std::map<Atom, int>& atoms() const { return m_; }
  bool empty() const { return m_.empty(); }
  int multiplicity(const Atom& x) const;
  void add(const Atom& x, int e = 1);
  AtomProduct& operator*=(const AtomProduct& o);
  friend AtomProduct operator*(AtomProduct a, const AtomProduct& b) { return a *= b; }
  // exponentwise min / max / truncated difference
  static AtomProduct gcd(const AtomProduct& a, const AtomProduct& b);
  static AtomProduct lcm(const AtomProduct& a, const AtomProduct& b);
  // numerator of a / b
  static AtomProduct num_ratio(const AtomProduct& a, const AtomProduct& b);
  bool divides(const AtomProduct& o) const;  // this | o
  int degree_count() const;
  QtPoly expand() const;

  // exponents k_(a,b) with prod (1 - q^a t^b)^k equal to this product;
  // false when some k would be negative
  bool product_form(std::map<std::pair<int, int>, int>& out) const;

  friend bool operator==(const AtomProduct&, const AtomProduct&) = default;
  std::string str() const;

 private:
  std::map<Atom, int> m_;
};

}  // namespace macdo
