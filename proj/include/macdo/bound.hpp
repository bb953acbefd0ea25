#pragma once
// q^e t^f * (product of atoms), up to a unit: denominators, ratio numerators, divisor bounds.

#include <algorithm>
#include <string>

#include "macdo/atoms.hpp"
#include "macdo/factored.hpp"

namespace macdo {

struct Bound {
  int qexp = 0;
  int texp = 0;
  AtomProduct atoms;

  static Bound binomial(int a, int b) { return {0, 0, AtomProduct::of_binomial(a, b)}; }
  static Bound monomial(int qe, int te) { return {qe, te, {}}; }

  Bound& operator*=(const Bound& o) {
    qexp += o.qexp;
    texp += o.texp;
    atoms *= o.atoms;
    return *this;
  }
  friend Bound operator*(Bound a, const Bound& b) { return a *= b; }
  static Bound gcd(const Bound& a, const Bound& b) {
    return {std::min(a.qexp, b.qexp), std::min(a.texp, b.texp), AtomProduct::gcd(a.atoms, b.atoms)};
  }
  static Bound lcm(const Bound& a, const Bound& b) {
    return {std::max(a.qexp, b.qexp), std::max(a.texp, b.texp), AtomProduct::lcm(a.atoms, b.atoms)};
  }
  // this | o
  bool divides(const Bound& o) const {
    return qexp <= o.qexp && texp <= o.texp && atoms.divides(o.atoms);
  }
  bool product_form() const {
    std::map<std::pair<int, int>, int> f;
    return atoms.product_form(f);
  }
  // throws NotProductForm
  FactoredQt factored() const { return FactoredQt::from_atoms(atoms, qexp, texp); }
  QtPoly expand() const { return atoms.expand().shifted(qexp, texp); }
  // binomial form when it exists, cyclotomic atoms otherwise
  std::string str() const {
    if (product_form()) return factored().str();
    std::string s;
    if (qexp) s += qexp == 1 ? "q " : "q^" + std::to_string(qexp) + " ";
    if (texp) s += texp == 1 ? "t " : "t^" + std::to_string(texp) + " ";
    return s + atoms.str();
  }
  friend bool operator==(const Bound&, const Bound&) = default;
};

}  // namespace macdo
