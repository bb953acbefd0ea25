#pragma once
// unit * q^e * t^f * prod (1 - q^a t^b)^m

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "macdo/atoms.hpp"
#include "macdo/qtpoly.hpp"

namespace macdo {

struct NotProductForm : std::runtime_error {
  std::string residual;
  explicit NotProductForm(const std::string& r)
      : std::runtime_error("not a product of binomials 1 - q^a t^b; residual: " + r),
        residual(r) {}
};

struct FactoredQt {
  mpq_class unit = 1;
  int qexp = 0;
  int texp = 0;
  std::map<std::pair<int, int>, int> factors;  // (a, b) -> multiplicity

  // throws NotProductForm when the atoms do not recombine
  static FactoredQt from_atoms(const AtomProduct& atoms, int qexp = 0, int texp = 0,
                               mpq_class unit = 1);
  AtomProduct atoms() const;
  QtPoly expand() const;  // requires an integer unit
  // "q^3 (1-q^2 t) (1-q t) (1-q^3 t^2)"
  std::string str() const;
  // equal up to the unit
  bool same_shape(const FactoredQt& o) const {
    return qexp == o.qexp && texp == o.texp && factors == o.factors;
  }
  friend bool operator==(const FactoredQt& a, const FactoredQt& b) {
    return a.unit == b.unit && a.same_shape(b);
  }
};

// one factor "(1-q^a t^b)"
std::string render_binomial(int a, int b);

// Exact factorization into the form above; throws NotProductForm.
FactoredQt factor_qt(const QtPoly& p);
// as factor_qt but keeps the atoms when recombination fails
AtomProduct factor_atoms(const QtPoly& p, int& qexp, int& texp, Int& unit);

// true iff 1 - q^a t^b divides 1 - q^a' t^b', i.e. (a', b') = r (a, b), r >= 1
bool divides_spec(std::pair<int, int> target, std::pair<int, int> factor);

}  // namespace macdo
