#pragma once
// Sparse Laurent polynomials in q and t with integer coefficients.

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "macdo/int.hpp"

namespace macdo {

// (dq, dt) packed so that unsigned order equals lexicographic order.
using QtKey = uint64_t;
constexpr int64_t kQtOff = int64_t(1) << 31;
inline QtKey qt_key(int64_t dq, int64_t dt) {
  return (uint64_t(dq + kQtOff) << 32) | uint64_t(uint32_t(dt + kQtOff));
}
inline int qt_dq(QtKey k) { return int(int64_t(k >> 32) - kQtOff); }
inline int qt_dt(QtKey k) { return int(int64_t(k & 0xffffffffu) - kQtOff); }
// shifting a packed key by (a, b); valid while dt stays in range
inline QtKey qt_shift(QtKey k, int a, int b) {
  return k + (uint64_t(int64_t(a)) << 32) + uint64_t(int64_t(b));
}

struct QtTerm {
  QtKey key;
  Int c;
};

class QtPoly {
 public:
  QtPoly() = default;
  QtPoly(long long c) {  // NOLINT
    if (c) terms_.push_back({qt_key(0, 0), Int(c)});
  }
  explicit QtPoly(const Int& c) {
    if (!c.is_zero()) terms_.push_back({qt_key(0, 0), c});
  }
  static QtPoly monomial(const Int& c, int dq, int dt) {
    QtPoly p;
    if (!c.is_zero()) p.terms_.push_back({qt_key(dq, dt), c});
    return p;
  }
  static QtPoly q() { return monomial(1, 1, 0); }
  static QtPoly t() { return monomial(1, 0, 1); }
  // 1 - q^a t^b
  static QtPoly one_minus(int a, int b);
  // build from unsorted, possibly duplicated terms
  static QtPoly from_terms(std::vector<QtTerm> terms);

  const std::vector<QtTerm>& terms() const { return terms_; }
  std::vector<QtTerm>& mut_terms() { return terms_; }
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].key == qt_key(0, 0));
  }
  bool is_one() const {
    return terms_.size() == 1 && terms_[0].key == qt_key(0, 0) && terms_[0].c.is_one();
  }
  bool is_monomial() const { return terms_.size() == 1; }
  Int constant_term() const;
  Int coeff(int dq, int dt) const;

  int min_q() const;
  int max_q() const;
  int min_t() const;
  int max_t() const;

  QtPoly operator-() const;
  QtPoly& operator+=(const QtPoly& o);
  QtPoly& operator-=(const QtPoly& o);
  friend QtPoly operator+(const QtPoly& a, const QtPoly& b);
  friend QtPoly operator-(const QtPoly& a, const QtPoly& b);
  friend QtPoly operator*(const QtPoly& a, const QtPoly& b);
  QtPoly& operator*=(const QtPoly& o) { return *this = *this * o; }

  // this += c * q^a t^b * o
  void add_scaled(const QtPoly& o, const Int& c, int a, int b);
  QtPoly shifted(int a, int b) const;
  QtPoly scaled(const Int& c) const;
  Int content() const;  // positive gcd of coefficients
  QtPoly& divexact(const Int& c);
  QtPoly pow(unsigned e) const;

  // substitute (q, t) -> (epsq * q^aq t^bq, t^...) style monomial maps
  QtPoly map_exponents(const std::function<std::pair<int, int>(int, int)>& f) const;

  friend bool operator==(const QtPoly& a, const QtPoly& b);
  friend bool operator!=(const QtPoly& a, const QtPoly& b) { return !(a == b); }
  size_t hash() const;

  // canonical text, descending lexicographic (dq, dt)
  std::string str() const;

 private:
  std::vector<QtTerm> terms_;  // sorted ascending by key, no zeros
};

std::string render_qt_monomial(int dq, int dt);

}  // namespace macdo
