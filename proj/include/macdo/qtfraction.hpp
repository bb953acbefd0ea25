#pragma once
// Reduced fractions of integer polynomials in q and t.

#include <stdexcept>
#include <string>

#include "macdo/qtpoly.hpp"

namespace macdo {

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero fraction") {}
};

// gcd in Z[q, t] of polynomials with nonnegative exponents; positive leading coefficient
QtPoly qt_gcd(const QtPoly& a, const QtPoly& b);
// exact quotient a / b in Z[q^+-, t^+-]; throws when b does not divide a
QtPoly qt_divexact(const QtPoly& a, const QtPoly& b);
// polynomial division attempt; false when not exact
bool qt_try_divide(const QtPoly& a, const QtPoly& b, QtPoly& quo);

class QtFraction {
 public:
  QtFraction() : den_(1) {}
  QtFraction(long long c) : num_(c), den_(1) {}  // NOLINT
  QtFraction(const QtPoly& p) : num_(p), den_(1) { reduce(); }  // NOLINT
  QtFraction(const QtPoly& n, const QtPoly& d) : num_(n), den_(d) {
    if (den_.is_zero()) throw DivisionByZero();
    reduce();
  }
  static QtFraction q() { return QtFraction(QtPoly::q()); }
  static QtFraction t() { return QtFraction(QtPoly::t()); }
  // builds without gcd when the caller knows the fraction is reduced
  static QtFraction unchecked(QtPoly n, QtPoly d) {
    QtFraction r;
    r.num_ = std::move(n);
    r.den_ = std::move(d);
    return r;
  }

  const QtPoly& num() const { return num_; }
  const QtPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  QtFraction operator-() const { return unchecked(-num_, den_); }
  friend QtFraction operator+(const QtFraction& a, const QtFraction& b);
  friend QtFraction operator-(const QtFraction& a, const QtFraction& b);
  friend QtFraction operator*(const QtFraction& a, const QtFraction& b);
  friend QtFraction operator/(const QtFraction& a, const QtFraction& b);
  QtFraction& operator+=(const QtFraction& o) { return *this = *this + o; }
  QtFraction& operator-=(const QtFraction& o) { return *this = *this - o; }
  QtFraction& operator*=(const QtFraction& o) { return *this = *this * o; }
  QtFraction inverse() const;
  QtFraction pow(int e) const;

  friend bool operator==(const QtFraction& a, const QtFraction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const QtFraction& a, const QtFraction& b) { return !(a == b); }

  // "(t - 1)/(q*t - 1)"; parentheses only around multi-term parts
  std::string str() const;
  // re-run the normalization; idempotent
  void reduce();

 private:
  QtPoly num_, den_;
};

}  // namespace macdo
