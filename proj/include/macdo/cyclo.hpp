#pragma once
// Exact arithmetic in Q(zeta_n), Laurent polynomials in u over it, and their fractions.

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace macdo {

// n-th cyclotomic polynomial, ascending integer coefficients
const std::vector<mpz_class>& cyclotomic_poly(int n);

// element of Q(zeta_n) as a residue modulo Phi_n; order 1 is Q itself and
// mixes with any order
class Cyclo {
 public:
  Cyclo() = default;
  Cyclo(long long c);  // NOLINT
  explicit Cyclo(const mpq_class& c);
  static Cyclo zeta(int n, long long k);  // zeta_n^k

  int order() const { return n_; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_rational() const { return c_.size() <= 1; }
  mpq_class rational() const { return c_.empty() ? mpq_class(0) : c_[0]; }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  Cyclo operator-() const;
  friend Cyclo operator+(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator-(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator/(const Cyclo& a, const Cyclo& b);
  Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
  Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
  Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }
  Cyclo inverse() const;
  friend bool operator==(const Cyclo& a, const Cyclo& b);
  friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

  // "3", "-1/2", "(1+2*w)" with w = zeta_n
  std::string str() const;

 private:
  static Cyclo make(int n, std::vector<mpq_class> c);  // reduces mod Phi_n
  void trim();
  int n_ = 1;
  std::vector<mpq_class> c_;  // ascending powers of zeta, no trailing zeros
};

// Laurent polynomial in u
class UPoly {
 public:
  UPoly() = default;
  UPoly(long long c) : UPoly(Cyclo(c)) {}  // NOLINT
  UPoly(const Cyclo& c);                   // NOLINT
  static UPoly monomial(const Cyclo& c, int e);
  static UPoly u() { return monomial(1, 1); }
  static UPoly from_map(const std::map<int, Cyclo>& m);

  bool is_zero() const { return c_.empty(); }
  int low() const { return low_; }
  int high() const { return low_ + int(c_.size()) - 1; }
  Cyclo coeff(int e) const;
  const Cyclo& lead() const { return c_.back(); }
  bool is_monomial() const { return c_.size() == 1; }
  bool is_constant() const { return c_.empty() || (c_.size() == 1 && low_ == 0); }

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  UPoly& operator+=(const UPoly& o) { return *this = *this + o; }
  UPoly& operator-=(const UPoly& o) { return *this = *this - o; }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }
  UPoly scaled(const Cyclo& c) const;
  UPoly shifted(int e) const;
  UPoly pow(unsigned e) const;
  friend bool operator==(const UPoly& a, const UPoly& b);
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  // polynomial division of ordinary parts (low() must be 0 for both)
  static void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
  // monic gcd of the ordinary parts after removing powers of u
  static UPoly gcd(UPoly a, UPoly b);

  std::string str(const std::string& var = "u") const;

 private:
  void trim();
  int low_ = 0;
  std::vector<Cyclo> c_;  // c_[i] is the coefficient of u^{low_+i}
};

struct ZeroDenominator : std::domain_error {
  ZeroDenominator() : std::domain_error("zero denominator") {}
};

// num / den, den monic with nonzero constant term, gcd 1
class CycloFraction {
 public:
  CycloFraction() = default;
  CycloFraction(long long c) : num_(c) {}  // NOLINT
  CycloFraction(const UPoly& p) : num_(p) {}  // NOLINT
  CycloFraction(const UPoly& n, const UPoly& d);

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_poly() const { return den_ == UPoly(1); }

  CycloFraction operator-() const;
  friend CycloFraction operator+(const CycloFraction& a, const CycloFraction& b);
  friend CycloFraction operator-(const CycloFraction& a, const CycloFraction& b);
  friend CycloFraction operator*(const CycloFraction& a, const CycloFraction& b);
  friend CycloFraction operator/(const CycloFraction& a, const CycloFraction& b);
  friend bool operator==(const CycloFraction& a, const CycloFraction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const CycloFraction& a, const CycloFraction& b) { return !(a == b); }

  std::string str(const std::string& var = "u") const;

 private:
  void normalize();
  UPoly num_, den_ = UPoly(1);
};

}  // namespace macdo
