#include "macdo/qtfraction.hpp"

#include <algorithm>

namespace macdo {

namespace {

// dense univariate polynomials over Z, low degree first, no trailing zeros
using UPoly = std::vector<Int>;

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Int ucontent(const UPoly& p) {
  Int g(0);
  for (auto& c : p) {
    g = Int::gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

UPoly umul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero())
      for (size_t j = 0; j < b.size(); ++j) r[i + j].addmul(a[i], b[j]);
  trim(r);
  return r;
}

UPoly usub(const UPoly& a, const UPoly& b) {
  UPoly r = a;
  if (r.size() < b.size()) r.resize(b.size(), Int(0));
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

// exact division in Z[t]
UPoly udivexact(UPoly a, const UPoly& b) {
  if (a.empty()) return {};
  size_t db = b.size() - 1;
  UPoly qv(a.size() - db, Int(0));
  for (size_t i = a.size(); i-- > db;) {
    if (a[i].is_zero()) continue;
    Int c = a[i];
    c.divexact(b[db]);
    for (size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    qv[i - db] = std::move(c);
  }
  trim(qv);
  return qv;
}

// pseudo remainder of a by b in Z[t]
UPoly uprem(UPoly a, const UPoly& b) {
  size_t db = b.size() - 1;
  while (a.size() > db && !a.empty()) {
    Int lc = a.back();
    size_t sh = a.size() - 1 - db;
    for (auto& c : a) c *= b.back();
    for (size_t j = 0; j <= db; ++j) a[sh + j] -= lc * b[j];
    trim(a);
  }
  return a;
}

UPoly uprimitive(UPoly p) {
  Int c = ucontent(p);
  if (!c.is_zero() && !c.is_one())
    for (auto& x : p) x.divexact(c);
  if (!p.empty() && p.back().sign() < 0)
    for (auto& x : p) x = -x;
  return p;
}

UPoly ugcd(UPoly a, UPoly b) {
  if (a.empty()) std::swap(a, b);
  if (b.empty()) {
    if (!a.empty() && a.back().sign() < 0)
      for (auto& x : a) x = -x;
    return a;
  }
  Int c = Int::gcd(ucontent(a), ucontent(b));
  a = uprimitive(a);
  b = uprimitive(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    UPoly r = uprem(a, b);
    a = std::move(b);
    b = uprimitive(r);
  }
  a = uprimitive(a);
  for (auto& x : a) x *= c;
  return a;
}

// bivariate: index by q-degree, entries in Z[t]
using BPoly = std::vector<UPoly>;

void btrim(BPoly& p) {
  while (!p.empty() && p.back().empty()) p.pop_back();
}

BPoly to_b(const QtPoly& p) {
  BPoly r;
  for (auto& tm : p.terms()) {
    int i = qt_dq(tm.key), j = qt_dt(tm.key);
    if (r.size() <= size_t(i)) r.resize(i + 1);
    if (r[i].size() <= size_t(j)) r[i].resize(j + 1, Int(0));
    r[i][j] = tm.c;
  }
  for (auto& u : r) trim(u);
  btrim(r);
  return r;
}

QtPoly from_b(const BPoly& b) {
  std::vector<QtTerm> raw;
  for (size_t i = 0; i < b.size(); ++i)
    for (size_t j = 0; j < b[i].size(); ++j)
      if (!b[i][j].is_zero()) raw.push_back({qt_key(int(i), int(j)), b[i][j]});
  return QtPoly::from_terms(std::move(raw));
}

UPoly bcontent(const BPoly& p) {
  UPoly g;
  for (auto& c : p) {
    if (c.empty()) continue;
    g = ugcd(g, c);
    if (g.size() == 1) break;
  }
  return g;
}

BPoly bdiv_u(const BPoly& p, const UPoly& c) {
  BPoly r;
  r.reserve(p.size());
  for (auto& x : p) r.push_back(x.empty() ? UPoly{} : udivexact(x, c));
  return r;
}

BPoly bprem(BPoly a, const BPoly& b) {
  size_t db = b.size() - 1;
  while (a.size() > db && !a.empty()) {
    UPoly lc = a.back();
    size_t sh = a.size() - 1 - db;
    for (auto& c : a) c = umul(c, b.back());
    for (size_t j = 0; j <= db; ++j) a[sh + j] = usub(a[sh + j], umul(lc, b[j]));
    btrim(a);
  }
  return a;
}

BPoly bprimitive(const BPoly& p) {
  if (p.empty()) return p;
  UPoly c = bcontent(p);
  // leading coefficient sign positive
  BPoly r = bdiv_u(p, c);
  if (!r.empty() && r.back().back().sign() < 0)
    for (auto& u : r)
      for (auto& x : u) x = -x;
  return r;
}

}  // namespace

bool qt_try_divide(const QtPoly& a, const QtPoly& b, QtPoly& quo) {
  if (b.is_zero()) throw DivisionByZero();
  // shift both into the polynomial ring
  int sa = a.min_q(), ta = a.min_t(), sb = b.min_q(), tb = b.min_t();
  QtPoly r = a.shifted(-sa, -ta), d = b.shifted(-sb, -tb);
  std::vector<QtTerm> out;
  const QtTerm& ld = d.terms().back();
  int ldq = qt_dq(ld.key), ldt = qt_dt(ld.key);
  while (!r.is_zero()) {
    const QtTerm& lr = r.terms().back();
    int eq = qt_dq(lr.key) - ldq, et = qt_dt(lr.key) - ldt;
    if (eq < 0 || et < 0) return false;
    mpz_class cr = lr.c.to_mpz(), cd = ld.c.to_mpz();
    if (!mpz_divisible_p(cr.get_mpz_t(), cd.get_mpz_t())) return false;
    Int c(mpz_class(cr / cd));
    r.add_scaled(d, -c, eq, et);
    out.push_back({qt_key(eq, et), c});
  }
  quo = QtPoly::from_terms(std::move(out)).shifted(sa - sb, ta - tb);
  return true;
}

QtPoly qt_divexact(const QtPoly& a, const QtPoly& b) {
  QtPoly r;
  if (!qt_try_divide(a, b, r)) throw std::logic_error("qt_divexact: inexact division");
  return r;
}

QtPoly qt_gcd(const QtPoly& a, const QtPoly& b) {
  if (a.is_zero() && b.is_zero()) return QtPoly();
  if (a.is_zero() || b.is_zero()) {
    QtPoly x = a.is_zero() ? b : a;
    if (x.terms().back().c.sign() < 0) x = -x;
    return x;
  }
  // monomial part
  QtPoly x = a.shifted(-a.min_q(), -a.min_t()), y = b.shifted(-b.min_q(), -b.min_t());
  BPoly A = to_b(x), B = to_b(y);
  UPoly ca = bcontent(A), cb = bcontent(B);
  UPoly c = ugcd(ca, cb);
  A = bprimitive(A);
  B = bprimitive(B);
  if (A.size() < B.size()) std::swap(A, B);
  while (!B.empty()) {
    BPoly r = bprem(A, B);
    A = std::move(B);
    B = bprimitive(r);
  }
  A = bprimitive(A);
  for (auto& u : A) u = umul(u, c);
  QtPoly g = from_b(A);
  // common monomial factor of a and b
  int gq = std::min(a.min_q(), b.min_q()), gt = std::min(a.min_t(), b.min_t());
  if (gq < 0) gq = 0;
  if (gt < 0) gt = 0;
  g = g.shifted(gq, gt);
  if (g.terms().back().c.sign() < 0) g = -g;
  return g;
}

void QtFraction::reduce() {
  if (den_.is_zero()) throw DivisionByZero();
  if (num_.is_zero()) {
    den_ = QtPoly(1);
    return;
  }
  // clear Laurent exponents and common monomials
  int mq = std::min(num_.min_q(), den_.min_q()), mt = std::min(num_.min_t(), den_.min_t());
  num_ = num_.shifted(-mq, -mt);
  den_ = den_.shifted(-mq, -mt);
  if (!den_.is_monomial()) {
    QtPoly g = qt_gcd(num_, den_);
    if (!g.is_one()) {
      num_ = qt_divexact(num_, g);
      den_ = qt_divexact(den_, g);
    }
  }
  Int c = Int::gcd(num_.content(), den_.content());
  if (!c.is_one()) {
    num_.divexact(c);
    den_.divexact(c);
  }
  if (den_.terms().back().c.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

QtFraction operator+(const QtFraction& a, const QtFraction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return QtFraction(a.num_ + b.num_, a.den_);
  return QtFraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

QtFraction operator-(const QtFraction& a, const QtFraction& b) { return a + (-b); }

QtFraction operator*(const QtFraction& a, const QtFraction& b) {
  if (a.is_zero() || b.is_zero()) return QtFraction();
  if (a.den_.is_one() && b.den_.is_one()) return QtFraction(a.num_ * b.num_, QtPoly(1));
  return QtFraction(a.num_ * b.num_, a.den_ * b.den_);
}

QtFraction QtFraction::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return QtFraction(den_, num_);
}

QtFraction operator/(const QtFraction& a, const QtFraction& b) { return a * b.inverse(); }

QtFraction QtFraction::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  return QtFraction(num_.pow(unsigned(e)), den_.pow(unsigned(e)));
}

std::string QtFraction::str() const {
  std::string n = num_.str();
  if (den_.is_one()) return n;
  std::string ns = num_.size() > 1 ? "(" + n + ")" : n, ds = den_.str();
  // a single term with a product needs parentheses in the denominator
  if (den_.size() > 1 || ds.find('*') != std::string::npos) ds = "(" + ds + ")";
  return ns + "/" + ds;
}

}  // namespace macdo
