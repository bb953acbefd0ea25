#include "macdo/cyclo.hpp"

#include <map>
#include <mutex>

namespace macdo {

namespace {

using QVec = std::vector<mpq_class>;

void qtrim(QVec& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

// a mod m, m monic over Z
void reduce_mod(QVec& a, const std::vector<mpz_class>& m) {
  int dm = int(m.size()) - 1;
  for (int i = int(a.size()) - 1; i >= dm; --i) {
    if (a[i] == 0) continue;
    mpq_class c = a[i];
    for (int j = 0; j <= dm; ++j) a[i - dm + j] -= c * mpq_class(m[j]);
  }
  if (int(a.size()) > dm) a.resize(dm);
  qtrim(a);
}

void qdivmod(QVec a, const QVec& b, QVec& q, QVec& r) {
  qtrim(a);
  int db = int(b.size()) - 1;
  q.assign(a.size() > b.size() - 1 ? a.size() - db : 0, 0);
  mpq_class inv = 1 / b.back();
  for (int i = int(a.size()) - 1; i >= db; --i) {
    if (a[i] == 0) continue;
    mpq_class c = a[i] * inv;
    q[i - db] = c;
    for (int j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  qtrim(a);
  qtrim(q);
  r = std::move(a);
}

QVec qmul(const QVec& a, const QVec& b) {
  if (a.empty() || b.empty()) return {};
  QVec r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0)
      for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  qtrim(r);
  return r;
}

QVec qsub(QVec a, const QVec& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  qtrim(a);
  return a;
}

}  // namespace

const std::vector<mpz_class>& cyclotomic_poly(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<mpz_class>> cache;
  if (n < 1) throw std::invalid_argument("cyclotomic order must be >= 1");
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  // x^n - 1 divided by Phi_d for the proper divisors d
  std::vector<mpz_class> p(size_t(n) + 1, 0);
  p[0] = -1;
  p[size_t(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d) continue;
    const auto& m = cyclotomic_poly(d);
    int dm = int(m.size()) - 1;
    std::vector<mpz_class> q(p.size() - size_t(dm), 0);
    for (int i = int(p.size()) - 1; i >= dm; --i) {
      mpz_class c = p[size_t(i)];
      q[size_t(i - dm)] = c;
      if (c != 0)
        for (int j = 0; j <= dm; ++j) p[size_t(i - dm + j)] -= c * m[size_t(j)];
    }
    p = std::move(q);
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(n, std::move(p)).first->second;
}

Cyclo::Cyclo(long long c) {
  if (c) c_.push_back(mpq_class(long(c)));
}

Cyclo::Cyclo(const mpq_class& c) {
  if (c != 0) c_.push_back(c);
}

void Cyclo::trim() {
  qtrim(c_);
  if (c_.size() <= 1) n_ = 1;
}

Cyclo Cyclo::make(int n, std::vector<mpq_class> c) {
  Cyclo r;
  r.n_ = n;
  if (n > 1) reduce_mod(c, cyclotomic_poly(n));
  r.c_ = std::move(c);
  r.trim();
  return r;
}

Cyclo Cyclo::zeta(int n, long long k) {
  if (n < 1) throw std::invalid_argument("cyclotomic order must be >= 1");
  k %= n;
  if (k < 0) k += n;
  QVec c(size_t(k) + 1, 0);
  c[size_t(k)] = 1;
  return make(n, std::move(c));
}

namespace {

int common_order(const Cyclo& a, const Cyclo& b) {
  int x = a.order(), y = b.order();
  if (x == 1) return y;
  if (y == 1 || x == y) return x;
  throw std::invalid_argument("mixed cyclotomic orders " + std::to_string(x) + " and " +
                              std::to_string(y));
}

}  // namespace

Cyclo Cyclo::operator-() const {
  Cyclo r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyclo operator+(const Cyclo& a, const Cyclo& b) {
  int n = common_order(a, b);
  QVec c = a.c_;
  if (c.size() < b.c_.size()) c.resize(b.c_.size(), 0);
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  Cyclo r;
  r.n_ = n;
  r.c_ = std::move(c);
  r.trim();
  return r;
}

Cyclo operator-(const Cyclo& a, const Cyclo& b) { return a + (-b); }

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
  int n = common_order(a, b);
  if (a.c_.size() == 1) {
    Cyclo r = b;
    for (auto& x : r.c_) x *= a.c_[0];
    r.n_ = b.n_;
    return r;
  }
  if (b.c_.size() == 1) return b * a;
  return Cyclo::make(n, qmul(a.c_, b.c_));
}

Cyclo Cyclo::inverse() const {
  if (is_zero()) throw ZeroDenominator();
  if (c_.size() == 1) return Cyclo(mpq_class(1 / c_[0]));
  // extended Euclid against Phi_n
  auto& phi = cyclotomic_poly(n_);
  QVec r0(phi.begin(), phi.end()), r1 = c_, s0, s1{1};
  while (!(r1.size() == 1)) {
    QVec q, r;
    qdivmod(r0, r1, q, r);
    if (r.empty()) throw std::logic_error("cyclotomic inverse: common factor");
    QVec s = qsub(s0, qmul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  mpq_class inv = 1 / r1[0];
  for (auto& x : s1) x *= inv;
  return make(n_, std::move(s1));
}

Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inverse(); }

bool operator==(const Cyclo& a, const Cyclo& b) {
  if (a.c_ != b.c_) return false;
  return a.c_.size() <= 1 || a.n_ == b.n_;
}

std::string Cyclo::str() const {
  if (c_.empty()) return "0";
  if (c_.size() == 1) return c_[0].get_str();
  std::string s;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    mpq_class c = c_[i];
    std::string mono = i == 0 ? "" : (i == 1 ? "w" : "w^" + std::to_string(i));
    bool neg = c < 0;
    if (neg) c = -c;
    if (!s.empty())
      s += neg ? "-" : "+";
    else if (neg)
      s += "-";
    if (mono.empty())
      s += c.get_str();
    else if (c == 1)
      s += mono;
    else
      s += c.get_str() + "*" + mono;
  }
  return "(" + s + ")";
}

// ---- UPoly

UPoly::UPoly(const Cyclo& c) {
  if (!c.is_zero()) c_.push_back(c);
}

UPoly UPoly::monomial(const Cyclo& c, int e) {
  UPoly r(c);
  if (!r.is_zero()) r.low_ = e;
  return r;
}

UPoly UPoly::from_map(const std::map<int, Cyclo>& m) {
  UPoly r;
  if (m.empty()) return r;
  r.low_ = m.begin()->first;
  r.c_.resize(size_t(m.rbegin()->first - r.low_ + 1));
  for (auto& [e, c] : m) r.c_[size_t(e - r.low_)] = c;
  r.trim();
  return r;
}

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  size_t z = 0;
  while (z < c_.size() && c_[z].is_zero()) ++z;
  if (z) {
    c_.erase(c_.begin(), c_.begin() + long(z));
    low_ += int(z);
  }
  if (c_.empty()) low_ = 0;
}

Cyclo UPoly::coeff(int e) const {
  if (e < low_ || e > high()) return Cyclo();
  return c_[size_t(e - low_)];
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  UPoly r;
  r.low_ = std::min(a.low_, b.low_);
  int hi = std::max(a.high(), b.high());
  r.c_.resize(size_t(hi - r.low_ + 1));
  for (size_t i = 0; i < a.c_.size(); ++i) r.c_[size_t(a.low_ - r.low_) + i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) r.c_[size_t(b.low_ - r.low_) + i] += b.c_[i];
  r.trim();
  return r;
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  UPoly r;
  r.low_ = a.low_ + b.low_;
  r.c_.resize(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i)
    if (!a.c_[i].is_zero())
      for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  r.trim();
  return r;
}

UPoly UPoly::scaled(const Cyclo& c) const {
  UPoly r;
  if (c.is_zero()) return r;
  r = *this;
  for (auto& x : r.c_) x *= c;
  return r;
}

UPoly UPoly::shifted(int e) const {
  UPoly r = *this;
  if (!r.is_zero()) r.low_ += e;
  return r;
}

UPoly UPoly::pow(unsigned e) const {
  UPoly r(1), b = *this;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

bool operator==(const UPoly& a, const UPoly& b) { return a.low_ == b.low_ && a.c_ == b.c_; }

void UPoly::divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  if (b.is_zero()) throw ZeroDenominator();
  if (a.low_ < 0 || b.low_ < 0) throw std::invalid_argument("divmod needs ordinary polynomials");
  // dense copies from degree 0
  std::vector<Cyclo> x(size_t(a.is_zero() ? 0 : a.high() + 1)), y(size_t(b.high() + 1));
  for (size_t i = 0; i < a.c_.size(); ++i) x[size_t(a.low_) + i] = a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) y[size_t(b.low_) + i] = b.c_[i];
  int db = b.high();
  Cyclo inv = y.back().inverse();
  std::vector<Cyclo> qq(x.size() > size_t(db) ? x.size() - size_t(db) : 0);
  for (int i = int(x.size()) - 1; i >= db; --i) {
    if (x[size_t(i)].is_zero()) continue;
    Cyclo c = x[size_t(i)] * inv;
    qq[size_t(i - db)] = c;
    for (int j = 0; j <= db; ++j) x[size_t(i - db + j)] -= c * y[size_t(j)];
  }
  q = UPoly();
  q.c_ = std::move(qq);
  q.trim();
  r = UPoly();
  r.c_ = std::move(x);
  r.trim();
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
  a.low_ = 0;
  b.low_ = 0;
  if (a.is_zero()) std::swap(a, b);
  if (a.is_zero()) return UPoly();
  while (!b.is_zero()) {
    UPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
    b.low_ = b.is_zero() ? 0 : b.low_;
  }
  // powers of u are units here; strip them and make monic
  a.low_ = 0;
  return a.scaled(a.lead().inverse());
}

std::string UPoly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string s;
  for (int i = int(c_.size()) - 1; i >= 0; --i) {
    const Cyclo& c = c_[size_t(i)];
    if (c.is_zero()) continue;
    int e = low_ + i;
    std::string mono = e == 0 ? "" : (e == 1 ? var : var + "^" + std::to_string(e));
    std::string cs = c.str();
    bool neg = c.is_rational() && c.rational() < 0;
    if (neg) cs = (-c).str();
    if (!s.empty())
      s += neg ? " - " : " + ";
    else if (neg)
      s += "-";
    if (mono.empty())
      s += cs;
    else if (cs == "1")
      s += mono;
    else
      s += cs + "*" + mono;
  }
  return s;
}

// ---- CycloFraction

CycloFraction::CycloFraction(const UPoly& n, const UPoly& d) : num_(n), den_(d) {
  if (d.is_zero()) throw ZeroDenominator();
  normalize();
}

void CycloFraction::normalize() {
  if (num_.is_zero()) {
    den_ = UPoly(1);
    return;
  }
  // move the u-power of den into num
  int s = den_.low();
  num_ = num_.shifted(-s);
  den_ = den_.shifted(-s);
  if (!den_.is_monomial()) {
    UPoly g = UPoly::gcd(num_.shifted(-num_.low()), den_);
    if (!(g == UPoly(1))) {
      UPoly q, r;
      int nl = num_.low();
      UPoly::divmod(num_.shifted(-nl), g, q, r);
      num_ = q.shifted(nl);
      UPoly::divmod(den_, g, q, r);
      den_ = q;
    }
  }
  Cyclo inv = den_.lead().inverse();
  num_ = num_.scaled(inv);
  den_ = den_.scaled(inv);
}

CycloFraction CycloFraction::operator-() const {
  CycloFraction r = *this;
  r.num_ = -r.num_;
  return r;
}

CycloFraction operator+(const CycloFraction& a, const CycloFraction& b) {
  if (a.den_ == b.den_) {
    CycloFraction r;
    r.num_ = a.num_ + b.num_;
    r.den_ = a.den_;
    if (!r.den_.is_constant()) r.normalize();
    else if (r.num_.is_zero()) r.den_ = UPoly(1);
    return r;
  }
  return CycloFraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

CycloFraction operator-(const CycloFraction& a, const CycloFraction& b) { return a + (-b); }

CycloFraction operator*(const CycloFraction& a, const CycloFraction& b) {
  if (a.is_poly() && b.is_poly()) return CycloFraction(a.num_ * b.num_);
  return CycloFraction(a.num_ * b.num_, a.den_ * b.den_);
}

CycloFraction operator/(const CycloFraction& a, const CycloFraction& b) {
  if (b.is_zero()) throw ZeroDenominator();
  return CycloFraction(a.num_ * b.den_, a.den_ * b.num_);
}

std::string CycloFraction::str(const std::string& var) const {
  if (is_poly()) return num_.str(var);
  return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

}  // namespace macdo
