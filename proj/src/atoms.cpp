#include "macdo/atoms.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace macdo {

namespace {

std::vector<long long> poly_divexact_int(std::vector<long long> num,
                                         const std::vector<long long>& den) {
  // den is monic up to sign
  size_t dn = den.size() - 1;
  std::vector<long long> q(num.size() - dn, 0);
  for (size_t i = num.size(); i-- > dn;) {
    long long c = num[i] / den[dn];
    q[i - dn] = c;
    for (size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return q;
}

// extended gcd: returns (x, y) with a*x + b*y = gcd(a, b) = 1
std::pair<long long, long long> bezout(long long a, long long b) {
  long long x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    long long qq = a / b;
    long long r = a - qq * b;
    a = b;
    b = r;
    long long x2 = x0 - qq * x1, y2 = y0 - qq * y1;
    x0 = x1;
    y0 = y1;
    x1 = x2;
    y1 = y2;
  }
  if (a < 0) {
    x0 = -x0;
    y0 = -y0;
  }
  return {x0, y0};
}

struct Frame {
  // (i, j) = r (alpha, beta) + s (gamma, delta)
  long long alpha, beta, gamma, delta;
  Frame(int a, int b) : alpha(a), beta(b) {
    // alpha*delta - beta*gamma = 1
    auto [x, y] = bezout(a, b);  // a x + b y = 1
    delta = x;
    gamma = -y;
  }
  long long r(long long i, long long j) const { return i * delta - j * gamma; }
  long long s(long long i, long long j) const { return -i * beta + j * alpha; }
};

struct Slice {
  long long s;
  std::vector<std::pair<long long, const Int*>> terms;  // (r, coeff)
};

std::vector<Slice> slices_of(const Frame& f, const QtPoly& p) {
  std::vector<std::pair<std::pair<long long, long long>, const Int*>> raw;
  raw.reserve(p.size());
  for (auto& tm : p.terms()) {
    long long i = qt_dq(tm.key), j = qt_dt(tm.key);
    raw.push_back({{f.s(i, j), f.r(i, j)}, &tm.c});
  }
  std::sort(raw.begin(), raw.end(),
            [](auto& x, auto& y) { return x.first < y.first; });
  std::vector<Slice> out;
  for (auto& [k, c] : raw) {
    if (out.empty() || out.back().s != k.first) out.push_back({k.first, {}});
    out.back().terms.push_back({k.second, c});
  }
  return out;
}

// the normalized atom polynomial in z, low degree first
std::vector<long long> atom_z(int d) {
  std::vector<long long> c = cyclotomic_coeffs(d);
  if (d == 1) c = {1, -1};
  return c;
}

bool slice_divisible(const Slice& sl, int d) {
  if (d == 1) {
    Int s(0);
    for (auto& [r, c] : sl.terms) s += *c;
    return s.is_zero();
  }
  std::vector<Int> red(d, Int(0));
  for (auto& [r, c] : sl.terms) red[((r % d) + d) % d] += *c;
  const auto& phi = cyclotomic_coeffs(d);
  size_t dn = phi.size() - 1;
  for (size_t i = red.size(); i-- > dn;) {
    if (red[i].is_zero()) continue;
    Int c = red[i];  // phi monic
    for (size_t j = 0; j <= dn; ++j)
      if (phi[j]) red[i - dn + j] -= c * Int(phi[j]);
  }
  for (size_t i = 0; i < dn; ++i)
    if (!red[i].is_zero()) return false;
  return true;
}

}  // namespace

std::string Atom::str() const {
  std::string m = render_qt_monomial(alpha, beta);
  return "Phi" + std::to_string(d) + "(" + m + ")";
}

const std::vector<long long>& cyclotomic_coeffs(int d) {
  static std::mutex mu;
  static std::map<int, std::vector<long long>> cache;
  std::lock_guard<std::mutex> lk(mu);
  for (int e = 1; e <= d; ++e) {
    if (d % e || cache.count(e)) continue;
    std::vector<long long> num(e + 1, 0);
    num[0] = -1;
    num[e] = 1;
    for (int f = 1; f < e; ++f)
      if (e % f == 0) num = poly_divexact_int(num, cache.at(f));
    cache[e] = num;
  }
  return cache.at(d);
}

int euler_phi(int d) {
  int r = d;
  for (int p = 2; p * p <= d; ++p) {
    if (d % p == 0) {
      while (d % p == 0) d /= p;
      r -= r / p;
    }
  }
  if (d > 1) r -= r / d;
  return r;
}

int moebius(int n) {
  int r = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      r = -r;
    }
  }
  if (n > 1) r = -r;
  return r;
}

Direction direction_of(int a, int b) {
  if (a == 0 && b == 0) throw std::invalid_argument("direction of (0,0)");
  int g = std::gcd(a, b);
  int al = a / g, be = b / g;
  if (al < 0 || (al == 0 && be < 0)) {
    al = -al;
    be = -be;
  }
  return {g, al, be};
}

QtPoly atom_poly(const Atom& x) {
  auto c = atom_z(x.d);
  std::vector<QtTerm> raw;
  for (size_t i = 0; i < c.size(); ++i)
    if (c[i]) raw.push_back({qt_key(x.alpha * int(i), x.beta * int(i)), Int(c[i])});
  return QtPoly::from_terms(std::move(raw));
}

bool atom_divides(const Atom& x, const QtPoly& p) {
  if (p.is_zero()) return true;
  Frame f(x.alpha, x.beta);
  if (x.d == 1) {
    // sum of coefficients along every slice; avoid sorting
    std::map<long long, Int> sums;
    for (auto& tm : p.terms()) sums[f.s(qt_dq(tm.key), qt_dt(tm.key))] += tm.c;
    for (auto& [s, v] : sums)
      if (!v.is_zero()) return false;
    return true;
  }
  for (auto& sl : slices_of(f, p))
    if (!slice_divisible(sl, x.d)) return false;
  return true;
}

QtPoly atom_divide(const Atom& x, const QtPoly& p) {
  if (p.is_zero()) return p;
  Frame f(x.alpha, x.beta);
  auto phi = atom_z(x.d);
  size_t dn = phi.size() - 1;
  std::vector<QtTerm> out;
  for (auto& sl : slices_of(f, p)) {
    long long rmin = sl.terms.front().first, rmax = sl.terms.back().first;
    std::vector<Int> dense(size_t(rmax - rmin + 1), Int(0));
    for (auto& [r, c] : sl.terms) dense[size_t(r - rmin)] = *c;
    if (dense.size() <= dn) throw std::logic_error("atom_divide: inexact");
    std::vector<Int> quo(dense.size() - dn, Int(0));
    long long lead = phi[dn];
    for (size_t i = dense.size(); i-- > dn;) {
      if (dense[i].is_zero()) continue;
      Int c = dense[i];
      if (lead == -1) c = -c;
      for (size_t j = 0; j <= dn; ++j)
        if (phi[j]) dense[i - dn + j] -= c * Int(phi[j]);
      quo[i - dn] = std::move(c);
    }
    for (size_t i = 0; i < dn; ++i)
      if (!dense[i].is_zero()) throw std::logic_error("atom_divide: inexact");
    for (size_t i = 0; i < quo.size(); ++i) {
      if (quo[i].is_zero()) continue;
      long long r = rmin + (long long)i;
      long long ii = r * f.alpha + sl.s * f.gamma, jj = r * f.beta + sl.s * f.delta;
      out.push_back({qt_key(ii, jj), std::move(quo[i])});
    }
  }
  return QtPoly::from_terms(std::move(out));
}

int atom_multiplicity(const Atom& x, QtPoly& p) {
  int e = 0;
  while (!p.is_zero() && atom_divides(x, p)) {
    p = atom_divide(x, p);
    ++e;
  }
  return e;
}

AtomProduct AtomProduct::of_binomial(int a, int b) {
  Direction dir = direction_of(a, b);
  AtomProduct r;
  for (int d = 1; d <= dir.g; ++d)
    if (dir.g % d == 0) r.add({d, dir.alpha, dir.beta});
  return r;
}

int AtomProduct::multiplicity(const Atom& x) const {
  auto it = m_.find(x);
  return it == m_.end() ? 0 : it->second;
}

void AtomProduct::add(const Atom& x, int e) {
  if (e == 0) return;
  int& v = m_[x];
  v += e;
  if (v < 0) throw std::logic_error("AtomProduct: negative multiplicity");
  if (v == 0) m_.erase(x);
}

AtomProduct& AtomProduct::operator*=(const AtomProduct& o) {
  for (auto& [x, e] : o.m_) add(x, e);
  return *this;
}

AtomProduct AtomProduct::gcd(const AtomProduct& a, const AtomProduct& b) {
  AtomProduct r;
  for (auto& [x, e] : a.m_) {
    int f = std::min(e, b.multiplicity(x));
    if (f > 0) r.m_[x] = f;
  }
  return r;
}

AtomProduct AtomProduct::lcm(const AtomProduct& a, const AtomProduct& b) {
  AtomProduct r = a;
  for (auto& [x, e] : b.m_) {
    int& v = r.m_[x];
    v = std::max(v, e);
  }
  return r;
}

AtomProduct AtomProduct::num_ratio(const AtomProduct& a, const AtomProduct& b) {
  AtomProduct r;
  for (auto& [x, e] : a.m_) {
    int f = e - b.multiplicity(x);
    if (f > 0) r.m_[x] = f;
  }
  return r;
}

bool AtomProduct::divides(const AtomProduct& o) const {
  for (auto& [x, e] : m_)
    if (o.multiplicity(x) < e) return false;
  return true;
}

int AtomProduct::degree_count() const {
  int s = 0;
  for (auto& [x, e] : m_) s += e;
  return s;
}

QtPoly AtomProduct::expand() const {
  QtPoly r(1);
  for (auto& [x, e] : m_) r = r * atom_poly(x).pow(unsigned(e));
  return r;
}

bool AtomProduct::product_form(std::map<std::pair<int, int>, int>& out) const {
  out.clear();
  // group by direction
  std::map<std::pair<int, int>, std::map<int, int>> by_dir;
  for (auto& [x, e] : m_) by_dir[{x.alpha, x.beta}][x.d] = e;
  bool ok = true;
  for (auto& [dir, es] : by_dir) {
    int dmax = es.rbegin()->first;
    // k_r = sum_{r | s} mu(s / r) e_s, over s up to dmax
    for (int r = 1; r <= dmax; ++r) {
      long long k = 0;
      for (int s = r; s <= dmax; s += r) {
        auto it = es.find(s);
        if (it != es.end()) k += moebius(s / r) * it->second;
      }
      if (k < 0) ok = false;
      if (k > 0) out[{dir.first * r, dir.second * r}] = int(k);
    }
  }
  return ok;
}

std::string AtomProduct::str() const {
  if (m_.empty()) return "1";
  std::string s;
  for (auto& [x, e] : m_) {
    if (!s.empty()) s += " ";
    s += x.str();
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

}  // namespace macdo
