#include "macdo/qtpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace macdo {

QtPoly QtPoly::one_minus(int a, int b) {
  QtPoly p(1);
  p.add_scaled(QtPoly(1), Int(-1), a, b);
  return p;
}

QtPoly QtPoly::from_terms(std::vector<QtTerm> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const QtTerm& x, const QtTerm& y) { return x.key < y.key; });
  QtPoly p;
  for (auto& tm : terms) {
    if (!p.terms_.empty() && p.terms_.back().key == tm.key) {
      p.terms_.back().c += tm.c;
    } else {
      if (!p.terms_.empty() && p.terms_.back().c.is_zero()) p.terms_.pop_back();
      p.terms_.push_back(std::move(tm));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().c.is_zero()) p.terms_.pop_back();
  return p;
}

Int QtPoly::constant_term() const { return coeff(0, 0); }

Int QtPoly::coeff(int dq, int dt) const {
  QtKey k = qt_key(dq, dt);
  auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                             [](const QtTerm& x, QtKey y) { return x.key < y; });
  if (it != terms_.end() && it->key == k) return it->c;
  return Int(0);
}

int QtPoly::min_q() const { return terms_.empty() ? 0 : qt_dq(terms_.front().key); }
int QtPoly::max_q() const { return terms_.empty() ? 0 : qt_dq(terms_.back().key); }
int QtPoly::min_t() const {
  int m = 0;
  bool first = true;
  for (auto& tm : terms_) {
    int d = qt_dt(tm.key);
    if (first || d < m) m = d;
    first = false;
  }
  return m;
}
int QtPoly::max_t() const {
  int m = 0;
  bool first = true;
  for (auto& tm : terms_) {
    int d = qt_dt(tm.key);
    if (first || d > m) m = d;
    first = false;
  }
  return m;
}

QtPoly QtPoly::operator-() const {
  QtPoly r = *this;
  for (auto& tm : r.terms_) tm.c = -tm.c;
  return r;
}

void QtPoly::add_scaled(const QtPoly& o, const Int& c, int a, int b) {
  if (o.terms_.empty() || c.is_zero()) return;
  std::vector<QtTerm> out;
  out.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size()) {
      out.push_back(std::move(terms_[i++]));
      continue;
    }
    QtKey kj = qt_shift(o.terms_[j].key, a, b);
    if (i == terms_.size() || kj < terms_[i].key) {
      out.push_back({kj, o.terms_[j].c * c});
      ++j;
    } else if (terms_[i].key < kj) {
      out.push_back(std::move(terms_[i++]));
    } else {
      Int s = std::move(terms_[i].c);
      s.addmul(o.terms_[j].c, c);
      if (!s.is_zero()) out.push_back({kj, std::move(s)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
}

QtPoly& QtPoly::operator+=(const QtPoly& o) {
  add_scaled(o, Int(1), 0, 0);
  return *this;
}
QtPoly& QtPoly::operator-=(const QtPoly& o) {
  add_scaled(o, Int(-1), 0, 0);
  return *this;
}
QtPoly operator+(const QtPoly& a, const QtPoly& b) {
  QtPoly r = a;
  r += b;
  return r;
}
QtPoly operator-(const QtPoly& a, const QtPoly& b) {
  QtPoly r = a;
  r -= b;
  return r;
}

QtPoly operator*(const QtPoly& a, const QtPoly& b) {
  if (a.terms_.empty() || b.terms_.empty()) return {};
  if (a.terms_.size() == 1) {
    QtPoly r = b.shifted(qt_dq(a.terms_[0].key), qt_dt(a.terms_[0].key));
    if (!a.terms_[0].c.is_one()) for (auto& tm : r.terms_) tm.c *= a.terms_[0].c;
    return r;
  }
  if (b.terms_.size() == 1) return b * a;
  const QtPoly& s = a.terms_.size() <= b.terms_.size() ? a : b;
  const QtPoly& l = a.terms_.size() <= b.terms_.size() ? b : a;
  if (s.terms_.size() <= 4) {
    QtPoly r;
    for (auto& tm : s.terms_) r.add_scaled(l, tm.c, qt_dq(tm.key), qt_dt(tm.key));
    return r;
  }
  std::vector<QtTerm> raw;
  raw.reserve(a.terms_.size() * b.terms_.size());
  for (auto& x : a.terms_)
    for (auto& y : b.terms_)
      raw.push_back({qt_shift(y.key, qt_dq(x.key), qt_dt(x.key)), x.c * y.c});
  return QtPoly::from_terms(std::move(raw));
}

QtPoly QtPoly::shifted(int a, int b) const {
  QtPoly r = *this;
  for (auto& tm : r.terms_) tm.key = qt_shift(tm.key, a, b);
  return r;
}

QtPoly QtPoly::scaled(const Int& c) const {
  if (c.is_zero()) return {};
  QtPoly r = *this;
  for (auto& tm : r.terms_) tm.c *= c;
  return r;
}

Int QtPoly::content() const {
  Int g(0);
  for (auto& tm : terms_) {
    g = Int::gcd(g, tm.c);
    if (g.is_one()) break;
  }
  return g;
}

QtPoly& QtPoly::divexact(const Int& c) {
  for (auto& tm : terms_) tm.c.divexact(c);
  return *this;
}

QtPoly QtPoly::pow(unsigned e) const {
  QtPoly r(1), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

QtPoly QtPoly::map_exponents(const std::function<std::pair<int, int>(int, int)>& f) const {
  std::vector<QtTerm> raw;
  raw.reserve(terms_.size());
  for (auto& tm : terms_) {
    auto [a, b] = f(qt_dq(tm.key), qt_dt(tm.key));
    raw.push_back({qt_key(a, b), tm.c});
  }
  return from_terms(std::move(raw));
}

bool operator==(const QtPoly& a, const QtPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].key != b.terms_[i].key || !(a.terms_[i].c == b.terms_[i].c)) return false;
  return true;
}

size_t QtPoly::hash() const {
  size_t h = 0xcbf29ce484222325ull;
  for (auto& tm : terms_) {
    h ^= std::hash<uint64_t>()(tm.key) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    size_t hc = tm.c.is_small() ? std::hash<int64_t>()(tm.c.small())
                                : std::hash<std::string>()(tm.c.str());
    h ^= hc + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

std::string render_qt_monomial(int dq, int dt) {
  std::string s;
  auto pw = [&](const char* v, int e) {
    if (e == 0) return;
    if (!s.empty()) s += "*";
    s += v;
    if (e != 1) s += "^" + std::to_string(e);
  };
  pw("q", dq);
  pw("t", dt);
  return s;
}

std::string QtPoly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    int dq = qt_dq(it->key), dt = qt_dt(it->key);
    bool neg = it->c.sign() < 0;
    Int mag = neg ? -it->c : it->c;
    if (s.empty()) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    std::string mono = render_qt_monomial(dq, dt);
    if (mono.empty()) {
      s += mag.str();
    } else if (mag.is_one()) {
      s += mono;
    } else {
      s += mag.str() + "*" + mono;
    }
  }
  return s;
}

}  // namespace macdo
