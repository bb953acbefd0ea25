#pragma once
// Sparse polynomials in x_1..x_N over a coefficient ring C.
// C needs +, -, *, unary -, is_zero() and construction from long long.

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace macdo {

constexpr int kMaxVars = 16;
constexpr int kMaxExp = 255;

// Exponent vector packed big-endian into two words, so integer order is
// lexicographic order on (e_1, ..., e_16).
struct Mono {
  uint64_t w[2] = {0, 0};

  static Mono from(const std::vector<int>& e) {
    if (e.size() > size_t(kMaxVars)) throw std::invalid_argument("too many variables");
    Mono m;
    for (size_t i = 0; i < e.size(); ++i) m.set(int(i), e[i]);
    return m;
  }
  int get(int i) const { return int((w[i >> 3] >> (56 - 8 * (i & 7))) & 0xff); }
  void set(int i, int v) {
    if (v < 0 || v > kMaxExp) throw std::overflow_error("exponent out of range");
    int sh = 56 - 8 * (i & 7);
    w[i >> 3] = (w[i >> 3] & ~(uint64_t(0xff) << sh)) | (uint64_t(v) << sh);
  }
  void add(int i, int d) { set(i, get(i) + d); }
  int degree(int n) const {
    int s = 0;
    for (int i = 0; i < n; ++i) s += get(i);
    return s;
  }
  std::vector<int> vec(int n) const {
    std::vector<int> e(n);
    for (int i = 0; i < n; ++i) e[i] = get(i);
    return e;
  }
  Mono operator*(const Mono& o) const {
    Mono r;
    for (int i = 0; i < kMaxVars; ++i) {
      int a = get(i) + o.get(i);
      if (a) r.set(i, a);
    }
    return r;
  }
  friend bool operator==(const Mono& a, const Mono& b) {
    return a.w[0] == b.w[0] && a.w[1] == b.w[1];
  }
  friend bool operator<(const Mono& a, const Mono& b) {
    return a.w[0] != b.w[0] ? a.w[0] < b.w[0] : a.w[1] < b.w[1];
  }
  size_t hash() const {
    uint64_t h = w[0] * 0x9e3779b97f4a7c15ull ^ (w[1] + 0x632be59bd9b4e019ull);
    return size_t(h ^ (h >> 29));
  }
};

struct MonoHash {
  size_t operator()(const Mono& m) const { return m.hash(); }
};

template <class C>
class Poly {
 public:
  using Term = std::pair<Mono, C>;

  Poly() = default;
  explicit Poly(int n) : n_(n) {
    if (n < 0 || n > kMaxVars) throw std::invalid_argument("nvars out of range");
  }
  static Poly constant(int n, const C& c) {
    Poly p(n);
    if (!c.is_zero()) p.t_.push_back({Mono{}, c});
    return p;
  }
  static Poly monomial(int n, const std::vector<int>& e, const C& c) {
    Poly p(n);
    if (int(e.size()) != n) throw std::invalid_argument("exponent length mismatch");
    if (!c.is_zero()) p.t_.push_back({Mono::from(e), c});
    return p;
  }
  static Poly variable(int n, int i) {  // x_{i+1}
    std::vector<int> e(n, 0);
    e.at(i) = 1;
    return monomial(n, e, C(1));
  }
  // sort and merge an arbitrary term list
  static Poly from_terms(int n, std::vector<Term> raw) {
    std::sort(raw.begin(), raw.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    Poly p(n);
    p.t_.reserve(raw.size());
    for (auto& tm : raw) {
      if (!p.t_.empty() && p.t_.back().first == tm.first) {
        p.t_.back().second = p.t_.back().second + tm.second;
      } else {
        if (!p.t_.empty() && p.t_.back().second.is_zero()) p.t_.pop_back();
        p.t_.push_back(std::move(tm));
      }
    }
    if (!p.t_.empty() && p.t_.back().second.is_zero()) p.t_.pop_back();
    return p;
  }
  // terms already sorted and distinct
  static Poly from_sorted(int n, std::vector<Term> ts) {
    Poly p(n);
    p.t_ = std::move(ts);
    return p;
  }

  int nvars() const { return n_; }
  const std::vector<Term>& terms() const { return t_; }
  std::vector<Term>& mut_terms() { return t_; }
  size_t size() const { return t_.size(); }
  bool is_zero() const { return t_.empty(); }

  const C* find(const Mono& m) const {
    auto it = std::lower_bound(t_.begin(), t_.end(), m,
                               [](const Term& a, const Mono& b) { return a.first < b; });
    if (it != t_.end() && it->first == m) return &it->second;
    return nullptr;
  }
  C coeff(const std::vector<int>& e) const {
    const C* c = find(Mono::from(e));
    return c ? *c : C(0);
  }

  friend Poly operator+(const Poly& a, const Poly& b) { return combine(a, b, false); }
  friend Poly operator-(const Poly& a, const Poly& b) { return combine(a, b, true); }
  Poly operator-() const {
    Poly r = *this;
    for (auto& tm : r.t_) tm.second = -tm.second;
    return r;
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }

  Poly scaled(const C& c) const {
    Poly r(n_);
    if (c.is_zero()) return r;
    r.t_.reserve(t_.size());
    for (auto& tm : t_) {
      C v = tm.second * c;
      if (!v.is_zero()) r.t_.push_back({tm.first, std::move(v)});
    }
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    check(a, b);
    std::vector<Term> raw;
    raw.reserve(a.t_.size() * b.t_.size());
    for (auto& x : a.t_)
      for (auto& y : b.t_) raw.push_back({x.first * y.first, x.second * y.second});
    return from_terms(a.n_, std::move(raw));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  // multiply by x_{i+1}^d
  Poly times_var(int i, int d = 1) const {
    Poly r = *this;
    for (auto& tm : r.t_) tm.first.add(i, d);
    if (d != 0) r.resort();
    return r;
  }

  // apply f to every coefficient; zeros are dropped
  template <class D, class F>
  Poly<D> map_coeffs(F f) const {
    Poly<D> r(n_);
    auto& rt = r.mut_terms();
    rt.reserve(t_.size());
    for (auto& tm : t_) {
      D v = f(tm.second);
      if (!v.is_zero()) rt.push_back({tm.first, std::move(v)});
    }
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.n_ != b.n_ || a.t_.size() != b.t_.size()) return false;
    for (size_t i = 0; i < a.t_.size(); ++i)
      if (!(a.t_[i].first == b.t_[i].first) || !(a.t_[i].second == b.t_[i].second))
        return false;
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  void resort() {
    std::sort(t_.begin(), t_.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    // merging is not needed when the relabelling is injective
    for (size_t i = 1; i < t_.size(); ++i)
      if (t_[i].first == t_[i - 1].first) {
        *this = from_terms(n_, std::move(t_));
        return;
      }
  }

 private:
  static void check(const Poly& a, const Poly& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("nvars mismatch");
  }
  static Poly combine(const Poly& a, const Poly& b, bool sub) {
    check(a, b);
    Poly r(a.n_);
    r.t_.reserve(a.t_.size() + b.t_.size());
    size_t i = 0, j = 0;
    while (i < a.t_.size() || j < b.t_.size()) {
      if (j == b.t_.size() || (i < a.t_.size() && a.t_[i].first < b.t_[j].first)) {
        r.t_.push_back(a.t_[i++]);
      } else if (i == a.t_.size() || b.t_[j].first < a.t_[i].first) {
        r.t_.push_back({b.t_[j].first, sub ? -b.t_[j].second : b.t_[j].second});
        ++j;
      } else {
        C v = sub ? a.t_[i].second - b.t_[j].second : a.t_[i].second + b.t_[j].second;
        if (!v.is_zero()) r.t_.push_back({a.t_[i].first, std::move(v)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  int n_ = 0;
  std::vector<Term> t_;  // ascending Mono order
};

// "x1*x3^2"
inline std::string render_mono(const Mono& m, int n) {
  std::string s;
  for (int i = 0; i < n; ++i) {
    int e = m.get(i);
    if (!e) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i + 1);
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

// descending lexicographic order; "(c)*x1*x2" unless c is 1
template <class C>
std::string render_poly(const Poly<C>& p) {
  if (p.is_zero()) return "0";
  std::string s;
  auto& ts = p.terms();
  for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
    if (!s.empty()) s += " + ";
    std::string m = render_mono(it->first, p.nvars());
    std::string c = it->second.str();
    if (m.empty()) {
      s += c == "1" ? "1" : "(" + c + ")";
    } else if (c == "1") {
      s += m;
    } else {
      s += "(" + c + ")*" + m;
    }
  }
  return s;
}

}  // namespace macdo
