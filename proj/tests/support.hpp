#pragma once
// Shared helpers for the unit tests and the acceptance runner.

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "macdo/denom.hpp"
#include "macdo/jumps.hpp"
#include "macdo/qtfraction.hpp"
#include "macdo/specialize.hpp"
#include "macdo/ybgraph.hpp"

namespace macdo::testing {

// all compositions of length n with |v| <= max_size and parts <= max_part
inline std::vector<Composition> compositions(int n, int max_size, int max_part = 1 << 20) {
  std::vector<Composition> out;
  Composition v(size_t(n), 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n) {
      out.push_back(v);
      return;
    }
    for (int x = 0; x <= std::min(left, max_part); ++x) {
      v[size_t(i)] = x;
      rec(i + 1, left - x);
    }
  };
  rec(0, max_size);
  return out;
}

// N = 1..max_n, |v| <= max_size
inline std::vector<Composition> test_set(int max_n, int max_size) {
  std::vector<Composition> out;
  for (int n = 1; n <= max_n; ++n)
    for (auto& v : compositions(n, max_size)) out.push_back(v);
  return out;
}

// spectral vector straight from the definition: rank counts strictly smaller
// parts plus equal parts further right
inline SpectralVector spectre_hat_oracle(const Composition& v) {
  SpectralVector s;
  for (size_t i = 0; i < v.size(); ++i) {
    int rank = 1;
    for (size_t j = 0; j < v.size(); ++j)
      if (v[j] < v[i] || (v[j] == v[i] && j > i)) ++rank;
    s.push_back({v[i], rank - 1});
  }
  return s;
}

// u below v: sorted parts dominated, ties broken by dominance of the compositions
inline bool dominated(const Composition& u, const Composition& v) {
  long su = 0, sv = 0;
  for (size_t i = 0; i < u.size(); ++i) {
    su += u[i];
    sv += v[i];
    if (su > sv) return false;
  }
  return true;
}
inline bool strictly_below(const Composition& u, const Composition& v) {
  if (u == v) return false;
  Composition up = u, vp = v;
  std::sort(up.rbegin(), up.rend());
  std::sort(vp.rbegin(), vp.rend());
  if (up != vp) return dominated(up, vp);
  return dominated(u, v);
}

// lcm of the reduced coefficient denominators, the slow way
inline QtPoly den_oracle(const MacPoly& p) {
  QtPoly l(1);
  for (auto& [m, c] : p.terms()) {
    QtPoly g = qt_gcd(l, c.den());
    l = qt_divexact(l * c.den(), g);
  }
  return l;
}

// a.num / a.den == b.num / b.den; cross multiplication by the atoms not shared
inline bool rep_equal(const MacRep& a, const MacRep& b) {
  if (a.den == b.den) return a.num == b.num;
  QtPoly ea = AtomProduct::num_ratio(b.den, a.den).expand();
  QtPoly eb = AtomProduct::num_ratio(a.den, b.den).expand();
  return a.num.scaled(ea) == b.num.scaled(eb);
}

// x^e.s_i for 1-based i
inline MacPoly swap_vars(const MacPoly& p, int i) {
  std::vector<MacPoly::Term> raw;
  for (auto& [m, c] : p.terms()) {
    Mono r = m;
    r.set(i - 1, m.get(i));
    r.set(i, m.get(i - 1));
    raw.push_back({r, c});
  }
  return MacPoly::from_terms(p.nvars(), std::move(raw));
}
inline SpecPolyX swap_vars(const SpecPolyX& p, int i) {
  std::vector<SpecPolyX::Term> raw;
  for (auto& [m, c] : p.terms()) {
    Mono r = m;
    r.set(i - 1, m.get(i));
    r.set(i, m.get(i - 1));
    raw.push_back({r, c});
  }
  return SpecPolyX::from_terms(p.nvars(), std::move(raw));
}

// every u' a^k b^l u'' of length n with parts <= max_part, a < b, k + l <= max_kl
struct JumpPattern {
  Composition v;
  int pos, k, l;
};
inline std::vector<JumpPattern> jump_patterns(int n, int max_part, int max_kl) {
  std::vector<JumpPattern> out;
  for (int s = 2; s <= std::min(n, max_kl); ++s)
    for (int k = 1; k < s; ++k) {
      int l = s - k;
      for (int pos = 1; pos + s - 1 <= n; ++pos)
        for (int a = 0; a <= max_part; ++a)
          for (int b = a + 1; b <= max_part; ++b)
            for (auto& rest : compositions(n - s, (n - s) * max_part, max_part)) {
              Composition v;
              v.insert(v.end(), rest.begin(), rest.begin() + (pos - 1));
              v.insert(v.end(), size_t(k), a);
              v.insert(v.end(), size_t(l), b);
              v.insert(v.end(), rest.begin() + (pos - 1), rest.end());
              out.push_back({v, pos, k, l});
            }
    }
  return out;
}

}  // namespace macdo::testing
