#pragma once
// Right-acting operators on polynomials: P s_i, P T_i, P tau, ...
// Indices are 1-based as in the usual notation; composition reads left to right.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "macdo/macpoly.hpp"
#include "macdo/ring.hpp"

namespace macdo {

struct AlphaIsOne : std::domain_error {
  AlphaIsOne() : std::domain_error("Yang step with alpha = 1") {}
};

namespace detail {

inline void check_index(int n, int i) {
  if (i < 1 || i > n - 1)
    throw std::out_of_range("operator index " + std::to_string(i) + " out of range for N=" +
                            std::to_string(n));
}

struct Contrib {
  Mono m;
  uint32_t src;
  int16_t texp;
  int16_t sign;
};

template <class C>
Poly<C> gather(const Poly<C>& p, std::vector<Contrib>& cs) {
  std::sort(cs.begin(), cs.end(), [](const Contrib& a, const Contrib& b) { return a.m < b.m; });
  using Piece = typename Ring<C>::Piece;
  std::vector<typename Poly<C>::Term> out;
  std::vector<Piece> pieces;
  const auto& ts = p.terms();
  for (size_t i = 0; i < cs.size();) {
    size_t j = i;
    pieces.clear();
    while (j < cs.size() && cs[j].m == cs[i].m) {
      pieces.push_back({&ts[cs[j].src].second, cs[j].texp, cs[j].sign});
      ++j;
    }
    C v = Ring<C>::lincomb(pieces.data(), pieces.size());
    if (!v.is_zero()) out.push_back({cs[i].m, std::move(v)});
    i = j;
  }
  return Poly<C>::from_sorted(p.nvars(), std::move(out));
}

inline Mono with_pair(Mono m, int i, int a, int b) {
  m.set(i, a);
  m.set(i + 1, b);
  return m;
}

}  // namespace detail

template <class C>
Poly<C> apply_si(const Poly<C>& p, int i) {
  detail::check_index(p.nvars(), i);
  int k = i - 1;
  Poly<C> r = p;
  for (auto& tm : r.mut_terms()) {
    int a = tm.first.get(k), b = tm.first.get(k + 1);
    tm.first.set(k, b);
    tm.first.set(k + 1, a);
  }
  r.resort();
  return r;
}

// (P - P s_i) / (x_i - x_{i+1}), evaluated term by term
template <class C>
Poly<C> apply_del(const Poly<C>& p, int i) {
  detail::check_index(p.nvars(), i);
  int k = i - 1;
  std::vector<detail::Contrib> cs;
  const auto& ts = p.terms();
  for (uint32_t s = 0; s < ts.size(); ++s) {
    const Mono& m = ts[s].first;
    int a = m.get(k), b = m.get(k + 1);
    if (a > b) {
      for (int j = 0; j < a - b; ++j)
        cs.push_back({detail::with_pair(m, k, a - 1 - j, b + j), s, 0, 1});
    } else if (a < b) {
      for (int j = 0; j < b - a; ++j)
        cs.push_back({detail::with_pair(m, k, b - 1 - j, a + j), s, 0, -1});
    }
  }
  return detail::gather(p, cs);
}

template <class C>
Poly<C> apply_xi(const Poly<C>& p, int i) {
  if (i < 1 || i > p.nvars()) throw std::out_of_range("variable index");
  return p.times_var(i - 1, 1);
}

// pi_i = X_i d_i
template <class C>
Poly<C> apply_pi(const Poly<C>& p, int i) {
  return apply_del(apply_xi(p, i), i);
}

// T_i = (t - 1) pi_i + s_i, expanded on monomials
template <class C>
Poly<C> apply_Ti(const Poly<C>& p, int i) {
  detail::check_index(p.nvars(), i);
  int k = i - 1;
  std::vector<detail::Contrib> cs;
  const auto& ts = p.terms();
  cs.reserve(ts.size() * 3);
  for (uint32_t s = 0; s < ts.size(); ++s) {
    const Mono& m = ts[s].first;
    int a = m.get(k), b = m.get(k + 1);
    if (a == b) {
      cs.push_back({m, s, 1, 1});
    } else if (a > b) {
      cs.push_back({detail::with_pair(m, k, b, a), s, 1, 1});
      for (int j = 0; j < a - b; ++j) {
        Mono mj = detail::with_pair(m, k, a - j, b + j);
        cs.push_back({mj, s, 1, 1});
        cs.push_back({mj, s, 0, -1});
      }
    } else {
      cs.push_back({detail::with_pair(m, k, b, a), s, 0, 1});
      for (int j = 1; j < b - a; ++j) {
        Mono mj = detail::with_pair(m, k, b - j, a + j);
        cs.push_back({mj, s, 0, 1});
        cs.push_back({mj, s, 1, -1});
      }
    }
  }
  return detail::gather(p, cs);
}

// T_i^{-1} = (T_i + 1 - t) / t
template <class C>
Poly<C> apply_Ti_inv(const Poly<C>& p, int i) {
  Poly<C> r = apply_Ti(p, i) + p.scaled(C(1) - Ring<C>::qt(0, 1));
  return r.scaled(Ring<C>::qt(0, -1));
}

// (P tau)(x) = P(x_N / q, x_1, ..., x_{N-1})
template <class C>
Poly<C> apply_tau(const Poly<C>& p) {
  int n = p.nvars();
  Poly<C> r(n);
  auto& rt = r.mut_terms();
  rt.reserve(p.size());
  for (auto& [m, c] : p.terms()) {
    Mono w;
    for (int j = 1; j < n; ++j) w.set(j - 1, m.get(j));
    w.set(n - 1, m.get(0));
    rt.push_back({w, m.get(0) ? Ring<C>::mono(c, -m.get(0), 0) : c});
  }
  r.resort();
  return r;
}

// inverse of tau: P(x_2, ..., x_N, q x_1)
template <class C>
Poly<C> apply_tau_inv(const Poly<C>& p) {
  int n = p.nvars();
  Poly<C> r(n);
  auto& rt = r.mut_terms();
  for (auto& [m, c] : p.terms()) {
    Mono w;
    for (int j = 1; j < n; ++j) w.set(j, m.get(j - 1));
    w.set(0, m.get(n - 1));
    rt.push_back({w, m.get(n - 1) ? Ring<C>::mono(c, m.get(n - 1), 0) : c});
  }
  r.resort();
  return r;
}

// A = tau followed by multiplication by x_N
template <class C>
Poly<C> apply_aff(const Poly<C>& p) {
  return apply_tau(p).times_var(p.nvars() - 1, 1);
}

// Y_i = T_i ... T_{N-1} tau^{-1} T_1^{-1} ... T_{i-1}^{-1}
// (tau^{-1} here: with A = tau x_N this is the inverse that makes M_v an eigenfunction)
template <class C>
Poly<C> apply_Y(const Poly<C>& p, int i) {
  int n = p.nvars();
  if (i < 1 || i > n) throw std::out_of_range("Y index");
  Poly<C> r = p;
  for (int j = i; j <= n - 1; ++j) r = apply_Ti(r, j);
  r = apply_tau_inv(r);
  for (int j = 1; j <= i - 1; ++j) r = apply_Ti_inv(r, j);
  return r;
}

template <class C>
Poly<C> apply_Yhat(const Poly<C>& p, int i) {
  Poly<C> r = apply_Y(p, i);
  return i == 1 ? r : r.scaled(Ring<C>::qt(0, i - 1));
}

// P T_i + (1 - t)/(1 - alpha) P over a field of fractions
inline Poly<QtFraction> apply_yang(const Poly<QtFraction>& p, int i, const QtFraction& alpha) {
  if (alpha == QtFraction(1)) throw AlphaIsOne();
  QtFraction c = QtFraction(QtPoly::one_minus(0, 1)) / (QtFraction(1) - alpha);
  return apply_Ti(p, i) + p.scaled(c);
}

}  // namespace macdo
