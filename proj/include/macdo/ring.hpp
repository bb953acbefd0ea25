#pragma once
// Parameter constants for each coefficient ring used by the operator kernels.

#include "macdo/qtfraction.hpp"
#include "macdo/qtpoly.hpp"

namespace macdo {

template <class C>
struct Ring;

template <>
struct Ring<QtPoly> {
  static QtPoly qt(int a, int b) { return QtPoly::monomial(1, a, b); }
  static QtPoly mono(const QtPoly& c, int a, int b) { return c.shifted(a, b); }
  // sum of src_k * (sign_k t^{e_k}) with sign in {1, -1}
  struct Piece {
    const QtPoly* src;
    int texp;
    int sign;
  };
  static QtPoly lincomb(const Piece* ps, size_t n) {
    if (n == 1 && ps[0].sign == 1) return ps[0].src->shifted(0, ps[0].texp);
    size_t tot = 0;
    for (size_t i = 0; i < n; ++i) tot += ps[i].src->size();
    std::vector<QtTerm> raw;
    raw.reserve(tot);
    for (size_t i = 0; i < n; ++i)
      for (auto& tm : ps[i].src->terms())
        raw.push_back({qt_shift(tm.key, 0, ps[i].texp), ps[i].sign > 0 ? tm.c : -tm.c});
    return QtPoly::from_terms(std::move(raw));
  }
};

template <>
struct Ring<QtFraction> {
  static QtFraction qt(int a, int b) {
    return QtFraction(QtPoly::monomial(1, a, b));
  }
  static QtFraction mono(const QtFraction& c, int a, int b) {
    return c * qt(a, b);
  }
  struct Piece {
    const QtFraction* src;
    int texp;
    int sign;
  };
  static QtFraction lincomb(const Piece* ps, size_t n) {
    QtFraction r;
    for (size_t i = 0; i < n; ++i) {
      QtFraction v = mono(*ps[i].src, 0, ps[i].texp);
      r = ps[i].sign > 0 ? r + v : r - v;
    }
    return r;
  }
};

}  // namespace macdo
