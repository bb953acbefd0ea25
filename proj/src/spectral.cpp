#include "macdo/spectral.hpp"

#include <stdexcept>

#include "macdo/qtpoly.hpp"

namespace macdo {

std::string QtMonomial::str() const {
  std::string s = render_qt_monomial(q, t);
  return s.empty() ? "1" : s;
}

std::vector<int> standardize(const Composition& v) {
  int n = int(v.size());
  std::vector<int> s(n, 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (v[j] < v[i] || (v[j] == v[i] && j > i)) ++s[i];
  return s;
}

SpectralVector spectre_hat(const Composition& v) {
  auto s = standardize(v);
  SpectralVector r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = {v[i], s[i] - 1};
  return r;
}

SpectralVector spectre_y(const Composition& v) {
  auto s = standardize(v);
  SpectralVector r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = {v[i], s[i] - int(i) - 1};
  return r;
}

SpectralVector lambda_step(const SpectralVector& s) {
  if (s.empty()) return s;
  SpectralVector r(s.begin() + 1, s.end());
  r.push_back({s[0].q + 1, s[0].t});
  return r;
}

SpectralVector si_step(const SpectralVector& s, int i) {
  if (i < 1 || i >= int(s.size())) throw std::out_of_range("si_step index");
  SpectralVector r = s;
  std::swap(r[i - 1], r[i]);
  return r;
}

std::string render_spectral(const SpectralVector& s) {
  std::string r = "[";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) r += ", ";
    r += s[i].str();
  }
  return r + "]";
}

}  // namespace macdo
