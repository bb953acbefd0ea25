#pragma once
// Standardization and spectral vectors.

#include <string>
#include <utility>
#include <vector>

namespace macdo {

using Composition = std::vector<int>;

// q^q * t^t
struct QtMonomial {
  int q = 0;
  int t = 0;
  friend bool operator==(const QtMonomial&, const QtMonomial&) = default;
  friend auto operator<=>(const QtMonomial&, const QtMonomial&) = default;
  std::string str() const;
};

using SpectralVector = std::vector<QtMonomial>;

// sigma_i > sigma_j iff v_i > v_j or (v_i = v_j and i < j); values 1..N
std::vector<int> standardize(const Composition& v);
// q^{v_i} t^{std(v)_i - 1}
SpectralVector spectre_hat(const Composition& v);
// eigenvalues of the plain Y_i: q^{v_i} t^{std(v)_i - i}
SpectralVector spectre_y(const Composition& v);

// [a_1, ..., a_N] Lambda = [a_2, ..., a_N, q a_1]
SpectralVector lambda_step(const SpectralVector& s);
SpectralVector si_step(const SpectralVector& s, int i);

std::string render_spectral(const SpectralVector& s);  // "[q*t, 1, q^2*t^2]"

}  // namespace macdo
