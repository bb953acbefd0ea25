#include <doctest.h>

#include "support.hpp"

using namespace macdo;

TEST_CASE("spectral vectors of 102201") {
  Composition v{1, 0, 2, 2, 0, 1};
  CHECK(standardize(v) == std::vector<int>{4, 2, 6, 5, 1, 3});
  SpectralVector h{{1, 3}, {0, 1}, {2, 5}, {2, 4}, {0, 0}, {1, 2}};
  CHECK(spectre_hat(v) == h);
  SpectralVector y{{1, 3}, {0, 0}, {2, 3}, {2, 1}, {0, -4}, {1, -3}};
  CHECK(spectre_y(v) == y);
}

TEST_CASE("Lambda and s_i walk on spectra") {
  SpectralVector s{{0, 2}, {0, 1}, {0, 0}};
  s = lambda_step(s);
  CHECK(s == SpectralVector{{0, 1}, {0, 0}, {1, 2}});
  s = si_step(s, 2);
  CHECK(s == SpectralVector{{0, 1}, {1, 2}, {0, 0}});
  s = lambda_step(s);
  CHECK(s == SpectralVector{{1, 2}, {0, 0}, {1, 1}});
  s = lambda_step(s);
  CHECK(s == SpectralVector{{0, 0}, {1, 1}, {2, 2}});
  s = si_step(s, 1);
  CHECK(s == SpectralVector{{1, 1}, {0, 0}, {2, 2}});
  CHECK(render_spectral(s) == "[q*t, 1, q^2*t^2]");
  // the walk spells out the spectrum of 102
  CHECK(s == spectre_hat({1, 0, 2}));
}

TEST_CASE("spectral vector agrees with the counting oracle") {
  for (auto& v : testing::test_set(5, 5)) {
    INFO(render_composition(v));
    CHECK(spectre_hat(v) == testing::spectre_hat_oracle(v));
  }
}

TEST_CASE("steps transform spectra") {
  // Phi: [z_2, ..., z_N, q z_1]; s_i swaps
  for (auto& v : testing::test_set(4, 4)) {
    Composition w = step_apply(v, Step::Phi());
    CHECK(spectre_hat(w) == lambda_step(spectre_hat(v)));
    for (int i = 1; i < int(v.size()); ++i)
      if (v[size_t(i - 1)] < v[size_t(i)])
        CHECK(spectre_hat(step_apply(v, Step::S(i))) == si_step(spectre_hat(v), i));
  }
}
