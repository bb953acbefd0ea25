#include <doctest.h>

#include "support.hpp"
#include "macdo/staircase.hpp"

using namespace macdo;

TEST_CASE("staircase and quasi-staircase shapes") {
  CHECK(staircase(1, 1, 2) == Composition{1, 0});
  CHECK(staircase(2, 1, 3) == Composition{2, 2, 1, 1, 0, 0});
  CHECK(staircase(1, 2, 4) == Composition{6, 4, 2, 0});
  CHECK(qsc(2, 2, 4, 2, 1) == Composition{3, 3, 1, 1, 0, 0, 0, 0});
  CHECK(qsc(1, 2, 3, 0, 0) == zeros(3));
  // Qsc(m + 1, 0) and Qsc(m, a) are the same composition
  for (int m = 0; m + 1 <= 3; ++m) CHECK(qsc(2, 3, 4, m + 1, 0) == qsc(2, 3, 4, m, 3));
  CHECK(qsc(2, 2, 3, 3, 0) == staircase(2, 2, 3));
}

TEST_CASE("raise, add_step and up paths land where they should") {
  int k = 2, a = 2, n = 3;
  for (int m = 1; m <= n - 1; ++m)
    for (int b = 0; b < a; ++b) {
      Path p = raise_path(k, a, n, m, b);
      CHECK(p.start == qsc(k, a, n, m, b));
      CHECK(path_end(p) == qsc(k, a, n, m, b + 1));
    }
  for (int m = 0; m + 1 <= n - 1; ++m) {
    Path p = add_step_path(k, a, n, m);
    CHECK(p.start == qsc(k, a, n, m, a));
    CHECK(path_end(p) == qsc(k, a, n, m + 1, 1));
    CHECK(path_end(up_path(k, a, n, m)) == qsc(k, a, n, m + 1, a));
  }
  Path full = staircase_path(k, a, n);
  CHECK(full.start == zeros(k * n));
  CHECK(path_end(full) == staircase(k, a, n));
}

TEST_CASE("segment bounds avoid the target factor") {
  for (int k = 1; k <= 3; ++k)
    for (int a = 1; a <= 3; ++a)
      for (int m = 1; m <= 3; ++m) {
        for (int b = 0; b < a; ++b)
          for (int j = 1; j <= m; ++j) CHECK_FALSE(bound_has_multiple_of(raise_segment_bound(k, a, m, b, j), a, k + 1));
        for (int j = 1; j <= m + 1; ++j) CHECK_FALSE(bound_has_multiple_of(add_step_segment_bound(k, a, m, j), a, k + 1));
      }
}

TEST_CASE("printed add_step bound differs from the spectral block bound") {
  CHECK_FALSE(add_step_segment_bound_printed(1, 1, 1, 1) == add_step_segment_bound(1, 1, 1, 1));
}

TEST_CASE("small staircase cells pass with brute force") {
  const int cells[][3] = {{1, 1, 2}, {2, 1, 2}, {1, 2, 3}, {1, 1, 3}, {1, 3, 3}, {1, 1, 4}};
  for (auto& c : cells) {
    StaircaseReport r = verify_unreachable_pole(c[0], c[1], c[2]);
    INFO(r.json().dump());
    CHECK(r.passed());
    REQUIRE(r.absent.has_value());
    CHECK(*r.absent);
    CHECK(r.path_matches_canonical.value_or(false));
    CHECK(r.all_sound.value_or(false));
    // brute force against the independent lcm computation
    QtPoly want = testing::den_oracle(mac(r.target));
    QtPoly got = r.den->expand();
    CHECK((got == want || got == -want));
  }
}

TEST_CASE("certificates only") {
  StaircaseOptions o;
  o.brute_force = false;
  StaircaseReport r = verify_unreachable_pole(2, 3, 3, o);
  CHECK(r.certificates_ok);
  CHECK(r.replay_ok);
  CHECK(r.anchors_ok);
  CHECK_FALSE(r.brute_forced);
}

TEST_CASE("the pole can appear on non-staircase shapes") {
  // 1 - q t^2 (a = 1, k = 1) divides Den(0120) and Den(1002)
  CHECK(bound_has_multiple_of(den_bound({0, 1, 2, 0}), 1, 2));
  CHECK_FALSE(bound_has_multiple_of(den_bound(staircase(1, 1, 4)), 1, 2));
}
