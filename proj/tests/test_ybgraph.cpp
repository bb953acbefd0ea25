#include <doctest.h>

#include <random>

#include "support.hpp"

using namespace macdo;

namespace {
QtFraction qf(const QtPoly& n, const QtPoly& d = QtPoly(1)) { return QtFraction(n, d); }
}  // namespace

TEST_CASE("M_102 golden") {
  QtPoly q = QtPoly::q(), t = QtPoly::t();
  MacPoly want = MacPoly::monomial(3, {1, 0, 2}, qf(1, q)) +
                 MacPoly::monomial(3, {1, 1, 1}, qf(t - 1, t * q - 1)) +
                 MacPoly::monomial(3, {0, 1, 2}, qf(t - 1, q * (t * q - 1)));
  CHECK(mac({1, 0, 2}) == want);
  CHECK(render_poly(mac({1, 0, 2})) ==
        "((t - 1)/(q*t - 1))*x1*x2*x3 + (1/q)*x1*x3^2 + ((t - 1)/(q^2*t - q))*x2*x3^2");
}

TEST_CASE("trivial polynomials") {
  for (int n = 1; n <= 5; ++n) CHECK(mac(zeros(n)) == MacPoly::constant(n, 1));
  // all parts >= 1 factors out x_1 ... x_N
  MacPoly m = mac({2, 1, 3});
  MacPoly base = mac({1, 0, 2});
  MacPoly shifted = MacPoly::constant(3, 1);
  for (int i = 0; i < 3; ++i) shifted = shifted.times_var(i);
  QtFraction ratio = m.coeff({2, 1, 3}) / base.coeff({1, 0, 2});
  CHECK(m == (base * shifted).scaled(ratio));
}

TEST_CASE("composition parsing and rendering") {
  CHECK(parse_composition("102") == Composition{1, 0, 2});
  CHECK(parse_composition("1,0,2") == Composition{1, 0, 2});
  CHECK(parse_composition("[10,0]") == Composition{10, 0});
  CHECK(render_composition({1, 0, 2}) == "102");
  CHECK(render_composition({10, 0}) == "[10,0]");
  CHECK_THROWS(parse_composition("1,x"));
}

TEST_CASE("steps and paths") {
  CHECK(step_apply({1, 0, 2}, Step::Phi()) == Composition{0, 2, 2});
  CHECK(step_apply({0, 1, 2}, Step::S(1)) == Composition{1, 0, 2});
  CHECK_THROWS_AS(step_apply({1, 0, 2}, Step::S(1)), InvalidStep);
  Path p = canonical_path({1, 0, 2});
  CHECK(path_end(p) == Composition{1, 0, 2});
  CHECK(p.start == zeros(3));
  CHECK(walk_from_zero(p).to_poly() == mac({1, 0, 2}));
}

TEST_CASE("random paths agree") {
  std::mt19937_64 rng(42);
  for (auto v : {Composition{1, 0, 2}, Composition{0, 2, 1, 1}, Composition{2, 0, 1, 2}, Composition{3, 1, 0}}) {
    for (int trial = 0; trial < 3; ++trial) {
      Path p = random_path(v, rng);
      CHECK(path_end(p) == v);
      CHECK(testing::rep_equal(walk_from_zero(p), *mac_rep(v)));
    }
  }
}

TEST_CASE("eigenfunction and leading term on a small set") {
  for (auto& v : testing::test_set(3, 4)) {
    INFO(render_composition(v));
    auto m = mac_rep(v);
    SpectralVector z = testing::spectre_hat_oracle(v);
    for (int i = 1; i <= int(v.size()); ++i)
      CHECK(apply_Yhat(m->num, i) == m->num.scaled(QtPoly::monomial(1, z[size_t(i - 1)].q, z[size_t(i - 1)].t)));
    MacPoly p = m->to_poly();
    CHECK(p.coeff(v) == QtFraction(QtPoly::monomial(1, leading_qexp(v), 0)));
    for (auto& [mono, c] : p.terms()) {
      Composition u = mono.vec(int(v.size()));
      if (u != v) CHECK(testing::strictly_below(u, v));
    }
    LeadingData ld = leading_data(v);
    CHECK(ld.monomial == v);
    CHECK(ld.unique_max);
  }
}

TEST_CASE("symmetry in equal adjacent parts") {
  for (auto& v : testing::test_set(4, 4))
    for (int i = 1; i < int(v.size()); ++i)
      if (v[size_t(i - 1)] == v[size_t(i)]) {
        MacPoly p = mac(v);
        CHECK(testing::swap_vars(p, i) == p);
      }
}

TEST_CASE("orders") {
  CHECK(cmp_dominance({2, 0, 1}, {1, 1, 1}) == Order::Greater);
  CHECK(cmp_dominance({0, 2, 0}, {1, 0, 1}) == Order::Incomparable);
  CHECK(cmp_triangle({0, 1, 2}, {1, 0, 2}) == Order::Less);
  CHECK(cmp_triangle({1, 1, 1}, {0, 0, 3}) == Order::Less);
}

TEST_CASE("memo table") {
  clear_mac_cache();
  mac_rep({2, 0, 1});
  CHECK(mac_cache_size() > 0);
  auto a = mac_rep({2, 0, 1});
  auto b = mac_rep({2, 0, 1});
  CHECK(a.get() == b.get());
  clear_mac_cache();
  CHECK(mac_cache_size() == 0);
}
