#include <doctest.h>

#include "support.hpp"

using namespace macdo;

namespace {
std::string den(const std::string& v) { return den_of(parse_composition(v)).str(); }
Bound b(int a, int bb) { return Bound::binomial(a, bb); }
}  // namespace

TEST_CASE("denominator goldens") {
  CHECK(den("102") == "q (1-q t)");
  CHECK(den("310") == "q^3 (1-q^2 t) (1-q t) (1-q^3 t^2)");
  CHECK(den("1002") == "q (1-q t) (1-q t^2)");
  CHECK(den("0120") == "q (1-q t^2) (1-q^2 t^3)");
  CHECK(den("2010") == "q (1-q t) (1-q^2 t^2) (1-q t^2)");
  CHECK(den("022230") == "q^6 (1-q t) (1-q^2 t^2) (1-q^2 t^4) (1-q^3 t^5)");
  CHECK(den("0022") == "q^2 (1-q t) (1-q t^2)");
  CHECK(den("2002") == "q^2 (1-q t) (1-q^2 t^2)");
}

TEST_CASE("denominator ratios along the block chain") {
  Bound d0 = den_bound({0, 2, 2, 2, 3, 0});
  CHECK(den_bound({0, 2, 2, 3, 2, 0}) == d0 * b(1, 3));
  CHECK(den_bound({0, 2, 3, 2, 2, 0}) == d0 * b(1, 2));
  CHECK(den_bound({0, 3, 2, 2, 2, 0}) == d0 * b(1, 1));
  CHECK(ratio_numerator({0, 1, 1, 1, 2, 0}, {0, 2, 1, 1, 1, 0}).atoms == b(1, 1).atoms);
  CHECK(ratio_denominator({0, 1, 1, 1, 2, 0}, {0, 2, 1, 1, 1, 0}).atoms == b(1, 4).atoms);
  CHECK(den_bound({0, 3, 3, 3, 2, 0}) == den_bound({0, 2, 3, 3, 3, 0}) * b(1, 1));
  CHECK(den_bound({0, 3, 3, 2, 2, 0}) == den_bound({0, 2, 2, 3, 3, 0}) * b(1, 1) * b(1, 2));
}

TEST_CASE("denominator agrees with the lcm oracle") {
  for (auto& v : testing::test_set(4, 5)) {
    INFO(render_composition(v));
    QtPoly want = testing::den_oracle(mac(v));
    QtPoly got = den_bound(v).expand();
    CHECK((got == want || got == -want));
  }
}

TEST_CASE("path annotations bound the denominator growth") {
  for (auto& v : testing::test_set(4, 5)) {
    Path p = canonical_path(v);
    for (auto algo : {"triv", "jump"}) {
      DenCertificate c = certify(p, algo);
      INFO(render_composition(v) << " " << algo << " " << c.bound.str());
      CHECK(verify_certificate(c));
    }
  }
}

TEST_CASE("printed q-charge of triv is not sound") {
  Path p = canonical_path({3, 1, 0});
  CHECK_FALSE(verify_certificate(certify(p, "triv", QRule::Printed)));
  CHECK(verify_certificate(certify(p, "triv", QRule::Telescoping)));
}

TEST_CASE("conjunction and disjunction") {
  Path p1 = canonical_path({0, 2, 2, 3, 3, 0});
  Path p2{{0, 2, 2, 3, 3, 0}, {Step::jump(2, 2, 2)}};
  DenCertificate c1 = certify(p1, "triv"), c2 = certify(p2, "jump");
  DenCertificate both = conjunction(c1, c2);
  CHECK(path_end(both.path) == Composition{0, 3, 3, 2, 2, 0});
  CHECK(verify_certificate(both));
  Path p3{{0, 2, 2, 3, 3, 0}, {Step::S(3), Step::S(2), Step::S(4), Step::S(3)}};
  DenCertificate either = disjunction(c2, certify(p3, "triv"));
  CHECK(verify_certificate(either));
  CHECK(either.bound.atoms.divides(c2.bound.atoms));
  CHECK_THROWS(conjunction(c2, c2));
}

TEST_CASE("triv on the Phi s2 Phi Phi s1 path to 102") {
  Path p{zeros(3), {Step::Phi(), Step::S(2), Step::Phi(), Step::Phi(), Step::S(1)}};
  REQUIRE(path_end(p) == Composition{1, 0, 2});
  DenCertificate c = certify(p, "triv");
  CHECK(c.bound.atoms == (b(1, 2) * b(1, 1)).atoms);
  CHECK(den_bound({1, 0, 2}).divides(c.bound));
  CHECK(disjunction(c, c).bound == c.bound);
}

TEST_CASE("json forms") {
  auto j = factored_json(den_of({3, 1, 0}));
  CHECK(j.dump().find("\"factors\"") != std::string::npos);
  auto pj = path_json(canonical_path({1, 0, 2}));
  CHECK(pj.is_object());
}
