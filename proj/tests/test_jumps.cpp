#include <doctest.h>

#include "support.hpp"

using namespace macdo;

namespace {
void check_pattern(const Composition& v, int pos, int k, int l) {
  INFO(render_composition(v) << " jump(" << pos << ";" << k << "," << l << ")");
  JumpSpec s = make_jump_spec(v, pos, k, l);
  Composition w = jump_target(v, s);
  auto src = mac_rep(v);
  auto tgt = mac_rep(w);
  for (auto r : {JumpRoute::J, JumpRoute::Dual, JumpRoute::Stepwise, JumpRoute::StepwiseDual})
    CHECK(testing::rep_equal(block_jump(*src, v, s, r), *tgt));
  Bound ratio = ratio_numerator(v, w);
  CHECK(ratio.atoms.divides(block_divisor_bound(s).atoms));
}
}  // namespace

TEST_CASE("block jump spec") {
  JumpSpec s = make_jump_spec({0, 2, 2, 3, 3, 0}, 2, 2, 2);
  CHECK(s.a == 2);
  CHECK(s.b == 3);
  CHECK(jump_target({0, 2, 2, 3, 3, 0}, s) == Composition{0, 3, 3, 2, 2, 0});
  CHECK_THROWS_AS(make_jump_spec({0, 2, 1, 3, 3, 0}, 2, 2, 2), InvalidStep);
  JumpSpec bad = s;
  bad.beta_exp += 1;
  CHECK_THROWS_AS(validate_jump_spec(bad, {0, 2, 2, 3, 3, 0}), JumpSpecMismatch);
}

TEST_CASE("worked jump patterns") {
  check_pattern({0, 2, 2, 3, 3, 0}, 2, 2, 2);
  check_pattern({0, 2, 2, 3, 3, 3, 0}, 2, 2, 3);
  check_pattern({0, 2, 2, 2, 3, 0}, 2, 3, 1);
  check_pattern({0, 0, 2, 2}, 1, 2, 2);
  check_pattern({0, 1, 2, 2}, 2, 1, 2);
  check_pattern({1, 1, 2, 2}, 1, 2, 2);
  check_pattern({0, 1, 1, 1, 2}, 2, 3, 1);
}

TEST_CASE("block bound of 0223330 and its disjunction") {
  JumpSpec s = make_jump_spec({0, 2, 2, 3, 3, 3, 0}, 2, 2, 3);
  // min(k, l) = 2 factors
  Bound bb = block_divisor_bound(s);
  CHECK(bb.atoms == (Bound::binomial(1, 2) * Bound::binomial(1, 1)).atoms);
  CHECK(ratio_numerator({0, 2, 2, 3, 3, 3, 0}, {0, 3, 3, 3, 2, 2, 0}).atoms.divides(bb.atoms));
  auto moves = jump_route_moves(s, false);
  auto dual = jump_route_moves(s, true);
  CHECK(moves.size() == 6);
  CHECK(dual.size() == 6);
}

TEST_CASE("elementary jumps on all small patterns") {
  for (int n = 2; n <= 4; ++n)
    for (auto& p : testing::jump_patterns(n, 2, 4)) {
      if (p.l != 1 && p.k != 1) continue;
      check_pattern(p.v, p.pos, p.k, p.l);
    }
}

TEST_CASE("Yang step composed from a jump of length one") {
  // jump(i; 1, 1) is the s_i edge
  Composition v{0, 1, 2};
  JumpSpec s = make_jump_spec(v, 2, 1, 1);
  MacRep r = block_jump(*mac_rep(v), v, s);
  CHECK(testing::rep_equal(r, *mac_rep({0, 2, 1})));
}
