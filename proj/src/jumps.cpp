#include "macdo/jumps.hpp"

namespace macdo {

std::string JumpSpec::str() const {
  return "jump(" + std::to_string(pos) + ";" + std::to_string(k) + "," + std::to_string(ell) +
         ") a=" + std::to_string(a) + " b=" + std::to_string(b) +
         " alpha=" + std::to_string(alpha_exp) + " beta=" + std::to_string(beta_exp);
}

JumpSpec make_jump_spec(const Composition& v, int pos, int k, int ell) {
  step_apply(v, Step::jump(pos, k, ell));  // block pattern check
  int m = pos - 1;
  auto z = spectre_hat(v);
  JumpSpec s;
  s.pos = pos;
  s.k = k;
  s.ell = ell;
  s.a = v[m];
  s.b = v[m + k];
  s.alpha_exp = z[m + k - 1].t;
  s.beta_exp = z[m + k].t;
  return s;
}

void validate_jump_spec(const JumpSpec& s, const Composition& v) {
  JumpSpec r;
  try {
    r = make_jump_spec(v, s.pos, s.k, s.ell);
  } catch (const InvalidStep& e) {
    throw JumpSpecMismatch(std::string("block pattern: ") + e.what());
  }
  if (r.a != s.a || r.b != s.b || r.alpha_exp != s.alpha_exp || r.beta_exp != s.beta_exp)
    throw JumpSpecMismatch("spec " + s.str() + " does not match " + render_composition(v) +
                           " (" + r.str() + ")");
}

Composition jump_target(const Composition& v, const JumpSpec& s) {
  return step_apply(v, Step::jump(s.pos, s.k, s.ell));
}

namespace {

// (1 - gamma) lead + (1 - t) sum(rest), over den * (1 - gamma)
MacRep combine(const MacRep& p, const LPoly& lead, const LPoly& rest, QtMonomial gamma) {
  if (gamma.q == 0 && gamma.t == 0) throw AlphaIsOne();
  if (gamma.q < 0 || (gamma.q == 0 && gamma.t < 0))
    throw std::domain_error("jump parameter outside the positive cone");
  auto om = [](int a, int b) {
    return [a, b](const QtPoly& c) {
      QtPoly r = c;
      r.add_scaled(c, Int(-1), a, b);
      return r;
    };
  };
  MacRep r;
  r.num = lead.map_coeffs<QtPoly>(om(gamma.q, gamma.t)) + rest.map_coeffs<QtPoly>(om(0, 1));
  r.den = p.den * AtomProduct::of_binomial(gamma.q, gamma.t);
  reduce_rep(r);
  return r;
}

}  // namespace

MacRep elem_jump(const MacRep& p, int m1, int k, QtMonomial gamma) {
  int m = m1 - 1;
  // R_i = P T_{m+k} ... T_{m+i}; rest = R_{k+1} + ... + R_2
  LPoly cur = p.num, rest = p.num;
  for (int i = k; i >= 1; --i) {
    cur = apply_Ti(cur, m + i);
    if (i >= 2) rest += cur;
  }
  return combine(p, cur, rest, gamma);
}

MacRep elem_jump_dual(const MacRep& p, int m1, int ell, QtMonomial gamma) {
  int m = m1 - 1;
  LPoly cur = p.num, rest = p.num;
  for (int i = 1; i <= ell; ++i) {
    cur = apply_Ti(cur, m + i);
    if (i <= ell - 1) rest += cur;
  }
  return combine(p, cur, rest, gamma);
}

QtMonomial elem_jump_gamma(const Composition& v, int m1, int k) {
  make_jump_spec(v, m1, k, 1);
  int m = m1 - 1;
  auto z = spectre_hat(v);
  return {z[m + k].q - z[m + k - 1].q, z[m + k].t - z[m + k - 1].t - k + 1};
}

QtMonomial elem_jump_dual_gamma(const Composition& w, int m1, int ell) {
  make_jump_spec(w, m1, 1, ell);
  int m = m1 - 1;
  auto z = spectre_hat(w);
  return {z[m + 1].q - z[m].q, z[m + 1].t - z[m].t - ell + 1};
}

MacRep block_jump(const MacRep& p, const Composition& v, const JumpSpec& s, JumpRoute route) {
  validate_jump_spec(s, v);
  int m = s.pos - 1, d = s.beta_exp - s.alpha_exp;
  switch (route) {
    case JumpRoute::Stepwise:
      return walk({v, {Step::jump(s.pos, s.k, s.ell)}}, p);
    case JumpRoute::StepwiseDual:
      return walk({v, {Step::jump_dual(s.pos, s.k, s.ell)}}, p);
    case JumpRoute::J: {
      MacRep r = p;
      Composition w = v;
      for (int j = 0; j < s.ell; ++j) {
        QtMonomial g = elem_jump_gamma(w, m + 1 + j, s.k);
        QtMonomial expect{s.b - s.a, d - s.k + 1 - j};
        if (!(g == expect))
          throw JumpSpecMismatch("elementary jump parameter " + g.str() + " differs from " +
                                 expect.str());
        r = elem_jump(r, m + 1 + j, s.k, g);
        w = step_apply(w, Step::jump(m + 1 + j, s.k, 1));
      }
      return r;
    }
    case JumpRoute::Dual: {
      MacRep r = p;
      Composition w = v;
      for (int j = 0; j < s.k; ++j) {
        int at = m + s.k - j;
        QtMonomial g = elem_jump_dual_gamma(w, at, s.ell);
        QtMonomial expect{s.b - s.a, d - s.ell + 1 - j};
        if (!(g == expect))
          throw JumpSpecMismatch("elementary dual jump parameter " + g.str() + " differs from " +
                                 expect.str());
        r = elem_jump_dual(r, at, s.ell, g);
        w = step_apply(w, Step::jump_dual(at, 1, s.ell));
      }
      return r;
    }
  }
  return p;
}

std::vector<YangMove> jump_route_moves(const JumpSpec& s, bool dual) {
  std::vector<YangMove> out;
  int m = s.pos - 1, d = s.beta_exp - s.alpha_exp, dq = s.b - s.a;
  if (!dual) {
    for (int j = 0; j < s.ell; ++j)
      for (int i = 0; i < s.k; ++i) out.push_back({m + s.k + j - i, {dq, d - j - i}});
  } else {
    for (int j = 0; j < s.k; ++j)
      for (int i = 0; i < s.ell; ++i) out.push_back({m + s.k - j + i, {dq, d - j - i}});
  }
  return out;
}

Bound block_divisor_bound(const JumpSpec& s) {
  Bound r;
  int d = s.beta_exp - s.alpha_exp;
  for (int i = std::max(s.k, s.ell) - 1; i <= s.k + s.ell - 2; ++i)
    r *= Bound::binomial(s.b - s.a, d - i);
  return r;
}

}  // namespace macdo
