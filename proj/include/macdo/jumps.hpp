#pragma once
// Jump operators: one block moving past another in a single stroke.

#include <stdexcept>
#include <string>

#include "macdo/bound.hpp"
#include "macdo/ybgraph.hpp"

namespace macdo {

struct JumpSpecMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// u' a^k b^l u'' -> u' b^l a^k u''; alpha_exp, beta_exp are the t-exponents of
// spectre_hat at positions m+k and m+k+1
struct JumpSpec {
  int pos = 1;  // m + 1
  int k = 1;
  int ell = 1;
  int a = 0, b = 1;
  int alpha_exp = 0, beta_exp = 0;
  std::string str() const;
};

// reads a, b, alpha, beta off v; throws InvalidStep for a bad block pattern
JumpSpec make_jump_spec(const Composition& v, int pos, int k, int ell);
// throws JumpSpecMismatch when spec disagrees with v
void validate_jump_spec(const JumpSpec& s, const Composition& v);
Composition jump_target(const Composition& v, const JumpSpec& s);

// J^gamma_{m+1,k} = T_{m+k}...T_{m+1} + (1-t)/(1-gamma) (1 + sum_{i=2}^k T_{m+k}...T_{m+i})
MacRep elem_jump(const MacRep& p, int m1, int k, QtMonomial gamma);
// J+^gamma_{m+1,l} = T_{m+1}...T_{m+l} + (1-t)/(1-gamma) (1 + sum_{i=1}^{l-1} T_{m+1}...T_{m+i})
MacRep elem_jump_dual(const MacRep& p, int m1, int ell, QtMonomial gamma);

// gamma for jump(m+1; k, 1) at v = u' a^k b u'' read from the spectral vector
QtMonomial elem_jump_gamma(const Composition& v, int m1, int k);
// gamma for jump(m+1; 1, l) at w = u' a b^l u''
QtMonomial elem_jump_dual_gamma(const Composition& w, int m1, int ell);

enum class JumpRoute { J, Dual, Stepwise, StepwiseDual };
// M_v -> M_{jump target}; J and Dual compose elementary jump operators
MacRep block_jump(const MacRep& p, const Composition& v, const JumpSpec& s,
                  JumpRoute route = JumpRoute::J);

// the Yang parameters of the stepwise route, in application order
struct YangMove {
  int i;
  QtMonomial alpha;
};
std::vector<YangMove> jump_route_moves(const JumpSpec& s, bool dual);

// prod_{i=max(k,l)-1}^{k+l-2} (1 - q^{b-a} t^{beta-alpha-i})
Bound block_divisor_bound(const JumpSpec& s);

}  // namespace macdo
