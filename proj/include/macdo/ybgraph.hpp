#pragma once
// Yang-Baxter graph: steps, paths, walking, memoized Macdonald polynomials.

#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "macdo/atoms.hpp"
#include "macdo/factored.hpp"
#include "macdo/hecke.hpp"
#include "macdo/spectral.hpp"

namespace macdo {

using MacPoly = Poly<QtFraction>;
using LPoly = Poly<QtPoly>;  // Laurent (q, t) coefficients

struct Step {
  enum class Kind { S, Phi, Jump, JumpDual };
  Kind kind = Kind::Phi;
  int i = 0;   // S: index; jumps: 1-based start of the first block
  int k = 0;   // jumps: first block length
  int l = 0;   // jumps: second block length
  static Step S(int i) { return {Kind::S, i, 0, 0}; }
  static Step Phi() { return {Kind::Phi, 0, 0, 0}; }
  static Step jump(int pos, int k, int l) { return {Kind::Jump, pos, k, l}; }
  static Step jump_dual(int pos, int k, int l) { return {Kind::JumpDual, pos, k, l}; }
  bool is_jump() const { return kind == Kind::Jump || kind == Kind::JumpDual; }
  std::string label() const;  // "Phi", "s2", "jump(1;4,2)", "jump†(1;4,2)"
  friend bool operator==(const Step&, const Step&) = default;
};

struct Path {
  Composition start;
  std::vector<Step> steps;
};

struct InvalidStep : std::invalid_argument {
  int index;
  InvalidStep(const std::string& msg, int idx) : std::invalid_argument(msg), index(idx) {}
};

std::string render_composition(const Composition& v);  // "102" or "[10,0]"
Composition parse_composition(const std::string& s);   // "1,0,2" / "102" / "[1,0,2]"

// S(i) needs v_i < v_{i+1}; jumps need a^k b^l with b > a at the position
Composition step_apply(const Composition& v, const Step& s);
// jump steps replaced by their Yang-step routes
std::vector<Step> expand_steps(const Composition& start, const std::vector<Step>& steps);
std::vector<Composition> path_vertices(const Path& p);
Composition path_end(const Path& p);
std::string render_path(const Path& p);

// smallest-descent reverse reduction
Path canonical_path(const Composition& v);
// any valid reverse move at each stage, chosen uniformly
Path random_path(const Composition& v, std::mt19937_64& rng);
Composition zeros(int n);

// M = num / den with num over Z[q^+-, t^+-] and den a product of atoms.
// Every atom of den fails to divide some coefficient of num.
struct MacRep {
  LPoly num;
  AtomProduct den;
  int nvars() const { return num.nvars(); }
  MacPoly to_poly() const;
  QtFraction coeff(const Mono& m) const;
  friend bool operator==(const MacRep& a, const MacRep& b) {
    return a.num == b.num && a.den == b.den;
  }
};

MacRep mac_one(int n);
// P Yang(alpha, i) with alpha = q^a t^b
void yang_step(MacRep& m, int i, QtMonomial alpha);
void aff_step(MacRep& m);
// divide out every atom that divides all coefficients
void reduce_rep(MacRep& m);
// a.num / a.den == b.num / b.den without forming fractions
bool same_polynomial(const MacRep& a, const MacRep& b);
// P X for a polynomial operator given as a function on numerators
// walking without the memo table; the start polynomial is supplied
MacRep walk(const Path& p, const MacRep& start);
MacRep walk_from_zero(const Path& p);

// memoized M_v along canonical paths; thread safe
std::shared_ptr<const MacRep> mac_rep(const Composition& v);
MacPoly mac(const Composition& v);
void clear_mac_cache();
size_t mac_cache_size();
void set_mac_cache_limit(size_t max_entries);

enum class Order { Less, Equal, Greater, Incomparable };
Order cmp_dominance(const Composition& u, const Composition& v);
Order cmp_triangle(const Composition& u, const Composition& v);
std::string order_str(Order o);

struct LeadingData {
  Composition monomial;
  QtFraction coefficient;
  bool unique_max = false;  // every other monomial strictly below
};
LeadingData leading_data(const Composition& v);
// -(1/2) sum v_i (v_i - 1)
int leading_qexp(const Composition& v);

}  // namespace macdo
