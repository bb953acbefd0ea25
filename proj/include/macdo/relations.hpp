#pragma once
// Operator words and the relation catalog checked on random polynomials.

#include <random>
#include <string>
#include <vector>

#include "macdo/hecke.hpp"

namespace macdo {

using LPoly = Poly<QtPoly>;

struct Op {
  enum class Kind { S, Del, Pi, T, Tinv, X, Tau, TauInv, Aff, Y, Yhat };
  Kind kind;
  int i = 0;
};

// "T1 X2 T1", "tau Y3", "Yh2"; tokens: s, d, pi, T, Ti, X, tau, taui, A, Y, Yh
std::vector<Op> parse_word(const std::string& w);
// P . w, applied left to right
LPoly apply_word(const LPoly& p, const std::vector<Op>& w);

struct WordTerm {
  QtPoly coef;
  std::vector<Op> word;
};

// sum lhs == sum rhs as operators
struct RelationInstance {
  std::string label;
  std::vector<WordTerm> lhs, rhs;
};

struct Relation {
  std::string id;
  std::string text;  // human form, indices generic
  std::vector<RelationInstance> (*instances)(int n);
};

const std::vector<Relation>& relation_catalog();
const Relation* find_relation(const std::string& id);
// relations in their literal textbook shape that do not hold here
const std::vector<Relation>& printed_variants();

bool check_instance(const RelationInstance& r, const LPoly& p);
// every instance of the relation at p.nvars()
bool check_relation(const std::string& id, const LPoly& p);

// random polynomial in N variables, total degree <= deg, small (q, t) coefficients
LPoly random_poly(int n, int deg, std::mt19937_64& rng, int max_terms = 6);

struct RelationReport {
  std::string id;
  int n = 0;
  int trials = 0;
  int failures = 0;
  std::string first_failure;
};
std::vector<RelationReport> run_catalog(const std::vector<Relation>& cat, int n, int trials,
                                        uint64_t seed, int deg = 3);

}  // namespace macdo
