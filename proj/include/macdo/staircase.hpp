#pragma once
// Staircase compositions, the raise / add_step / up paths, and the pole verifier.

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "macdo/denom.hpp"

namespace macdo {

// ((n-1)a)^k ((n-2)a)^k ... a^k 0^k
Composition staircase(int k, int a, int n);
// ((m-1)a+b)^k ... (a+b)^k b^k 0^{k(n-m)}, 0 <= m <= n, 0 <= b <= a
Composition qsc(int k, int a, int n, int m, int b);

// Qsc(m, b) -> Qsc(m, b+1): Phi^{mk}, then jump(jk+1; (n-m)k, k) for j = 0..m-1
Path raise_path(int k, int a, int n, int m, int b);
// Qsc(m, a) -> Qsc(m+1, 1): Phi^{(m+1)k}, then jump(jk+1; (n-m-1)k, k) for j = 0..m
Path add_step_path(int k, int a, int n, int m);
// Qsc(m, a) -> Qsc(m+1, a): add_step, then raise(m+1, b) for b = 1..a-1
Path up_path(int k, int a, int n, int m);
// 0^{nk} -> staircase: up(0) ... up(n-2)
Path staircase_path(int k, int a, int n);

// intermediate vertices of raise / add_step by closed formula
Composition raise_vertex(int k, int a, int n, int m, int b, int i);  // V_i
Composition add_step_vertex(int k, int a, int n, int m, int i);      // W_i

// closed-form segment bounds: D_j for raise, E_j for add_step (1-based j)
Bound raise_segment_bound(int k, int a, int m, int b, int j);
Bound add_step_segment_bound(int k, int a, int m, int j);
// the add_step bound as printed, (m-j)a+1 and (m-j)k+i
Bound add_step_segment_bound_printed(int k, int a, int m, int j);

struct SegmentCert {
  std::string kind;  // "raise" or "add_step"
  int m = 0, b = 0, j = 0;
  Composition from, to;
  Bound bound;          // block bound read from the spectral vector
  Bound closed_form;    // D_j / E_j
  bool closed_form_match = false;
  bool target_free = false;  // no factor is a multiple of (a, k+1)
  std::optional<bool> sound;  // ratio numerator divides bound (when brute forced)
};

struct StaircaseOptions {
  bool brute_force = true;
  std::chrono::seconds budget{0};  // 0: unlimited
};

struct StaircaseReport {
  int k = 0, a = 0, n = 0;
  Composition target;
  std::vector<SegmentCert> certificates;
  bool replay_ok = false;     // path vertices match V_i / W_i formulas and land on target
  bool anchors_ok = false;    // spectral anchors of the V and W vertices
  bool certificates_ok = false;  // every segment target-free and matching its closed form
  bool brute_forced = false;
  bool budget_exceeded = false;
  std::optional<Bound> den;                  // Den(staircase) by brute force
  std::optional<bool> absent;                // 1 - q^a t^{k+1} absent from den
  std::optional<bool> path_matches_canonical;  // walking the staircase path reproduces M_v
  std::optional<bool> all_sound;
  std::string error;
  bool passed() const;
  nlohmann::json json() const;
};

StaircaseReport verify_unreachable_pole(int k, int a, int n, const StaircaseOptions& opt = {});

// true iff some factor of the bound is (1 - q^{ra} t^{rb}) for r >= 1
bool bound_has_multiple_of(const Bound& b, int a, int bb);

}  // namespace macdo
