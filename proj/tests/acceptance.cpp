// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any fails.
// MACDO_ACCEPT_ONLY=1,4,9 restricts the run; MACDO_ACCEPT_MEM_MB caps the address space.

#include <sys/resource.h>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "macdo/relations.hpp"
#include "macdo/staircase.hpp"
#include "support.hpp"

using namespace macdo;
using Clock = std::chrono::steady_clock;

#ifndef MACDO_IDENTITY_DIR
#define MACDO_IDENTITY_DIR "identities"
#endif

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail.clear();
    if (!detail.empty()) detail += "; ";
    detail += why;
    pass = false;
  }
};

double secs(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// factors (a, b) of every denominator seen along the way, for criterion 12
std::set<std::pair<int, int>> g_factors;
std::set<Composition> g_comps;
bool g_non_product = false;

void record_bound(const Bound& b) {
  std::map<std::pair<int, int>, int> f;
  if (!b.atoms.product_form(f)) {
    g_non_product = true;
    return;
  }
  for (auto& [ab, m] : f) g_factors.insert(ab);
}
void record(const Composition& v) {
  g_comps.insert(v);
  record_bound(den_bound(v));
}

std::string id_path(const std::string& f) { return std::string(MACDO_IDENTITY_DIR) + "/" + f; }

// ---- 1
Outcome golden_formulas() {
  Outcome o;
  auto timed = [&](const std::string& what, const std::function<bool()>& f) {
    auto t0 = Clock::now();
    bool ok = false;
    try {
      ok = f();
    } catch (const std::exception& e) {
      o.fail(what + ": " + e.what());
      return;
    }
    if (!ok) o.fail(what);
    if (secs(t0) > 1.0) o.fail(what + " took " + std::to_string(secs(t0)) + " s");
  };
  QtPoly q = QtPoly::q(), t = QtPoly::t();
  timed("M_102", [&] {
    MacPoly want = MacPoly::monomial(3, {1, 0, 2}, QtFraction(1, q)) +
                   MacPoly::monomial(3, {1, 1, 1}, QtFraction(t - 1, t * q - 1)) +
                   MacPoly::monomial(3, {0, 1, 2}, QtFraction(t - 1, q * (t * q - 1)));
    return mac({1, 0, 2}) == want;
  });
  const std::pair<const char*, const char*> dens[] = {
      {"102", "q (1-q t)"},
      {"310", "q^3 (1-q^2 t) (1-q t) (1-q^3 t^2)"},
      {"1002", "q (1-q t) (1-q t^2)"},
      {"0120", "q (1-q t^2) (1-q^2 t^3)"},
      {"2010", "q (1-q t) (1-q^2 t^2) (1-q t^2)"},
      {"022230", "q^6 (1-q t) (1-q^2 t^2) (1-q^2 t^4) (1-q^3 t^5)"},
      {"0022", "q^2 (1-q t) (1-q t^2)"},
      {"2002", "q^2 (1-q t) (1-q^2 t^2)"},
  };
  for (auto& [v, want] : dens)
    timed(std::string("Den(") + v + ")", [&] {
      Composition c = parse_composition(v);
      record(c);
      return den_of(c).str() == want;
    });
  auto ratio_is = [&](Composition u, Composition v, Bound num, Bound den) {
    record(u);
    record(v);
    Bound n = ratio_numerator(u, v), d = ratio_denominator(u, v);
    return n.atoms == num.atoms && d.atoms == den.atoms && n.qexp == num.qexp &&
           n.texp == num.texp && d.qexp == den.qexp && d.texp == den.texp;
  };
  Bound one;
  auto bin = [](int a, int b) { return Bound::binomial(a, b); };
  timed("Den(022320)/Den(022230)", [&] { return ratio_is({0, 2, 2, 2, 3, 0}, {0, 2, 2, 3, 2, 0}, bin(1, 3), one); });
  timed("Den(023220)/Den(022320)", [&] { return ratio_is({0, 2, 2, 3, 2, 0}, {0, 2, 3, 2, 2, 0}, bin(1, 2), bin(1, 3)); });
  timed("Den(032220)/Den(023220)", [&] { return ratio_is({0, 2, 3, 2, 2, 0}, {0, 3, 2, 2, 2, 0}, bin(1, 1), bin(1, 2)); });
  timed("Den(032220)/Den(022230)", [&] { return ratio_is({0, 2, 2, 2, 3, 0}, {0, 3, 2, 2, 2, 0}, bin(1, 1), one); });
  timed("Den(021110)/Den(011120)", [&] { return ratio_is({0, 1, 1, 1, 2, 0}, {0, 2, 1, 1, 1, 0}, bin(1, 1), bin(1, 4)); });
  timed("Den(033320)/Den(023330)", [&] { return ratio_is({0, 2, 3, 3, 3, 0}, {0, 3, 3, 3, 2, 0}, bin(1, 1), one); });
  timed("Den(033220)/Den(022330)", [&] { return ratio_is({0, 2, 2, 3, 3, 0}, {0, 3, 3, 2, 2, 0}, bin(1, 1) * bin(1, 2), one); });
  if (o.pass) o.detail = "M_102, 8 denominators and 7 ratios exact";
  return o;
}

// ---- 2
Outcome spectral_goldens() {
  Outcome o;
  Composition v{1, 0, 2, 2, 0, 1};
  if (spectre_hat(v) != SpectralVector{{1, 3}, {0, 1}, {2, 5}, {2, 4}, {0, 0}, {1, 2}}) o.fail("spectre_hat");
  if (spectre_y(v) != SpectralVector{{1, 3}, {0, 0}, {2, 3}, {2, 1}, {0, -4}, {1, -3}}) o.fail("spectre_y");
  if (standardize(v) != std::vector<int>{4, 2, 6, 5, 1, 3}) o.fail("std");
  SpectralVector s{{0, 2}, {0, 1}, {0, 0}};
  const SpectralVector walk[] = {{{0, 1}, {0, 0}, {1, 2}},
                                 {{0, 1}, {1, 2}, {0, 0}},
                                 {{1, 2}, {0, 0}, {1, 1}},
                                 {{0, 0}, {1, 1}, {2, 2}},
                                 {{1, 1}, {0, 0}, {2, 2}}};
  const int op[] = {0, 2, 0, 0, 1};
  for (int i = 0; i < 5; ++i) {
    s = op[i] ? si_step(s, op[i]) : lambda_step(s);
    if (s != walk[i]) o.fail("walk step " + std::to_string(i + 1));
  }
  if (render_spectral(s) != "[q*t, 1, q^2*t^2]") o.fail("walk end " + render_spectral(s));
  if (o.pass) o.detail = "zetahat, zeta, std = 426513 and the Lambda walk to " + render_spectral(s);
  return o;
}

// ---- 3
Outcome relation_suite() {
  Outcome o;
  auto t0 = Clock::now();
  int total = 0;
  for (int n : {3, 4}) {
    for (auto& r : run_catalog(relation_catalog(), n, 50, 20260 + uint64_t(n), 3)) {
      total += r.trials;
      if (r.failures) o.fail(r.id + " N=" + std::to_string(n) + ": " + std::to_string(r.failures) + " failures (" + r.first_failure + ")");
    }
  }
  double el = secs(t0);
  if (el > 60) o.fail("took " + std::to_string(el) + " s");
  if (o.pass) {
    std::ostringstream s;
    s << relation_catalog().size() << " relations, " << total << " checks at N = 3, 4, " << el << " s";
    o.detail = s.str();
  }
  return o;
}

// ---- 4, 5, 6
Outcome eigen_oracle() {
  Outcome o;
  auto t0 = Clock::now();
  auto set = testing::test_set(4, 6);
  for (auto& v : set) {
    auto m = mac_rep(v);
    record(v);
    SpectralVector z = testing::spectre_hat_oracle(v);
    for (int i = 1; i <= int(v.size()); ++i) {
      auto zi = z[size_t(i - 1)];
      if (apply_Yhat(m->num, i) != m->num.scaled(QtPoly::monomial(1, zi.q, zi.t)))
        o.fail(render_composition(v) + " Yhat_" + std::to_string(i));
    }
    if (secs(t0) > 600) {
      o.fail("over 10 min");
      break;
    }
  }
  if (o.pass) {
    std::ostringstream s;
    s << set.size() << " compositions, " << secs(t0) << " s";
    o.detail = s.str();
  }
  return o;
}

Outcome leading_term() {
  Outcome o;
  auto set = testing::test_set(4, 6);
  for (auto& v : set) {
    MacPoly p = mac(v);
    if (p.coeff(v) != QtFraction(QtPoly::monomial(1, -[&] {
          int s = 0;
          for (int x : v) s += x * (x - 1);
          return s / 2;
        }(), 0)))
      o.fail(render_composition(v) + " leading coefficient");
    for (auto& [mono, c] : p.terms()) {
      Composition u = mono.vec(int(v.size()));
      if (u != v && !testing::strictly_below(u, v)) o.fail(render_composition(v) + " has " + render_composition(u));
    }
  }
  if (o.pass) o.detail = std::to_string(set.size()) + " compositions";
  return o;
}

Outcome symmetry() {
  Outcome o;
  int n = 0;
  for (auto& v : testing::test_set(4, 6)) {
    MacPoly p;
    bool have = false;
    for (int i = 1; i < int(v.size()); ++i) {
      if (v[size_t(i - 1)] != v[size_t(i)]) continue;
      if (!have) p = mac(v), have = true;
      ++n;
      if (testing::swap_vars(p, i) != p) o.fail(render_composition(v) + " s" + std::to_string(i));
    }
  }
  if (o.pass) o.detail = std::to_string(n) + " (v, i) pairs with v_i = v_{i+1}";
  return o;
}

// ---- 7
Outcome confluence() {
  Outcome o;
  std::mt19937_64 rng(2026);
  auto set = testing::test_set(4, 6);
  std::uniform_int_distribution<size_t> pick(0, set.size() - 1);
  int done = 0, draws = 0;
  while (done < 100 && draws < 10000) {
    ++draws;
    Composition v = set[pick(rng)];
    Path a = canonical_path(v);
    std::optional<Path> b;
    for (int tries = 0; tries < 40 && !b; ++tries) {
      Path r = random_path(v, rng);
      if (r.steps != a.steps) b = r;
    }
    if (!b) continue;  // single path
    ++done;
    MacRep ma = walk_from_zero(a), mb = walk_from_zero(*b);
    if (!testing::rep_equal(ma, mb) || ma.to_poly() != mb.to_poly())
      o.fail(render_composition(v) + " via " + render_path(*b));
  }
  if (done < 100) o.fail("only " + std::to_string(done) + " compositions with two paths");
  if (o.pass) o.detail = "100 compositions, canonical vs random path";
  return o;
}

// ---- 8
Outcome jump_suite() {
  Outcome o;
  auto t0 = Clock::now();
  const double limit = 900;
  std::vector<testing::JumpPattern> all;
  for (int n = 2; n <= 7; ++n)
    for (auto& p : testing::jump_patterns(n, 3, 5)) all.push_back(p);
  size_t done = 0, failures = 0;
  bool oom = false;
  std::map<int, size_t> per_n;
  // whole-table eviction; N = 7 polynomials are large
  set_mac_cache_limit(2000);
  auto check = [&](const testing::JumpPattern& p) {
    JumpSpec s = make_jump_spec(p.v, p.pos, p.k, p.l);
    Composition w = jump_target(p.v, s);
    auto src = mac_rep(p.v);
    auto tgt = mac_rep(w);
    bool ok = true;
    for (auto r : {JumpRoute::J, JumpRoute::Dual, JumpRoute::Stepwise, JumpRoute::StepwiseDual})
      if (!testing::rep_equal(block_jump(*src, p.v, s, r), *tgt)) ok = false;
    Bound ratio = ratio_numerator(p.v, w);
    record_bound(ratio);
    if (!ratio.atoms.divides(block_divisor_bound(s).atoms)) ok = false;
    return ok;
  };
  for (auto& p : all) {
    if (secs(t0) > limit) break;
    bool ok;
    try {
      ok = check(p);
    } catch (const std::bad_alloc&) {
      clear_mac_cache();
      try {
        ok = check(p);
      } catch (const std::bad_alloc&) {
        clear_mac_cache();
        oom = true;
        o.fail("out of memory at " + render_composition(p.v));
        break;
      }
    }
    if (!ok && failures++ < 3)
      o.fail(render_composition(p.v) + " jump(" + std::to_string(p.pos) + ";" + std::to_string(p.k) + "," + std::to_string(p.l) + ")");
    ++done;
    ++per_n[int(p.v.size())];
  }
  set_mac_cache_limit(0);
  clear_mac_cache();
  std::ostringstream s;
  s << done << " of " << all.size() << " patterns in " << secs(t0) << " s (";
  for (auto& [n, c] : per_n) s << "N=" << n << ":" << c << " ";
  s << ")";
  if (failures) o.fail(std::to_string(failures) + " pattern failures");
  if (done < all.size()) o.fail(std::string(oom ? "stopped" : "time budget of 15 min exhausted") + " after " + s.str());
  if (o.pass) o.detail = s.str();
  return o;
}

// ---- 9
Outcome specialization_goldens() {
  Outcome o;
  for (auto f : {"m2100.txt", "m3210.txt"}) {
    try {
      IdentityResult r = check_identity(load_identity(id_path(f)));
      if (!r.equal) o.fail(std::string(f) + ": " + r.detail);
    } catch (const std::exception& e) {
      o.fail(std::string(f) + ": " + e.what());
    }
  }
  record({2, 1, 0, 0});
  record({3, 2, 1, 0});
  if (!degenerates({3, 1, 0}, 1, 1)) o.fail("310 at qt = 1");
  if (degenerates({3, 1, 0}, 2, 2)) o.fail("310 at q^2 t^2 = 1");
  for (auto v : {Composition{1, 0, 0, 2}, Composition{0, 1, 2, 0}, Composition{2, 0, 1, 0}})
    if (!degenerates(v, 1, 2) || !degenerates_subst(v, SpecPoint::make(1, 2)))
      o.fail(render_composition(v) + " should degenerate at q t^2 = 1");
  if (o.pass) o.detail = "M_2100, M_3210 at q t^2 = 1; degeneracies of 310, 1002, 0120, 2010";
  return o;
}

// ---- 10
Outcome identities_as_printed() {
  Outcome o;
  std::string ok;
  for (auto f : {"m210210.txt", "m221100.txt", "m420420.txt", "m4202020.txt", "m630630.txt"}) {
    auto t0 = Clock::now();
    try {
      Identity id = load_identity(id_path(f));
      IdentityResult r = check_identity(id);
      g_comps.insert(id.v);
      record_bound(den_bound(id.v));
      if (!r.equal) {
        std::string why = r.degenerate ? "degenerate" : r.detail;
        o.fail(id.name + ": " + why);
      } else {
        ok += " " + id.name;
      }
    } catch (const std::exception& e) {
      o.fail(std::string(f) + ": " + e.what());
    }
    std::cerr << "  [10] " << f << " " << secs(t0) << " s\n";
  }
  if (o.pass) o.detail = "all verified:" + ok;
  return o;
}

// ---- 11
Outcome staircase_grid() {
  Outcome o;
  auto t0 = Clock::now();
  const double limit = 1800;
  std::vector<std::array<int, 3>> cells;
  for (int k = 1; k <= 10; ++k)
    for (int n = 2; n * k <= 10; ++n)
      for (int a = 1; a <= 3; ++a) cells.push_back({k, a, n});
  // cheapest first: by staircase length, then size
  std::sort(cells.begin(), cells.end(), [](auto& x, auto& y) {
    auto key = [](auto& c) { return std::array<int, 3>{c[0] * c[2], c[0] * c[1] * c[2] * (c[2] - 1), c[0]}; };
    return key(x) < key(y);
  });
  int passed = 0;
  std::vector<std::string> bad;
  for (auto& c : cells) {
    auto c0 = Clock::now();
    StaircaseOptions opt;
    double left = limit - secs(t0);
    std::string label = "(" + std::to_string(c[0]) + "," + std::to_string(c[1]) + "," + std::to_string(c[2]) + ")";
    StaircaseReport r;
    if (left < 1) {
      opt.brute_force = false;
      r = verify_unreachable_pole(c[0], c[1], c[2], opt);
      bad.push_back(label + " not brute forced (grid budget spent)" +
                    (r.certificates_ok ? ", certificates ok" : ", certificates bad"));
      continue;
    }
    opt.budget = std::chrono::seconds(std::max<long>(1, std::min<long>(long(left), 600)));
    try {
      r = verify_unreachable_pole(c[0], c[1], c[2], opt);
    } catch (const std::bad_alloc&) {
      clear_mac_cache();
      StaircaseOptions cert;
      cert.brute_force = false;
      r = verify_unreachable_pole(c[0], c[1], c[2], cert);
      r.error = "out of memory";
    }
    clear_mac_cache();
    if (r.den) record_bound(*r.den);
    std::cerr << "  [11] " << label << " " << (r.passed() ? "pass" : "FAIL " + r.error) << " " << secs(c0) << " s\n";
    if (r.passed()) {
      ++passed;
    } else {
      std::string why = r.error.empty() ? "report failed" : r.error;
      bad.push_back(label + " " + why + (r.certificates_ok ? ", certificates ok" : ", certificates bad"));
    }
  }
  std::ostringstream s;
  s << passed << " of " << cells.size() << " cells in " << secs(t0) << " s";
  if (!bad.empty()) {
    std::string all;
    for (auto& b : bad) all += (all.empty() ? "" : "; ") + b;
    o.fail(s.str() + "; failing: " + all);
  } else {
    o.detail = s.str();
  }
  return o;
}

// ---- 12
Outcome degeneracy_equivalence() {
  Outcome o;
  if (g_non_product) o.fail("some denominator is not a product of binomials");
  int checks = 0;
  for (auto [a2, b2] : g_factors)
    for (int a = 1; a <= 4; ++a)
      for (int b = 1; b <= 4; ++b) {
        bool d1 = factor_degenerates(a2, b2, a, b);
        bool d2 = factor_degenerates_divides(a2, b2, a, b);
        int d = std::gcd(a, b);
        for (int w = 0; w < a; ++w) {
          if (d > 1 && std::gcd(w, d) != 1) continue;
          bool d3 = factor_degenerates_subst(a2, b2, SpecPoint::make(a, b, w));
          ++checks;
          if (d1 != d2 || d1 != d3)
            o.fail("factor (1-q^" + std::to_string(a2) + " t^" + std::to_string(b2) + ") at (" +
                   std::to_string(a) + "," + std::to_string(b) + ") omega " + std::to_string(w));
        }
      }
  for (auto& v : g_comps)
    for (int a = 1; a <= 4; ++a)
      for (int b = 1; b <= 4; ++b) {
        bool d1 = degenerates(v, a, b), d2 = degenerates_divides(v, a, b),
             d3 = degenerates_subst(v, SpecPoint::make(a, b));
        ++checks;
        if (d1 != d2 || d1 != d3) o.fail(render_composition(v) + " at (" + std::to_string(a) + "," + std::to_string(b) + ")");
      }
  if (o.pass) {
    std::ostringstream s;
    s << g_factors.size() << " factors, " << g_comps.size() << " compositions, " << checks << " checks";
    o.detail = s.str();
  }
  return o;
}

}  // namespace

int main() {
  std::set<int> only;
  if (const char* e = std::getenv("MACDO_ACCEPT_ONLY")) {
    std::stringstream ss(e);
    std::string tok;
    while (std::getline(ss, tok, ',')) only.insert(std::stoi(tok));
  }
  long mem_mb = 4096;
  if (const char* e = std::getenv("MACDO_ACCEPT_MEM_MB")) mem_mb = std::atol(e);
  if (mem_mb > 0) {
    rlimit rl{rlim_t(mem_mb) << 20, rlim_t(mem_mb) << 20};
    setrlimit(RLIMIT_AS, &rl);
  }

  const std::pair<int, std::function<Outcome()>> criteria[] = {
      {1, golden_formulas},  {2, spectral_goldens},       {3, relation_suite},
      {4, eigen_oracle},     {5, leading_term},           {6, symmetry},
      {7, confluence},       {8, jump_suite},             {9, specialization_goldens},
      {10, identities_as_printed}, {11, staircase_grid},  {12, degeneracy_equivalence},
  };
  bool all = true;
  for (auto& [n, f] : criteria) {
    if (!only.empty() && !only.count(n)) continue;
    auto t0 = Clock::now();
    Outcome r;
    try {
      r = f();
    } catch (const std::exception& e) {
      r.fail(std::string("exception: ") + e.what());
    }
    all = all && r.pass;
    std::cout << "Criterion " << n << ": " << (r.pass ? "PASS" : "FAIL") << " (" << secs(t0) << " s) "
              << r.detail << std::endl;
  }
  return all ? 0 : 1;
}
