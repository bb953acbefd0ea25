#include "macdo/staircase.hpp"

#include <stdexcept>

namespace macdo {

namespace {

void check_params(int k, int a, int n) {
  if (k < 1 || a < 1 || n < 1) throw std::invalid_argument("staircase parameters must be >= 1");
  if (n * k > kMaxVars) throw std::invalid_argument("too many variables");
}

Composition blocks(int k, const std::vector<int>& vals) {
  Composition v;
  for (int x : vals) v.insert(v.end(), size_t(k), x);
  return v;
}

}  // namespace

Composition staircase(int k, int a, int n) {
  check_params(k, a, n);
  std::vector<int> vals;
  for (int j = n - 1; j >= 0; --j) vals.push_back(j * a);
  return blocks(k, vals);
}

Composition qsc(int k, int a, int n, int m, int b) {
  check_params(k, a, n);
  if (m < 0 || m > n || b < 0 || b > a) throw std::invalid_argument("qsc: m or b out of range");
  std::vector<int> vals;
  for (int j = m - 1; j >= 0; --j) vals.push_back(j * a + b);
  for (int j = m; j < n; ++j) vals.push_back(0);
  return blocks(k, vals);
}

Composition raise_vertex(int k, int a, int n, int m, int b, int i) {
  // the m raised blocks, the first i of them moved to the front
  std::vector<int> hi;
  for (int j = m - 1; j >= 0; --j) hi.push_back(j * a + b + 1);
  std::vector<int> vals(hi.begin(), hi.begin() + i);
  for (int j = 0; j < n - m; ++j) vals.push_back(0);
  vals.insert(vals.end(), hi.begin() + i, hi.end());
  return blocks(k, vals);
}

Composition add_step_vertex(int k, int a, int n, int m, int i) {
  std::vector<int> hi;
  for (int j = m; j >= 0; --j) hi.push_back(j * a + 1);
  std::vector<int> vals(hi.begin(), hi.begin() + i);
  for (int j = 0; j < n - m - 1; ++j) vals.push_back(0);
  vals.insert(vals.end(), hi.begin() + i, hi.end());
  return blocks(k, vals);
}

Path raise_path(int k, int a, int n, int m, int b) {
  if (m < 1 || m > n || b < 0 || b >= a) throw std::invalid_argument("raise: m or b out of range");
  Path p{qsc(k, a, n, m, b), {}};
  for (int i = 0; i < m * k; ++i) p.steps.push_back(Step::Phi());
  if (n > m)
    for (int j = 0; j < m; ++j) p.steps.push_back(Step::jump(j * k + 1, (n - m) * k, k));
  return p;
}

Path add_step_path(int k, int a, int n, int m) {
  if (m < 0 || m >= n) throw std::invalid_argument("add_step: m out of range");
  Path p{qsc(k, a, n, m, a), {}};
  for (int i = 0; i < (m + 1) * k; ++i) p.steps.push_back(Step::Phi());
  if (n > m + 1)
    for (int j = 0; j <= m; ++j) p.steps.push_back(Step::jump(j * k + 1, (n - m - 1) * k, k));
  return p;
}

Path up_path(int k, int a, int n, int m) {
  Path p = add_step_path(k, a, n, m);
  for (int b = 1; b < a; ++b) {
    Path r = raise_path(k, a, n, m + 1, b);
    p.steps.insert(p.steps.end(), r.steps.begin(), r.steps.end());
  }
  return p;
}

Path staircase_path(int k, int a, int n) {
  Path p{zeros(n * k), {}};
  for (int m = 0; m + 2 <= n; ++m) {
    Path u = up_path(k, a, n, m);
    p.steps.insert(p.steps.end(), u.steps.begin(), u.steps.end());
  }
  return p;
}

Bound raise_segment_bound(int k, int a, int m, int b, int j) {
  Bound r;
  for (int i = 1; i <= k; ++i) r *= Bound::binomial((m - j) * a + b + 1, (m - j) * k + i);
  return r;
}

Bound add_step_segment_bound(int k, int a, int m, int j) {
  Bound r;
  for (int i = 1; i <= k; ++i) r *= Bound::binomial((m - j + 1) * a + 1, (m - j + 1) * k + i);
  return r;
}

Bound add_step_segment_bound_printed(int k, int a, int m, int j) {
  Bound r;
  for (int i = 1; i <= k; ++i) {
    int qa = (m - j) * a + 1, tb = (m - j) * k + i;
    if (qa == 0 && tb == 0) continue;
    r *= Bound::binomial(qa, tb);
  }
  return r;
}

bool bound_has_multiple_of(const Bound& b, int a, int bb) {
  return AtomProduct::of_binomial(a, bb).divides(b.atoms);
}

bool StaircaseReport::passed() const {
  return error.empty() && replay_ok && anchors_ok && certificates_ok && brute_forced &&
         absent.value_or(false) && path_matches_canonical.value_or(false) &&
         all_sound.value_or(false);
}

nlohmann::json StaircaseReport::json() const {
  nlohmann::json certs = nlohmann::json::array();
  for (auto& c : certificates) {
    nlohmann::json j = {{"kind", c.kind},
                        {"m", c.m},
                        {"b", c.b},
                        {"j", c.j},
                        {"from", render_composition(c.from)},
                        {"to", render_composition(c.to)},
                        {"bound", bound_json(c.bound)},
                        {"closed_form_match", c.closed_form_match},
                        {"target_free", c.target_free}};
    if (c.sound) j["sound"] = *c.sound;
    certs.push_back(j);
  }
  nlohmann::json out = {{"k", k},
                        {"a", a},
                        {"n", n},
                        {"staircase", render_composition(target)},
                        {"target_factor", {a, k + 1}},
                        {"replay_ok", replay_ok},
                        {"anchors_ok", anchors_ok},
                        {"certificates_ok", certificates_ok},
                        {"brute_forced", brute_forced},
                        {"budget_exceeded", budget_exceeded},
                        {"certificates", certs},
                        {"passed", passed()}};
  out["den"] = den ? bound_json(*den) : nlohmann::json(nullptr);
  out["absent"] = absent ? nlohmann::json(*absent) : nlohmann::json(nullptr);
  if (path_matches_canonical) out["path_matches_canonical"] = *path_matches_canonical;
  if (!error.empty()) out["error"] = error;
  return out;
}

namespace {

struct BudgetExceeded : std::runtime_error {
  BudgetExceeded() : std::runtime_error("time budget exceeded") {}
};

// one segment of the staircase path: a jump with its place in the raise / add_step structure
struct SegInfo {
  std::string kind;
  int m, b, j;
};

}  // namespace

StaircaseReport verify_unreachable_pole(int k, int a, int n, const StaircaseOptions& opt) {
  StaircaseReport rep;
  rep.k = k;
  rep.a = a;
  rep.n = n;
  auto t0 = std::chrono::steady_clock::now();
  auto over = [&] {
    return opt.budget.count() > 0 && std::chrono::steady_clock::now() - t0 > opt.budget;
  };
  try {
    if (n < 2) throw std::invalid_argument("staircase verification needs n >= 2");
    rep.target = staircase(k, a, n);

    // segment structure and closed-form vertices, in path order
    std::vector<SegInfo> segs;
    std::vector<Composition> expect;  // vertex after each jump
    bool anchors = true;
    auto check_anchor = [&](const Composition& v, int pos1, QtMonomial want) {
      auto z = spectre_hat(v);
      if (!(z[pos1 - 1] == want)) anchors = false;
    };
    for (int m = 0; m + 2 <= n; ++m) {
      if (n > m + 1)
        for (int j = 1; j <= m + 1; ++j) {
          segs.push_back({"add_step", m, a, j});
          expect.push_back(add_step_vertex(k, a, n, m, j));
          Composition w = add_step_vertex(k, a, n, m, j - 1);
          check_anchor(w, (j - 1) * k + 1, {0, (n - m - 1) * k - 1});
          check_anchor(w, (n - m + j - 2) * k + 1, {(m - j + 1) * a + 1, (n - j + 1) * k - 1});
        }
      for (int b = 1; b < a; ++b)
        for (int j = 1; j <= m + 1; ++j) {
          int mm = m + 1;
          if (n <= mm) break;
          segs.push_back({"raise", mm, b, j});
          expect.push_back(raise_vertex(k, a, n, mm, b, j));
          Composition v = raise_vertex(k, a, n, mm, b, j - 1);
          check_anchor(v, (j - 1) * k + 1, {0, (n - mm) * k - 1});
          check_anchor(v, (n - mm + j - 1) * k + 1, {(mm - j) * a + b + 1, (n - j + 1) * k - 1});
        }
    }
    rep.anchors_ok = anchors;

    // replay the path and collect the jump certificates from spectral data alone
    Path p = staircase_path(k, a, n);
    Composition v = p.start;
    bool replay = true, certs_ok = true;
    size_t seg = 0;
    for (auto& s : p.steps) {
      if (s.is_jump()) {
        JumpSpec js = make_jump_spec(v, s.i, s.k, s.l);
        SegmentCert c;
        if (seg >= segs.size()) throw std::logic_error("segment bookkeeping");
        c.kind = segs[seg].kind;
        c.m = segs[seg].m;
        c.b = segs[seg].b;
        c.j = segs[seg].j;
        c.from = v;
        c.bound = block_divisor_bound(js);
        c.closed_form = c.kind == "raise" ? raise_segment_bound(k, a, c.m, c.b, c.j)
                                          : add_step_segment_bound(k, a, c.m, c.j);
        c.closed_form_match = c.bound == c.closed_form;
        c.target_free = !bound_has_multiple_of(c.bound, a, k + 1);
        certs_ok = certs_ok && c.closed_form_match && c.target_free;
        v = step_apply(v, s);
        c.to = v;
        if (v != expect[seg]) replay = false;
        rep.certificates.push_back(c);
        ++seg;
      } else {
        v = step_apply(v, s);
      }
    }
    rep.replay_ok = replay && seg == segs.size() && v == rep.target;
    rep.certificates_ok = certs_ok;

    if (!opt.brute_force) return rep;
    // brute force: walk the staircase path with jump operators, keeping M at each jump
    MacRep cur = mac_one(n * k);
    v = p.start;
    seg = 0;
    bool sound = true;
    Bound prev_den = den_bound(cur);
    for (auto& s : p.steps) {
      if (over()) throw BudgetExceeded();
      if (s.is_jump()) {
        JumpSpec js = make_jump_spec(v, s.i, s.k, s.l);
        cur = block_jump(cur, v, js, JumpRoute::J);
        Bound d = den_bound(cur);
        Bound ratio{std::max(0, d.qexp - prev_den.qexp), std::max(0, d.texp - prev_den.texp),
                    AtomProduct::num_ratio(d.atoms, prev_den.atoms)};
        // the A steps before this jump only move q-powers
        Bound allowed = rep.certificates[seg].bound;
        allowed.qexp = ratio.qexp;
        allowed.texp = ratio.texp;
        bool ok = ratio.divides(allowed);
        rep.certificates[seg].sound = ok;
        sound = sound && ok;
        prev_den = d;
        ++seg;
      } else {
        aff_step(cur);
        Bound d = den_bound(cur);  // only the monomial part moves
        prev_den.qexp = d.qexp;
        prev_den.texp = d.texp;
      }
      v = step_apply(v, s);
    }
    rep.all_sound = sound;
    rep.den = den_bound(cur);
    rep.absent = !bound_has_multiple_of(*rep.den, a, k + 1);
    if (over()) throw BudgetExceeded();
    // uncached walk; the memo table would keep every vertex alive
    MacRep canon = walk_from_zero(canonical_path(rep.target));
    rep.path_matches_canonical = same_polynomial(canon, cur);
    rep.brute_forced = true;
  } catch (const BudgetExceeded&) {
    rep.budget_exceeded = true;
    rep.error = "time budget exceeded";
  } catch (const std::exception& e) {
    rep.error = e.what();
  }
  return rep;
}

}  // namespace macdo
