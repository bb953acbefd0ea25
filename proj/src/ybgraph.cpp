#include "macdo/ybgraph.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>

namespace macdo {

std::string Step::label() const {
  switch (kind) {
    case Kind::S:
      return "s" + std::to_string(i);
    case Kind::Phi:
      return "Phi";
    case Kind::Jump:
      return "jump(" + std::to_string(i) + ";" + std::to_string(k) + "," + std::to_string(l) + ")";
    case Kind::JumpDual:
      return "jump†(" + std::to_string(i) + ";" + std::to_string(k) + "," +
             std::to_string(l) + ")";
  }
  return "?";
}

std::string render_composition(const Composition& v) {
  bool big = std::any_of(v.begin(), v.end(), [](int x) { return x >= 10; });
  std::string s;
  if (big) {
    s = "[";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
  }
  for (int x : v) s += char('0' + x);
  return s;
}

Composition parse_composition(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (c != ' ' && c != '[' && c != ']') s += c;
  if (s.empty()) throw std::invalid_argument("empty composition");
  Composition v;
  if (s.find(',') != std::string::npos) {
    size_t p = 0;
    while (p <= s.size()) {
      size_t q = s.find(',', p);
      std::string tok = s.substr(p, q == std::string::npos ? std::string::npos : q - p);
      if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("bad composition part '" + tok + "'");
      v.push_back(std::stoi(tok));
      if (q == std::string::npos) break;
      p = q + 1;
    }
  } else {
    for (char c : s) {
      if (c < '0' || c > '9') throw std::invalid_argument("bad composition '" + raw + "'");
      v.push_back(c - '0');
    }
  }
  if (v.size() > size_t(kMaxVars)) throw std::invalid_argument("composition too long");
  return v;
}

Composition zeros(int n) { return Composition(size_t(n), 0); }

namespace {

void check_jump(const Composition& v, const Step& s) {
  int m = s.i - 1, n = int(v.size());
  if (s.k < 1 || s.l < 1 || m < 0 || m + s.k + s.l > n)
    throw InvalidStep("jump blocks do not fit: " + s.label(), s.i);
  int a = v[m], b = v[m + s.k];
  for (int j = 0; j < s.k; ++j)
    if (v[m + j] != a) throw InvalidStep("first block not constant: " + s.label(), s.i);
  for (int j = 0; j < s.l; ++j)
    if (v[m + s.k + j] != b) throw InvalidStep("second block not constant: " + s.label(), s.i);
  if (b <= a) throw InvalidStep("jump needs b > a: " + s.label(), s.i);
}

}  // namespace

Composition step_apply(const Composition& v, const Step& s) {
  int n = int(v.size());
  switch (s.kind) {
    case Step::Kind::S: {
      if (s.i < 1 || s.i > n - 1) throw InvalidStep("index out of range", s.i);
      if (!(v[s.i - 1] < v[s.i]))
        throw InvalidStep("s" + std::to_string(s.i) + " needs v_i < v_{i+1} at " +
                              render_composition(v),
                          s.i);
      Composition w = v;
      std::swap(w[s.i - 1], w[s.i]);
      return w;
    }
    case Step::Kind::Phi: {
      Composition w(v.begin() + 1, v.end());
      w.push_back(v[0] + 1);
      return w;
    }
    case Step::Kind::Jump:
    case Step::Kind::JumpDual: {
      check_jump(v, s);
      int m = s.i - 1;
      Composition w = v;
      std::rotate(w.begin() + m, w.begin() + m + s.k, w.begin() + m + s.k + s.l);
      return w;
    }
  }
  return v;
}

std::vector<Step> expand_steps(const Composition& start, const std::vector<Step>& steps) {
  std::vector<Step> out;
  Composition v = start;
  for (auto& s : steps) {
    if (!s.is_jump()) {
      out.push_back(s);
      v = step_apply(v, s);
      continue;
    }
    check_jump(v, s);
    int m = s.i - 1;
    if (s.kind == Step::Kind::Jump) {
      for (int j = 0; j < s.l; ++j)
        for (int i = 0; i < s.k; ++i) out.push_back(Step::S(m + s.k + j - i));
    } else {
      for (int j = 0; j < s.k; ++j)
        for (int i = 0; i < s.l; ++i) out.push_back(Step::S(m + s.k - j + i));
    }
    v = step_apply(v, s);
  }
  return out;
}

std::vector<Composition> path_vertices(const Path& p) {
  std::vector<Composition> vs{p.start};
  for (auto& s : p.steps) vs.push_back(step_apply(vs.back(), s));
  return vs;
}

Composition path_end(const Path& p) { return path_vertices(p).back(); }

std::string render_path(const Path& p) {
  auto vs = path_vertices(p);
  std::string s = render_composition(vs[0]);
  for (size_t i = 0; i < p.steps.size(); ++i)
    s += " -" + p.steps[i].label() + "-> " + render_composition(vs[i + 1]);
  return s;
}

Path canonical_path(const Composition& v) {
  std::vector<Step> rev;
  Composition w = v;
  int n = int(w.size());
  while (std::any_of(w.begin(), w.end(), [](int x) { return x != 0; })) {
    int d = -1;
    for (int i = 0; i + 1 < n; ++i)
      if (w[i] > w[i + 1]) {
        d = i;
        break;
      }
    if (d >= 0) {
      std::swap(w[d], w[d + 1]);
      rev.push_back(Step::S(d + 1));
    } else {
      Composition u;
      u.push_back(w[n - 1] - 1);
      u.insert(u.end(), w.begin(), w.end() - 1);
      w = u;
      rev.push_back(Step::Phi());
    }
  }
  std::reverse(rev.begin(), rev.end());
  return {zeros(n), rev};
}

Path random_path(const Composition& v, std::mt19937_64& rng) {
  std::vector<Step> rev;
  Composition w = v;
  int n = int(w.size());
  while (std::any_of(w.begin(), w.end(), [](int x) { return x != 0; })) {
    std::vector<int> moves;  // descent index, or -1 for Phi
    for (int i = 0; i + 1 < n; ++i)
      if (w[i] > w[i + 1]) moves.push_back(i);
    if (w[n - 1] >= 1) moves.push_back(-1);
    int mv = moves[std::uniform_int_distribution<size_t>(0, moves.size() - 1)(rng)];
    if (mv >= 0) {
      std::swap(w[mv], w[mv + 1]);
      rev.push_back(Step::S(mv + 1));
    } else {
      Composition u;
      u.push_back(w[n - 1] - 1);
      u.insert(u.end(), w.begin(), w.end() - 1);
      w = u;
      rev.push_back(Step::Phi());
    }
  }
  std::reverse(rev.begin(), rev.end());
  return {zeros(n), rev};
}

// ---------------------------------------------------------------------------

namespace {

// reduced fraction c / den with Laurent exponents cleared
QtFraction reduced_coeff(const QtPoly& c, const AtomProduct& den) {
  QtPoly nn = c;
  AtomProduct local;
  for (auto& [x, e] : den.atoms()) {
    int left = e;
    while (left > 0 && atom_divides(x, nn)) {
      nn = atom_divide(x, nn);
      --left;
    }
    if (left) local.add(x, left);
  }
  QtPoly dd = local.expand();
  int sq = std::min(0, nn.min_q()), st = std::min(0, nn.min_t());
  nn = nn.shifted(-sq, -st);
  dd = dd.shifted(-sq, -st);
  if (dd.terms().back().c.sign() < 0) {
    nn = -nn;
    dd = -dd;
  }
  return QtFraction::unchecked(std::move(nn), std::move(dd));
}

}  // namespace

MacPoly MacRep::to_poly() const {
  MacPoly r(nvars());
  auto& rt = r.mut_terms();
  rt.reserve(num.size());
  for (auto& [m, c] : num.terms()) rt.push_back({m, reduced_coeff(c, den)});
  return r;
}

QtFraction MacRep::coeff(const Mono& m) const {
  const QtPoly* c = num.find(m);
  return c ? reduced_coeff(*c, den) : QtFraction();
}

MacRep mac_one(int n) { return {LPoly::constant(n, QtPoly(1)), {}}; }

void reduce_rep(MacRep& m) {
  if (m.num.is_zero()) {
    m.den = {};
    return;
  }
  auto& ts = m.num.mut_terms();
  // probe the smallest coefficient first so failures exit early
  size_t probe = 0;
  for (size_t i = 1; i < ts.size(); ++i)
    if (ts[i].second.size() < ts[probe].second.size()) probe = i;
  auto atoms = m.den.atoms();
  for (auto& [x, e] : atoms) {
    for (int rep = 0; rep < e; ++rep) {
      if (!atom_divides(x, ts[probe].second)) break;
      bool all = true;
      for (size_t i = 0; i < ts.size() && all; ++i)
        if (i != probe && !atom_divides(x, ts[i].second)) all = false;
      if (!all) break;
      for (auto& tm : ts) tm.second = atom_divide(x, tm.second);
      m.den.add(x, -1);
    }
  }
}

void yang_step(MacRep& m, int i, QtMonomial alpha) {
  if (alpha.q == 0 && alpha.t == 0) throw AlphaIsOne();
  LPoly tp = apply_Ti(m.num, i);
  // (1 - alpha) P T_i + (1 - t) P
  auto one_minus = [](const QtPoly& c, int a, int b) {
    QtPoly r = c;
    r.add_scaled(c, Int(-1), a, b);
    return r;
  };
  LPoly a = tp.map_coeffs<QtPoly>([&](const QtPoly& c) { return one_minus(c, alpha.q, alpha.t); });
  LPoly b = m.num.map_coeffs<QtPoly>([&](const QtPoly& c) { return one_minus(c, 0, 1); });
  m.num = a + b;
  if (alpha.q > 0 || (alpha.q == 0 && alpha.t > 0)) {
    m.den *= AtomProduct::of_binomial(alpha.q, alpha.t);
  } else {
    // 1 - m = -m (1 - 1/m); the monomial unit goes into the numerator
    m.den *= AtomProduct::of_binomial(-alpha.q, -alpha.t);
    m.num = m.num.map_coeffs<QtPoly>(
        [&](const QtPoly& c) { return -c.shifted(-alpha.q, -alpha.t); });
  }
  reduce_rep(m);
}

void aff_step(MacRep& m) { m.num = apply_aff(m.num); }

bool same_polynomial(const MacRep& a, const MacRep& b) {
  if (a.nvars() != b.nvars()) return false;
  // num = M * den, so equal denominators force equal numerators
  if (a.den == b.den) return a.num == b.num;
  QtPoly ea = AtomProduct::num_ratio(b.den, a.den).expand();
  QtPoly eb = AtomProduct::num_ratio(a.den, b.den).expand();
  return a.num.scaled(ea) == b.num.scaled(eb);
}

MacRep walk(const Path& p, const MacRep& start) {
  MacRep m = start;
  Composition v = p.start;
  for (auto& s : expand_steps(p.start, p.steps)) {
    if (s.kind == Step::Kind::S) {
      auto z = spectre_hat(v);
      QtMonomial alpha{z[s.i].q - z[s.i - 1].q, z[s.i].t - z[s.i - 1].t};
      yang_step(m, s.i, alpha);
    } else {
      aff_step(m);
    }
    v = step_apply(v, s);
  }
  return m;
}

MacRep walk_from_zero(const Path& p) {
  if (std::any_of(p.start.begin(), p.start.end(), [](int x) { return x != 0; }))
    throw std::invalid_argument("walk_from_zero: path does not start at 0^N");
  return walk(p, mac_one(int(p.start.size())));
}

namespace {

struct MacCache {
  std::shared_mutex mu;
  std::map<Composition, std::shared_ptr<const MacRep>> table;
  size_t limit = 0;  // 0: unbounded
};

MacCache& cache() {
  static MacCache c;
  return c;
}

void cache_put(const Composition& v, std::shared_ptr<const MacRep> r) {
  auto& c = cache();
  std::unique_lock lk(c.mu);
  if (c.limit && c.table.size() >= c.limit) c.table.clear();
  c.table.emplace(v, std::move(r));
}

std::shared_ptr<const MacRep> cache_get(const Composition& v) {
  auto& c = cache();
  std::shared_lock lk(c.mu);
  auto it = c.table.find(v);
  return it == c.table.end() ? nullptr : it->second;
}

}  // namespace

std::shared_ptr<const MacRep> mac_rep(const Composition& v) {
  if (auto hit = cache_get(v)) return hit;
  Path p = canonical_path(v);
  auto vs = path_vertices(p);
  // resume from the furthest cached vertex
  size_t from = 0;
  std::shared_ptr<const MacRep> cur;
  for (size_t j = vs.size(); j-- > 0;) {
    if (auto hit = cache_get(vs[j])) {
      from = j;
      cur = hit;
      break;
    }
  }
  if (!cur) {
    cur = std::make_shared<const MacRep>(mac_one(int(v.size())));
    cache_put(vs[0], cur);
    from = 0;
  }
  for (size_t j = from; j < p.steps.size(); ++j) {
    MacRep next = *cur;
    const Step& s = p.steps[j];
    if (s.kind == Step::Kind::S) {
      auto z = spectre_hat(vs[j]);
      yang_step(next, s.i, {z[s.i].q - z[s.i - 1].q, z[s.i].t - z[s.i - 1].t});
    } else {
      aff_step(next);
    }
    cur = std::make_shared<const MacRep>(std::move(next));
    cache_put(vs[j + 1], cur);
  }
  return cur;
}

MacPoly mac(const Composition& v) { return mac_rep(v)->to_poly(); }

void clear_mac_cache() {
  auto& c = cache();
  std::unique_lock lk(c.mu);
  c.table.clear();
}

size_t mac_cache_size() {
  auto& c = cache();
  std::shared_lock lk(c.mu);
  return c.table.size();
}

void set_mac_cache_limit(size_t n) {
  auto& c = cache();
  std::unique_lock lk(c.mu);
  c.limit = n;
}

// ---------------------------------------------------------------------------

Order cmp_dominance(const Composition& u, const Composition& v) {
  if (u.size() != v.size()) throw std::invalid_argument("length mismatch");
  bool ge = true, le = true;
  long su = 0, sv = 0;
  for (size_t i = 0; i < u.size(); ++i) {
    su += u[i];
    sv += v[i];
    if (su < sv) ge = false;
    if (su > sv) le = false;
  }
  if (ge && le) return Order::Equal;
  if (ge) return Order::Greater;
  if (le) return Order::Less;
  return Order::Incomparable;
}

Order cmp_triangle(const Composition& u, const Composition& v) {
  if (u.size() != v.size()) throw std::invalid_argument("length mismatch");
  Composition up = u, vp = v;
  std::sort(up.rbegin(), up.rend());
  std::sort(vp.rbegin(), vp.rend());
  Order o = cmp_dominance(up, vp);
  if (o != Order::Equal) return o;
  return cmp_dominance(u, v);
}

std::string order_str(Order o) {
  switch (o) {
    case Order::Less:
      return "less";
    case Order::Equal:
      return "equal";
    case Order::Greater:
      return "greater";
    case Order::Incomparable:
      return "incomparable";
  }
  return "?";
}

int leading_qexp(const Composition& v) {
  int s = 0;
  for (int x : v) s += x * (x - 1);
  return -s / 2;
}

LeadingData leading_data(const Composition& v) {
  auto rep = mac_rep(v);
  int n = int(v.size());
  LeadingData out;
  // the triangle-maximal monomials
  std::vector<Composition> maxes;
  for (auto& [m, c] : rep->num.terms()) {
    Composition u = m.vec(n);
    bool dominated = false;
    for (auto& [m2, c2] : rep->num.terms()) {
      if (m2 == m) continue;
      if (cmp_triangle(m2.vec(n), u) == Order::Greater) {
        dominated = true;
        break;
      }
    }
    if (!dominated) maxes.push_back(u);
  }
  if (maxes.size() == 1) {
    out.monomial = maxes[0];
    out.coefficient = rep->coeff(Mono::from(maxes[0]));
    out.unique_max = true;
    for (auto& [m, c] : rep->num.terms()) {
      Composition u = m.vec(n);
      if (u != maxes[0] && cmp_triangle(maxes[0], u) != Order::Greater) out.unique_max = false;
    }
  } else if (!maxes.empty()) {
    out.monomial = maxes[0];
    out.coefficient = rep->coeff(Mono::from(maxes[0]));
  }
  return out;
}

}  // namespace macdo
