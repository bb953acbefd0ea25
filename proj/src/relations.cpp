#include "macdo/relations.hpp"

#include <sstream>
#include <stdexcept>

namespace macdo {

std::vector<Op> parse_word(const std::string& w) {
  std::vector<Op> out;
  std::istringstream in(w);
  std::string tok;
  while (in >> tok) {
    size_t p = tok.find_first_of("0123456789");
    std::string head = tok.substr(0, p);
    int idx = p == std::string::npos ? 0 : std::stoi(tok.substr(p));
    Op::Kind k;
    if (head == "s") k = Op::Kind::S;
    else if (head == "d") k = Op::Kind::Del;
    else if (head == "pi") k = Op::Kind::Pi;
    else if (head == "T") k = Op::Kind::T;
    else if (head == "Ti") k = Op::Kind::Tinv;
    else if (head == "X") k = Op::Kind::X;
    else if (head == "tau") k = Op::Kind::Tau;
    else if (head == "taui") k = Op::Kind::TauInv;
    else if (head == "A") k = Op::Kind::Aff;
    else if (head == "Y") k = Op::Kind::Y;
    else if (head == "Yh") k = Op::Kind::Yhat;
    else throw std::invalid_argument("unknown operator '" + tok + "'");
    out.push_back({k, idx});
  }
  return out;
}

LPoly apply_word(const LPoly& p, const std::vector<Op>& w) {
  LPoly r = p;
  for (auto& o : w) {
    switch (o.kind) {
      case Op::Kind::S: r = apply_si(r, o.i); break;
      case Op::Kind::Del: r = apply_del(r, o.i); break;
      case Op::Kind::Pi: r = apply_pi(r, o.i); break;
      case Op::Kind::T: r = apply_Ti(r, o.i); break;
      case Op::Kind::Tinv: r = apply_Ti_inv(r, o.i); break;
      case Op::Kind::X: r = apply_xi(r, o.i); break;
      case Op::Kind::Tau: r = apply_tau(r); break;
      case Op::Kind::TauInv: r = apply_tau_inv(r); break;
      case Op::Kind::Aff: r = apply_aff(r); break;
      case Op::Kind::Y: r = apply_Y(r, o.i); break;
      case Op::Kind::Yhat: r = apply_Yhat(r, o.i); break;
    }
  }
  return r;
}

namespace {

std::string I(int i) { return std::to_string(i); }

WordTerm W(const std::string& w, QtPoly c = QtPoly(1)) { return {std::move(c), parse_word(w)}; }
QtPoly qt(int a, int b) { return QtPoly::monomial(1, a, b); }

std::string xall(int n, const char* op) {
  std::string s;
  for (int j = 1; j <= n; ++j) s += std::string(" ") + op + I(j);
  return s;
}

using Inst = std::vector<RelationInstance>;

Inst quad(int n) {
  Inst r;
  // T T = (t - 1) T + t
  for (int i = 1; i < n; ++i)
    r.push_back({"i=" + I(i), {W("T" + I(i) + " T" + I(i))},
                 {W("T" + I(i), qt(0, 1) - QtPoly(1)), W("", qt(0, 1))}});
  return r;
}

Inst braid(int n) {
  Inst r;
  for (int i = 1; i + 1 < n; ++i) {
    std::string a = "T" + I(i), b = "T" + I(i + 1);
    r.push_back({"i=" + I(i), {W(a + " " + b + " " + a)}, {W(b + " " + a + " " + b)}});
  }
  return r;
}

Inst com(int n) {
  Inst r;
  for (int i = 1; i < n; ++i)
    for (int j = i + 2; j < n; ++j)
      r.push_back({"i=" + I(i) + ",j=" + I(j), {W("T" + I(i) + " T" + I(j))},
                   {W("T" + I(j) + " T" + I(i))}});
  return r;
}

Inst homcom(int n) {
  Inst r;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      r.push_back({"Y i=" + I(i) + ",j=" + I(j), {W("Y" + I(i) + " Y" + I(j))},
                   {W("Y" + I(j) + " Y" + I(i))}});
  return r;
}

// T_i commutes with X_j and Y_j for j not in {i, i+1}
Inst hetcom(int n) {
  Inst r;
  for (int i = 1; i < n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (j == i || j == i + 1) continue;
      r.push_back({"TX i=" + I(i) + ",j=" + I(j), {W("T" + I(i) + " X" + I(j))},
                   {W("X" + I(j) + " T" + I(i))}});
      r.push_back({"TY i=" + I(i) + ",j=" + I(j), {W("T" + I(i) + " Y" + I(j))},
                   {W("Y" + I(j) + " T" + I(i))}});
    }
  return r;
}

// T_i X_{i+1} T_i = t X_i
Inst blr(int n) {
  Inst r;
  for (int i = 1; i < n; ++i)
    r.push_back({"i=" + I(i), {W("T" + I(i) + " X" + I(i + 1) + " T" + I(i))},
                 {W("X" + I(i), qt(0, 1))}});
  return r;
}

// T_i Y_{i+1} T_i = Y_i
Inst dual_blr(int n) {
  Inst r;
  for (int i = 1; i < n; ++i)
    r.push_back({"i=" + I(i), {W("T" + I(i) + " Y" + I(i + 1) + " T" + I(i))},
                 {W("Y" + I(i))}});
  return r;
}

// T_i Yh_{i+1} T_i = t Yh_i
Inst dbl_hat(int n) {
  Inst r;
  for (int i = 1; i < n; ++i)
    r.push_back({"i=" + I(i), {W("T" + I(i) + " Yh" + I(i + 1) + " T" + I(i))},
                 {W("Yh" + I(i), qt(0, 1))}});
  return r;
}

// Y_i X_1...X_N = q^-1 X_1...X_N Y_i
Inst cross(int n) {
  Inst r;
  for (int i = 1; i <= n; ++i)
    r.push_back({"i=" + I(i), {W("Y" + I(i) + xall(n, "X"))},
                 {W(xall(n, "X") + " Y" + I(i), qt(-1, 0))}});
  return r;
}

// X_i Y_1...Y_N = q Y_1...Y_N X_i
Inst dcross(int n) {
  Inst r;
  for (int i = 1; i <= n; ++i)
    r.push_back({"i=" + I(i), {W("X" + I(i) + xall(n, "Y"))},
                 {W(xall(n, "Y") + " X" + I(i), qt(1, 0))}});
  return r;
}

// T_{i+1} tau = tau T_i
Inst tau_t(int n) {
  Inst r;
  for (int i = 1; i + 1 < n; ++i)
    r.push_back({"i=" + I(i), {W("T" + I(i + 1) + " tau")}, {W("tau T" + I(i))}});
  return r;
}

// X_i tau = tau X_{i-1}, X_1 tau = q^-1 tau X_N
Inst tau_x(int n) {
  Inst r;
  for (int i = 2; i <= n; ++i)
    r.push_back({"i=" + I(i), {W("X" + I(i) + " tau")}, {W("tau X" + I(i - 1))}});
  r.push_back({"i=1", {W("X1 tau")}, {W("tau X" + I(n), qt(-1, 0))}});
  return r;
}

// A Yh_i = Yh_{i+1} A, A Yh_N = q Yh_1 A
Inst tau_y(int n) {
  Inst r;
  for (int i = 1; i < n; ++i)
    r.push_back({"i=" + I(i), {W("A Yh" + I(i))}, {W("Yh" + I(i + 1) + " A")}});
  r.push_back({"i=N", {W("A Yh" + I(n))}, {W("Yh1 A", qt(1, 0))}});
  return r;
}

// T_i = (t - 1) pi_i + s_i = d_i (t X_{i+1} - X_i) + t
Inst realization(int n) {
  Inst r;
  for (int i = 1; i < n; ++i) {
    r.push_back({"pi i=" + I(i), {W("T" + I(i))},
                 {W("pi" + I(i), qt(0, 1) - QtPoly(1)), W("s" + I(i))}});
    r.push_back({"d i=" + I(i), {W("T" + I(i))},
                 {W("d" + I(i) + " X" + I(i + 1), qt(0, 1)), W("d" + I(i) + " X" + I(i), QtPoly(-1)),
                  W("", qt(0, 1))}});
  }
  return r;
}

Inst inversion(int n) {
  Inst r;
  for (int i = 1; i < n; ++i)
    r.push_back({"i=" + I(i), {W("T" + I(i) + " Ti" + I(i))}, {W("")}});
  r.push_back({"tau", {W("tau taui")}, {W("")}});
  return r;
}

// literal shapes as usually printed
Inst blr_printed(int n) {
  Inst r;
  for (int i = 1; i < n; ++i)
    r.push_back({"i=" + I(i), {W("T" + I(i) + " X" + I(i) + " T" + I(i))},
                 {W("X" + I(i + 1))}});
  return r;
}

Inst xy_com_printed(int n) {
  Inst r;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      r.push_back({"i=" + I(i) + ",j=" + I(j), {W("X" + I(i) + " Y" + I(j))},
                   {W("Y" + I(j) + " X" + I(i))}});
  return r;
}

Inst tau_y_printed(int n) {
  Inst r;
  for (int i = 1; i < n; ++i)
    r.push_back({"i=" + I(i), {W("Y" + I(i) + " tau")}, {W("tau Y" + I(i + 1))}});
  r.push_back({"i=N", {W("Y" + I(n) + " tau")}, {W("tau Y1", qt(1, 0))}});
  return r;
}

Inst cross_printed(int n) {
  Inst r;
  for (int i = 1; i <= n; ++i)
    r.push_back({"i=" + I(i), {W("Y" + I(i) + xall(n, "X"))},
                 {W(xall(n, "X") + " Y" + I(i), qt(1, 0))}});
  return r;
}

Inst tau_t_printed(int n) {
  Inst r;
  for (int i = 1; i + 1 < n; ++i)
    r.push_back({"i=" + I(i), {W("T" + I(i) + " tau")}, {W("tau T" + I(i + 1))}});
  return r;
}

}  // namespace

const std::vector<Relation>& relation_catalog() {
  static const std::vector<Relation> cat = {
      {"quad", "(T_i - t)(T_i + 1) = 0", quad},
      {"braid", "T_i T_{i+1} T_i = T_{i+1} T_i T_{i+1}", braid},
      {"com", "T_i T_j = T_j T_i, |i-j| > 1", com},
      {"ycom", "Y_i Y_j = Y_j Y_i", homcom},
      {"hetcom", "T_i X_j = X_j T_i, T_i Y_j = Y_j T_i, j not in {i, i+1}", hetcom},
      {"blr", "T_i X_{i+1} T_i = t X_i", blr},
      {"dual-blr", "T_i Y_{i+1} T_i = Y_i", dual_blr},
      {"dbl-hat", "T_i Yh_{i+1} T_i = t Yh_i", dbl_hat},
      {"cross", "Y_i X_1...X_N = q^-1 X_1...X_N Y_i", cross},
      {"dcross", "X_i Y_1...Y_N = q Y_1...Y_N X_i", dcross},
      {"tau-t", "T_{i+1} tau = tau T_i", tau_t},
      {"tau-x", "X_i tau = tau X_{i-1}, X_1 tau = q^-1 tau X_N", tau_x},
      {"tau-y", "A Yh_i = Yh_{i+1} A, A Yh_N = q Yh_1 A", tau_y},
      {"realization", "T_i = (t-1) pi_i + s_i = d_i (t X_{i+1} - X_i) + t", realization},
      {"inversion", "T_i T_i^-1 = 1, tau tau^-1 = 1", inversion},
  };
  return cat;
}

const std::vector<Relation>& printed_variants() {
  static const std::vector<Relation> cat = {
      {"blr-printed", "T_i X_i T_i = X_{i+1}", blr_printed},
      {"xy-com-printed", "X_i Y_j = Y_j X_i", xy_com_printed},
      {"tau-y-printed", "Y_i tau = tau Y_{i+1}, Y_N tau = q tau Y_1", tau_y_printed},
      {"cross-printed", "Y_i X_1...X_N = q X_1...X_N Y_i", cross_printed},
      {"tau-t-printed", "T_i tau = tau T_{i+1}", tau_t_printed},
  };
  return cat;
}

const Relation* find_relation(const std::string& id) {
  for (auto* cat : {&relation_catalog(), &printed_variants()})
    for (auto& r : *cat)
      if (r.id == id) return &r;
  return nullptr;
}

namespace {

LPoly eval_side(const std::vector<WordTerm>& side, const LPoly& p) {
  LPoly acc(p.nvars());
  for (auto& t : side) acc += apply_word(p, t.word).scaled(t.coef);
  return acc;
}

}  // namespace

bool check_instance(const RelationInstance& r, const LPoly& p) {
  return eval_side(r.lhs, p) == eval_side(r.rhs, p);
}

bool check_relation(const std::string& id, const LPoly& p) {
  const Relation* r = find_relation(id);
  if (!r) throw std::invalid_argument("unknown relation '" + id + "'");
  for (auto& inst : r->instances(p.nvars()))
    if (!check_instance(inst, p)) return false;
  return true;
}

LPoly random_poly(int n, int deg, std::mt19937_64& rng, int max_terms) {
  std::uniform_int_distribution<int> nterms(1, max_terms), ex(0, deg), cf(-3, 3),
      qe(0, 2);
  std::vector<LPoly::Term> raw;
  int nt = nterms(rng);
  for (int k = 0; k < nt; ++k) {
    std::vector<int> e(n, 0);
    int budget = ex(rng);
    for (int s = 0; s < budget; ++s) e[std::uniform_int_distribution<int>(0, n - 1)(rng)]++;
    QtPoly c;
    int nc = 1 + qe(rng);
    for (int j = 0; j < nc; ++j) {
      int v = cf(rng);
      if (v) c += QtPoly::monomial(v, qe(rng), qe(rng));
    }
    if (c.is_zero()) c = QtPoly(1);
    raw.push_back({Mono::from(e), c});
  }
  return LPoly::from_terms(n, std::move(raw));
}

std::vector<RelationReport> run_catalog(const std::vector<Relation>& cat, int n, int trials,
                                        uint64_t seed, int deg) {
  std::vector<RelationReport> out;
  for (auto& rel : cat) {
    std::mt19937_64 rng(seed);
    RelationReport rep{rel.id, n, trials, 0, ""};
    auto insts = rel.instances(n);
    for (int k = 0; k < trials; ++k) {
      LPoly p = random_poly(n, deg, rng);
      for (auto& inst : insts) {
        if (!check_instance(inst, p)) {
          if (rep.failures == 0) rep.first_failure = inst.label + " on " + render_poly(p);
          ++rep.failures;
          break;
        }
      }
    }
    out.push_back(rep);
  }
  return out;
}

}  // namespace macdo
