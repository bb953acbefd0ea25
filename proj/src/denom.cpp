#include "macdo/denom.hpp"

namespace macdo {

Bound den_bound(const MacRep& m) {
  Bound b;
  b.atoms = m.den;
  for (auto& [mono, c] : m.num.terms()) {
    b.qexp = std::max(b.qexp, -c.min_q());
    b.texp = std::max(b.texp, -c.min_t());
  }
  return b;
}

Bound den_bound(const Composition& v) { return den_bound(*mac_rep(v)); }

FactoredQt den_of(const Composition& v) { return den_bound(v).factored(); }

Bound ratio_numerator(const Composition& u, const Composition& v) {
  Bound du = den_bound(u), dv = den_bound(v);
  return {std::max(0, dv.qexp - du.qexp), std::max(0, dv.texp - du.texp),
          AtomProduct::num_ratio(dv.atoms, du.atoms)};
}

Bound ratio_denominator(const Composition& u, const Composition& v) {
  return ratio_numerator(v, u);
}

namespace {

Bound a_step_charge(const Composition& start, const Composition& v, QRule rule) {
  if (rule == QRule::Telescoping) return Bound::monomial(v[0], 0);
  long s = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    long d = v[i] - start[i];
    s += d * (d - 1);
  }
  return Bound::monomial(int(s / 2), 0);
}

Bound yang_charge(const Composition& v, int i) {
  auto z = spectre_hat(v);
  return Bound::binomial(z[i].q - z[i - 1].q, z[i].t - z[i - 1].t);
}

}  // namespace

Bound algo_triv(const Path& p, QRule rule) {
  Bound r;
  Composition v = p.start;
  for (auto& s : expand_steps(p.start, p.steps)) {
    r *= s.kind == Step::Kind::Phi ? a_step_charge(p.start, v, rule) : yang_charge(v, s.i);
    v = step_apply(v, s);
  }
  return r;
}

Bound algo_jump(const Path& p, QRule rule) {
  Bound r;
  Composition v = p.start;
  for (auto& s : p.steps) {
    if (s.is_jump()) {
      r *= block_divisor_bound(make_jump_spec(v, s.i, s.k, s.l));
    } else if (s.kind == Step::Kind::Phi) {
      r *= a_step_charge(p.start, v, rule);
    } else {
      r *= yang_charge(v, s.i);
    }
    v = step_apply(v, s);
  }
  return r;
}

DenCertificate certify(const Path& p, const std::string& algo, QRule rule) {
  if (algo == "triv") return {p, algo_triv(p, rule), algo};
  if (algo == "jump") return {p, algo_jump(p, rule), algo};
  if (algo == "opt") return {p, ratio_numerator(p.start, path_end(p)), algo};
  throw std::invalid_argument("unknown algorithm '" + algo + "'");
}

DenCertificate conjunction(const DenCertificate& c1, const DenCertificate& c2) {
  if (path_end(c1.path) != c2.path.start)
    throw std::invalid_argument("conjunction: paths do not meet");
  Path p = c1.path;
  p.steps.insert(p.steps.end(), c2.path.steps.begin(), c2.path.steps.end());
  return {p, c1.bound * c2.bound, c1.algo == c2.algo ? c1.algo : c1.algo + "*" + c2.algo};
}

DenCertificate disjunction(const DenCertificate& c1, const DenCertificate& c2) {
  if (c1.path.start != c2.path.start || path_end(c1.path) != path_end(c2.path))
    throw std::invalid_argument("disjunction: endpoints differ");
  return {c1.path, Bound::gcd(c1.bound, c2.bound),
          c1.algo == c2.algo ? c1.algo : c1.algo + "^" + c2.algo};
}

bool verify_certificate(const DenCertificate& c) {
  return ratio_numerator(c.path.start, path_end(c.path)).divides(c.bound);
}

nlohmann::json factored_json(const FactoredQt& f) {
  nlohmann::json fs = nlohmann::json::array();
  for (auto& [ab, m] : f.factors) fs.push_back({ab.first, ab.second, m});
  return {{"unit", f.unit.get_str()}, {"q", f.qexp}, {"t", f.texp}, {"factors", fs}};
}

nlohmann::json bound_json(const Bound& b) {
  if (b.product_form()) return factored_json(b.factored());
  nlohmann::json at = nlohmann::json::array();
  for (auto& [x, e] : b.atoms.atoms()) at.push_back({x.d, x.alpha, x.beta, e});
  return {{"unit", "1"}, {"q", b.qexp}, {"t", b.texp}, {"atoms", at}};
}

nlohmann::json path_json(const Path& p) {
  nlohmann::json st = nlohmann::json::array();
  for (auto& s : p.steps) st.push_back(s.label());
  return {{"start", p.start}, {"steps", st}};
}

nlohmann::json certificate_json(const DenCertificate& c) {
  return {{"path", path_json(c.path)}, {"algo", c.algo}, {"bound", bound_json(c.bound)}};
}

}  // namespace macdo
