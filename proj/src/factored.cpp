#include "macdo/factored.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

namespace macdo {

FactoredQt FactoredQt::from_atoms(const AtomProduct& atoms, int qexp, int texp,
                                  mpq_class unit) {
  FactoredQt f;
  f.unit = unit;
  f.qexp = qexp;
  f.texp = texp;
  if (!atoms.product_form(f.factors)) throw NotProductForm(atoms.str());
  return f;
}

AtomProduct FactoredQt::atoms() const {
  AtomProduct r;
  for (auto& [ab, m] : factors)
    for (int i = 0; i < m; ++i) r *= AtomProduct::of_binomial(ab.first, ab.second);
  return r;
}

QtPoly FactoredQt::expand() const {
  if (unit.get_den() != 1) throw std::logic_error("FactoredQt::expand: fractional unit");
  QtPoly r = QtPoly::monomial(Int(mpz_class(unit.get_num())), qexp, texp);
  for (auto& [ab, m] : factors)
    r = r * QtPoly::one_minus(ab.first, ab.second).pow(unsigned(m));
  return r;
}

std::string render_binomial(int a, int b) {
  std::string m;
  auto pw = [&](const char* v, int e) {
    if (!e) return;
    if (!m.empty()) m += " ";
    m += v;
    if (e != 1) m += "^" + std::to_string(e);
  };
  pw("q", a);
  pw("t", b);
  return "(1-" + m + ")";
}

std::string FactoredQt::str() const {
  std::vector<std::string> parts;
  if (unit != 1) parts.push_back(unit.get_str());
  auto pw = [&](const char* v, int e) {
    if (!e) return;
    std::string s = v;
    if (e != 1) s += "^" + std::to_string(e);
    parts.push_back(s);
  };
  pw("q", qexp);
  pw("t", texp);
  std::vector<std::pair<std::pair<int, int>, int>> fs(factors.begin(), factors.end());
  std::sort(fs.begin(), fs.end(), [](auto& x, auto& y) {
    if (x.first.second != y.first.second) return x.first.second < y.first.second;
    return x.first.first > y.first.first;
  });
  for (auto& [ab, m] : fs) {
    std::string s = render_binomial(ab.first, ab.second);
    if (m != 1) s += "^" + std::to_string(m);
    parts.push_back(s);
  }
  if (parts.empty()) return "1";
  std::string out;
  for (auto& p : parts) {
    if (!out.empty()) out += " ";
    out += p;
  }
  return out;
}

AtomProduct factor_atoms(const QtPoly& p, int& qexp, int& texp, Int& unit) {
  if (p.is_zero()) throw std::invalid_argument("factor_qt: zero polynomial");
  qexp = p.min_q();
  texp = p.min_t();
  QtPoly r = p.shifted(-qexp, -texp);
  int dq = r.max_q(), dt = r.max_t();
  std::set<Atom> cands;
  for (int a = 0; a <= dq; ++a)
    for (int b = -dt; b <= dt; ++b) {
      if (a == 0 && b <= 0) continue;
      Direction dir = direction_of(a, b);
      for (int d = 1; d <= dir.g; ++d)
        if (dir.g % d == 0) cands.insert({d, dir.alpha, dir.beta});
    }
  AtomProduct out;
  for (auto& x : cands) {
    if (r.is_constant()) break;
    int e = atom_multiplicity(x, r);
    if (e) out.add(x, e);
  }
  if (!r.is_constant()) {
    // report the non-binomial part together with what was peeled off
    throw NotProductForm(r.str());
  }
  unit = r.constant_term();
  return out;
}

FactoredQt factor_qt(const QtPoly& p) {
  int qe = 0, te = 0;
  Int u;
  AtomProduct at = factor_atoms(p, qe, te, u);
  return FactoredQt::from_atoms(at, qe, te, mpq_class(u.to_mpz()));
}

bool divides_spec(std::pair<int, int> target, std::pair<int, int> factor) {
  auto [a, b] = target;
  auto [a2, b2] = factor;
  if ((a == 0 && b == 0) || (a2 == 0 && b2 == 0))
    throw std::invalid_argument("divides_spec: (0,0)");
  // (a2, b2) = r (a, b) with integer r >= 1
  if (a != 0) {
    if (a2 % a) return false;
    int r = a2 / a;
    return r >= 1 && b2 == r * b;
  }
  if (a2 != 0) return false;
  if (b2 % b) return false;
  return b2 / b >= 1;
}

}  // namespace macdo
