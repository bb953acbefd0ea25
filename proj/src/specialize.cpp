#include "macdo/specialize.hpp"

#include <cctype>
#include <fstream>
#include <numeric>
#include <regex>
#include <sstream>

namespace macdo {

SpecPoint SpecPoint::make(int a, int b, std::optional<int> omega) {
  if (a < 1 || b < 1) throw std::invalid_argument("specialization needs a, b >= 1");
  SpecPoint p;
  p.a = a;
  p.b = b;
  p.d = std::gcd(a, b);
  p.omega = omega.value_or(1);
  int k = ((p.omega % a) + a) % a;
  if (std::gcd(k, p.d) != 1)
    throw std::invalid_argument("omega = zeta_" + std::to_string(a) + "^" +
                                std::to_string(p.omega) + " is not allowed: omega^(a/d) must be a "
                                "primitive " + std::to_string(p.d) + "-th root of unity");
  p.omega = k;
  return p;
}

SpecPoint SpecPoint::parse(const std::string& s, std::optional<int> omega) {
  std::string z;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) z += c;
  static const std::regex re(R"(q(?:\^(\d+))?\*?t(?:\^(\d+))?=1(?:[,;]?omega=(-?\d+))?)");
  std::smatch m;
  if (!std::regex_match(z, m, re)) throw std::invalid_argument("cannot parse point '" + s + "'");
  int a = m[1].matched ? std::stoi(m[1]) : 1;
  int b = m[2].matched ? std::stoi(m[2]) : 1;
  if (m[3].matched && !omega) omega = std::stoi(m[3]);
  return make(a, b, omega);
}

std::string SpecPoint::str() const {
  std::string s = "q";
  if (a != 1) s += "^" + std::to_string(a);
  s += "*t";
  if (b != 1) s += "^" + std::to_string(b);
  return s + "=1 omega=" + std::to_string(omega);
}

UPoly spec_monomial(const SpecPoint& p, int i, int j) {
  return UPoly::monomial(Cyclo::zeta(p.a, (long long)p.omega * i), i * p.q_exp() + j * p.t_exp());
}

UPoly specialize(const QtPoly& c, const SpecPoint& p) {
  std::vector<Cyclo> units(size_t(p.a));
  for (int k = 0; k < p.a; ++k) units[size_t(k)] = Cyclo::zeta(p.a, k);
  std::map<int, Cyclo> acc;
  for (auto& tm : c.terms()) {
    int i = qt_dq(tm.key), j = qt_dt(tm.key);
    long long k = ((long long)p.omega * i) % p.a;
    if (k < 0) k += p.a;
    Cyclo v = units[size_t(k)] * Cyclo(mpq_class(tm.c.to_mpz()));
    acc[i * p.q_exp() + j * p.t_exp()] += v;
  }
  return UPoly::from_map(acc);
}

bool factor_degenerates(int a2, int b2, int a, int b) { return divides_spec({a, b}, {a2, b2}); }

bool factor_degenerates_divides(int a2, int b2, int a, int b) {
  return AtomProduct::of_binomial(a, b).divides(AtomProduct::of_binomial(a2, b2));
}

bool factor_degenerates_subst(int a2, int b2, const SpecPoint& p) {
  return specialize(QtPoly::one_minus(a2, b2), p).is_zero();
}

bool degenerates(const Composition& v, int a, int b) {
  FactoredQt f = den_of(v);
  for (auto& [ab, m] : f.factors)
    if (divides_spec({a, b}, ab)) return true;
  return false;
}

bool degenerates_divides(const Composition& v, int a, int b) {
  return AtomProduct::of_binomial(a, b).divides(den_bound(v).atoms);
}

bool degenerates_subst(const Composition& v, const SpecPoint& p) {
  Bound d = den_bound(v);
  for (auto& [x, e] : d.atoms.atoms())
    if (specialize(atom_poly(x), p).is_zero()) return true;
  return false;
}

SpecializedRep specialize_rep(const MacRep& m, const SpecPoint& p) {
  SpecializedRep r;
  r.num = m.num.map_coeffs<UPoly>([&](const QtPoly& c) { return specialize(c, p); });
  r.den = UPoly(1);
  for (auto& [x, e] : m.den.atoms()) r.den *= specialize(atom_poly(x), p).pow(unsigned(e));
  return r;
}

SpecPolyX specialize_mac(const Composition& v, const SpecPoint& p) {
  auto m = mac_rep(v);
  for (auto& [x, e] : m->den.atoms())
    if (specialize(atom_poly(x), p).is_zero()) throw DegeneratePolynomial(x.str());
  SpecializedRep r = specialize_rep(*m, p);
  return r.num.map_coeffs<CycloFraction>(
      [&](const UPoly& c) { return CycloFraction(c, r.den); });
}

// ---- expressions

namespace {

struct Parser {
  const std::string& s;
  const std::vector<std::string>& vars;
  const SpecPoint& p;
  const std::string& param;
  size_t i = 0;
  int n() const { return int(vars.size()); }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("expression: " + what + " at offset " + std::to_string(i));
  }
  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool peek(char c) {
    skip();
    return i < s.size() && s[i] == c;
  }
  bool starts_factor() {
    skip();
    return i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '(' ||
                            s[i] == '_');
  }
  UPolyX constant(const UPoly& c) const { return UPolyX::constant(n(), c); }

  UPolyX expr() {
    UPolyX r = term();
    for (;;) {
      if (peek('+')) {
        ++i;
        r += term();
      } else if (peek('-')) {
        ++i;
        r -= term();
      } else {
        return r;
      }
    }
  }
  UPolyX term() {
    UPolyX r = unary();
    for (;;) {
      if (peek('*')) {
        ++i;
        r *= unary();
      } else if (starts_factor()) {
        r *= unary();
      } else {
        return r;
      }
    }
  }
  UPolyX unary() {
    if (peek('-')) {
      ++i;
      return -unary();
    }
    if (peek('+')) {
      ++i;
      return unary();
    }
    return power();
  }
  UPolyX power() {
    UPolyX b = atom();
    if (!peek('^')) return b;
    ++i;
    skip();
    bool neg = false;
    if (i < s.size() && s[i] == '-') {
      neg = true;
      ++i;
    }
    skip();
    size_t j = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (j == i) fail("exponent expected");
    int e = std::stoi(s.substr(j, i - j));
    if (neg) {
      // only scalar monomials in u are invertible here
      if (b.size() != 1 || !(b.terms()[0].first == Mono{}) || !b.terms()[0].second.is_monomial())
        fail("negative exponent of a non-monomial");
      const UPoly& c = b.terms()[0].second;
      b = constant(UPoly::monomial(c.lead().inverse(), -c.low()));
    }
    UPolyX r = constant(UPoly(1));
    for (int k = 0; k < e; ++k) r *= b;
    return r;
  }
  UPolyX atom() {
    skip();
    if (i >= s.size()) fail("unexpected end");
    char c = s[i];
    if (c == '(') {
      ++i;
      UPolyX r = expr();
      if (!peek(')')) fail("')' expected");
      ++i;
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      return constant(UPoly(Cyclo(mpq_class(mpz_class(s.substr(j, i - j))))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      std::string id = s.substr(j, i - j);
      for (int k = 0; k < n(); ++k)
        if (vars[size_t(k)] == id) return UPolyX::variable(n(), k);
      if (id == param) return constant(UPoly::u());
      if (id == "q") return constant(spec_monomial(p, 1, 0));
      if (id == "t") return constant(spec_monomial(p, 0, 1));
      if (id == "w") return constant(UPoly(Cyclo::zeta(p.a, 1)));
      i = j;
      fail("unknown identifier '" + id + "'");
    }
    fail(std::string("unexpected '") + c + "'");
  }
};

}  // namespace

UPolyX parse_expression(const std::string& text, const std::vector<std::string>& vars,
                        const SpecPoint& p, const std::string& param) {
  for (auto& v : vars)
    if (v == "q" || v == "t" || v == "w" || v == param)
      throw std::invalid_argument("variable name '" + v + "' is reserved");
  Parser ps{text, vars, p, param};
  UPolyX r = ps.expr();
  ps.skip();
  if (ps.i != text.size()) ps.fail("trailing input");
  return r;
}

// ---- identity files

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

// split on top-level commas
std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out(1);
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.emplace_back();
      continue;
    }
    out.back() += c;
  }
  return out;
}

}  // namespace

Identity parse_identity(const std::string& text) {
  Identity id;
  std::istringstream in(text);
  std::string line, last;
  bool have_point = false, have_mac = false;
  std::string point_text;
  std::vector<std::pair<std::string, std::string>> dirs;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (std::isspace(static_cast<unsigned char>(line[0]))) {
      if (dirs.empty()) throw std::invalid_argument("identity: continuation before directive");
      dirs.back().second += " " + line;
      continue;
    }
    auto sp = line.find_first_of(" \t");
    std::string key = line.substr(0, sp);
    std::string val = sp == std::string::npos ? "" : line.substr(sp + 1);
    dirs.push_back({key, val});
  }
  for (auto& [key, val] : dirs) {
    if (key == "name") {
      auto w = val.find_first_not_of(" \t");
      id.name = w == std::string::npos ? "" : val.substr(w);
      while (!id.name.empty() && std::isspace(static_cast<unsigned char>(id.name.back())))
        id.name.pop_back();
    } else if (key == "mac") {
      auto w = split_ws(val);
      if (w.size() != 1) throw std::invalid_argument("identity: mac needs one composition");
      id.v = parse_composition(w[0]);
      have_mac = true;
    } else if (key == "point") {
      point_text = val;
      have_point = true;
    } else if (key == "param") {
      auto w = split_ws(val);
      if (w.size() != 1) throw std::invalid_argument("identity: param needs one name");
      id.param = w[0];
    } else if (key == "vars") {
      id.vars = split_ws(val);
    } else if (key == "xsub") {
      id.xsub = split_commas(val);
    } else if (key == "rhs") {
      id.rhs = val;
    } else {
      throw std::invalid_argument("identity: unknown directive '" + key + "'");
    }
  }
  if (!have_mac || !have_point || id.rhs.empty())
    throw std::invalid_argument("identity: mac, point and rhs are required");
  id.point = SpecPoint::parse(point_text);
  if (id.vars.empty())
    for (size_t k = 0; k < id.v.size(); ++k) id.vars.push_back("x" + std::to_string(k + 1));
  return id;
}

Identity load_identity(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open identity file " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  Identity id = parse_identity(ss.str());
  if (id.name.empty()) id.name = path;
  return id;
}

namespace {

int max_degree(const UPolyX& p) {
  int d = -1;
  for (auto& [m, c] : p.terms()) d = std::max(d, m.degree(p.nvars()));
  return d;
}

}  // namespace

IdentityResult check_identity(const Identity& id) {
  IdentityResult res;
  const SpecPoint& p = id.point;
  int n = int(id.vars.size());
  auto m = mac_rep(id.v);
  for (auto& [x, e] : m->den.atoms())
    if (specialize(atom_poly(x), p).is_zero()) {
      res.degenerate = true;
      res.detail = "degenerate: factor " + x.str() + " vanishes";
      return res;
    }
  SpecializedRep r = specialize_rep(*m, p);
  UPolyX lhs;
  if (id.xsub.empty()) {
    if (n != m->nvars()) throw std::invalid_argument("identity: vars do not match the composition");
    lhs = r.num;
  } else {
    if (int(id.xsub.size()) != m->nvars())
      throw std::invalid_argument("identity: xsub needs one image per variable");
    std::vector<UPolyX> images;
    for (auto& s : id.xsub) images.push_back(parse_expression(s, id.vars, p, id.param));
    lhs = substitute_x(r.num, images, n);
  }
  UPolyX rhs = parse_expression(id.rhs, id.vars, p, id.param);
  res.lhs_degree = max_degree(lhs);
  res.rhs_degree = max_degree(rhs);
  UPolyX scaled = rhs.scaled(r.den);
  res.equal = lhs == scaled;
  if (res.equal) {
    res.ratio = CycloFraction(1);
    res.detail = "equal";
    return res;
  }
  // lhs / rhs as a scalar, if the two are proportional
  if (!rhs.is_zero() && !lhs.is_zero()) {
    const auto& [mono, rc] = rhs.terms().back();
    const UPoly* lc = lhs.find(mono);
    if (lc) {
      CycloFraction c = CycloFraction(*lc, r.den) / CycloFraction(rc);
      auto to_f = [](const UPoly& x) { return CycloFraction(x); };
      SpecPolyX lf = lhs.map_coeffs<CycloFraction>(to_f);
      SpecPolyX rf =
          rhs.map_coeffs<CycloFraction>([&](const UPoly& x) { return CycloFraction(x) * c; });
      lf = lf.map_coeffs<CycloFraction>([&](const CycloFraction& x) {
        return x * CycloFraction(UPoly(1), r.den);
      });
      if (lf == rf) res.ratio = c;
    }
  }
  std::ostringstream d;
  d << "not equal: degrees " << res.lhs_degree << " vs " << res.rhs_degree;
  if (res.ratio) d << "; lhs = (" << res.ratio->str(id.param) << ") * rhs";
  else d << "; not proportional";
  res.detail = d.str();
  return res;
}

}  // namespace macdo
