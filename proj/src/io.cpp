#include "macdo/io.hpp"

#include <cctype>

namespace macdo {

QtPoly parse_qtpoly(const std::string& s) {
  std::string z;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) z += c;
  if (z.empty()) throw std::invalid_argument("empty polynomial");
  std::vector<QtTerm> terms;
  size_t i = 0;
  auto fail = [&](const std::string& w) {
    throw std::invalid_argument("bad polynomial '" + s + "': " + w);
  };
  auto read_int = [&](bool allow_sign) {
    size_t j = i;
    if (allow_sign && i < z.size() && (z[i] == '-' || z[i] == '+')) ++i;
    size_t d = i;
    while (i < z.size() && std::isdigit(static_cast<unsigned char>(z[i]))) ++i;
    if (d == i) fail("number expected");
    return z.substr(j, i - j);
  };
  while (i < z.size()) {
    int sign = 1;
    if (z[i] == '+' || z[i] == '-') {
      sign = z[i] == '-' ? -1 : 1;
      ++i;
    } else if (!terms.empty()) {
      fail("operator expected");
    }
    Int c(1);
    bool any = false;
    if (i < z.size() && std::isdigit(static_cast<unsigned char>(z[i]))) {
      c = Int(read_int(false));
      any = true;
    }
    int dq = 0, dt = 0;
    while (i < z.size() && (z[i] == '*' || z[i] == 'q' || z[i] == 't')) {
      if (z[i] == '*') {
        if (!any) fail("dangling '*'");
        ++i;
      }
      if (i >= z.size() || (z[i] != 'q' && z[i] != 't')) fail("variable expected");
      char v = z[i++];
      int e = 1;
      if (i < z.size() && z[i] == '^') {
        ++i;
        e = std::stoi(read_int(true));
      }
      (v == 'q' ? dq : dt) += e;
      any = true;
    }
    if (!any) fail("term expected");
    terms.push_back({qt_key(dq, dt), sign < 0 ? -c : c});
  }
  return QtPoly::from_terms(std::move(terms));
}

nlohmann::json macpoly_json(const MacPoly& p) {
  nlohmann::json ts = nlohmann::json::array();
  for (auto& [m, c] : p.terms())
    ts.push_back({{"x", m.vec(p.nvars())}, {"num", c.num().str()}, {"den", c.den().str()}});
  return {{"nvars", p.nvars()}, {"terms", ts}};
}

MacPoly macpoly_from_json(const nlohmann::json& j) {
  int n = j.at("nvars").get<int>();
  std::vector<MacPoly::Term> raw;
  for (auto& t : j.at("terms")) {
    auto e = t.at("x").get<std::vector<int>>();
    if (int(e.size()) != n) throw std::invalid_argument("exponent length mismatch");
    raw.push_back({Mono::from(e), QtFraction(parse_qtpoly(t.at("num").get<std::string>()),
                                             parse_qtpoly(t.at("den").get<std::string>()))});
  }
  return MacPoly::from_terms(n, std::move(raw));
}

}  // namespace macdo
