#pragma once
// Denominators of M_v and path-annotation bounds for their growth.

#include <string>

#include <nlohmann/json.hpp>

#include "macdo/bound.hpp"
#include "macdo/jumps.hpp"
#include "macdo/ybgraph.hpp"

namespace macdo {

// lcm of the reduced coefficient denominators of M_v
Bound den_bound(const Composition& v);
Bound den_bound(const MacRep& m);
// same, in binomial form; throws NotProductForm
FactoredQt den_of(const Composition& v);

// num and den of Den_v / Den_u
Bound ratio_numerator(const Composition& u, const Composition& v);
Bound ratio_denominator(const Composition& u, const Composition& v);

// q-power charged to an A step of triv
enum class QRule {
  Printed,      // q^{(1/2) sum (v_i - u_i)(v_i - u_i - 1)}, u the path start, v the vertex before A
  Telescoping,  // q^{v_1}, v the vertex before A
};

Bound algo_triv(const Path& p, QRule rule = QRule::Telescoping);
// jump segments charged the block bound, everything else as triv
Bound algo_jump(const Path& p, QRule rule = QRule::Telescoping);

struct DenCertificate {
  Path path;
  Bound bound;
  std::string algo;
};

DenCertificate certify(const Path& p, const std::string& algo, QRule rule = QRule::Telescoping);
// c1 ends where c2 starts; bounds multiply
DenCertificate conjunction(const DenCertificate& c1, const DenCertificate& c2);
// same endpoints; gcd of bounds
DenCertificate disjunction(const DenCertificate& c1, const DenCertificate& c2);
// num(Den_end / Den_start) divides the bound
bool verify_certificate(const DenCertificate& c);

nlohmann::json bound_json(const Bound& b);
nlohmann::json factored_json(const FactoredQt& f);
nlohmann::json path_json(const Path& p);
nlohmann::json certificate_json(const DenCertificate& c);

}  // namespace macdo
