#pragma once

#include <json.hpp>

#include "hesscell/cells.hpp"
#include "hesscell/combinat.hpp"
#include "hesscell/frobenius.hpp"
#include "hesscell/grading.hpp"
#include "hesscell/groebner.hpp"
#include "hesscell/polyring.hpp"

namespace hesscell {

using json = nlohmann::json;

// {"terms":[{"c":"-1","m":{"x_1_2":1}}, ...]}, terms in canonical order.
// Prime-field polynomials carry an extra "p" member.
json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const json& j);

json to_json(const Permutation& w);
Permutation permutation_from_json(const json& j);
json to_json(const HessenbergFunction& h);
HessenbergFunction hessenberg_from_json(const json& j);

json to_json(const PolyMatrix& m);
json to_json(const Term& t);
json to_json(const IdealPresentation& ideal);
json to_json(const TriangularReport& rep);
json to_json(const HilbertSeriesRational& s);
json to_json(const std::vector<mpz_class>& coefficients);
json to_json(const PavingReport& rep);
json to_json(const CompatibilityReport& rep);

}  // namespace hesscell
