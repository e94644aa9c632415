#include "hesscell/serialize.hpp"

namespace hesscell {

json to_json(const Polynomial& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) {
    json mono = json::object();
    for (const auto& [v, e] : m.factors()) mono[v.name()] = e;
    terms.push_back({{"c", c.get_str()}, {"m", mono}});
  }
  json j = {{"terms", terms}};
  if (!p.domain().is_integers()) j["p"] = p.domain().modulus();
  return j;
}

Polynomial polynomial_from_json(const json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    throw InvalidInput("polynomial JSON must be an object with a \"terms\" array");
  const CoefficientDomain dom = j.contains("p")
                                    ? CoefficientDomain::prime_field(j["p"].get<unsigned long>())
                                    : CoefficientDomain::integers();
  Polynomial p(dom);
  for (const auto& t : j["terms"]) {
    if (!t.contains("c") || !t["c"].is_string() || !t.contains("m") || !t["m"].is_object())
      throw InvalidInput("malformed polynomial term " + t.dump());
    mpz_class c;
    if (c.set_str(t["c"].get<std::string>(), 10) != 0)
      throw InvalidInput("malformed coefficient " + t["c"].dump());
    std::vector<Monomial::Factor> factors;
    for (const auto& [name, e] : t["m"].items()) {
      const int exponent = e.get<int>();
      if (exponent < 1) throw InvalidInput("exponent must be positive in " + t.dump());
      factors.emplace_back(VariableId::parse(name), static_cast<unsigned>(exponent));
    }
    p.add_term(Monomial::from_factors(std::move(factors)), c);
  }
  return p;
}

json to_json(const Permutation& w) { return w.images(); }

Permutation permutation_from_json(const json& j) {
  return Permutation(j.get<std::vector<int>>());
}

json to_json(const HessenbergFunction& h) { return h.values(); }

HessenbergFunction hessenberg_from_json(const json& j) {
  return HessenbergFunction(j.get<std::vector<int>>());
}

json to_json(const PolyMatrix& m) {
  json rows = json::array();
  for (int i = 1; i <= m.size(); ++i) {
    json row = json::array();
    for (int j = 1; j <= m.size(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json to_json(const Term& t) {
  json mono = json::object();
  for (const auto& [v, e] : t.monomial.factors()) mono[v.name()] = e;
  return {{"c", t.coeff.get_str()}, {"m", mono}, {"text", t.str()}};
}

namespace {

json generator_json(const Generator& g) {
  return {{"k", g.k}, {"l", g.l}, {"poly", to_json(g.poly)}, {"text", g.poly.str()}};
}

json names(const std::vector<VariableId>& vars) {
  json out = json::array();
  for (const auto& v : vars) out.push_back(v.name());
  return out;
}

}  // namespace

json to_json(const IdealPresentation& ideal) {
  json gens = json::array();
  for (const auto& g : ideal.generators) gens.push_back(generator_json(g));
  return {{"kind", to_string(ideal.kind)},
          {"w", to_json(ideal.w)},
          {"h", to_json(ideal.h)},
          {"ambient", names(ideal.ambient)},
          {"generators", gens},
          {"height", ideal.height},
          {"has_constant", ideal.has_constant}};
}

json to_json(const TriangularReport& rep) {
  json gens = json::array();
  for (const auto& g : rep.ordered_generators) gens.push_back(generator_json(g));
  json ins = json::array();
  for (const auto& t : rep.initial_terms) ins.push_back(to_json(t));
  json j = {{"is_triangular", rep.is_triangular},
            {"initial_terms_are_variables", rep.initial_terms_are_variables},
            {"initial_terms_distinct", rep.initial_terms_distinct},
            {"no_later_divisibility", rep.no_later_divisibility},
            {"ordered_generators", gens},
            {"initial_terms", ins},
            {"height", rep.height},
            {"free_variables", names(rep.free_variables)},
            {"pivot_variables", names(rep.pivot_variables)},
            {"initial_ideal_of_indeterminates", rep.initial_ideal_of_indeterminates},
            {"quotient_dimension", rep.free_variables.size()}};
  if (!rep.failure.empty()) j["failure"] = rep.failure;
  return j;
}

json to_json(const HilbertSeriesRational& s) {
  return {{"numeratorFactors", s.numerator}, {"denominatorFactors", s.denominator}};
}

json to_json(const std::vector<mpz_class>& coefficients) {
  json out = json::array();
  for (const auto& c : coefficients) {
    if (c.fits_slong_p())
      out.push_back(c.get_si());
    else
      out.push_back(c.get_str());
  }
  return out;
}

json to_json(const PavingReport& rep) {
  json cells = json::array();
  for (const auto& c : rep.cells)
    cells.push_back({{"w", to_json(c.w)}, {"length", c.length}, {"height", c.height}, {"dim", c.dim}});
  json argmax = json::array();
  for (const auto& w : rep.max_dim_cells) argmax.push_back(to_json(w));
  return {{"h", to_json(rep.h)},
          {"cells", cells},
          {"poincare", rep.poincare},
          {"max_dim", rep.max_dim},
          {"max_dim_cells", argmax}};
}

json to_json(const CompatibilityReport& rep) {
  json gens = json::array();
  for (const auto& g : rep.generators)
    gens.push_back({{"k", g.k},
                    {"l", g.l},
                    {"image", to_json(g.image)},
                    {"remainder", to_json(g.remainder)},
                    {"remainder_text", g.remainder.str()}});
  return {{"compatible", rep.compatible},
          {"p", rep.p},
          {"sign", rep.sign},
          {"initial_F_is_Z", rep.initial_F_is_Z},
          {"generators", gens}};
}

}  // namespace hesscell
