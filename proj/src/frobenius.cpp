#include "hesscell/frobenius.hpp"

#include <set>

namespace hesscell {

SplittingContext make_splitting_context(const IdealPresentation& ideal, const MonomialOrder& order,
                                        unsigned long p) {
  SplittingContext ctx;
  ctx.p = p;
  ctx.kind = ideal.kind;
  ctx.w = ideal.w;
  ctx.h = ideal.h;
  ctx.order = order;
  ctx.variables = ideal.ambient;

  std::vector<Monomial::Factor> zf;
  for (const auto& v : ctx.variables) zf.emplace_back(v, 1u);
  ctx.Z = Monomial::from_factors(std::move(zf));

  Polynomial g_int = Polynomial::constant(1);
  for (const auto& g : ideal.nonzero_generators()) {
    const Term in = initial_term(g.poly, order);
    if (in.coeff != 1 && in.coeff != -1)
      throw InvalidInput("leading coefficient " + in.coeff.get_str() + " of g_" +
                         std::to_string(g.k) + "_" + std::to_string(g.l) + " is not +-1");
    g_int = g_int * g.poly;
    ctx.generators.push_back({g.k, g.l, g.poly.to_prime_field(p)});
  }

  const Term in_g = initial_term(g_int, order);
  if (in_g.coeff != 1 && in_g.coeff != -1) throw InternalError("in(G) has a non-unit coefficient");
  for (const auto& [v, e] : in_g.monomial.factors())
    if (e != 1) throw InvalidInput("in(G) = " + in_g.str() + " is not squarefree");
  if (!in_g.monomial.divides(ctx.Z)) throw InvalidInput("in(G) does not divide Z");
  ctx.sign = in_g.coeff > 0 ? 1 : -1;

  ctx.G = g_int.to_prime_field(p);
  ctx.F = ctx.G.mul_term(1, ctx.Z / in_g.monomial);
  const Term in_f = initial_term(g_int.mul_term(1, ctx.Z / in_g.monomial), order);
  if (in_f.monomial != ctx.Z) throw InternalError("in(F) is not the product of all variables");
  ctx.F_power = ctx.F.pow(static_cast<unsigned>(p - 1));
  return ctx;
}

SplittingContext make_cell_splitting_context(const Permutation& w, const HessenbergFunction& h,
                                             unsigned long p) {
  return make_splitting_context(build_ideal(w, h, IdealKind::Cell), order_n_w(w), p);
}

namespace {

// Returns false if m*Z is not a p-th power; otherwise writes (mZ)^{1/p}/Z to out.
bool trace_monomial(const Monomial& m, const Monomial& Z, unsigned long p, Monomial& out) {
  const Monomial mz = m * Z;
  std::vector<Monomial::Factor> root;
  for (const auto& [v, e] : mz.factors()) {
    if (e % p != 0) return false;
    root.emplace_back(v, static_cast<unsigned>(e / p));
  }
  out = Monomial::from_factors(std::move(root)) / Z;
  return true;
}

}  // namespace

Polynomial trace(const Polynomial& f, const Monomial& Z, unsigned long p) {
  if (f.domain().modulus() != p)
    throw DomainMismatch("trace expects coefficients in GF(" + std::to_string(p) + "), got " +
                         f.domain().str());
  std::set<VariableId> allowed;
  for (const auto& [v, e] : Z.factors()) allowed.insert(v);
  Polynomial out(f.domain());
  Monomial r;
  for (const auto& [m, c] : f.terms()) {
    for (const auto& [v, e] : m.factors())
      if (!allowed.count(v)) throw DomainMismatch("variable " + v.name() + " is not a factor of Z");
    if (trace_monomial(m, Z, p, r)) out.add_term(r, c);
  }
  return out;
}

Polynomial splitting_apply(const Polynomial& f, const SplittingContext& ctx) {
  const Polynomial fp = f.domain().modulus() == ctx.p ? f : f.to_prime_field(ctx.p);
  std::set<VariableId> allowed(ctx.variables.begin(), ctx.variables.end());
  for (const auto& v : fp.variables())
    if (!allowed.count(v)) throw DomainMismatch("variable " + v.name() + " is not a coordinate");
  // Tr of the product, accumulated term by term without forming F^{p-1} f.
  Polynomial out(fp.domain());
  Monomial r;
  mpz_class c;
  for (const auto& [ma, ca] : ctx.F_power.terms())
    for (const auto& [mb, cb] : fp.terms()) {
      if (!trace_monomial(ma * mb, ctx.Z, ctx.p, r)) continue;
      c = ca * cb;
      out.add_term(r, c);
    }
  return out;
}

CompatibilityReport compatibility_check(const SplittingContext& ctx) {
  CompatibilityReport rep;
  rep.p = ctx.p;
  rep.sign = ctx.sign;
  rep.initial_F_is_Z = ctx.F.is_zero() ? false : initial_term(ctx.F, ctx.order).monomial == ctx.Z;
  std::vector<Polynomial> basis;
  for (const auto& g : ctx.generators) basis.push_back(g.poly);
  for (const auto& g : ctx.generators) {
    GeneratorCompatibility gc{g.k, g.l, splitting_apply(g.poly, ctx), {}};
    gc.remainder = reduce(gc.image, basis, ctx.order).remainder;
    if (!gc.remainder.is_zero()) rep.compatible = false;
    rep.generators.push_back(std::move(gc));
  }
  if (!rep.initial_F_is_Z) rep.compatible = false;
  return rep;
}

}  // namespace hesscell
