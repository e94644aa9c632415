#include "hesscell/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "hesscell/grading.hpp"

namespace hesscell {

Polynomial random_polynomial(std::span<const VariableId> vars, int max_terms,
                             unsigned max_exponent, CoefficientDomain domain, Rng& rng,
                             int coeff_range) {
  std::uniform_int_distribution<int> nterms(1, std::max(1, max_terms));
  std::uniform_int_distribution<unsigned> expo(0, max_exponent);
  Polynomial p(domain);
  const int count = nterms(rng);
  for (int t = 0; t < count; ++t) {
    std::vector<Monomial::Factor> f;
    for (const auto& v : vars) f.emplace_back(v, expo(rng));
    mpz_class c;
    if (domain.is_integers()) {
      std::uniform_int_distribution<int> cd(-coeff_range, coeff_range - 1);
      int x = cd(rng);
      c = x >= 0 ? x + 1 : x;
    } else {
      std::uniform_int_distribution<unsigned long> cd(1, domain.modulus() - 1);
      c = cd(rng);
    }
    p.add_term(Monomial::from_factors(std::move(f)), c);
  }
  return p;
}

std::map<VariableId, mpz_class> solve_triangular_point(
    const TriangularReport& report, const std::map<VariableId, mpz_class>& free_values) {
  if (!report.is_triangular) throw InvalidInput("presentation is not triangular");
  std::map<VariableId, mpz_class> point = free_values;
  for (const auto& v : report.free_variables)
    if (!point.count(v)) throw InvalidInput("no value given for free variable " + v.name());
  for (std::size_t idx = report.ordered_generators.size(); idx-- > 0;) {
    const Polynomial& g = report.ordered_generators[idx].poly;
    const Term& in = report.initial_terms[idx];
    const VariableId pivot = in.monomial.factors().front().first;
    // g = c * pivot + rest with rest free of pivot; pivot = -rest / c, c = +-1.
    mpz_class rest = 0;
    for (const auto& [m, c] : g.terms()) {
      if (m == in.monomial) continue;
      if (m.exponent(pivot) != 0)
        throw InternalError("pivot " + pivot.name() + " occurs outside the initial term");
      mpz_class value = c;
      for (const auto& [v, e] : m.factors()) {
        auto it = point.find(v);
        if (it == point.end()) throw InternalError("unsolved variable " + v.name());
        mpz_class pw;
        mpz_pow_ui(pw.get_mpz_t(), it->second.get_mpz_t(), e);
        value *= pw;
      }
      rest += value;
    }
    point[pivot] = -rest * in.coeff;  // 1/c = c for c = +-1
  }
  return point;
}

PointCheck random_point_check(const Permutation& w, const HessenbergFunction& h,
                              const TriangularReport& report, Rng& rng, int points,
                              int value_range) {
  PointCheck out;
  const PolyMatrix omega = build_Omega(w);
  std::uniform_int_distribution<int> dist(-value_range, value_range);
  for (int t = 0; t < points; ++t) {
    std::map<VariableId, mpz_class> free_values;
    for (const auto& v : report.free_variables) free_values[v] = dist(rng);
    const auto point = solve_triangular_point(report, free_values);
    const PolyMatrix numeric = omega.map([&](const Polynomial& p) {
      mpz_class value = 0;
      for (const auto& [m, c] : p.terms()) {
        mpz_class term = c;
        for (const auto& [v, e] : m.factors()) {
          mpz_class pw;
          mpz_pow_ui(pw.get_mpz_t(), point.at(v).get_mpz_t(), e);
          term *= pw;
        }
        value += term;
      }
      return Polynomial::constant(value);
    });
    const PolyMatrix conj = conjugate_nilpotent(w, numeric);
    ++out.points;
    for (int k = 1; k <= w.size(); ++k)
      for (int l = 1; l <= w.size(); ++l)
        if (k > h(l) && !conj(k, l).is_zero()) {
          out.ok = false;
          out.failure = "entry (" + std::to_string(k) + "," + std::to_string(l) +
                        ") = " + conj(k, l).str() + " at a sampled point";
          return out;
        }
  }
  return out;
}

AxiomCheck splitting_axiom_check(const SplittingContext& ctx, Rng& rng, int trials) {
  AxiomCheck out;
  const CoefficientDomain field = CoefficientDomain::prime_field(ctx.p);
  const Polynomial one = Polynomial::constant(1, field);
  if (!(splitting_apply(one, ctx) == one)) {
    out.ok = false;
    out.failure = "phi(1) != 1";
    return out;
  }
  for (int t = 0; t < trials; ++t) {
    ++out.trials;
    const Polynomial a = random_polynomial(ctx.variables, 6, ctx.p + 1, field, rng);
    const Polynomial b = random_polynomial(ctx.variables, 6, ctx.p + 1, field, rng);
    if (!(splitting_apply(a + b, ctx) == splitting_apply(a, ctx) + splitting_apply(b, ctx))) {
      out.ok = false;
      out.failure = "additivity fails for a = " + a.str() + ", b = " + b.str();
      return out;
    }
    const Polynomial phi_a = splitting_apply(a, ctx);
    for (const auto& z : ctx.variables) {
      const Polynomial zp = Polynomial::term(1, Monomial(z, static_cast<unsigned>(ctx.p)), field);
      const Polynomial lhs = splitting_apply(zp * a, ctx);
      const Polynomial rhs = Polynomial::variable(z, field) * phi_a;
      if (!(lhs == rhs)) {
        out.ok = false;
        out.failure = "phi(" + z.name() + "^p f) != " + z.name() + " phi(f) for f = " + a.str();
        return out;
      }
    }
  }
  return out;
}

SweepCase check_case(const Permutation& w, const HessenbergFunction& h, const PolyMatrix& gens,
                     const SweepOptions& options, Rng& rng) {
  const int n = w.size();
  SweepCase c;
  c.n = n;
  c.h = h;
  c.w = w;
  c.fixed_point = is_fixed_point(w, h);
  c.length = w.length();
  auto fail = [&](std::string why) { c.failures.push_back(std::move(why)); };

  try {
    const IdealPresentation ideal = build_ideal(w, h, IdealKind::Cell, &gens);
    c.height = ideal.height;
    c.dim = c.length - c.height;
    c.listed_generators = ideal.generators.size();
    c.has_constant = ideal.has_constant;
    if (static_cast<int>(c.listed_generators) != lambda_h(h).size)
      fail("listed generator count differs from |lambda_h|");
    if (c.has_constant == c.fixed_point)
      fail(c.fixed_point ? "constant generator on a fixed point"
                         : "no constant generator outside the fixed-point set");

    const MonomialOrder order = order_n_w(w);
    const bool run_oracle = n <= 4 || options.oracle_all_n;
    if (run_oracle) {
      const auto gb = reduced_gb_oracle(ideal.nonzero_polynomials(), order, options.budget);
      const bool unit = gb.size() == 1 && gb.front() == Polynomial::constant(1);
      c.oracle_consistent = unit != c.fixed_point;
      if (!c.fixed_point) c.empty_certified = unit;
      if (!*c.oracle_consistent)
        fail(unit ? "oracle returned <1> on a fixed point" : "oracle did not return <1>");
    }
    if (!c.fixed_point) return c;

    if (c.dim < 0) fail("negative cell dimension");
    const Permutation v = v_of_w(w);
    const Permutation vinv = v.inverse();

    const TriangularReport tri = triangular_analysis(ideal, order);
    c.triangular_ok = tri.is_triangular && tri.height == ideal.height;
    if (!tri.is_triangular) fail("triangular analysis: " + tri.failure);
    if (tri.height != ideal.height) fail("nonzero generator count differs from the height");

    c.initial_terms_ok = true;
    for (const auto& g : ideal.nonzero_generators()) {
      const Term in = initial_term(g.poly, order);
      const Term expected{-1, Monomial(zvar(n + 1 - v(g.k), vinv(v(g.l) + 1)))};
      if (!(in == expected)) {
        c.initial_terms_ok = false;
        fail("in(g_" + std::to_string(g.k) + "_" + std::to_string(g.l) + ") = " + in.str() +
             ", expected " + expected.str());
      }
    }

    const BuchbergerResult bb = buchberger_check(ideal, order);
    c.gb_ok = bb.is_groebner;
    if (!bb.is_groebner) fail("S-polynomial remainder " + bb.failing_remainder.str());

    const GradedWeights wt = weights_for(w);
    c.homogeneous_ok = true;
    for (const auto& g : ideal.nonzero_generators()) {
      const auto deg = is_homogeneous(g.poly, wt);
      if (!deg || *deg != v(g.k) - v(g.l) - 1) {
        c.homogeneous_ok = false;
        fail("g_" + std::to_string(g.k) + "_" + std::to_string(g.l) +
             " is not homogeneous of the expected degree");
      }
    }

    if (tri.is_triangular) {
      const auto formula = hilbert_formula(w, h).expand(options.trunc);
      const auto oracle = hilbert_oracle(tri, wt, options.trunc);
      c.hilbert_ok = formula == oracle;
      if (!c.hilbert_ok) fail("Hilbert formula and oracle expansions differ");
      for (const auto& coeff : formula)
        if (coeff < 0) fail("negative Hilbert series coefficient");

      if (n <= options.geometric_max_n) {
        const PointCheck pc = random_point_check(w, h, tri, rng, options.geometric_points);
        c.geometric_ok = pc.ok;
        if (!pc.ok) fail("random point: " + pc.failure);
      }
    }

    if (!options.frobenius_primes.empty()) {
      bool all = true;
      for (unsigned long p : options.frobenius_primes) {
        const SplittingContext ctx = make_splitting_context(ideal, order, p);
        const CompatibilityReport rep = compatibility_check(ctx);
        if (!rep.compatible) {
          all = false;
          fail("not compatibly split for p=" + std::to_string(p));
        }
        const AxiomCheck ax = splitting_axiom_check(ctx, rng, options.frobenius_trials);
        if (!ax.ok) {
          all = false;
          fail("splitting axioms, p=" + std::to_string(p) + ": " + ax.failure);
        }
      }
      c.frobenius_ok = all;
    }
  } catch (const BudgetExceeded& e) {
    fail(std::string("budget: ") + e.what());
  }
  return c;
}

namespace {

template <class Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn&& fn) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mutex;
  for (unsigned t = 0; t < jobs; ++t)
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

SweepReport sweep(const SweepOptions& options) {
  const int ceiling = options.ceiling > 0 ? options.ceiling
                                          : (options.frobenius_primes.empty() ? 6 : 4);
  if (options.max_n < 1 || options.max_n > ceiling)
    throw InvalidInput("max-n must lie in [1, " + std::to_string(ceiling) + "]");
  for (unsigned long p : options.frobenius_primes)
    if (!is_prime(p)) throw InvalidInput(std::to_string(p) + " is not prime");

  const auto start = std::chrono::steady_clock::now();
  SweepReport report;
  report.max_n = options.max_n;
  for (int n = 1; n <= options.max_n; ++n) {
    const auto perms = all_permutations(n);
    std::vector<PolyMatrix> gens(perms.size());
    parallel_for(perms.size(), options.jobs, [&](std::size_t i) { gens[i] = cell_generators(perms[i]); });

    struct Job {
      std::size_t perm;
      HessenbergFunction h;
    };
    std::vector<Job> jobs;
    const auto hs = enumerate_hessenberg(n, true);
    for (const auto& h : hs)
      for (std::size_t i = 0; i < perms.size(); ++i) jobs.push_back({i, h});

    std::vector<SweepCase> cases(jobs.size());
    parallel_for(jobs.size(), options.jobs, [&](std::size_t i) {
      // Per-case seeding keeps results independent of the worker count.
      Rng rng(options.seed * 1000003ULL + static_cast<std::uint64_t>(n) * 7919ULL + i);
      cases[i] = check_case(perms[jobs[i].perm], jobs[i].h, gens[jobs[i].perm], options, rng);
    });

    for (const auto& h : hs) {
      HessenbergSummary s;
      s.h = h;
      s.lambda_size = lambda_h(h).size;
      s.max_dim = -1;
      for (int i = 1; i <= n; ++i) s.expected_max_dim += h(i) - i;
      int w0_dim = -1;
      for (const auto& c : cases) {
        if (!(c.h == h) || !c.fixed_point) continue;
        ++s.fixed_points;
        s.max_dim = std::max(s.max_dim, c.dim);
        if (static_cast<std::size_t>(c.dim) >= s.poincare.size()) s.poincare.resize(c.dim + 1, 0);
        ++s.poincare[c.dim];
        if (c.w == Permutation::longest(n)) w0_dim = c.dim;
      }
      s.max_at_w0 = w0_dim == s.max_dim;
      s.ok = s.max_dim == s.expected_max_dim && s.max_at_w0;
      if (!s.ok) ++report.failures;
      report.summaries.push_back(std::move(s));
    }
    for (auto& c : cases) {
      if (c.fixed_point) ++report.fixed_point_cases;
      if (!c.ok()) ++report.failures;
      report.cases.push_back(std::move(c));
    }
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

json to_json(const SweepCase& c) {
  json j = {{"n", c.n},
            {"h", to_json(c.h)},
            {"w", to_json(c.w)},
            {"fixedPoint", c.fixed_point},
            {"length", c.length},
            {"listedGenerators", c.listed_generators},
            {"hasConstant", c.has_constant},
            {"ok", c.ok()},
            {"failures", c.failures}};
  if (c.fixed_point) {
    j["Lambda"] = c.height;
    j["dim"] = c.dim;
    j["triangularOk"] = c.triangular_ok;
    j["initialTermsOk"] = c.initial_terms_ok;
    j["gbOk"] = c.gb_ok;
    j["homogeneousOk"] = c.homogeneous_ok;
    j["hilbertOk"] = c.hilbert_ok;
  }
  if (c.geometric_ok) j["geometricOk"] = *c.geometric_ok;
  if (c.frobenius_ok) j["frobeniusOk"] = *c.frobenius_ok;
  if (c.oracle_consistent) j["oracleConsistent"] = *c.oracle_consistent;
  if (c.empty_certified) j["emptyCertified"] = *c.empty_certified;
  return j;
}

json to_json(const SweepReport& r, bool include_timing) {
  json cases = json::array();
  for (const auto& c : r.cases) cases.push_back(to_json(c));
  json sums = json::array();
  for (const auto& s : r.summaries)
    sums.push_back({{"h", to_json(s.h)},
                    {"fixedPoints", s.fixed_points},
                    {"lambdaSize", s.lambda_size},
                    {"maxDim", s.max_dim},
                    {"expectedMaxDim", s.expected_max_dim},
                    {"maxAtW0", s.max_at_w0},
                    {"poincare", s.poincare},
                    {"ok", s.ok}});
  json j = {{"maxN", r.max_n},
            {"cases", cases},
            {"hessenberg", sums},
            {"summary",
             {{"cases", r.cases.size()},
              {"fixedPointCases", r.fixed_point_cases},
              {"failures", r.failures},
              {"ok", r.ok()}}}};
  if (include_timing) j["elapsed_seconds"] = r.elapsed_seconds;
  return j;
}

}  // namespace hesscell
