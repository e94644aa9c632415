// One line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "hesscell/cells.hpp"
#include "hesscell/frobenius.hpp"
#include "hesscell/grading.hpp"
#include "hesscell/groebner.hpp"
#include "hesscell/sweep.hpp"
#include "oracle.hpp"

using namespace hesscell;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

Polynomial P(const char* s) { return Polynomial::parse(s); }

struct Case {
  Permutation w;
  HessenbergFunction h;
};

// Every (indecomposable h, fixed point w) with n <= max_n.
std::vector<Case> fixed_cases(int max_n) {
  std::vector<Case> out;
  for (int n = 1; n <= max_n; ++n)
    for (const auto& h : enumerate_hessenberg(n, true))
      for (const auto& w : fixed_points(h)) out.push_back({w, h});
  return out;
}

std::string tag(const Case& c) { return "w=" + c.w.str() + " h=" + c.h.str(); }

// v(j) = n + 1 - w(j), computed from the one-line images.
std::vector<int> v_images(const Permutation& w) {
  std::vector<int> v(w.size() + 1);
  for (int j = 1; j <= w.size(); ++j) v[j] = w.size() + 1 - w(j);
  return v;
}

std::vector<int> invert(const std::vector<int>& v) {
  std::vector<int> inv(v.size());
  for (std::size_t j = 1; j < v.size(); ++j) inv[v[j]] = static_cast<int>(j);
  return inv;
}

// psi_w read off its definition: x_{i,j} -> 0 on D_w, z_{i, v^{-1}(j)} otherwise.
Polynomial psi_by_definition(const Permutation& w, const Polynomial& f) {
  const int n = w.size();
  const auto v = v_images(w);
  const auto vinv = invert(v);
  const auto winv = oracle::inverse_images(w);
  Polynomial out;
  for (const auto& [m, c] : f.terms()) {
    std::vector<Monomial::Factor> fs;
    bool killed = false;
    for (const auto& [x, e] : m.factors()) {
      const int i = x.row, j = x.col;
      if (i + j <= n && vinv[j] > winv[i]) killed = true;
      fs.emplace_back(zvar(i, vinv[j]), e);
    }
    if (!killed) out.add_term(Monomial::from_factors(std::move(fs)), c);
  }
  return out;
}

std::vector<mpz_class> count_monomials(const std::vector<int>& weights, int order) {
  std::vector<mpz_class> out(order + 1, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int d) {
    if (i == weights.size()) {
      ++out[d];
      return;
    }
    for (int e = 0; d + e * weights[i] <= order; ++e) rec(i + 1, d + e * weights[i]);
  };
  rec(0, 0);
  return out;
}

// ---------------------------------------------------------------------------

Outcome worked_example() {
  Outcome o;
  const PolyMatrix F = patch_generators(Permutation::longest(4));
  const char* f_rows[4][4] = {
      {"0", "0", "0", "0"},
      {"1", "0", "0", "0"},
      {"-x_2_2 + x_3_1", "1", "0", "0"},
      {"-x_1_2 + x_1_3*(x_2_2 - x_3_1) + x_2_1", "-x_1_3 + x_2_2", "1", "0"}};
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j)
      if (!(F(i, j) == P(f_rows[i - 1][j - 1]))) o.fail("F entry mismatch");
  if (F(4, 1).str() != "-x_1_2 + x_1_3*x_2_2 - x_1_3*x_3_1 + x_2_1") o.fail("f_4_1 text");

  const Permutation w = Permutation::parse("3421");
  const PolyMatrix g = cell_generators(w);
  if (!(g(3, 1) == P("1"))) o.fail("g_3_1");
  if (!(g(3, 2) == P("-z_2_1"))) o.fail("g_3_2");
  if (!(g(4, 1) == P("-z_1_3 + z_2_1"))) o.fail("g_4_1");
  if (!(g(4, 2) == P("-z_1_1 + z_1_3*z_2_1 + z_2_2"))) o.fail("g_4_2");

  const PsiMap psi(w);
  if (psi.killed() != std::set<VariableId>{xvar(3, 1)}) o.fail("D_w");
  if (psi.assignment().at(xvar(1, 2)) != zvar(1, 1)) o.fail("z_1_1 <-> x_1_2");
  if (psi.assignment().at(xvar(1, 1)) != zvar(1, 2)) o.fail("z_1_2 <-> x_1_1");

  const GradedWeights wt = weights_for(w);
  const std::vector<std::pair<VariableId, long long>> table{
      {zvar(1, 1), 2}, {zvar(1, 2), 3}, {zvar(1, 3), 1}, {zvar(2, 1), 1}, {zvar(2, 2), 2}};
  for (const auto& [z, d] : table)
    if (wt.weight(z) != d) o.fail("weight of " + z.name());
  if (is_homogeneous(g(4, 1), wt) != 1) o.fail("deg g_4_1");
  if (is_homogeneous(g(4, 2), wt) != 2) o.fail("deg g_4_2");
  return o;
}

Outcome initial_terms_and_gb(int max_n) {
  Outcome o;
  for (const auto& c : fixed_cases(max_n)) {
    const int n = c.w.size();
    const auto v = v_images(c.w);
    const auto vinv = invert(v);
    const PolyMatrix g = cell_generators(c.w);
    const MonomialOrder order = order_n_w(c.w);
    const oracle::Ring R(oracle::cell_priority(c.w));
    std::set<VariableId> seen;
    std::vector<oracle::Poly> gens;
    for (int k = n; k >= 1; --k)
      for (int l = 1; l <= n; ++l) {
        if (k <= c.h(l) || g(k, l).is_zero()) continue;
        const oracle::Poly q = oracle::from_lib(R, g(k, l));
        gens.push_back(q);
        // Leading term from the oracle's own lex comparison.
        oracle::Exp expected(R.nvars(), 0);
        const VariableId pivot = zvar(n + 1 - v[k], vinv[v[l] + 1]);
        expected[R.index.at(pivot)] = 1;
        if (q.lead() != expected || q.lc() != -1)
          o.fail(tag(c) + ": initial term of g_" + std::to_string(k) + "_" + std::to_string(l));
        if (!seen.insert(pivot).second) o.fail(tag(c) + ": repeated initial term");
        const Term lib = initial_term(g(k, l), order);
        if (!(lib == Term{-1, Monomial(pivot)})) o.fail(tag(c) + ": library initial term");
      }
    if (!oracle::is_groebner(R, gens)) o.fail(tag(c) + ": S-polynomial with nonzero remainder");
  }
  return o;
}

Outcome psi_consistency(int max_n) {
  Outcome o;
  for (int n = 1; n <= max_n; ++n) {
    const PolyMatrix F = patch_generators(Permutation::longest(n));
    for (const auto& w : all_permutations(n)) {
      const auto v = v_images(w);
      const PolyMatrix g = cell_generators(w);
      const PolyMatrix via = cell_generators_via_psi(w, &F);
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          // [v^{-1} F v]_{k,l} = F_{v(k), v(l)}.
          if (!(psi_by_definition(w, F(v[k], v[l])) == g(k, l)))
            o.fail("w=" + w.str() + " entry " + std::to_string(k) + "," + std::to_string(l));
          if (!(via(k, l) == g(k, l))) o.fail("w=" + w.str() + ": library psi route differs");
        }
    }
  }
  return o;
}

Outcome non_emptiness() {
  Outcome o;
  for (int n = 1; n <= 4; ++n)
    for (const auto& h : enumerate_hessenberg(n, true))
      for (const auto& w : all_permutations(n)) {
        const Case c{w, h};
        const auto ideal = build_ideal(w, h, IdealKind::Cell);
        const oracle::Ring R(oracle::cell_priority(w));
        std::vector<oracle::Poly> gens;
        for (const auto& p : ideal.nonzero_polynomials()) gens.push_back(oracle::from_lib(R, p));
        const bool unit = !gens.empty() && oracle::is_unit_basis(oracle::reduced_gb(R, gens));
        const auto lib = reduced_gb_oracle(ideal.nonzero_polynomials(), order_n_w(w));
        const bool lib_unit = lib.size() == 1 && lib[0] == Polynomial::constant(1);
        if (unit != !is_fixed_point(w, h)) o.fail(tag(c) + ": unit ideal iff not a fixed point");
        if (lib_unit != unit) o.fail(tag(c) + ": library oracle disagrees");
      }
  return o;
}

Outcome paving_check(int max_n) {
  Outcome o;
  for (int n = 1; n <= max_n; ++n)
    for (const auto& h : enumerate_hessenberg(n, true)) {
      int sum_h = 0, expected_max = 0;
      for (int i = 1; i <= n; ++i) {
        sum_h += h(i);
        expected_max += h(i) - i;
      }
      int max_dim = -1, w0_dim = -1;
      for (const auto& w : all_permutations(n)) {
        const Case c{w, h};
        const auto ideal = build_ideal(w, h, IdealKind::Cell);
        if (static_cast<int>(ideal.generators.size()) != n * n - sum_h)
          o.fail(tag(c) + ": listed generator count");
        if (!is_fixed_point(w, h)) continue;
        const auto tri = triangular_analysis(ideal, order_n_w(w));
        if (!tri.is_triangular) o.fail(tag(c) + ": not triangular");
        const int lambda = static_cast<int>(ideal.nonzero_polynomials().size());
        if (lambda != ideal.height) o.fail(tag(c) + ": height formula");
        const int dim = w.length() - lambda;
        if (dim < 0) o.fail(tag(c) + ": negative dimension");
        max_dim = std::max(max_dim, dim);
        if (w == Permutation::longest(n)) w0_dim = dim;
      }
      if (max_dim != expected_max) o.fail("h=" + h.str() + ": maximal dimension");
      if (w0_dim != max_dim) o.fail("h=" + h.str() + ": maximum not at w_0");
    }
  return o;
}

Outcome hilbert_check(int max_n) {
  Outcome o;
  const int order = 20;
  for (const auto& c : fixed_cases(max_n)) {
    const int n = c.w.size();
    const auto v = v_images(c.w);
    const auto vinv = invert(v);
    // Free coordinates: cell variables that are not pivots.
    std::set<VariableId> pivots;
    for (int k = 1; k <= n; ++k)
      for (int l = 1; l <= n; ++l)
        if (k > c.h(l) && v[k] > v[l] + 1) pivots.insert(zvar(n + 1 - v[k], vinv[v[l] + 1]));
    std::vector<int> weights;
    for (const auto& z : oracle::cell_priority(c.w))
      if (!pivots.count(z)) weights.push_back(c.w(z.col) - z.row);
    if (hilbert_formula(c.w, c.h).expand(order) != count_monomials(weights, order))
      o.fail(tag(c) + ": series");
  }
  const auto s = hilbert_formula(Permutation::parse("3421"), HessenbergFunction({3, 3, 4, 4})).expand(order);
  if (s != count_monomials({1, 2, 3}, order)) o.fail("3421: partitions with parts <= 3");
  const std::vector<mpz_class> head{1, 1, 2, 3, 4, 5, 7};
  if (!std::equal(head.begin(), head.end(), s.begin())) o.fail("3421: leading coefficients");
  return o;
}

Outcome homogeneity(int max_n) {
  Outcome o;
  for (const auto& c : fixed_cases(max_n)) {
    const int n = c.w.size();
    const auto v = v_images(c.w);
    const PolyMatrix g = cell_generators(c.w);
    for (int k = 1; k <= n; ++k)
      for (int l = 1; l <= n; ++l) {
        if (k <= c.h(l) || g(k, l).is_zero()) continue;
        for (const auto& [m, coeff] : g(k, l).terms()) {
          long long d = 0;
          for (const auto& [z, e] : m.factors()) d += static_cast<long long>(e) * (c.w(z.col) - z.row);
          if (d != v[k] - v[l] - 1)
            o.fail(tag(c) + ": g_" + std::to_string(k) + "_" + std::to_string(l));
        }
      }
  }
  return o;
}

Outcome frobenius_check(std::size_t* checked) {
  Outcome o;
  const int per_class = 50;
  unsigned class_id = 0;
  for (unsigned long p : {2ul, 3ul, 5ul})
    for (int n = 1; n <= 4; ++n)
      for (const auto& h : enumerate_hessenberg(n, true)) {
        const auto fps = fixed_points(h);
        std::vector<SplittingContext> ctxs;
        for (const auto& w : fps) ctxs.push_back(make_cell_splitting_context(w, h, p));
        const auto field = CoefficientDomain::prime_field(p);
        for (std::size_t i = 0; i < fps.size(); ++i) {
          const Case c{fps[i], h};
          const auto& ctx = ctxs[i];
          if (!(splitting_apply(Polynomial::constant(1, field), ctx) == Polynomial::constant(1, field)))
            o.fail(tag(c) + ": phi(1)");
          // phi(g) in J, decided by the oracle's own basis mod p.
          const oracle::Ring R(oracle::cell_priority(c.w), p);
          std::vector<oracle::Poly> gens;
          for (const auto& g : ctx.generators) gens.push_back(oracle::from_lib(R, g.poly));
          const auto gb = gens.empty() ? gens : oracle::reduced_gb(R, gens);
          for (const auto& g : ctx.generators)
            if (!oracle::normal_form(R, oracle::from_lib(R, splitting_apply(g.poly, ctx)), gb).zero())
              o.fail(tag(c) + ": phi(g) not in J, p=" + std::to_string(p));
          if (!compatibility_check(ctx).compatible) o.fail(tag(c) + ": library compatibility");
        }
        Rng rng(p * 1000 + n * 100 + ++class_id);
        for (int t = 0; t < per_class; ++t) {
          const auto& ctx = ctxs[t % ctxs.size()];
          if (ctx.variables.empty()) {
            ++*checked;
            continue;
          }
          const Polynomial f = random_polynomial(ctx.variables, 5, p + 1, field, rng);
          const Polynomial phi_f = splitting_apply(f, ctx);
          for (const auto& z : ctx.variables) {
            const Polynomial zp = Polynomial::term(1, Monomial(z, static_cast<unsigned>(p)), field);
            if (!(splitting_apply(zp * f, ctx) == Polynomial::variable(z, field) * phi_f))
              o.fail("p=" + std::to_string(p) + " h=" + h.str() + ": phi(z^p f) != z phi(f)");
          }
          ++*checked;
        }
      }
  return o;
}

Outcome geometric_check() {
  Outcome o;
  Rng rng(4242);
  std::uniform_int_distribution<int> dist(-9, 9);
  for (const auto& c : fixed_cases(4)) {
    const int n = c.w.size();
    const auto ideal = build_ideal(c.w, c.h, IdealKind::Cell);
    const auto tri = triangular_analysis(ideal, order_n_w(c.w));
    if (!tri.is_triangular) {
      o.fail(tag(c) + ": not triangular");
      continue;
    }
    for (int t = 0; t < 10; ++t) {
      std::map<VariableId, mpz_class> free;
      for (const auto& z : tri.free_variables) free[z] = dist(rng);
      const auto point = solve_triangular_point(tri, free);
      std::map<VariableId, mpq_class> at;
      for (const auto& [z, x] : point) at[z] = mpq_class(x);
      const auto omega = oracle::omega_numeric(c.w, at);
      const auto inv = oracle::inverse(omega);
      if (!inv) {
        o.fail(tag(c) + ": singular Omega");
        break;
      }
      const auto conj = oracle::matmul(oracle::matmul(*inv, oracle::nilpotent(n)), omega);
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l)
          if (k > c.h(l) && conj[k - 1][l - 1] != 0) o.fail(tag(c) + ": nonzero entry at a point");
    }
  }
  return o;
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](int id, const char* what, const std::function<Outcome()>& fn, double budget_s) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (budget_s > 0 && s > budget_s) {
      std::ostringstream m;
      m << "runtime " << s << " s over " << budget_s << " s";
      o.fail(m.str());
    }
    if (!o.ok) ++failures;
    std::printf("%s criterion %d: %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", id, what, s,
                o.detail.empty() ? "" : " : ", o.detail.c_str());
    std::fflush(stdout);
  };

  const std::size_t fixed5 = fixed_cases(5).size();
  report(1, "worked example n=4, w=3421", worked_example, 1.0);
  report(2, ("initial terms and Buchberger criterion, n<=5 (" + std::to_string(fixed5) + " cases)").c_str(),
         [] { return initial_terms_and_gb(5); }, 600.0);
  report(3, "cell generators equal psi of conjugated w_0 generators, n<=5", [] { return psi_consistency(5); }, 0);
  report(4, "unit ideal exactly off the fixed points, n<=4", non_emptiness, 0);
  report(5, "triangular complete intersection and paving dimensions, n<=5", [] { return paving_check(5); }, 0);
  report(6, "Hilbert series to order 20, n<=5", [] { return hilbert_check(5); }, 0);
  report(7, "homogeneity of generators, n<=5", [] { return homogeneity(5); }, 0);
  std::size_t trials = 0;
  report(8, "Frobenius splitting, n<=4, p in {2,3,5}", [&] {
    Outcome o = frobenius_check(&trials);
    o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(trials) + " random trials";
    return o;
  }, 300.0);
  report(9, "random points on the cell, n<=4", geometric_check, 0);
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
