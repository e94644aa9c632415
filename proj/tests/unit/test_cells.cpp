#include <doctest.h>

#include <random>

#include "hesscell/cells.hpp"
#include "hesscell/errors.hpp"
#include "oracle.hpp"

using namespace hesscell;

namespace {

Polynomial P(const char* s) { return Polynomial::parse(s); }

// Entries of Omega_w^{-1} N Omega_w at a random rational point, computed by
// Gauss-Jordan elimination from the defining entries of Omega_w.
void check_cell_numeric(const Permutation& w, std::mt19937_64& rng) {
  const PolyMatrix g = cell_generators(w);
  std::uniform_int_distribution<int> d(-6, 6);
  std::map<VariableId, mpq_class> at;
  for (const auto& v : oracle::cell_priority(w)) {
    mpq_class q(d(rng), 1 + (d(rng) + 6) % 3);
    q.canonicalize();
    at[v] = q;
  }
  const auto omega = oracle::omega_numeric(w, at);
  const auto inv = oracle::inverse(omega);
  REQUIRE(inv);
  const auto conj = oracle::matmul(oracle::matmul(*inv, oracle::nilpotent(w.size())), omega);
  for (int k = 1; k <= w.size(); ++k)
    for (int l = 1; l <= w.size(); ++l) CHECK(oracle::eval(g(k, l), at) == conj[k - 1][l - 1]);
}

}  // namespace

TEST_SUITE("cells") {
  TEST_CASE("conjugate matrix on the w_0 patch, n = 4") {
    const PolyMatrix F = patch_generators(Permutation::longest(4));
    const char* expected[4][4] = {
        {"0", "0", "0", "0"},
        {"1", "0", "0", "0"},
        {"-x_2_2 + x_3_1", "1", "0", "0"},
        {"-x_1_2 + x_1_3*(x_2_2 - x_3_1) + x_2_1", "-x_1_3 + x_2_2", "1", "0"}};
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 4; ++j) CHECK(F(i, j) == P(expected[i - 1][j - 1]));
    CHECK(F(4, 1).str() == "-x_1_2 + x_1_3*x_2_2 - x_1_3*x_3_1 + x_2_1");
  }

  TEST_CASE("conjugate matrix on the cell of 3421") {
    const Permutation w = Permutation::parse("3421");
    const PolyMatrix g = cell_generators(w);
    const char* expected[4][4] = {{"0", "1", "0", "0"},
                                  {"0", "0", "0", "0"},
                                  {"1", "-z_2_1", "0", "0"},
                                  {"-z_1_3 + z_2_1", "-z_1_1 + z_1_3*z_2_1 + z_2_2", "1", "0"}};
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 4; ++j) CHECK(g(i, j) == P(expected[i - 1][j - 1]));
    const PolyMatrix omega = build_Omega(w);
    CHECK(omega(1, 1) == Polynomial::variable(zvar(1, 1)));
    CHECK(omega(3, 1) == Polynomial::constant(1));
    CHECK(omega(4, 2) == Polynomial::constant(1));
    CHECK(omega(3, 2).is_zero());
  }

  TEST_CASE("psi for 3421") {
    const PsiMap psi(Permutation::parse("3421"));
    CHECK(psi.v() == Permutation::parse("2134"));
    CHECK(psi.killed() == std::set<VariableId>{xvar(3, 1)});
    const auto& a = psi.assignment();
    CHECK(a.at(xvar(1, 2)) == zvar(1, 1));
    CHECK(a.at(xvar(1, 1)) == zvar(1, 2));
    CHECK(a.at(xvar(1, 3)) == zvar(1, 3));
    CHECK(a.at(xvar(2, 2)) == zvar(2, 1));
    CHECK(a.at(xvar(2, 1)) == zvar(2, 2));
    CHECK_FALSE(a.at(xvar(3, 1)).has_value());
    CHECK(psi.apply(P("-x_2_2 + x_3_1")) == P("-z_2_1"));
    CHECK_THROWS_AS(psi.apply(P("z_1_1")), DomainMismatch);
  }

  TEST_CASE("cell variables count the length") {
    for (int n = 1; n <= 5; ++n)
      for (const auto& w : all_permutations(n)) {
        CHECK(static_cast<int>(cell_variables(w).size()) == w.length());
        CHECK(build_Omega(w).variables().size() == cell_variables(w).size());
      }
  }

  TEST_CASE("cell generators agree with numeric conjugation") {
    std::mt19937_64 rng(3);
    for (int n = 1; n <= 4; ++n)
      for (const auto& w : all_permutations(n)) check_cell_numeric(w, rng);
    for (const char* s : {"35142", "54321", "12345", "24153"}) check_cell_numeric(Permutation::parse(s), rng);
  }

  TEST_CASE("patch generators agree with numeric conjugation") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> d(-5, 5);
    for (int n = 1; n <= 4; ++n)
      for (const auto& w : all_permutations(n)) {
        const PolyMatrix f = patch_generators(w);
        const PolyMatrix wm = build_wM(w);
        std::map<VariableId, mpq_class> at;
        for (const auto& v : patch_variables(w)) at[v] = d(rng);
        oracle::Mat num(n, std::vector<mpq_class>(n));
        for (int i = 1; i <= n; ++i)
          for (int j = 1; j <= n; ++j) num[i - 1][j - 1] = oracle::eval(wm(i, j), at);
        // The patch is read off its definition too.
        const auto winv = oracle::inverse_images(w);
        for (int i = 1; i <= n; ++i)
          for (int j = 1; j <= n; ++j) {
            const mpq_class want = i == w(j) ? mpq_class(1)
                                   : j > winv[i] ? mpq_class(0)
                                                 : at.at(xvar(i, j));
            CHECK(num[i - 1][j - 1] == want);
          }
        const auto inv = oracle::inverse(num);
        REQUIRE(inv);
        const auto conj = oracle::matmul(oracle::matmul(*inv, oracle::nilpotent(n)), num);
        for (int k = 1; k <= n; ++k)
          for (int l = 1; l <= n; ++l) CHECK(oracle::eval(f(k, l), at) == conj[k - 1][l - 1]);
      }
  }

  TEST_CASE("psi relations hold for all w, n <= 5") {
    for (int n = 1; n <= 5; ++n) {
      const PolyMatrix F = patch_generators(Permutation::longest(n));
      for (const auto& w : all_permutations(n)) {
        CHECK(cell_generators_via_psi(w, &F) == cell_generators(w));
        CHECK(omega_inverse_via_psi(w) == omega_inverse_direct(w));
        CHECK(omega_inverse_direct(w) * build_Omega(w) == PolyMatrix::identity(n));
        // psi is injective off D_w and onto the cell coordinates.
        const PsiMap psi(w);
        std::set<VariableId> images;
        for (const auto& [x, z] : psi.assignment()) {
          CHECK(z.has_value() != static_cast<bool>(psi.killed().count(x)));
          if (z) CHECK(images.insert(*z).second);
        }
        const auto cv = cell_variables(w);
        CHECK(images == std::set<VariableId>(cv.begin(), cv.end()));
      }
    }
  }

  TEST_CASE("ideal presentations") {
    const Permutation w = Permutation::parse("3421");
    const HessenbergFunction h({3, 3, 4, 4});
    const IdealPresentation ideal = build_ideal(w, h, IdealKind::Cell);
    REQUIRE(ideal.generators.size() == 2);
    CHECK(ideal.generators[0].k == 4);
    CHECK(ideal.generators[0].l == 1);
    CHECK(ideal.generators[1].l == 2);
    CHECK(ideal.height == 2);
    CHECK_FALSE(ideal.has_constant);
    CHECK_THROWS_AS(build_ideal(w, HessenbergFunction({1, 3, 4, 4}), IdealKind::Cell), InvalidInput);
    CHECK(ideal_kind_from_string("patch") == IdealKind::Patch);
    CHECK_THROWS_AS(ideal_kind_from_string("other"), InvalidInput);
    for (int n = 2; n <= 4; ++n)
      for (const auto& hh : enumerate_hessenberg(n, true))
        for (const auto& u : all_permutations(n)) {
          const auto cell = build_ideal(u, hh, IdealKind::Cell);
          const auto patch = build_ideal(u, hh, IdealKind::Patch);
          CHECK(static_cast<int>(cell.generators.size()) == lambda_h(hh).size);
          CHECK(static_cast<int>(patch.generators.size()) == lambda_h(hh).size);
          CHECK(cell.has_constant == !is_fixed_point(u, hh));
        }
  }

  TEST_CASE("paving Poincare polynomials") {
    for (int n = 1; n <= 5; ++n) {
      // Full flag variety: prod_i (1 + q + ... + q^{i-1}).
      std::vector<long long> expected{1};
      for (int i = 1; i <= n; ++i) {
        std::vector<long long> next(expected.size() + i - 1, 0);
        for (std::size_t a = 0; a < expected.size(); ++a)
          for (int b = 0; b < i; ++b) next[a + b] += expected[a];
        expected = next;
      }
      CHECK(paving(HessenbergFunction::full(n)).poincare == expected);
      // Peterson case: binomial coefficients C(n-1, k).
      std::vector<long long> binom{1};
      for (int i = 1; i < n; ++i) {
        std::vector<long long> next(binom.size() + 1, 0);
        for (std::size_t a = 0; a < binom.size(); ++a) {
          next[a] += binom[a];
          next[a + 1] += binom[a];
        }
        binom = next;
      }
      const auto rep = paving(HessenbergFunction::minimal_indecomposable(n));
      CHECK(rep.poincare == binom);
      CHECK(rep.max_dim == n - 1);
    }
  }
}
