#include <doctest.h>

#include <algorithm>
#include <set>

#include "hesscell/combinat.hpp"
#include "hesscell/errors.hpp"

using namespace hesscell;

namespace {

long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

long long catalan(int n) {
  long long c = 1;
  for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

int brute_inversions(const Permutation& w) {
  int c = 0;
  for (int i = 1; i <= w.size(); ++i)
    for (int j = i + 1; j <= w.size(); ++j)
      if (w(i) > w(j)) ++c;
  return c;
}

}  // namespace

TEST_SUITE("combinat") {
  TEST_CASE("permutation parsing accepts both forms") {
    CHECK(Permutation::parse("3421") == Permutation({3, 4, 2, 1}));
    CHECK(Permutation::parse("3,4,2,1") == Permutation({3, 4, 2, 1}));
    CHECK(Permutation::parse("3421").str() == "3421");
    const Permutation big = Permutation::longest(10);
    CHECK(big.str() == "10,9,8,7,6,5,4,3,2,1");
    CHECK(Permutation::parse(big.str()) == big);
    CHECK_THROWS_AS(Permutation::parse("3321"), InvalidInput);
    CHECK_THROWS_AS(Permutation::parse("3,4,2"), InvalidInput);
    CHECK_THROWS_AS(Permutation::parse("12a"), InvalidInput);
    CHECK_THROWS_AS(Permutation::parse(""), InvalidInput);
    CHECK_THROWS_AS(Permutation({0, 1}), InvalidInput);
  }

  TEST_CASE("group laws and length on S_n, n <= 5") {
    for (int n = 1; n <= 5; ++n) {
      const auto perms = all_permutations(n);
      CHECK(static_cast<long long>(perms.size()) == factorial(n));
      CHECK(std::is_sorted(perms.begin(), perms.end()));
      const Permutation e = Permutation::identity(n);
      for (const auto& w : perms) {
        CHECK(w.compose(w.inverse()) == e);
        CHECK(w.inverse().compose(w) == e);
        CHECK(w.length() == brute_inversions(w));
        CHECK(w.inverse().length() == w.length());
        CHECK(v_of_w(v_of_w(w)) == w);
        for (int j = 1; j <= n; ++j) CHECK(v_of_w(w)(j) == n + 1 - w(j));
      }
      CHECK(Permutation::longest(n).length() == n * (n - 1) / 2);
      const auto& a = perms.back();
      const auto& b = perms[perms.size() / 2];
      for (int j = 1; j <= n; ++j) CHECK(a.compose(b)(j) == a(b(j)));
    }
  }

  TEST_CASE("v_w for 3421 is 2134") {
    CHECK(v_of_w(Permutation::parse("3421")) == Permutation::parse("2134"));
    CHECK(v_of_w(Permutation::longest(4)).is_identity());
  }

  TEST_CASE("Hessenberg functions: validation and enumeration") {
    CHECK_THROWS_AS(HessenbergFunction({3, 2, 3}), InvalidInput);
    CHECK_THROWS_AS(HessenbergFunction({2, 2, 2}), InvalidInput);
    CHECK_THROWS_AS(HessenbergFunction({4, 4, 4}), InvalidInput);
    CHECK_THROWS_AS(HessenbergFunction::parse("2,x,3"), InvalidInput);
    CHECK_FALSE(HessenbergFunction({1, 3, 3}).indecomposable());
    CHECK(HessenbergFunction({2, 3, 3}).indecomposable());
    CHECK(HessenbergFunction::parse("3,3,4,4").str() == "3,3,4,4");
    for (int n = 1; n <= 7; ++n) {
      const auto all = enumerate_hessenberg(n, false);
      const auto ind = enumerate_hessenberg(n, true);
      CHECK(static_cast<long long>(all.size()) == catalan(n));
      CHECK(static_cast<long long>(ind.size()) == catalan(std::max(n - 1, 0)));
      CHECK(std::is_sorted(all.begin(), all.end()));
      for (const auto& h : ind) CHECK(h.indecomposable());
      CHECK(std::find(ind.begin(), ind.end(), HessenbergFunction::full(n)) != ind.end());
      CHECK(std::find(ind.begin(), ind.end(), HessenbergFunction::minimal_indecomposable(n)) != ind.end());
    }
  }

  TEST_CASE("lambda_h") {
    const auto lam = lambda_h(HessenbergFunction({3, 3, 4, 4}));
    CHECK(lam.parts == std::vector<int>{1, 1, 0, 0});
    CHECK(lam.size == 2);
    for (const auto& h : enumerate_hessenberg(5, true)) {
      int s = 0;
      for (int v : h.values()) s += v;
      CHECK(lambda_h(h).size == 25 - s);
    }
  }

  TEST_CASE("fixed points") {
    CHECK(fixed_points(HessenbergFunction::full(4)).size() == 24);
    for (int n = 1; n <= 6; ++n) {
      // Peterson case: 2^{n-1} fixed points.
      CHECK(fixed_points(HessenbergFunction::minimal_indecomposable(n)).size() == (1u << (n - 1)));
      const auto hs = enumerate_hessenberg(n, true);
      for (const auto& h : hs) {
        const auto fp = fixed_points(h);
        CHECK(std::binary_search(fp.begin(), fp.end(), Permutation::longest(n)));
        CHECK(std::binary_search(fp.begin(), fp.end(), Permutation::identity(n)));
        for (const auto& h2 : hs) {
          if (!h.pointwise_le(h2)) continue;
          const auto fp2 = fixed_points(h2);
          CHECK(std::includes(fp2.begin(), fp2.end(), fp.begin(), fp.end()));
        }
      }
    }
    const HessenbergFunction h({3, 3, 4, 4});
    CHECK(is_fixed_point(Permutation::parse("3421"), h));
    // 2341 at j = 1: w^{-1}(1) = 4 > h(1) = 3.
    CHECK_FALSE(is_fixed_point(Permutation::parse("2341"), h));
  }
}
