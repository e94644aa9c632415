#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "hesscell/cells.hpp"
#include "hesscell/frobenius.hpp"
#include "hesscell/groebner.hpp"
#include "hesscell/serialize.hpp"

namespace hesscell {

using Rng = std::mt19937_64;

// Up to `max_terms` terms with exponents in [0, max_exponent] and nonzero
// coefficients in [-coeff_range, coeff_range] (or uniform in F_p).
Polynomial random_polynomial(std::span<const VariableId> vars, int max_terms,
                             unsigned max_exponent, CoefficientDomain domain, Rng& rng,
                             int coeff_range = 5);

// Back-substitutes free-variable values through a triangular presentation.
// Pivot generators are processed from the last to the first.
std::map<VariableId, mpz_class> solve_triangular_point(
    const TriangularReport& report, const std::map<VariableId, mpz_class>& free_values);

struct PointCheck {
  bool ok = true;
  int points = 0;
  std::string failure;
};

// Samples random integer points on the cell via the triangular solve, builds
// the numeric Omega_w and checks [Omega^{-1} N Omega]_{k,l} = 0 for k > h(l).
PointCheck random_point_check(const Permutation& w, const HessenbergFunction& h,
                              const TriangularReport& report, Rng& rng, int points = 10,
                              int value_range = 9);

struct AxiomCheck {
  bool ok = true;
  int trials = 0;
  std::string failure;
};

// phi(1) = 1, phi(a + b) = phi(a) + phi(b) and phi(z^p f) = z phi(f) for
// random f and every variable z.
AxiomCheck splitting_axiom_check(const SplittingContext& ctx, Rng& rng, int trials);

struct SweepOptions {
  int max_n = 4;
  std::vector<unsigned long> frobenius_primes;
  int frobenius_trials = 5;
  // Unit-ideal oracle always runs for n <= 4; this extends it to every n.
  bool oracle_all_n = false;
  // Random-point vanishing check runs for n <= geometric_max_n.
  int geometric_max_n = 4;
  int geometric_points = 10;
  int trunc = 20;
  unsigned jobs = 1;
  std::uint64_t seed = 1;
  std::size_t budget = 100000;
  // Largest accepted max_n; 0 selects 6 without Frobenius checks, 4 with.
  int ceiling = 0;
};

struct SweepCase {
  int n = 0;
  HessenbergFunction h;
  Permutation w;
  bool fixed_point = false;
  int length = 0;
  int height = 0;
  int dim = 0;
  std::size_t listed_generators = 0;
  bool has_constant = false;
  // Populated for fixed points.
  bool triangular_ok = false;
  bool initial_terms_ok = false;
  bool gb_ok = false;
  bool homogeneous_ok = false;
  bool hilbert_ok = false;
  std::optional<bool> geometric_ok;
  std::optional<bool> frobenius_ok;
  // Populated when the unit-ideal oracle ran: true iff the oracle's verdict
  // (unit ideal or not) agrees with the fixed-point classification.
  std::optional<bool> oracle_consistent;
  // Non-fixed points only: the oracle returned <1>.
  std::optional<bool> empty_certified;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

struct HessenbergSummary {
  HessenbergFunction h;
  int fixed_points = 0;
  int lambda_size = 0;
  int max_dim = 0;
  int expected_max_dim = 0;
  bool max_at_w0 = false;
  std::vector<long long> poincare;
  bool ok = true;
};

struct SweepReport {
  int max_n = 0;
  std::vector<SweepCase> cases;
  std::vector<HessenbergSummary> summaries;
  std::size_t fixed_point_cases = 0;
  std::size_t failures = 0;
  double elapsed_seconds = 0;

  bool ok() const { return failures == 0; }
};

// Runs every check on every (indecomposable h, w in S_n), n = 1..max_n.
SweepReport sweep(const SweepOptions& options);

// Checks for one case; `gens` must be cell_generators(w).
SweepCase check_case(const Permutation& w, const HessenbergFunction& h, const PolyMatrix& gens,
                     const SweepOptions& options, Rng& rng);

json to_json(const SweepCase& c);
json to_json(const SweepReport& r, bool include_timing = true);

}  // namespace hesscell
