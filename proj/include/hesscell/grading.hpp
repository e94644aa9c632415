#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <vector>

#include "hesscell/combinat.hpp"
#include "hesscell/groebner.hpp"
#include "hesscell/polyring.hpp"

namespace hesscell {

class GradedWeights {
 public:
  GradedWeights() = default;
  explicit GradedWeights(std::map<VariableId, int> weights);

  const std::map<VariableId, int>& weights() const { return weights_; }
  // Throws DomainMismatch for an unweighted variable.
  int weight(VariableId v) const;
  long long degree(const Monomial& m) const;

 private:
  std::map<VariableId, int> weights_;
};

// deg z_{i,j} = w(j) - i on the cell of w.  The pullback form
// w_0(v_w(j)) - i is computed alongside and must agree.
GradedWeights weights_for(const Permutation& w);
// deg x_{i,j} = w_0(j) - i on the w_0 patch.
GradedWeights patch_weights(int n);

// Common weighted degree of all terms, or nullopt.  Zero and constants have degree 0.
std::optional<long long> is_homogeneous(const Polynomial& p, const GradedWeights& wt);

// prod (1 - t^e) over numerator / prod (1 - t^e) over denominator.
struct HilbertSeriesRational {
  std::vector<int> numerator;
  std::vector<int> denominator;

  // Sorted factor lists, no cancellation.
  HilbertSeriesRational canonical() const;
  // Common factors removed from both sides (comparison form).
  HilbertSeriesRational cancelled() const;
  // Coefficients of t^0 .. t^order.
  std::vector<mpz_class> expand(int order) const;

  bool operator==(const HilbertSeriesRational&) const = default;
};

// Requires w in fixed_points(h) and h indecomposable.
HilbertSeriesRational hilbert_formula(const Permutation& w, const HessenbergFunction& h);

// prod over free variables of (1 - t^{wt(v)})^{-1}, truncated at `order`.
std::vector<mpz_class> hilbert_oracle(const TriangularReport& report, const GradedWeights& wt,
                                      int order);

}  // namespace hesscell
