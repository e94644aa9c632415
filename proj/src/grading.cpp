#include "hesscell/grading.hpp"

#include <algorithm>

#include "hesscell/cells.hpp"

namespace hesscell {

GradedWeights::GradedWeights(std::map<VariableId, int> weights) : weights_(std::move(weights)) {
  for (const auto& [v, d] : weights_)
    if (d < 1) throw InvalidInput("weight of " + v.name() + " is not positive");
}

int GradedWeights::weight(VariableId v) const {
  auto it = weights_.find(v);
  if (it == weights_.end()) throw DomainMismatch("no weight for variable " + v.name());
  return it->second;
}

long long GradedWeights::degree(const Monomial& m) const {
  long long d = 0;
  for (const auto& [v, e] : m.factors()) d += static_cast<long long>(weight(v)) * e;
  return d;
}

GradedWeights weights_for(const Permutation& w) {
  const Permutation w0 = Permutation::longest(w.size());
  const Permutation v = v_of_w(w);
  std::map<VariableId, int> out;
  for (const auto& z : cell_variables(w)) {
    const int action_form = w(z.col) - z.row;
    const int pullback_form = w0(v(z.col)) - z.row;
    if (action_form != pullback_form)
      throw InternalError("degree formulas disagree on " + z.name() + " for w=" + w.str());
    if (action_form < 1)
      throw InternalError("nonpositive degree on " + z.name() + " for w=" + w.str());
    out.emplace(z, action_form);
  }
  return GradedWeights(std::move(out));
}

GradedWeights patch_weights(int n) {
  std::map<VariableId, int> out;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; i + j <= n; ++j) out.emplace(xvar(i, j), n + 1 - j - i);
  return GradedWeights(std::move(out));
}

std::optional<long long> is_homogeneous(const Polynomial& p, const GradedWeights& wt) {
  if (p.is_zero()) return 0;
  std::optional<long long> deg;
  for (const auto& [m, c] : p.terms()) {
    const long long d = wt.degree(m);
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg;
}

HilbertSeriesRational HilbertSeriesRational::canonical() const {
  HilbertSeriesRational c = *this;
  std::sort(c.numerator.begin(), c.numerator.end());
  std::sort(c.denominator.begin(), c.denominator.end());
  return c;
}

HilbertSeriesRational HilbertSeriesRational::cancelled() const {
  HilbertSeriesRational c = canonical();
  HilbertSeriesRational out;
  std::set_difference(c.numerator.begin(), c.numerator.end(), c.denominator.begin(),
                      c.denominator.end(), std::back_inserter(out.numerator));
  std::set_difference(c.denominator.begin(), c.denominator.end(), c.numerator.begin(),
                      c.numerator.end(), std::back_inserter(out.denominator));
  return out;
}

namespace {

void multiply_one_minus(std::vector<mpz_class>& s, int e) {
  for (int k = static_cast<int>(s.size()) - 1; k >= e; --k) s[k] -= s[k - e];
}

void divide_one_minus(std::vector<mpz_class>& s, int e) {
  for (std::size_t k = e; k < s.size(); ++k) s[k] += s[k - e];
}

}  // namespace

std::vector<mpz_class> HilbertSeriesRational::expand(int order) const {
  if (order < 0) throw InvalidInput("truncation order must be nonnegative");
  std::vector<mpz_class> s(order + 1, 0);
  s[0] = 1;
  for (int e : numerator) {
    if (e < 1) throw InvalidInput("factor exponent must be positive");
    multiply_one_minus(s, e);
  }
  for (int e : denominator) {
    if (e < 1) throw InvalidInput("factor exponent must be positive");
    divide_one_minus(s, e);
  }
  return s;
}

HilbertSeriesRational hilbert_formula(const Permutation& w, const HessenbergFunction& h) {
  if (!h.indecomposable())
    throw InvalidInput("Hessenberg function " + h.str() + " is decomposable");
  if (!is_fixed_point(w, h))
    throw InvalidInput("w=" + w.str() + " is not a fixed point for h=" + h.str());
  const Permutation v = v_of_w(w);
  const int n = w.size();
  HilbertSeriesRational out;
  for (int k = n; k >= 1; --k)
    for (int l = 1; l <= n; ++l)
      if (k > h(l) && v(k) > v(l) + 1) out.numerator.push_back(v(k) - v(l) - 1);
  for (const auto& z : cell_variables(w)) out.denominator.push_back(w(z.col) - z.row);
  return out;
}

std::vector<mpz_class> hilbert_oracle(const TriangularReport& report, const GradedWeights& wt,
                                      int order) {
  if (order < 1) throw InvalidInput("truncation must be >= 1");
  if (!report.is_triangular)
    throw InvalidInput("Hilbert oracle requires a triangular presentation");
  HilbertSeriesRational free_part;
  for (const auto& v : report.free_variables) free_part.denominator.push_back(wt.weight(v));
  return free_part.expand(order);
}

}  // namespace hesscell
