#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hesscell/cells.hpp"
#include "hesscell/polyring.hpp"

namespace hesscell {

// Lexicographic order with respect to a variable priority list (highest first).
class MonomialOrder {
 public:
  MonomialOrder() = default;
  explicit MonomialOrder(std::vector<VariableId> priority);

  const std::vector<VariableId>& priority() const { return priority_; }
  bool contains(VariableId v) const { return rank_.count(v) != 0; }
  // 0 for the highest-priority variable.  Throws DomainMismatch if absent.
  int rank(VariableId v) const;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

 private:
  std::vector<VariableId> priority_;
  std::map<VariableId, int> rank_;
};

// x_{i,j} > x_{i',j'} iff i < i', or i = i' and j < j' (on the w_0 patch).
MonomialOrder order_n(int n);
// z_{i,j} > z_{i',j'} iff i < i', or i = i' and v_w(j) < v_w(j') (on the cell of w).
MonomialOrder order_n_w(const Permutation& w);

struct Term {
  mpz_class coeff;
  Monomial monomial;

  std::string str() const;
  bool operator==(const Term& o) const { return coeff == o.coeff && monomial == o.monomial; }
};

// Largest term; throws InvalidInput for the zero polynomial.
Term initial_term(const Polynomial& p, const MonomialOrder& order);

struct Division {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

// Multivariate division.  Divisors are tried in list order against the
// leading term of the running remainder.  Over Z every divisor's leading
// coefficient must be +-1.
Division reduce(const Polynomial& p, std::span<const Polynomial> divisors,
                const MonomialOrder& order);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

struct BuchbergerResult {
  bool is_groebner = true;
  std::size_t pairs_checked = 0;
  // First pair with a nonzero remainder, if any.
  std::pair<std::size_t, std::size_t> failing_pair{0, 0};
  Polynomial failing_remainder;
};

// Reduces every S-polynomial of every pair (no coprime-leading-term shortcut).
BuchbergerResult buchberger_check(std::span<const Polynomial> generators,
                                  const MonomialOrder& order);
BuchbergerResult buchberger_check(const IdealPresentation& ideal, const MonomialOrder& order);

struct TriangularReport {
  bool is_triangular = true;
  bool initial_terms_are_variables = true;  // check (a)
  bool initial_terms_distinct = true;       // check (b)
  bool no_later_divisibility = true;        // check (c)
  // Nonzero generators sorted by initial term, largest first.
  std::vector<Generator> ordered_generators;
  std::vector<Term> initial_terms;
  int height = 0;
  std::vector<VariableId> free_variables;
  std::vector<VariableId> pivot_variables;
  // Initial ideal is generated by distinct indeterminates: certifies
  // radicality and the sufficient condition for <-compatible geometric
  // vertex decomposability.
  bool initial_ideal_of_indeterminates = false;
  std::string failure;
};

TriangularReport triangular_analysis(const IdealPresentation& ideal, const MonomialOrder& order);

// Buchberger completion over Q followed by interreduction.  Returns
// primitive integer polynomials with positive leading coefficient; [1] iff
// the ideal is the unit ideal.  Throws BudgetExceeded after `max_steps`
// reduction steps.
std::vector<Polynomial> reduced_gb_oracle(std::span<const Polynomial> generators,
                                          const MonomialOrder& order,
                                          std::size_t max_steps = 100000);

}  // namespace hesscell
