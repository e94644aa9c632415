#include "hesscell/groebner.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace hesscell {

// ---------------------------------------------------------------- orders

MonomialOrder::MonomialOrder(std::vector<VariableId> priority) : priority_(std::move(priority)) {
  for (std::size_t i = 0; i < priority_.size(); ++i) {
    if (!rank_.emplace(priority_[i], static_cast<int>(i)).second)
      throw InvalidInput("variable " + priority_[i].name() + " repeated in monomial order");
  }
}

int MonomialOrder::rank(VariableId v) const {
  auto it = rank_.find(v);
  if (it == rank_.end())
    throw DomainMismatch("variable " + v.name() + " is not in the monomial order's universe");
  return it->second;
}

namespace {

using RankedExponents = std::vector<std::pair<int, unsigned>>;

RankedExponents ranked(const Monomial& m, const MonomialOrder& order) {
  RankedExponents r;
  r.reserve(m.factors().size());
  for (const auto& [v, e] : m.factors()) r.emplace_back(order.rank(v), e);
  std::sort(r.begin(), r.end());
  return r;
}

}  // namespace

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const RankedExponents ra = ranked(a, *this);
  const RankedExponents rb = ranked(b, *this);
  std::size_t i = 0;
  for (;; ++i) {
    const bool a_end = i == ra.size();
    const bool b_end = i == rb.size();
    if (a_end && b_end) return std::strong_ordering::equal;
    if (a_end) return std::strong_ordering::less;
    if (b_end) return std::strong_ordering::greater;
    if (ra[i].first != rb[i].first)
      return ra[i].first < rb[i].first ? std::strong_ordering::greater : std::strong_ordering::less;
    if (ra[i].second != rb[i].second) return ra[i].second <=> rb[i].second;
  }
}

MonomialOrder order_n(int n) {
  std::vector<VariableId> p;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; i + j <= n; ++j) p.push_back(xvar(i, j));
  return MonomialOrder(std::move(p));
}

MonomialOrder order_n_w(const Permutation& w) {
  const Permutation v = v_of_w(w);
  std::vector<VariableId> p = cell_variables(w);
  std::sort(p.begin(), p.end(), [&](const VariableId& a, const VariableId& b) {
    if (a.row != b.row) return a.row < b.row;
    return v(a.col) < v(b.col);
  });
  return MonomialOrder(std::move(p));
}

// ---------------------------------------------------------------- terms

std::string Term::str() const {
  return Polynomial::term(coeff, monomial).str();
}

namespace {

Polynomial::Terms::const_iterator leading(const Polynomial& p, const MonomialOrder& order) {
  auto best = p.terms().begin();
  for (auto it = std::next(best); it != p.terms().end(); ++it)
    if (order.greater(it->first, best->first)) best = it;
  return best;
}

}  // namespace

Term initial_term(const Polynomial& p, const MonomialOrder& order) {
  if (p.is_zero()) throw InvalidInput("initial term of the zero polynomial");
  auto it = leading(p, order);
  return {it->second, it->first};
}

// ---------------------------------------------------------------- division

Division reduce(const Polynomial& p, std::span<const Polynomial> divisors,
                const MonomialOrder& order) {
  const CoefficientDomain& dom = p.domain();
  std::vector<Term> lead;
  std::vector<mpz_class> lead_inv;
  for (const auto& g : divisors) {
    if (g.is_zero()) throw InvalidInput("zero divisor in reduce");
    if (!(g.domain() == dom)) throw DomainMismatch("divisor over a different coefficient domain");
    lead.push_back(initial_term(g, order));
    lead_inv.push_back(dom.inverse(lead.back().coeff));
  }
  Division out;
  out.quotients.assign(divisors.size(), Polynomial(dom));
  out.remainder = Polynomial(dom);
  Polynomial rest = p;
  while (!rest.is_zero()) {
    auto lt = leading(rest, order);
    const Monomial m = lt->first;
    const mpz_class c = lt->second;
    bool divided = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      if (!lead[i].monomial.divides(m)) continue;
      mpz_class q = c * lead_inv[i];
      dom.normalize(q);
      const Monomial qm = m / lead[i].monomial;
      out.quotients[i].add_term(qm, q);
      rest -= divisors[i].mul_term(q, qm);
      divided = true;
      break;
    }
    if (!divided) {
      out.remainder.add_term(m, c);
      rest.add_term(m, -c);
    }
  }
  return out;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
  const Term lf = initial_term(f, order);
  const Term lg = initial_term(g, order);
  const Monomial l = lf.monomial.lcm(lg.monomial);
  return f.mul_term(lg.coeff, l / lf.monomial) - g.mul_term(lf.coeff, l / lg.monomial);
}

BuchbergerResult buchberger_check(std::span<const Polynomial> generators,
                                  const MonomialOrder& order) {
  BuchbergerResult result;
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (std::size_t j = i + 1; j < generators.size(); ++j) {
      ++result.pairs_checked;
      Polynomial r = reduce(s_polynomial(generators[i], generators[j], order), generators, order)
                         .remainder;
      if (!r.is_zero()) {
        result.is_groebner = false;
        result.failing_pair = {i, j};
        result.failing_remainder = std::move(r);
        return result;
      }
    }
  return result;
}

BuchbergerResult buchberger_check(const IdealPresentation& ideal, const MonomialOrder& order) {
  const auto gens = ideal.nonzero_polynomials();
  return buchberger_check(gens, order);
}

// ---------------------------------------------------------------- triangular

TriangularReport triangular_analysis(const IdealPresentation& ideal, const MonomialOrder& order) {
  TriangularReport rep;
  struct Entry {
    Generator gen;
    Term in;
  };
  std::vector<Entry> entries;
  for (const auto& g : ideal.nonzero_generators()) entries.push_back({g, initial_term(g.poly, order)});
  rep.height = static_cast<int>(entries.size());

  for (const auto& e : entries) {
    const bool unit = e.gen.poly.domain().is_integers()
                          ? (e.in.coeff == 1 || e.in.coeff == -1)
                          : e.in.coeff != 0;
    if (!unit || !e.in.monomial.is_variable()) {
      rep.initial_terms_are_variables = false;
      if (rep.failure.empty())
        rep.failure = "initial term " + e.in.str() + " of g_" + std::to_string(e.gen.k) + "_" +
                      std::to_string(e.gen.l) + " is not a signed indeterminate";
    }
  }
  std::stable_sort(entries.begin(), entries.end(), [&](const Entry& a, const Entry& b) {
    return order.greater(a.in.monomial, b.in.monomial);
  });
  for (std::size_t i = 1; i < entries.size(); ++i)
    if (entries[i].in.monomial == entries[i - 1].in.monomial) {
      rep.initial_terms_distinct = false;
      if (rep.failure.empty()) rep.failure = "repeated initial term " + entries[i].in.str();
    }
  if (rep.initial_terms_are_variables) {
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const VariableId pivot = entries[i].in.monomial.factors().front().first;
      for (std::size_t j = i + 1; j < entries.size(); ++j)
        if (entries[j].gen.poly.variables().count(pivot)) {
          rep.no_later_divisibility = false;
          if (rep.failure.empty())
            rep.failure = pivot.name() + " divides a term of a later generator";
        }
    }
  } else {
    rep.no_later_divisibility = false;
  }

  std::set<VariableId> pivots;
  for (auto& e : entries) {
    if (e.in.monomial.is_variable()) {
      pivots.insert(e.in.monomial.factors().front().first);
      rep.pivot_variables.push_back(e.in.monomial.factors().front().first);
    }
    rep.initial_terms.push_back(e.in);
    rep.ordered_generators.push_back(std::move(e.gen));
  }
  for (const auto& v : ideal.ambient)
    if (!pivots.count(v)) rep.free_variables.push_back(v);

  rep.initial_ideal_of_indeterminates = rep.initial_terms_are_variables && rep.initial_terms_distinct;
  rep.is_triangular =
      rep.initial_terms_are_variables && rep.initial_terms_distinct && rep.no_later_divisibility;
  return rep;
}

// ---------------------------------------------------------------- rational oracle

namespace {

class QPoly {
 public:
  using Terms = std::map<Monomial, mpq_class>;

  QPoly() = default;
  explicit QPoly(const Polynomial& p) {
    for (const auto& [m, c] : p.terms()) terms_.emplace(m, mpq_class(c));
  }

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }

  void add(const Monomial& m, const mpq_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  // this -= c * m * g
  void sub_scaled(const mpq_class& c, const Monomial& m, const QPoly& g) {
    for (const auto& [gm, gc] : g.terms_) add(gm * m, -(c * gc));
  }

  std::pair<Monomial, mpq_class> lead(const MonomialOrder& order) const {
    auto best = terms_.begin();
    for (auto it = std::next(best); it != terms_.end(); ++it)
      if (order.greater(it->first, best->first)) best = it;
    return *best;
  }

  void make_monic(const MonomialOrder& order) {
    if (is_zero()) return;
    const mpq_class lc = lead(order).second;
    for (auto& [m, c] : terms_) c /= lc;
  }

  Polynomial to_primitive_integer(const MonomialOrder& order) const {
    mpz_class den = 1;
    for (const auto& [m, c] : terms_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    mpz_class g = 0;
    std::vector<std::pair<Monomial, mpz_class>> ints;
    for (const auto& [m, c] : terms_) {
      mpz_class v = c.get_num() * (den / c.get_den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
      ints.emplace_back(m, v);
    }
    Polynomial p;
    if (ints.empty()) return p;
    const mpz_class lcv = [&] {
      const Monomial lm = lead(order).first;
      for (const auto& [m, v] : ints)
        if (m == lm) return v;
      return mpz_class(1);
    }();
    if (lcv < 0) g = -g;
    for (const auto& [m, v] : ints) p.add_term(m, v / g);
    return p;
  }

 private:
  Terms terms_;
};

class StepBudget {
 public:
  explicit StepBudget(std::size_t max) : max_(max) {}
  void tick() {
    if (++used_ > max_)
      throw BudgetExceeded("Groebner oracle exceeded its budget of " + std::to_string(max_) +
                           " reduction steps");
  }

 private:
  std::size_t max_;
  std::size_t used_ = 0;
};

// Full reduction of every term (not only the leading one) by monic divisors.
QPoly full_reduce(QPoly p, const std::vector<QPoly>& basis, const MonomialOrder& order,
                  StepBudget& budget) {
  QPoly remainder;
  while (!p.is_zero()) {
    auto [m, c] = p.lead(order);
    bool divided = false;
    for (const auto& g : basis) {
      if (g.is_zero()) continue;
      auto [gm, gc] = g.lead(order);
      if (!gm.divides(m)) continue;
      budget.tick();
      p.sub_scaled(c / gc, m / gm, g);
      divided = true;
      break;
    }
    if (!divided) {
      remainder.add(m, c);
      p.add(m, -c);
    }
  }
  return remainder;
}

}  // namespace

std::vector<Polynomial> reduced_gb_oracle(std::span<const Polynomial> generators,
                                          const MonomialOrder& order, std::size_t max_steps) {
  StepBudget budget(max_steps);
  std::vector<QPoly> basis;
  auto unit = [] { return std::vector<Polynomial>{Polynomial::constant(1)}; };
  for (const auto& g : generators) {
    if (!g.domain().is_integers())
      throw DomainMismatch("reduced_gb_oracle works over the rationals; got " + g.domain().str());
    if (g.is_zero()) continue;
    if (g.is_constant()) return unit();
    QPoly q(g);
    q.make_monic(order);
    basis.push_back(std::move(q));
  }

  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);

  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    budget.tick();
    auto [mi, ci] = basis[i].lead(order);
    auto [mj, cj] = basis[j].lead(order);
    const Monomial l = mi.lcm(mj);
    // Coprime leading monomials reduce to zero; skipping them is safe here
    // because this routine only completes bases, it does not certify them.
    if (l == mi * mj) continue;
    QPoly s;
    s.sub_scaled(mpq_class(-1) / ci, l / mi, basis[i]);
    s.sub_scaled(mpq_class(1) / cj, l / mj, basis[j]);
    QPoly r = full_reduce(std::move(s), basis, order, budget);
    if (r.is_zero()) continue;
    if (r.terms().size() == 1 && r.terms().begin()->first.is_one()) return unit();
    r.make_monic(order);
    const std::size_t k = basis.size();
    basis.push_back(std::move(r));
    for (std::size_t a = 0; a < k; ++a) pairs.emplace_back(a, k);
  }

  // Minimalize: drop elements whose leading monomial is divisible by another's.
  std::vector<QPoly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Monomial mi = basis[i].lead(order).first;
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial mj = basis[j].lead(order).first;
      if (mj.divides(mi) && (mj != mi || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // Interreduce.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<QPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    minimal[i] = full_reduce(minimal[i], others, order, budget);
    minimal[i].make_monic(order);
  }
  std::sort(minimal.begin(), minimal.end(), [&](const QPoly& a, const QPoly& b) {
    return order.greater(a.lead(order).first, b.lead(order).first);
  });
  std::vector<Polynomial> out;
  for (const auto& q : minimal) out.push_back(q.to_primitive_integer(order));
  return out;
}

}  // namespace hesscell
