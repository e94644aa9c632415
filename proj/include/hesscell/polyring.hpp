#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hesscell/combinat.hpp"
#include "hesscell/errors.hpp"

namespace hesscell {

// PatchX: entries x_{i,j} of w_0 M.  CellZ: entries z_{i,j} of Omega_w.
enum class Family : std::uint8_t { PatchX = 0, CellZ = 1 };

struct VariableId {
  Family family = Family::PatchX;
  int row = 0;
  int col = 0;

  // Canonical order: family, then row, then col.
  auto operator<=>(const VariableId&) const = default;

  // "x_1_2" / "z_2_1".
  std::string name() const;
  static VariableId parse(std::string_view text);
};

inline VariableId xvar(int i, int j) { return {Family::PatchX, i, j}; }
inline VariableId zvar(int i, int j) { return {Family::CellZ, i, j}; }

class Monomial {
 public:
  using Factor = std::pair<VariableId, unsigned>;

  Monomial() = default;
  explicit Monomial(VariableId v, unsigned exponent = 1);
  // Merges repeated variables and drops zero exponents.
  static Monomial from_factors(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  unsigned exponent(VariableId v) const;
  unsigned degree() const;
  bool is_one() const { return factors_.empty(); }
  bool is_variable() const { return factors_.size() == 1 && factors_[0].second == 1; }

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  // Requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;
  Monomial pow(unsigned e) const;

  std::string str() const;

  auto operator<=>(const Monomial&) const = default;

 private:
  std::vector<Factor> factors_;  // sorted by VariableId, exponents > 0
};

class CoefficientDomain {
 public:
  static CoefficientDomain integers() { return CoefficientDomain(0); }
  // Throws InvalidInput unless p is prime.
  static CoefficientDomain prime_field(unsigned long p);

  bool is_integers() const { return modulus_ == 0; }
  unsigned long modulus() const { return modulus_; }

  void normalize(mpz_class& c) const;
  // Multiplicative inverse in F_p; over Z only +-1 are invertible.
  mpz_class inverse(const mpz_class& c) const;

  std::string str() const;

  bool operator==(const CoefficientDomain&) const = default;

 private:
  explicit CoefficientDomain(unsigned long p) : modulus_(p) {}
  unsigned long modulus_ = 0;
};

bool is_prime(unsigned long p);

// Sparse polynomial: no zero coefficients are stored, monomial keys are
// canonical, and the zero polynomial is the empty map.
class Polynomial {
 public:
  using Terms = std::map<Monomial, mpz_class>;

  Polynomial() = default;
  explicit Polynomial(CoefficientDomain domain) : domain_(domain) {}

  static Polynomial constant(const mpz_class& c,
                             CoefficientDomain domain = CoefficientDomain::integers());
  static Polynomial variable(VariableId v,
                             CoefficientDomain domain = CoefficientDomain::integers());
  static Polynomial term(const mpz_class& c, const Monomial& m,
                         CoefficientDomain domain = CoefficientDomain::integers());

  const Terms& terms() const { return terms_; }
  const CoefficientDomain& domain() const { return domain_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Coefficient of the monomial 1.
  mpz_class constant_value() const;
  mpz_class coefficient(const Monomial& m) const;
  std::set<VariableId> variables() const;
  unsigned total_degree() const;

  void add_term(const Monomial& m, const mpz_class& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const mpz_class& c) const;
  Polynomial mul_term(const mpz_class& c, const Monomial& m) const;
  Polynomial pow(unsigned e) const;

  // Image in F_p[...] (reduces coefficients).
  Polynomial to_prime_field(unsigned long p) const;
  // Forgets the field structure; coefficients in [0, p).
  Polynomial to_integers() const;

  // Signed sum of terms in canonical order, e.g. "-x_1_2 + x_1_3*x_2_2".
  std::string str() const;
  static Polynomial parse(std::string_view text,
                          CoefficientDomain domain = CoefficientDomain::integers());

  bool operator==(const Polynomial& o) const {
    return domain_ == o.domain_ && terms_ == o.terms_;
  }

 private:
  void require_same_domain(const Polynomial& o) const;

  CoefficientDomain domain_ = CoefficientDomain::integers();
  Terms terms_;
};

enum class ArithOp { Add, Sub, Mul };

Polynomial poly_arith(const Polynomial& a, const Polynomial& b, ArithOp op);

// Ring homomorphism determined by the images in `sigma`.  A variable with no
// image maps to itself, provided it belongs to `target_universe`; every image
// must also be expressed in variables of `target_universe`.
Polynomial substitute(const Polynomial& p, const std::map<VariableId, Polynomial>& sigma,
                      const std::set<VariableId>& target_universe);

// Square matrix of polynomials, indexed 1..n.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  explicit PolyMatrix(int n, CoefficientDomain domain = CoefficientDomain::integers());

  static PolyMatrix identity(int n, CoefficientDomain domain = CoefficientDomain::integers());
  // Column j is e_{w(j)}.
  static PolyMatrix permutation(const Permutation& w);
  // Superdiagonal ones (the regular nilpotent N).
  static PolyMatrix nilpotent(int n);

  int size() const { return n_; }
  const CoefficientDomain& domain() const { return domain_; }
  Polynomial& operator()(int i, int j) { return entries_[index(i, j)]; }
  const Polynomial& operator()(int i, int j) const { return entries_[index(i, j)]; }

  PolyMatrix map(const std::function<Polynomial(const Polynomial&)>& f) const;
  bool is_lower_unitriangular() const;
  std::set<VariableId> variables() const;

  std::string str() const;

  bool operator==(const PolyMatrix& o) const {
    return n_ == o.n_ && domain_ == o.domain_ && entries_ == o.entries_;
  }

 private:
  std::size_t index(int i, int j) const;

  int n_ = 0;
  CoefficientDomain domain_ = CoefficientDomain::integers();
  std::vector<Polynomial> entries_;
};

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);

// Inverse of a lower unitriangular matrix by forward substitution.
PolyMatrix unitriangular_inverse(const PolyMatrix& m);

// (wM)^{-1} = M^{-1} w^{-1} for lower unitriangular M; never leaves the
// polynomial ring since det(wM) = +-1.
PolyMatrix inverse_unitriangular_conjugate(const Permutation& w, const PolyMatrix& m);

}  // namespace hesscell
