#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "hesscell/errors.hpp"

namespace hesscell {

// A permutation of [n] in one-line notation, 1-based.  The associated
// permutation matrix has e_{w(j)} as its j-th column, so composition
// (w.compose(u))(j) = w(u(j)) matches the matrix product P_w P_u.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  // w_0(j) = n + 1 - j.
  static Permutation longest(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int j) const { return images_[j - 1]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  Permutation compose(const Permutation& u) const;
  // Number of inversions.
  int length() const;
  bool is_identity() const;

  // "3421" for n <= 9, "10,9,...,1" otherwise.
  std::string str() const;
  // Accepts "3421" (n <= 9) or "3,4,2,1".
  static Permutation parse(std::string_view text);

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

// v_w = w_0 w, i.e. v_w(j) = n + 1 - w(j).
Permutation v_of_w(const Permutation& w);

// All of S_n in lexicographic order of one-line notation.
std::vector<Permutation> all_permutations(int n);

class HessenbergFunction {
 public:
  HessenbergFunction() = default;
  explicit HessenbergFunction(std::vector<int> values);

  // h = (n, ..., n).
  static HessenbergFunction full(int n);
  // h = (2, 3, ..., n, n), the smallest indecomposable function.
  static HessenbergFunction minimal_indecomposable(int n);

  int size() const { return static_cast<int>(values_.size()); }
  int operator()(int i) const { return values_[i - 1]; }
  const std::vector<int>& values() const { return values_; }
  bool indecomposable() const { return indecomposable_; }

  // Pointwise h <= other.
  bool pointwise_le(const HessenbergFunction& other) const;

  std::string str() const;
  static HessenbergFunction parse(std::string_view text);

  bool operator==(const HessenbergFunction& o) const { return values_ == o.values_; }
  auto operator<=>(const HessenbergFunction& o) const { return values_ <=> o.values_; }

 private:
  std::vector<int> values_;
  bool indecomposable_ = false;
};

struct LambdaPartition {
  std::vector<int> parts;  // (n - h(1), ..., n - h(n))
  int size = 0;            // n^2 - sum h(i)
};

LambdaPartition lambda_h(const HessenbergFunction& h);

// Exhaustive, lexicographically sorted.
std::vector<HessenbergFunction> enumerate_hessenberg(int n, bool indecomposable_only);

// w^{-1}(w(j) - 1) <= h(j) for all j; the constraint is vacuous when w(j) = 1.
bool is_fixed_point(const Permutation& w, const HessenbergFunction& h);

std::vector<Permutation> fixed_points(const HessenbergFunction& h);

}  // namespace hesscell
