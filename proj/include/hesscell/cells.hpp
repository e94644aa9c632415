#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "hesscell/combinat.hpp"
#include "hesscell/polyring.hpp"

namespace hesscell {

// Coordinates x_{i,j} of the patch wM: j < w^{-1}(i), in canonical order.
std::vector<VariableId> patch_variables(const Permutation& w);
// Coordinates z_{i,j} of Omega_w: i < w(j) and j < w^{-1}(i).  There are length(w) of them.
std::vector<VariableId> cell_variables(const Permutation& w);

// [wM]_{i,j} = 1 if i = w(j); 0 if j > w^{-1}(i); x_{i,j} otherwise.
PolyMatrix build_wM(const Permutation& w);
// [Omega_w]_{i,j} = 1 if i = w(j); 0 if i > w(j) or j > w^{-1}(i); z_{i,j} otherwise.
PolyMatrix build_Omega(const Permutation& w);

// A^{-1} N A for A = wM' with M' = w^{-1} A lower unitriangular.
PolyMatrix conjugate_nilpotent(const Permutation& w, const PolyMatrix& a);

// Full matrix of f^w_{k,l} = [(wM)^{-1} N (wM)]_{k,l}.
PolyMatrix patch_generators(const Permutation& w);
// Full matrix of g^w_{k,l} = [Omega_w^{-1} N Omega_w]_{k,l}.
PolyMatrix cell_generators(const Permutation& w);

// Omega_w^{-1} by permuted-triangular inversion.
PolyMatrix omega_inverse_direct(const Permutation& w);
// Omega_w^{-1} as psi_w(v_w^{-1} (w_0 M)^{-1}).
PolyMatrix omega_inverse_via_psi(const Permutation& w);

// Specialization C[x_{w_0}] -> C[z_w].
class PsiMap {
 public:
  explicit PsiMap(const Permutation& w);

  const Permutation& w() const { return w_; }
  const Permutation& v() const { return v_; }
  // D_w = { x_{i,j} : i + j <= n and v_w^{-1}(j) > w^{-1}(i) }.
  const std::set<VariableId>& killed() const { return killed_; }
  // x_{i,j} -> nullopt (killed) or z_{i, v_w^{-1}(j)}.
  const std::map<VariableId, std::optional<VariableId>>& assignment() const { return assignment_; }

  // Throws DomainMismatch for variables outside the w_0 patch.
  Polynomial apply(const Polynomial& p) const;
  PolyMatrix apply(const PolyMatrix& m) const;

 private:
  Permutation w_;
  Permutation v_;
  std::set<VariableId> killed_;
  std::map<VariableId, std::optional<VariableId>> assignment_;
  std::map<VariableId, Polynomial> sigma_;
  std::set<VariableId> target_;
};

PsiMap psi_map(const Permutation& w);
Polynomial psi_apply(const PsiMap& psi, const Polynomial& p);

// psi_w(f^{w_0}_{v_w(k), v_w(l)}).  `f_w0` may be passed to avoid recomputing
// patch_generators(w_0).
Polynomial cell_generator_via_psi(const Permutation& w, int k, int l,
                                  const PolyMatrix* f_w0 = nullptr);
// psi_w(v_w^{-1} F v_w) entrywise, F = patch_generators(w_0).
PolyMatrix cell_generators_via_psi(const Permutation& w, const PolyMatrix* f_w0 = nullptr);

enum class IdealKind { Patch, Cell };

const char* to_string(IdealKind kind);
IdealKind ideal_kind_from_string(std::string_view s);

struct Generator {
  int k = 0;
  int l = 0;
  Polynomial poly;
};

struct IdealPresentation {
  IdealKind kind = IdealKind::Cell;
  Permutation w;
  HessenbergFunction h;
  std::vector<VariableId> ambient;
  // All (k, l) with k > h(l), k descending then l ascending.  Zero
  // polynomials are kept so that the list has |lambda_h| entries.
  std::vector<Generator> generators;
  // Cell ideals: #{k > h(l) : v_w(k) > v_w(l) + 1}.  Patch ideals: number of
  // nonzero generators.
  int height = 0;
  // Some generator is a nonzero constant, certifying an empty intersection.
  bool has_constant = false;

  std::vector<Generator> nonzero_generators() const;
  std::vector<Polynomial> nonzero_polynomials() const;
};

// Requires h indecomposable.  `generator_matrix`, if given, must be
// patch_generators(w) or cell_generators(w) to match `kind`.
IdealPresentation build_ideal(const Permutation& w, const HessenbergFunction& h, IdealKind kind,
                              const PolyMatrix* generator_matrix = nullptr);

struct PavingCell {
  Permutation w;
  int length = 0;
  int height = 0;
  int dim = 0;
};

struct PavingReport {
  HessenbergFunction h;
  std::vector<PavingCell> cells;
  // Coefficient of q^d is the number of cells of dimension d.
  std::vector<long long> poincare;
  int max_dim = 0;
  std::vector<Permutation> max_dim_cells;
};

PavingReport paving(const HessenbergFunction& h);

}  // namespace hesscell
