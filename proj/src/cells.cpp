#include "hesscell/cells.hpp"

#include <algorithm>

namespace hesscell {

namespace {

int cell_height(const Permutation& w, const HessenbergFunction& h) {
  const Permutation v = v_of_w(w);
  int count = 0;
  for (int k = 1; k <= w.size(); ++k)
    for (int l = 1; l <= w.size(); ++l)
      if (k > h(l) && v(k) > v(l) + 1) ++count;
  return count;
}

}  // namespace

std::vector<VariableId> patch_variables(const Permutation& w) {
  const Permutation winv = w.inverse();
  std::vector<VariableId> out;
  for (int i = 1; i <= w.size(); ++i)
    for (int j = 1; j < winv(i); ++j) out.push_back(xvar(i, j));
  return out;
}

std::vector<VariableId> cell_variables(const Permutation& w) {
  const Permutation winv = w.inverse();
  std::vector<VariableId> out;
  for (int i = 1; i <= w.size(); ++i)
    for (int j = 1; j < winv(i); ++j)
      if (i < w(j)) out.push_back(zvar(i, j));
  return out;
}

PolyMatrix build_wM(const Permutation& w) {
  const int n = w.size();
  const Permutation winv = w.inverse();
  PolyMatrix m(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == w(j))
        m(i, j) = Polynomial::constant(1);
      else if (j < winv(i))
        m(i, j) = Polynomial::variable(xvar(i, j));
    }
  return m;
}

PolyMatrix build_Omega(const Permutation& w) {
  const int n = w.size();
  const Permutation winv = w.inverse();
  PolyMatrix m(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == w(j))
        m(i, j) = Polynomial::constant(1);
      else if (i < w(j) && j < winv(i))
        m(i, j) = Polynomial::variable(zvar(i, j));
    }
  return m;
}

namespace {

// M' = w^{-1} A, i.e. M'_{i,j} = A_{w(i), j}.
PolyMatrix unpermute_rows(const Permutation& w, const PolyMatrix& a) {
  PolyMatrix m(a.size(), a.domain());
  for (int i = 1; i <= a.size(); ++i)
    for (int j = 1; j <= a.size(); ++j) m(i, j) = a(w(i), j);
  return m;
}

}  // namespace

PolyMatrix conjugate_nilpotent(const Permutation& w, const PolyMatrix& a) {
  const PolyMatrix ainv = inverse_unitriangular_conjugate(w, unpermute_rows(w, a));
  return ainv * PolyMatrix::nilpotent(a.size()) * a;
}

PolyMatrix patch_generators(const Permutation& w) { return conjugate_nilpotent(w, build_wM(w)); }

PolyMatrix cell_generators(const Permutation& w) { return conjugate_nilpotent(w, build_Omega(w)); }

PolyMatrix omega_inverse_direct(const Permutation& w) {
  return inverse_unitriangular_conjugate(w, unpermute_rows(w, build_Omega(w)));
}

PolyMatrix omega_inverse_via_psi(const Permutation& w) {
  const int n = w.size();
  const Permutation w0 = Permutation::longest(n);
  const PolyMatrix w0m = build_wM(w0);
  const PolyMatrix w0m_inv = inverse_unitriangular_conjugate(w0, unpermute_rows(w0, w0m));
  const PolyMatrix vinv = PolyMatrix::permutation(v_of_w(w).inverse());
  return PsiMap(w).apply(vinv * w0m_inv);
}

// ---------------------------------------------------------------- PsiMap

PsiMap::PsiMap(const Permutation& w) : w_(w), v_(v_of_w(w)) {
  const int n = w.size();
  const Permutation winv = w.inverse();
  const Permutation vinv = v_.inverse();
  for (const auto& z : cell_variables(w)) target_.insert(z);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; i + j <= n; ++j) {
      const VariableId x = xvar(i, j);
      if (vinv(j) > winv(i)) {
        killed_.insert(x);
        assignment_[x] = std::nullopt;
        sigma_.emplace(x, Polynomial());
      } else {
        const VariableId z = zvar(i, vinv(j));
        if (!target_.count(z))
          throw InternalError("psi image " + z.name() + " of " + x.name() +
                              " is not a cell coordinate for w=" + w.str());
        assignment_[x] = z;
        sigma_.emplace(x, Polynomial::variable(z));
      }
    }
}

Polynomial PsiMap::apply(const Polynomial& p) const {
  for (const auto& v : p.variables())
    if (!assignment_.count(v))
      throw DomainMismatch("variable " + v.name() + " is not a coordinate of the w_0 patch");
  return substitute(p, sigma_, target_);
}

PolyMatrix PsiMap::apply(const PolyMatrix& m) const {
  return m.map([this](const Polynomial& p) { return apply(p); });
}

PsiMap psi_map(const Permutation& w) { return PsiMap(w); }

Polynomial psi_apply(const PsiMap& psi, const Polynomial& p) { return psi.apply(p); }

Polynomial cell_generator_via_psi(const Permutation& w, int k, int l, const PolyMatrix* f_w0) {
  PolyMatrix local;
  if (f_w0 == nullptr) {
    local = patch_generators(Permutation::longest(w.size()));
    f_w0 = &local;
  }
  const Permutation v = v_of_w(w);
  return PsiMap(w).apply((*f_w0)(v(k), v(l)));
}

PolyMatrix cell_generators_via_psi(const Permutation& w, const PolyMatrix* f_w0) {
  PolyMatrix local;
  if (f_w0 == nullptr) {
    local = patch_generators(Permutation::longest(w.size()));
    f_w0 = &local;
  }
  const PolyMatrix vm = PolyMatrix::permutation(v_of_w(w));
  const PolyMatrix vinv = PolyMatrix::permutation(v_of_w(w).inverse());
  return PsiMap(w).apply(vinv * (*f_w0) * vm);
}

// ---------------------------------------------------------------- ideals

const char* to_string(IdealKind kind) { return kind == IdealKind::Patch ? "patch" : "cell"; }

IdealKind ideal_kind_from_string(std::string_view s) {
  if (s == "patch") return IdealKind::Patch;
  if (s == "cell") return IdealKind::Cell;
  throw InvalidInput("unknown ideal kind '" + std::string(s) + "' (expected patch|cell)");
}

std::vector<Generator> IdealPresentation::nonzero_generators() const {
  std::vector<Generator> out;
  for (const auto& g : generators)
    if (!g.poly.is_zero()) out.push_back(g);
  return out;
}

std::vector<Polynomial> IdealPresentation::nonzero_polynomials() const {
  std::vector<Polynomial> out;
  for (const auto& g : generators)
    if (!g.poly.is_zero()) out.push_back(g.poly);
  return out;
}

IdealPresentation build_ideal(const Permutation& w, const HessenbergFunction& h, IdealKind kind,
                              const PolyMatrix* generator_matrix) {
  if (w.size() != h.size()) throw InvalidInput("permutation and Hessenberg function sizes differ");
  if (!h.indecomposable())
    throw InvalidInput("Hessenberg function " + h.str() + " is decomposable");
  PolyMatrix local;
  if (generator_matrix == nullptr) {
    local = kind == IdealKind::Patch ? patch_generators(w) : cell_generators(w);
    generator_matrix = &local;
  }
  const int n = w.size();
  IdealPresentation ideal;
  ideal.kind = kind;
  ideal.w = w;
  ideal.h = h;
  ideal.ambient = kind == IdealKind::Patch ? patch_variables(w) : cell_variables(w);
  int nonzero = 0;
  for (int k = n; k >= 1; --k)
    for (int l = 1; l <= n; ++l) {
      if (k <= h(l)) continue;
      Generator g{k, l, (*generator_matrix)(k, l)};
      if (!g.poly.is_zero()) ++nonzero;
      if (g.poly.is_constant() && !g.poly.is_zero()) ideal.has_constant = true;
      ideal.generators.push_back(std::move(g));
    }
  ideal.height = kind == IdealKind::Cell ? cell_height(w, h) : nonzero;
  return ideal;
}

PavingReport paving(const HessenbergFunction& h) {
  if (!h.indecomposable())
    throw InvalidInput("Hessenberg function " + h.str() + " is decomposable");
  PavingReport report;
  report.h = h;
  report.max_dim = -1;
  for (const auto& w : fixed_points(h)) {
    PavingCell cell{w, w.length(), cell_height(w, h), 0};
    cell.dim = cell.length - cell.height;
    if (cell.dim < 0)
      throw InternalError("negative cell dimension for w=" + w.str() + ", h=" + h.str());
    if (static_cast<std::size_t>(cell.dim) >= report.poincare.size())
      report.poincare.resize(cell.dim + 1, 0);
    ++report.poincare[cell.dim];
    if (cell.dim > report.max_dim) {
      report.max_dim = cell.dim;
      report.max_dim_cells.clear();
    }
    if (cell.dim == report.max_dim) report.max_dim_cells.push_back(w);
    report.cells.push_back(std::move(cell));
  }
  return report;
}

}  // namespace hesscell
