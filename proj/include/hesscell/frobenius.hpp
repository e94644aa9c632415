#pragma once

#include <string>
#include <vector>

#include "hesscell/cells.hpp"
#include "hesscell/groebner.hpp"
#include "hesscell/polyring.hpp"

namespace hesscell {

// Data for the splitting Tr(F^{p-1} * .) of F_p[vars] attached to an ideal
// whose nonzero generators have signed-indeterminate initial terms.
struct SplittingContext {
  unsigned long p = 2;
  IdealKind kind = IdealKind::Cell;
  Permutation w;
  HessenbergFunction h;
  MonomialOrder order;
  std::vector<VariableId> variables;
  Monomial Z;                          // product of all variables
  std::vector<Generator> generators;   // nonzero generators, mod p
  Polynomial G;                        // product of the generators, mod p
  Polynomial F;                        // (Z / |in(G)|) * G, mod p
  int sign = 1;                        // sign of in(G) over Z
  Polynomial F_power;                  // F^{p-1}
};

SplittingContext make_splitting_context(const IdealPresentation& ideal, const MonomialOrder& order,
                                        unsigned long p);
// Cell ideal J_{w,h} with the order <_n^w.
SplittingContext make_cell_splitting_context(const Permutation& w, const HessenbergFunction& h,
                                             unsigned long p);

// Additive map sending a monomial m to (mZ)^{1/p} / Z when mZ is a p-th power
// and to 0 otherwise; coefficients pass through unchanged.
Polynomial trace(const Polynomial& f, const Monomial& Z, unsigned long p);

// Tr(F^{p-1} f).
Polynomial splitting_apply(const Polynomial& f, const SplittingContext& ctx);

struct GeneratorCompatibility {
  int k = 0;
  int l = 0;
  Polynomial image;
  Polynomial remainder;
};

struct CompatibilityReport {
  bool compatible = true;
  unsigned long p = 2;
  int sign = 1;
  bool initial_F_is_Z = true;
  std::vector<GeneratorCompatibility> generators;
};

// Reduces the image of every generator modulo the generators (a Groebner
// basis mod p, since the leading coefficients are +-1).
CompatibilityReport compatibility_check(const SplittingContext& ctx);

}  // namespace hesscell
