#pragma once

#include "skein/algebra.hpp"
#include "skein/diagrams.hpp"
#include "skein/linking.hpp"

namespace skein {

/// Image of a link under Phi, with the exponent bookkeeping that produced it:
/// element = x_{g_1}...x_{g_n} * A^{-(sum_D + 2*sum_pair_d)}.
struct PhiResult {
  SkeinElt element;
  Z4 sum_D;       // sum of D(K_i)
  Z4 sum_pair_d;  // sum over i<j of d(K_i,K_j)
};

/// Phi on case-II diagrams. Component order is immaterial (tested, not assumed).
PhiResult phi(const SurfaceModel&, const Diagram&);

/// Phi on case-I homological links; every component must carry a word, and the
/// attached backend must have omega = 0.
PhiResult phi(const GroupSpec&, const RhsData&, const HomLink&);

/// Psi(x_c): the crossingless zero-twist standard representative, which has
/// D = 0, so the scale is always the zero class. phi of the result is gen(c).
struct PsiResult {
  Diagram diagram;
  Z4 scale;
};
PsiResult psi(const GroupSpec&, const ClassRep&);

/// Link product, case II: the first factor is stacked above the second
/// (inter-crossings synthesized with the upper link over, |omega| crossings of
/// sign sgn(omega) per component pair). Equals mul(phi(L1), phi(L2)).
PhiResult skein_product(const SurfaceModel&, const Diagram& L1, const Diagram& L2);

/// Link product, case I: phi of the merged link scaled by
/// (-1)^{sum of pairwise d across the two factors}. cross_lk holds the
/// pairwise linking numbers between components of L1 (rows) and L2 (columns).
PhiResult skein_product(const GroupSpec&, const RhsData&, const HomLink& L1, const HomLink& L2,
                        const Mat<Frac>& cross_lk);

}  // namespace skein
