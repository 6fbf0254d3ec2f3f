#pragma once

#include <optional>

#include "skein/groups.hpp"

namespace skein {

/// Rational-homology-sphere data: odd cyclic decomposition of H_1(N,Z) and
/// the linking form on it, with values in (1/r)Z/Z as reduced fractions in [0,1).
struct RhsData {
  std::vector<i64> torsion;  // n_1, ..., n_k, all odd >= 3
  Mat<Frac> lf;              // k x k symmetric

  static RhsData sphere();   // H = 0: empty torsion, trivial form
  /// Least common multiple annihilator of the torsion part (1 when empty).
  i64 annihilator() const;
  void validate() const;
};

/// Lifts lf to a symmetric bilinear form valued in (1/r)Z/4Z. For an
/// entry k/l the lift is (k + delta*l)/l with delta = -k*l^{-1} mod 4, the
/// unique delta in {0,..,3} with k + delta*l = 0 mod 4.
Mat<QuarterFrac> lift_linking_form(const RhsData&);

/// lf-hat on classes: sum_i sum_j a_i b_j lift(i,j).
QuarterFrac lf_hat(const Mat<QuarterFrac>& lift, const std::vector<i64>& a, const std::vector<i64>& b);
/// The unlifted form value mod Z, used for congruence validation.
Frac lf_value(const RhsData&, const std::vector<i64>& a, const std::vector<i64>& b);

/// Homologically presented framed link in a submanifold of the sphere data.
struct HomLinkComponent {
  std::vector<i64> hom_class;   // residues mod torsion orders
  std::optional<Word> word;     // pi_1 class, required by phi
  Frac frame;                   // lk(boundary copies) in (1/r)Z
};

struct HomLink {
  std::vector<HomLinkComponent> components;
  Mat<Frac> lk;  // n x n symmetric, zero diagonal, entries in (1/r)Z
};

void validate_homlink(const RhsData&, const HomLink&);

/// d(K_i,K_j) = lf-hat([K_i],[K_j]) - lk(i,j); throws on congruence violation.
Z4 d_case1(const RhsData&, const HomLink&, int i, int j);
/// D(K_i) = lf-hat([K_i],[K_i]) - frame_i.
Z4 D_case1(const RhsData&, const HomLink&, int i);

/// d(boundary_+ L, boundary_- L) for the splitting selected by the bit mask
/// (bit k picks which parallel copy of component k joins boundary_+), computed
/// from the doubled 2n-component class/lk data; the value does not depend on
/// the mask.
Z4 split_d(const RhsData&, const HomLink&, std::uint32_t splitting);

}  // namespace skein
