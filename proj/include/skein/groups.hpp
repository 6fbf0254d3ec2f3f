#pragma once

#include <Eigen/Core>
#include <compare>
#include <vector>

#include "skein/ring.hpp"

namespace skein {

using IntVec = Eigen::Matrix<i64, Eigen::Dynamic, 1>;
using IntMat = Eigen::Matrix<i64, Eigen::Dynamic, Eigen::Dynamic>;

template <class Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

enum class GroupKind { Abelian, Free, ClosedSurface };

/// Group backend: word arithmetic, ~-class canonical forms (conjugation plus
/// inversion), homology classes and the skew form omega on them.
///
/// Kinds:
///  - Abelian: Z^free_rank x Z/n_1 x ... (all n_i odd, >= 3), optional omega
///    on the free part (the torus is abelian(2) with the standard symplectic form);
///  - Free: rank n >= 1, omega skew on Z^n (punctured surfaces) or zero;
///  - ClosedSurface: genus g >= 2, standard symplectic omega on Z^2g with
///    generators a_1, b_1, ..., a_g, b_g.
struct GroupSpec {
  GroupKind kind = GroupKind::Abelian;
  int free_rank = 0;            // Abelian
  std::vector<i64> torsion;     // Abelian: odd orders >= 3
  int rank = 0;                 // Free
  int genus = 0;                // ClosedSurface
  IntMat omega;                 // skew form on the free homology coordinates

  static GroupSpec abelian(int free_rank, std::vector<i64> torsion = {});
  static GroupSpec abelian(int free_rank, std::vector<i64> torsion, IntMat omega);
  static GroupSpec free_group(int rank);
  static GroupSpec free_group(int rank, IntMat omega);
  static GroupSpec closed_surface(int genus);
  /// Abelian Z^2 with the standard symplectic form; the torus surface model.
  static GroupSpec torus();

  /// Number of generator letters in words over this backend.
  int generators() const;
  /// Number of free homology coordinates (the domain of omega).
  int hom_rank() const;
  bool omega_zero() const { return omega.isZero(); }

  friend bool operator==(const GroupSpec& a, const GroupSpec& b);
};

/// The standard symplectic matrix on 2g coordinates (a_i, b_i pairs).
IntMat symplectic_form(int pairs);

/// Group element. Abelian: exponent vector (free exponents, then torsion
/// residues in [0,n_i)). Free/ClosedSurface: freely reduced letter sequence,
/// letters are signed generator indices (1-based).
struct Word {
  std::vector<i64> data;
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;
  bool empty() const { return data.empty(); }
};

Word identity_word(const GroupSpec&);
/// Builds a word from a letter sequence (valid for every backend; abelian
/// letters accumulate into the exponent vector).
Word word_from_letters(const GroupSpec&, const std::vector<i64>& letters);
/// Abelian only: builds a word from an exponent vector.
Word word_from_exponents(const GroupSpec&, const std::vector<i64>& exps);
void validate_word(const GroupSpec&, const Word&);

Word mul(const GroupSpec&, const Word&, const Word&);
Word inv(const GroupSpec&, const Word&);
bool is_identity(const GroupSpec&, const Word&);

/// Class in H = G/[G,G]: free part plus torsion residues.
struct HomClass {
  IntVec free_part;
  std::vector<i64> torsion_part;
};
HomClass homology(const GroupSpec&, const Word&);

/// omega([g],[h]) through the backend's matrix; skew-symmetric, bilinear.
i64 omega_form(const GroupSpec&, const Word& g, const Word& h);

/// Canonical representative of a ~-class (g ~ h iff g or g^-1 is conjugate
/// to h). `reliable` is false only for ClosedSurface words whose cyclic
/// Dehn-reduced form has length exactly half the relator (or whose half-swap
/// closure overflows); such canonical forms may not separate all classes.
struct ClassRep {
  Word word;
  bool reliable = true;
  friend bool operator==(const ClassRep&, const ClassRep&) = default;
};

ClassRep class_rep(const GroupSpec&, const Word&);

}  // namespace skein
