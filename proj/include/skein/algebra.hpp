#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "skein/groups.hpp"

namespace skein {

inline constexpr std::uint64_t kDefaultSeed = 271828;
inline constexpr i64 kTracePrime = 10007;
inline constexpr int kTraceAssignments = 20;

/// Orders skein terms with the lexicographically larger class word first;
/// matches the rendering order of the JSON interface.
struct WordDescOrder {
  bool operator()(const Word& a, const Word& b) const { return b.data < a.data; }
};

/// Element of S_omega(G,R,A) in the span of {1} u {x_c}: a unit coefficient
/// plus finitely many class terms. x_e is always folded into the unit (x_e = 2)
/// and zero coefficients are never stored.
struct SkeinElt {
  GroupSpec group;
  CycCoeff unit;
  std::map<Word, CycCoeff, WordDescOrder> terms;
  /// True when some term key came from an unreliable canonicalization
  /// (ClosedSurface edge case); formal equality is then representative-level.
  bool unreliable_keys = false;
};

SkeinElt elt_zero(const GroupSpec&);
SkeinElt elt_scalar(const GroupSpec&, CycCoeff);
/// The generator x_c; gen of the identity class is the scalar 2.
SkeinElt gen(const GroupSpec&, const ClassRep&);
SkeinElt gen(const GroupSpec&, const Word&);

SkeinElt add(const SkeinElt&, const SkeinElt&);
SkeinElt scale(const SkeinElt&, CycCoeff);
/// Bilinear extension of x_g x_h = A^omega(g,h) x_{gh} + A^-omega(g,h) x_{gh^-1}.
SkeinElt mul(const SkeinElt&, const SkeinElt&);

bool formal_eq(const SkeinElt&, const SkeinElt&);

enum class Eq { Equal, ProbablyEqual, Unequal, UnequalFormal };

/// Equality oracle. Abelian backends decide exactly (the spanning set is a
/// basis there). Free backends with omega = 0 fall back to the trace oracle;
/// nonzero omega with distinct formal forms reports UnequalFormal.
Eq eq(const SkeinElt&, const SkeinElt&, std::uint64_t seed = kDefaultSeed,
      int assignments = kTraceAssignments, i64 prime = kTracePrime);

/// The torsion-free abelian backend H = G/[G,G] with the same omega.
GroupSpec abelianized_spec(const GroupSpec&);
/// Image under the algebra homomorphism S_omega(G) -> S_omega(G/[G,G]),
/// x_g -> x_[g]. Exact and formally decidable on the target.
SkeinElt abelianized(const SkeinElt&);

/// One 2x2 determinant-1 matrix mod p per generator.
struct TraceAssignment {
  i64 p = kTracePrime;
  std::vector<std::array<i64, 4>> mats;  // row-major a,b,c,d
};

TraceAssignment random_trace_assignment(const GroupSpec&, std::uint64_t seed, i64 prime = kTracePrime);

/// Algebra homomorphism x_g -> tr(rho(g)) at the specialization A -> 1,
/// for Free backends with omega = 0.
i64 trace_eval(const SkeinElt&, const TraceAssignment&);

}  // namespace skein
