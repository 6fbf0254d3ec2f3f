#pragma once

#include <string>
#include <vector>

#include "skein/groups.hpp"

namespace skein {

/// Surface model for case (II): the group backend carries H_1(F,Z) and the
/// symplectic form. Valid kinds: torsion-free Abelian (torus, annulus), Free
/// (punctured surfaces), ClosedSurface.
using SurfaceModel = GroupSpec;
void validate_surface_model(const SurfaceModel&);

inline constexpr int kDefaultCrossingCap = 20;

/// One entry of a component's cyclic item sequence: a generator letter or a
/// pass through a crossing. `end` (0/1) is a stable label of which of the
/// crossing's two passes this is; it survives every rearrangement.
struct Item {
  i64 gen = 0;    // signed generator index when a letter
  int cross = -1; // crossing id when a pass
  int end = 0;

  bool is_pass() const { return cross >= 0; }
  static Item letter(i64 g) { return Item{g, -1, 0}; }
  static Item pass(int id, int end) { return Item{0, id, end}; }
  friend bool operator==(const Item&, const Item&) = default;
};

struct Component {
  int twists = 0;  // framing offset from the blackboard framing
  std::vector<Item> items;
  friend bool operator==(const Component&, const Component&) = default;
};

/// sign s = orientation sign of (over-strand tangent, under-strand tangent);
/// over_end designates the pass on top.
struct Crossing {
  int id = 0;
  int sign = 1;
  int over_end = 0;
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// Combinatorial framed link over a surface model: Gauss-code components with
/// framing twists plus a crossing table. Constrained by reference integrity
/// and the homology-consistency invariant, not geometric realizability.
struct Diagram {
  std::vector<Component> components;
  std::vector<Crossing> crossings;
  friend bool operator==(const Diagram&, const Diagram&) = default;
};

struct PassLoc {
  int comp = -1;
  int pos = -1;
};

/// Locations of the two passes of a crossing, indexed by end.
std::array<PassLoc, 2> locate_passes(const Diagram&, int cross_id);
const Crossing& crossing_by_id(const Diagram&, int cross_id);

/// Empty result means valid. Checks reference integrity and, for every
/// component pair, that the signed crossing sum matches omega of the classes.
std::vector<std::string> validate(const SurfaceModel&, const Diagram&);
void require_valid(const SurfaceModel&, const Diagram&);

/// The group element read off a component's letters.
Word component_word(const SurfaceModel&, const Diagram&, int comp);
/// Signed self-crossing count.
i64 writhe(const Diagram&, int comp);

/// Pairwise crossing statistics for components i != j (i listed first):
/// lk = (1/2) sum of signs, omega = sum of iota, d = (omega/2 mod 4) - lk.
struct InterStats {
  Frac lk;
  i64 omega = 0;
  Z4 d;
};
InterStats inter_stats(const Diagram&, int i, int j);
/// Same statistics with disjoint component groups in place of single components.
InterStats inter_stats_group(const Diagram&, const std::vector<int>& I, const std::vector<int>& J);
/// Independent route for d: signed count of crossings where the second
/// component passes over, mod 4.
Z4 d_over_count(const Diagram&, int i, int j);

/// Replaces component i by two blackboard-parallel copies (at indices i and
/// i+1); framing twists become explicit inter-copy crossings.
Diagram double_component(const Diagram&, int comp);
/// Doubles every component at once; component k maps to copies 2k, 2k+1.
Diagram double_all(const Diagram&);

/// D(K_i) = d(boundary_+, boundary_-) computed on the doubled diagram.
Z4 D_diagram(const Diagram&, int comp);

/// Swaps the over-pass and negates the sign. Involution.
Diagram crossing_change(const Diagram&, int cross_id);

/// Reverses the orientation of one component (letters inverted and reversed;
/// signs flip on crossings meeting the component exactly once).
Diagram reverse_component(const Diagram&, int comp);

enum class SmoothKind { A, B };

/// Calibration constant tying the A-smoothing to the reconnection kind: with
/// a positive crossing sign the A-smoothing is the orientation-respecting
/// reconnection. The D-identity and torus product suites pin this choice.
inline constexpr bool kPositiveSignMakesAOriented = true;

/// Kauffman smoothing: deletes the crossing and reconnects. With s = +1 kind A
/// is the orientation-respecting reconnection (and dually for s = -1). An
/// inter-component crossing merges the two components (class of gh for the
/// oriented reconnection, gh^-1 for the reversing one); a self-crossing splits
/// under the oriented reconnection.
Diagram smooth(const Diagram&, int cross_id, SmoothKind);

/// Removes every crossing-free component with identity word; each removed
/// component with t twists contributes a factor 2*A^t.
struct RemoveTrivialResult {
  Diagram diagram;
  CycCoeff factor;
};
RemoveTrivialResult remove_trivial(const SurfaceModel&, const Diagram&);

/// Kauffman state sum over all smoothings, with trivial-loop factors applied;
/// terms with structurally equal residual diagrams are merged.
struct ResolvedTerm {
  CycCoeff coeff;
  Diagram diagram;
};
std::vector<ResolvedTerm> resolve(const SurfaceModel&, const Diagram&, int crossing_cap = kDefaultCrossingCap);

}  // namespace skein
