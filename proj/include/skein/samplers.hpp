#pragma once

#include <cstdint>
#include <random>

#include "skein/diagrams.hpp"
#include "skein/linking.hpp"

namespace skein {

/// Deterministic RNG wrapper; avoids std distributions so that identical
/// seeds give identical streams on every platform.
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  std::uint64_t next() { return eng(); }
  i64 below(i64 n) { return n <= 1 ? 0 : static_cast<i64>(next() % static_cast<std::uint64_t>(n)); }
  i64 range(i64 lo, i64 hi) { return lo + below(hi - lo + 1); }  // inclusive
  int sign() { return below(2) ? 1 : -1; }
  bool coin() { return below(2) != 0; }
};

/// Random freely-reduced word with at most max_len letters.
Word random_word(const GroupSpec&, Rng&, int max_len = 4);
ClassRep random_class(const GroupSpec&, Rng&, int max_len = 4);

struct DiagramOpts {
  int min_components = 1;
  int max_components = 3;
  int max_letters = 3;      // word letters per component
  int max_extra_pairs = 1;  // canceling crossing pairs per component pair
  int max_self = 2;         // self-crossings per component
  int max_twists = 2;
};

/// Valid-by-construction random diagram: inter-component crossings realize
/// omega exactly (net crossings plus canceling pairs), self-crossings and
/// twists are unconstrained.
Diagram random_diagram(const SurfaceModel&, Rng&, const DiagramOpts& = {});

/// Random valid diagram all of whose one-step smoothings are valid diagrams
/// (the population for the skein-invariance and crossing-switch suites).
/// Self-crossing splits of virtual diagrams can break the homology invariant;
/// geometric diagrams never do, and rejection keeps exactly that subclass.
Diagram random_smoothable_diagram(const SurfaceModel&, Rng&, const DiagramOpts& = {});

/// Random RhsData with at most max_factors odd cyclic orders <= max_order and
/// a valid symmetric linking form.
RhsData random_rhs(Rng&, int max_factors = 4, i64 max_order = 99);

/// Random HomLink over the data, congruent lk/frames; words attached over the
/// given backend when provided.
HomLink random_homlink(const RhsData&, Rng&, int components, const GroupSpec* word_backend = nullptr,
                       int max_word_len = 3);

/// Pairwise linking numbers congruent to the form, for skein_product inputs.
Mat<Frac> random_cross_lk(const RhsData&, const HomLink&, const HomLink&, Rng&);

}  // namespace skein
