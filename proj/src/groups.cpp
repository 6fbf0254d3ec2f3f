#include "skein/groups.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace skein {

namespace {

void check_skew(const IntMat& m, int n) {
  if (m.rows() != n || m.cols() != n)
    throw std::invalid_argument("GroupSpec: omega must be " + std::to_string(n) + "x" + std::to_string(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (m(i, j) != -m(j, i))
        throw std::invalid_argument("GroupSpec: omega must be skew-symmetric");
}

void check_torsion(const std::vector<i64>& torsion) {
  for (i64 n : torsion)
    if (n < 3 || n % 2 == 0)
      throw std::invalid_argument("GroupSpec: torsion orders must be odd integers >= 3, got " + std::to_string(n));
}

}  // namespace

GroupSpec GroupSpec::abelian(int free_rank, std::vector<i64> torsion) {
  return abelian(free_rank, std::move(torsion), IntMat::Zero(free_rank, free_rank));
}

GroupSpec GroupSpec::abelian(int free_rank, std::vector<i64> torsion, IntMat omega) {
  if (free_rank < 0) throw std::invalid_argument("GroupSpec: free_rank must be >= 0");
  check_torsion(torsion);
  check_skew(omega, free_rank);
  GroupSpec s;
  s.kind = GroupKind::Abelian;
  s.free_rank = free_rank;
  s.torsion = std::move(torsion);
  s.omega = std::move(omega);
  return s;
}

GroupSpec GroupSpec::free_group(int rank) { return free_group(rank, IntMat::Zero(rank, rank)); }

GroupSpec GroupSpec::free_group(int rank, IntMat omega) {
  if (rank < 1) throw std::invalid_argument("GroupSpec: free rank must be >= 1");
  check_skew(omega, rank);
  GroupSpec s;
  s.kind = GroupKind::Free;
  s.rank = rank;
  s.omega = std::move(omega);
  return s;
}

GroupSpec GroupSpec::closed_surface(int genus) {
  if (genus < 2) throw std::invalid_argument("GroupSpec: surface genus must be >= 2");
  GroupSpec s;
  s.kind = GroupKind::ClosedSurface;
  s.genus = genus;
  s.omega = symplectic_form(genus);
  return s;
}

GroupSpec GroupSpec::torus() { return abelian(2, {}, symplectic_form(1)); }

IntMat symplectic_form(int pairs) {
  IntMat m = IntMat::Zero(2 * pairs, 2 * pairs);
  for (int i = 0; i < pairs; ++i) {
    m(2 * i, 2 * i + 1) = 1;
    m(2 * i + 1, 2 * i) = -1;
  }
  return m;
}

int GroupSpec::generators() const {
  switch (kind) {
    case GroupKind::Abelian: return free_rank + static_cast<int>(torsion.size());
    case GroupKind::Free: return rank;
    default: return 2 * genus;
  }
}

int GroupSpec::hom_rank() const {
  switch (kind) {
    case GroupKind::Abelian: return free_rank;
    case GroupKind::Free: return rank;
    default: return 2 * genus;
  }
}

bool operator==(const GroupSpec& a, const GroupSpec& b) {
  return a.kind == b.kind && a.free_rank == b.free_rank && a.torsion == b.torsion &&
         a.rank == b.rank && a.genus == b.genus && a.omega.rows() == b.omega.rows() &&
         a.omega == b.omega;
}

// --- words -----------------------------------------------------------------

namespace {

void normalize_abelian(const GroupSpec& s, std::vector<i64>& exps) {
  for (size_t t = 0; t < s.torsion.size(); ++t) {
    i64 n = s.torsion[t];
    i64& e = exps[s.free_rank + t];
    e %= n;
    if (e < 0) e += n;
  }
}

std::vector<i64> free_reduce(const std::vector<i64>& letters) {
  std::vector<i64> out;
  out.reserve(letters.size());
  for (i64 l : letters) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

void check_letters(const GroupSpec& s, const std::vector<i64>& letters) {
  int n = s.generators();
  for (i64 l : letters)
    if (l == 0 || l > n || l < -n)
      throw std::out_of_range("Word: generator index " + std::to_string(l) + " out of range for backend with " +
                              std::to_string(n) + " generators");
}

// Letter order a_1 < a_1^-1 < a_2 < a_2^-1 < ...
i64 letter_key(i64 l) { return l > 0 ? 2 * (l - 1) : 2 * (-l - 1) + 1; }

bool key_less(const std::vector<i64>& a, const std::vector<i64>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](i64 x, i64 y) { return letter_key(x) < letter_key(y); });
}

std::vector<i64> invert_letters(const std::vector<i64>& w) {
  std::vector<i64> out(w.rbegin(), w.rend());
  for (i64& l : out) l = -l;
  return out;
}

std::vector<i64> cyclic_free_reduce(std::vector<i64> w) {
  w = free_reduce(w);
  while (w.size() >= 2 && w.front() == -w.back()) {
    w.erase(w.begin());
    w.pop_back();
  }
  return w;
}

// Lex-min rotation of a cyclic word under the letter order.
std::vector<i64> min_rotation(const std::vector<i64>& w) {
  if (w.empty()) return w;
  std::vector<i64> best = w;
  std::vector<i64> rot = w;
  for (size_t k = 1; k < w.size(); ++k) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (key_less(rot, best)) best = rot;
  }
  return best;
}

// --- closed-surface relator machinery --------------------------------------

// Relator a_1 b_1 a_1^-1 b_1^-1 ... a_g b_g a_g^-1 b_g^-1 with a_i = 2i-1, b_i = 2i.
std::vector<i64> surface_relator(int genus) {
  std::vector<i64> r;
  r.reserve(4 * genus);
  for (int i = 1; i <= genus; ++i) {
    i64 a = 2 * i - 1, b = 2 * i;
    r.insert(r.end(), {a, b, -a, -b});
  }
  return r;
}

// All rotations of the relator and of its inverse.
std::vector<std::vector<i64>> relator_variants(int genus) {
  std::vector<std::vector<i64>> vs;
  std::vector<i64> r = surface_relator(genus);
  std::vector<i64> ri = invert_letters(r);
  for (size_t k = 0; k < r.size(); ++k) {
    vs.push_back(r);
    vs.push_back(ri);
    std::rotate(r.begin(), r.begin() + 1, r.end());
    std::rotate(ri.begin(), ri.begin() + 1, ri.end());
  }
  return vs;
}

size_t match_len(const std::vector<i64>& w, size_t pos, const std::vector<i64>& v, size_t cap) {
  size_t m = 0;
  while (m < cap && pos + m < w.size() && w[pos + m] == v[m]) ++m;
  return m;
}

// Dehn's algorithm on a linear word: replace any relator subword longer than
// half the relator by the inverse of its complement, until none is left.
std::vector<i64> dehn_reduce_linear(int genus, std::vector<i64> w) {
  const auto variants = relator_variants(genus);
  const size_t L = 4 * static_cast<size_t>(genus);
  w = free_reduce(w);
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t pos = 0; pos < w.size() && !changed; ++pos) {
      for (const auto& v : variants) {
        size_t m = match_len(w, pos, v, L);
        if (2 * m > L) {
          std::vector<i64> t(v.begin() + m, v.end());
          std::vector<i64> rep = invert_letters(t);
          std::vector<i64> next(w.begin(), w.begin() + pos);
          next.insert(next.end(), rep.begin(), rep.end());
          next.insert(next.end(), w.begin() + pos + m, w.end());
          w = free_reduce(next);
          changed = true;
          break;
        }
      }
    }
  }
  return w;
}

// One full pass of cyclic Dehn reduction; treats w as a cyclic word.
// Returns true if a replacement happened (w updated and re-reduced).
bool cyclic_dehn_step(const std::vector<std::vector<i64>>& variants, size_t L, std::vector<i64>& w) {
  if (w.empty()) return false;
  std::vector<i64> wd = w;
  wd.insert(wd.end(), w.begin(), w.end());
  size_t cap = std::min(L, w.size());
  for (size_t pos = 0; pos < w.size(); ++pos) {
    for (const auto& v : variants) {
      size_t m = match_len(wd, pos, v, cap);
      if (2 * m > L) {
        std::vector<i64> t(v.begin() + m, v.end());
        std::vector<i64> next = invert_letters(t);
        // remaining cyclic part after the matched subword
        for (size_t k = pos + m; k < pos + w.size(); ++k) next.push_back(wd[k]);
        w = cyclic_free_reduce(next);
        return true;
      }
    }
  }
  return false;
}

std::vector<i64> cyclic_dehn_reduce(const std::vector<std::vector<i64>>& variants, size_t L, std::vector<i64> w) {
  w = cyclic_free_reduce(w);
  while (cyclic_dehn_step(variants, L, w)) {
  }
  return w;
}

// Words reachable from cyclic word w by replacing an exact-half relator
// subword with the inverse of its complement (length preserving).
std::vector<std::vector<i64>> half_swaps(const std::vector<std::vector<i64>>& variants, size_t L,
                                          const std::vector<i64>& w) {
  std::vector<std::vector<i64>> out;
  if (w.size() < L / 2) return out;
  std::vector<i64> wd = w;
  wd.insert(wd.end(), w.begin(), w.end());
  size_t cap = std::min(L, w.size());
  for (size_t pos = 0; pos < w.size(); ++pos) {
    for (const auto& v : variants) {
      size_t m = match_len(wd, pos, v, cap);
      if (2 * m == L) {
        std::vector<i64> t(v.begin() + m, v.end());
        std::vector<i64> next = invert_letters(t);
        for (size_t k = pos + m; k < pos + w.size(); ++k) next.push_back(wd[k]);
        out.push_back(cyclic_free_reduce(next));
      }
    }
  }
  return out;
}

constexpr size_t kSwapClosureCap = 4096;

ClassRep surface_class_rep(const GroupSpec& s, const Word& g) {
  const auto variants = relator_variants(s.genus);
  const size_t L = 4 * static_cast<size_t>(s.genus);
  std::vector<i64> w = cyclic_dehn_reduce(variants, L, g.data);
  bool capped = false;

  // Closure under length-preserving half-relator swaps; rotation-canonical
  // keys dedupe nodes. A swap result that got shorter restarts the reduction.
  std::set<std::vector<i64>> closure;
  std::vector<std::vector<i64>> queue;
restart:
  closure.clear();
  queue.clear();
  closure.insert(min_rotation(w));
  queue.push_back(min_rotation(w));
  while (!queue.empty()) {
    std::vector<i64> cur = queue.back();
    queue.pop_back();
    for (auto& nxt : half_swaps(variants, L, cur)) {
      std::vector<i64> reduced = cyclic_dehn_reduce(variants, L, nxt);
      if (reduced.size() < w.size()) {
        w = reduced;
        goto restart;
      }
      auto key = min_rotation(nxt);
      if (closure.insert(key).second) {
        if (closure.size() > kSwapClosureCap) {
          capped = true;
          queue.clear();
          break;
        }
        queue.push_back(key);
      }
    }
  }

  std::vector<i64> best;
  bool have = false;
  for (const auto& node : closure) {
    for (const auto& cand : {node, min_rotation(invert_letters(node))}) {
      if (!have || key_less(cand, best)) {
        best = cand;
        have = true;
      }
    }
  }
  bool reliable = !capped && best.size() != L / 2;
  return {Word{best}, reliable};
}

}  // namespace

Word identity_word(const GroupSpec& s) {
  if (s.kind == GroupKind::Abelian) return Word{std::vector<i64>(s.generators(), 0)};
  return Word{};
}

Word word_from_letters(const GroupSpec& s, const std::vector<i64>& letters) {
  check_letters(s, letters);
  if (s.kind == GroupKind::Abelian) {
    std::vector<i64> exps(s.generators(), 0);
    for (i64 l : letters) exps[(l > 0 ? l : -l) - 1] += (l > 0 ? 1 : -1);
    normalize_abelian(s, exps);
    return Word{std::move(exps)};
  }
  return Word{free_reduce(letters)};
}

Word word_from_exponents(const GroupSpec& s, const std::vector<i64>& exps) {
  if (s.kind != GroupKind::Abelian)
    throw std::invalid_argument("Word: exponent vectors are only meaningful for abelian backends");
  if (exps.size() != static_cast<size_t>(s.generators()))
    throw std::invalid_argument("Word: exponent vector length " + std::to_string(exps.size()) +
                                " does not match " + std::to_string(s.generators()) + " generators");
  std::vector<i64> e = exps;
  normalize_abelian(s, e);
  return Word{std::move(e)};
}

void validate_word(const GroupSpec& s, const Word& w) {
  if (s.kind == GroupKind::Abelian) {
    if (w.data.size() != static_cast<size_t>(s.generators()))
      throw std::invalid_argument("Word: abelian word length mismatch");
    for (size_t t = 0; t < s.torsion.size(); ++t) {
      i64 e = w.data[s.free_rank + t];
      if (e < 0 || e >= s.torsion[t]) throw std::invalid_argument("Word: torsion coordinate out of range");
    }
    return;
  }
  check_letters(s, w.data);
}

Word mul(const GroupSpec& s, const Word& g, const Word& h) {
  validate_word(s, g);
  validate_word(s, h);
  if (s.kind == GroupKind::Abelian) {
    std::vector<i64> e(g.data.size());
    for (size_t i = 0; i < e.size(); ++i) e[i] = g.data[i] + h.data[i];
    normalize_abelian(s, e);
    return Word{std::move(e)};
  }
  std::vector<i64> cat = g.data;
  cat.insert(cat.end(), h.data.begin(), h.data.end());
  return Word{free_reduce(cat)};
}

Word inv(const GroupSpec& s, const Word& g) {
  validate_word(s, g);
  if (s.kind == GroupKind::Abelian) {
    std::vector<i64> e = g.data;
    for (i64& x : e) x = -x;
    normalize_abelian(s, e);
    return Word{std::move(e)};
  }
  return Word{invert_letters(g.data)};
}

bool is_identity(const GroupSpec& s, const Word& g) {
  validate_word(s, g);
  switch (s.kind) {
    case GroupKind::Abelian:
      return std::all_of(g.data.begin(), g.data.end(), [](i64 e) { return e == 0; });
    case GroupKind::Free:
      return free_reduce(g.data).empty();
    default:
      return dehn_reduce_linear(s.genus, g.data).empty();
  }
}

HomClass homology(const GroupSpec& s, const Word& g) {
  validate_word(s, g);
  HomClass h;
  h.free_part = IntVec::Zero(s.hom_rank());
  if (s.kind == GroupKind::Abelian) {
    for (int i = 0; i < s.free_rank; ++i) h.free_part(i) = g.data[i];
    h.torsion_part.assign(g.data.begin() + s.free_rank, g.data.end());
    return h;
  }
  for (i64 l : g.data) h.free_part((l > 0 ? l : -l) - 1) += (l > 0 ? 1 : -1);
  return h;
}

i64 omega_form(const GroupSpec& s, const Word& g, const Word& h) {
  IntVec a = homology(s, g).free_part;
  IntVec b = homology(s, h).free_part;
  return a.dot(s.omega * b);
}

ClassRep class_rep(const GroupSpec& s, const Word& g) {
  validate_word(s, g);
  switch (s.kind) {
    case GroupKind::Abelian: {
      // Between v and -v keep the lexicographically larger exponent vector.
      Word neg = inv(s, g);
      return {std::max(g.data, neg.data) == g.data ? g : neg, true};
    }
    case GroupKind::Free: {
      std::vector<i64> w = cyclic_free_reduce(g.data);
      std::vector<i64> best = min_rotation(w);
      std::vector<i64> ib = min_rotation(invert_letters(w));
      if (key_less(ib, best)) best = ib;
      return {Word{best}, true};
    }
    default:
      return surface_class_rep(s, g);
  }
}

}  // namespace skein
