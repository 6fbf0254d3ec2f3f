#include "skein/diagrams.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace skein {

void validate_surface_model(const SurfaceModel& m) {
  if (m.kind == GroupKind::Abelian && !m.torsion.empty())
    throw std::invalid_argument("SurfaceModel: abelian surface homology is torsion-free");
}

std::array<PassLoc, 2> locate_passes(const Diagram& d, int cross_id) {
  std::array<PassLoc, 2> loc;
  for (int c = 0; c < static_cast<int>(d.components.size()); ++c) {
    const auto& items = d.components[c].items;
    for (int p = 0; p < static_cast<int>(items.size()); ++p) {
      if (items[p].is_pass() && items[p].cross == cross_id) {
        if (items[p].end < 0 || items[p].end > 1 || loc[items[p].end].comp >= 0)
          throw std::invalid_argument("Diagram: malformed pass ends for crossing " + std::to_string(cross_id));
        loc[items[p].end] = {c, p};
      }
    }
  }
  if (loc[0].comp < 0 || loc[1].comp < 0)
    throw std::invalid_argument("Diagram: crossing " + std::to_string(cross_id) + " is not referenced twice");
  return loc;
}

const Crossing& crossing_by_id(const Diagram& d, int cross_id) {
  for (const auto& c : d.crossings)
    if (c.id == cross_id) return c;
  throw std::invalid_argument("Diagram: unknown crossing id " + std::to_string(cross_id));
}

Word component_word(const SurfaceModel& m, const Diagram& d, int comp) {
  std::vector<i64> letters;
  for (const auto& it : d.components[comp].items)
    if (!it.is_pass()) letters.push_back(it.gen);
  return word_from_letters(m, letters);
}

i64 writhe(const Diagram& d, int comp) {
  i64 w = 0;
  for (const auto& c : d.crossings) {
    auto loc = locate_passes(d, c.id);
    if (loc[0].comp == comp && loc[1].comp == comp) w += c.sign;
  }
  return w;
}

std::vector<std::string> validate(const SurfaceModel& m, const Diagram& d) {
  std::vector<std::string> errs;
  try {
    validate_surface_model(m);
  } catch (const std::exception& e) {
    errs.push_back(e.what());
    return errs;
  }

  std::set<int> ids;
  for (size_t i = 0; i < d.crossings.size(); ++i) {
    const auto& c = d.crossings[i];
    if (c.id < 0) errs.push_back("crossings[" + std::to_string(i) + "]: id must be nonnegative");
    if (!ids.insert(c.id).second) errs.push_back("crossings[" + std::to_string(i) + "]: duplicate id");
    if (c.sign != 1 && c.sign != -1) errs.push_back("crossings[" + std::to_string(i) + "]: sign must be +-1");
    if (c.over_end != 0 && c.over_end != 1) errs.push_back("crossings[" + std::to_string(i) + "]: bad over pass");
  }

  std::map<int, std::array<int, 2>> seen;  // id -> count per end
  const int ngen = m.generators();
  for (size_t k = 0; k < d.components.size(); ++k) {
    for (size_t p = 0; p < d.components[k].items.size(); ++p) {
      const Item& it = d.components[k].items[p];
      std::string at = "components[" + std::to_string(k) + "].items[" + std::to_string(p) + "]";
      if (it.is_pass()) {
        if (!ids.count(it.cross)) {
          errs.push_back(at + ": dangling crossing reference " + std::to_string(it.cross));
          continue;
        }
        if (it.end != 0 && it.end != 1) {
          errs.push_back(at + ": bad pass end");
          continue;
        }
        seen[it.cross][it.end]++;
      } else if (it.gen == 0 || it.gen > ngen || it.gen < -ngen) {
        errs.push_back(at + ": generator index out of range");
      }
    }
  }
  for (int id : ids) {
    auto counts = seen.count(id) ? seen[id] : std::array<int, 2>{0, 0};
    if (counts[0] != 1 || counts[1] != 1)
      errs.push_back("crossings: id " + std::to_string(id) + " must be referenced exactly twice");
  }
  if (!errs.empty()) return errs;

  // Homology consistency: signed crossing sums realize omega exactly.
  const int n = static_cast<int>(d.components.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      i64 want = omega_form(m, component_word(m, d, i), component_word(m, d, j));
      i64 got = inter_stats(d, i, j).omega;
      if (want != got)
        errs.push_back("components " + std::to_string(i) + "," + std::to_string(j) +
                       ": signed crossing sum " + std::to_string(got) + " does not realize omega = " +
                       std::to_string(want));
    }
  }
  return errs;
}

void require_valid(const SurfaceModel& m, const Diagram& d) {
  auto errs = validate(m, d);
  if (!errs.empty()) throw std::invalid_argument("Diagram: " + errs.front());
}

InterStats inter_stats(const Diagram& d, int i, int j) {
  return inter_stats_group(d, {i}, {j});
}

InterStats inter_stats_group(const Diagram& d, const std::vector<int>& I, const std::vector<int>& J) {
  auto in = [](const std::vector<int>& set, int c) { return std::find(set.begin(), set.end(), c) != set.end(); };
  i64 sign_sum = 0, iota_sum = 0;
  for (const auto& c : d.crossings) {
    auto loc = locate_passes(d, c.id);
    int c0 = loc[0].comp, c1 = loc[1].comp;
    bool fwd = in(I, c0) && in(J, c1);
    bool bwd = in(I, c1) && in(J, c0);
    if (!fwd && !bwd) continue;
    if (fwd && bwd) throw std::invalid_argument("inter_stats: component groups overlap");
    sign_sum += c.sign;
    int over_comp = loc[c.over_end].comp;
    iota_sum += in(I, over_comp) ? c.sign : -c.sign;
  }
  InterStats s;
  s.lk = Frac(sign_sum, 2);
  s.omega = iota_sum;
  s.d = (QuarterFrac(iota_sum, 2) - QuarterFrac(s.lk)).as_z4();
  return s;
}

Z4 d_over_count(const Diagram& d, int i, int j) {
  i64 sum = 0;
  for (const auto& c : d.crossings) {
    auto loc = locate_passes(d, c.id);
    int c0 = loc[0].comp, c1 = loc[1].comp;
    if (!((c0 == i && c1 == j) || (c0 == j && c1 == i))) continue;
    if (loc[c.over_end].comp == j) sum += -c.sign;  // iota of a j-over crossing
  }
  return Z4(sum);
}

// --- doubling ----------------------------------------------------------------

namespace {

Diagram double_components(const Diagram& d, const std::vector<bool>& doubled) {
  Diagram out;
  int next_id = 0;
  // [original crossing id][end][copy flavor] -> passes to emit, in order
  std::map<int, std::array<std::array<std::vector<std::pair<int, int>>, 2>, 2>> expand;

  for (const auto& c : d.crossings) {
    auto loc = locate_passes(d, c.id);
    int u = loc[0].comp, v = loc[1].comp;
    auto& exp = expand[c.id];
    if (u != v) {
      int fu_count = doubled[u] ? 2 : 1;
      int fv_count = doubled[v] ? 2 : 1;
      for (int fu = 0; fu < fu_count; ++fu) {
        for (int fv = 0; fv < fv_count; ++fv) {
          int id = next_id++;
          out.crossings.push_back({id, c.sign, c.over_end});
          exp[0][fu].push_back({id, 0});
          exp[1][fv].push_back({id, 1});
        }
      }
    } else if (!doubled[u]) {
      int id = next_id++;
      out.crossings.push_back({id, c.sign, c.over_end});
      exp[0][0].push_back({id, 0});
      exp[1][0].push_back({id, 1});
    } else {
      // A doubled self-crossing: one self-crossing per copy plus two
      // inter-copy crossings whose over strands alternate between the copies.
      int alpha = c.over_end, beta = 1 - alpha;
      int pp = next_id++;
      out.crossings.push_back({pp, c.sign, c.over_end});
      exp[alpha][0].push_back({pp, alpha});
      exp[beta][0].push_back({pp, beta});
      int mm = next_id++;
      out.crossings.push_back({mm, c.sign, c.over_end});
      exp[alpha][1].push_back({mm, alpha});
      exp[beta][1].push_back({mm, beta});
      int x1 = next_id++;  // over strand of copy P above the under strand of M
      out.crossings.push_back({x1, c.sign, 0});
      exp[alpha][0].push_back({x1, 0});
      exp[beta][1].push_back({x1, 1});
      int x2 = next_id++;  // over strand of copy M above the under strand of P
      out.crossings.push_back({x2, c.sign, 0});
      exp[alpha][1].push_back({x2, 0});
      exp[beta][0].push_back({x2, 1});
    }
  }

  for (int k = 0; k < static_cast<int>(d.components.size()); ++k) {
    const Component& src = d.components[k];
    int flavors = doubled[k] ? 2 : 1;
    std::vector<Component> copies;
    for (int f = 0; f < flavors; ++f) {
      Component comp;
      comp.twists = src.twists;
      for (const Item& it : src.items) {
        if (!it.is_pass()) {
          comp.items.push_back(it);
          continue;
        }
        for (auto [id, end] : expand[it.cross][it.end][f]) comp.items.push_back(Item::pass(id, end));
      }
      copies.push_back(std::move(comp));
    }
    if (doubled[k] && src.twists != 0) {
      // 2|t| inter-copy crossings of sign sgn(t), over assignment alternating
      int t = src.twists;
      int sgn = t > 0 ? 1 : -1;
      for (int j = 0; j < 2 * std::abs(t); ++j) {
        int id = next_id++;
        out.crossings.push_back({id, sgn, j % 2});
        copies[0].items.push_back(Item::pass(id, 0));
        copies[1].items.push_back(Item::pass(id, 1));
      }
    }
    for (auto& comp : copies) out.components.push_back(std::move(comp));
  }
  return out;
}

}  // namespace

Diagram double_component(const Diagram& d, int comp) {
  std::vector<bool> flags(d.components.size(), false);
  flags.at(comp) = true;
  return double_components(d, flags);
}

Diagram double_all(const Diagram& d) {
  return double_components(d, std::vector<bool>(d.components.size(), true));
}

Z4 D_diagram(const Diagram& d, int comp) {
  Diagram dd = double_component(d, comp);
  return inter_stats(dd, comp, comp + 1).d;
}

Diagram crossing_change(const Diagram& d, int cross_id) {
  Diagram out = d;
  for (auto& c : out.crossings) {
    if (c.id == cross_id) {
      c.over_end = 1 - c.over_end;
      c.sign = -c.sign;
      return out;
    }
  }
  throw std::invalid_argument("crossing_change: unknown crossing id " + std::to_string(cross_id));
}

namespace {

std::vector<Item> reverse_inverse(std::vector<Item> seq) {
  std::reverse(seq.begin(), seq.end());
  for (Item& it : seq)
    if (!it.is_pass()) it.gen = -it.gen;
  return seq;
}

// Flips crossing signs for crossings meeting the pass multiset exactly once.
void flip_signs_for_reversed(Diagram& d, const std::vector<Item>& reversed_items, int skip_id = -1) {
  std::map<int, int> count;
  for (const Item& it : reversed_items)
    if (it.is_pass()) count[it.cross]++;
  for (auto& c : d.crossings)
    if (c.id != skip_id && count.count(c.id) && count[c.id] == 1) c.sign = -c.sign;
}

// Items of a component following the pass at `pos` cyclically, pass excluded.
std::vector<Item> rotated_without(const std::vector<Item>& items, int pos) {
  std::vector<Item> out;
  const int n = static_cast<int>(items.size());
  out.reserve(n - 1);
  for (int k = 1; k < n; ++k) out.push_back(items[(pos + k) % n]);
  return out;
}

}  // namespace

Diagram reverse_component(const Diagram& d, int comp) {
  Diagram out = d;
  flip_signs_for_reversed(out, d.components[comp].items);
  out.components[comp].items = reverse_inverse(d.components[comp].items);
  return out;
}

Diagram smooth(const Diagram& d, int cross_id, SmoothKind kind) {
  const Crossing& c = crossing_by_id(d, cross_id);
  auto loc = locate_passes(d, cross_id);
  const bool oriented = (kind == SmoothKind::A) == ((c.sign > 0) == kPositiveSignMakesAOriented);

  Diagram out = d;
  out.crossings.erase(std::remove_if(out.crossings.begin(), out.crossings.end(),
                                     [&](const Crossing& x) { return x.id == cross_id; }),
                      out.crossings.end());

  if (loc[0].comp != loc[1].comp) {
    PassLoc first = loc[0], second = loc[1];
    if (second.comp < first.comp) std::swap(first, second);
    std::vector<Item> seq_first = rotated_without(d.components[first.comp].items, first.pos);
    std::vector<Item> seq_second = rotated_without(d.components[second.comp].items, second.pos);
    Component merged;
    merged.twists = d.components[first.comp].twists + d.components[second.comp].twists;
    merged.items = seq_first;
    if (oriented) {
      merged.items.insert(merged.items.end(), seq_second.begin(), seq_second.end());
    } else {
      flip_signs_for_reversed(out, seq_second, cross_id);
      std::vector<Item> rev = reverse_inverse(seq_second);
      merged.items.insert(merged.items.end(), rev.begin(), rev.end());
    }
    out.components[first.comp] = std::move(merged);
    out.components.erase(out.components.begin() + second.comp);
    return out;
  }

  // self-crossing: segments between the two passes
  const int comp = loc[0].comp;
  const auto& items = d.components[comp].items;
  const int n = static_cast<int>(items.size());
  int p = std::min(loc[0].pos, loc[1].pos);
  int q = std::max(loc[0].pos, loc[1].pos);
  std::vector<Item> s1, s2;
  for (int k = p + 1; k < q; ++k) s1.push_back(items[k]);
  for (int k = q + 1; k < n; ++k) s2.push_back(items[k]);
  for (int k = 0; k < p; ++k) s2.push_back(items[k]);

  if (oriented) {
    // orientation-respecting reconnection splits the component in two
    Component a{d.components[comp].twists, s1};
    Component b{0, s2};
    out.components[comp] = std::move(a);
    out.components.insert(out.components.begin() + comp + 1, std::move(b));
  } else {
    flip_signs_for_reversed(out, s2, cross_id);
    std::vector<Item> rev = reverse_inverse(s2);
    Component merged{d.components[comp].twists, s1};
    merged.items.insert(merged.items.end(), rev.begin(), rev.end());
    out.components[comp] = std::move(merged);
  }
  return out;
}

RemoveTrivialResult remove_trivial(const SurfaceModel& m, const Diagram& d) {
  RemoveTrivialResult res{Diagram{}, cyc_one};
  res.diagram.crossings = d.crossings;
  for (int k = 0; k < static_cast<int>(d.components.size()); ++k) {
    const Component& comp = d.components[k];
    bool has_pass = std::any_of(comp.items.begin(), comp.items.end(), [](const Item& i) { return i.is_pass(); });
    if (!has_pass && is_identity(m, component_word(m, d, k)))
      res.factor *= CycCoeff{2, 0} * a_pow(comp.twists);
    else
      res.diagram.components.push_back(comp);
  }
  return res;
}

std::vector<ResolvedTerm> resolve(const SurfaceModel& m, const Diagram& d, int crossing_cap) {
  require_valid(m, d);
  if (static_cast<int>(d.crossings.size()) > crossing_cap)
    throw std::invalid_argument("resolve: crossing count " + std::to_string(d.crossings.size()) +
                                " exceeds the cap " + std::to_string(crossing_cap));
  std::vector<ResolvedTerm> terms;
  auto emit = [&](CycCoeff coeff, const Diagram& state) {
    auto reduced = remove_trivial(m, state);
    CycCoeff total = coeff * reduced.factor;
    if (total.is_zero()) return;
    for (auto& t : terms) {
      if (t.diagram == reduced.diagram) {
        t.coeff += total;
        return;
      }
    }
    terms.push_back({total, reduced.diagram});
  };

  // state order fixed by smallest crossing id first, A branch before B
  auto rec = [&](auto&& self, const Diagram& cur, CycCoeff coeff) -> void {
    if (cur.crossings.empty()) {
      emit(coeff, cur);
      return;
    }
    int id = std::min_element(cur.crossings.begin(), cur.crossings.end(),
                              [](const Crossing& a, const Crossing& b) { return a.id < b.id; })
                 ->id;
    self(self, smooth(cur, id, SmoothKind::A), coeff * cyc_a);
    self(self, smooth(cur, id, SmoothKind::B), coeff * a_pow(-1));
  };
  rec(rec, d, cyc_one);

  std::erase_if(terms, [](const ResolvedTerm& t) { return t.coeff.is_zero(); });
  return terms;
}

}  // namespace skein
