#include "skein/maps.hpp"

#include <stdexcept>

namespace skein {

PhiResult phi(const SurfaceModel& m, const Diagram& d) {
  require_valid(m, d);
  const int n = static_cast<int>(d.components.size());
  SkeinElt elt = elt_scalar(m, cyc_one);
  i64 sum_D = 0, sum_d = 0;
  for (int i = 0; i < n; ++i) elt = mul(elt, gen(m, class_rep(m, component_word(m, d, i))));
  for (int i = 0; i < n; ++i) sum_D += D_diagram(d, i).v;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) sum_d += inter_stats(d, i, j).d.v;
  return {scale(elt, a_pow(-(sum_D + 2 * sum_d))), Z4(sum_D), Z4(sum_d)};
}

PhiResult phi(const GroupSpec& g, const RhsData& data, const HomLink& link) {
  if (!g.omega_zero())
    throw std::invalid_argument("phi: case-I backends carry omega = 0");
  validate_homlink(data, link);
  const int n = static_cast<int>(link.components.size());
  SkeinElt elt = elt_scalar(g, cyc_one);
  i64 sum_D = 0, sum_d = 0;
  for (int i = 0; i < n; ++i) {
    const auto& comp = link.components[i];
    if (!comp.word)
      throw std::invalid_argument("HomLink.components[" + std::to_string(i) + "].word: required by phi");
    elt = mul(elt, gen(g, class_rep(g, *comp.word)));
  }
  for (int i = 0; i < n; ++i) sum_D += D_case1(data, link, i).v;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) sum_d += d_case1(data, link, i, j).v;
  return {scale(elt, a_pow(-(sum_D + 2 * sum_d))), Z4(sum_D), Z4(sum_d)};
}

PsiResult psi(const GroupSpec& g, const ClassRep& c) {
  validate_word(g, c.word);
  Component comp;
  if (g.kind == GroupKind::Abelian) {
    for (int i = 0; i < g.generators(); ++i) {
      i64 e = c.word.data[i];
      for (i64 k = 0; k < (e < 0 ? -e : e); ++k) comp.items.push_back(Item::letter(e < 0 ? -(i + 1) : i + 1));
    }
  } else {
    for (i64 l : c.word.data) comp.items.push_back(Item::letter(l));
  }
  Diagram d;
  d.components.push_back(std::move(comp));
  return {std::move(d), Z4(0)};
}

PhiResult skein_product(const SurfaceModel& m, const Diagram& L1, const Diagram& L2) {
  require_valid(m, L1);
  require_valid(m, L2);
  Diagram merged = L1;
  // remap second factor crossing ids above the first factor's
  int offset = 0;
  for (const auto& c : L1.crossings) offset = std::max(offset, c.id + 1);
  for (const auto& c : L2.crossings) merged.crossings.push_back({c.id + offset, c.sign, c.over_end});
  for (const auto& comp : L2.components) {
    Component copy = comp;
    for (auto& it : copy.items)
      if (it.is_pass()) it.cross += offset;
    merged.components.push_back(std::move(copy));
  }
  int next_id = offset;
  for (const auto& c : L2.crossings) next_id = std::max(next_id, c.id + offset + 1);

  // stacking: the first factor lies above, so every synthesized crossing has
  // the L1 strand over; |omega| crossings of sign sgn(omega) realize the form
  const int n1 = static_cast<int>(L1.components.size());
  const int n2 = static_cast<int>(L2.components.size());
  for (int i = 0; i < n1; ++i) {
    for (int j = 0; j < n2; ++j) {
      i64 om = omega_form(m, component_word(m, merged, i), component_word(m, merged, n1 + j));
      int sgn = om > 0 ? 1 : -1;
      for (i64 k = 0; k < (om < 0 ? -om : om); ++k) {
        merged.crossings.push_back({next_id, sgn, 0});
        merged.components[i].items.push_back(Item::pass(next_id, 0));
        merged.components[n1 + j].items.push_back(Item::pass(next_id, 1));
        ++next_id;
      }
    }
  }
  return phi(m, merged);
}

PhiResult skein_product(const GroupSpec& g, const RhsData& data, const HomLink& L1, const HomLink& L2,
                        const Mat<Frac>& cross_lk) {
  const i64 n1 = static_cast<i64>(L1.components.size());
  const i64 n2 = static_cast<i64>(L2.components.size());
  if (cross_lk.rows() != n1 || cross_lk.cols() != n2)
    throw std::invalid_argument("skein_product: cross_lk must be " + std::to_string(n1) + "x" + std::to_string(n2));
  HomLink merged;
  merged.components = L1.components;
  merged.components.insert(merged.components.end(), L2.components.begin(), L2.components.end());
  merged.lk = Mat<Frac>(n1 + n2, n1 + n2);
  for (i64 i = 0; i < n1; ++i)
    for (i64 j = 0; j < n1; ++j) merged.lk(i, j) = L1.lk(i, j);
  for (i64 i = 0; i < n2; ++i)
    for (i64 j = 0; j < n2; ++j) merged.lk(n1 + i, n1 + j) = L2.lk(i, j);
  for (i64 i = 0; i < n1; ++i) {
    for (i64 j = 0; j < n2; ++j) {
      merged.lk(i, n1 + j) = cross_lk(i, j);
      merged.lk(n1 + j, i) = cross_lk(i, j);
    }
  }
  PhiResult res = phi(g, data, merged);
  i64 cross_d = 0;
  for (i64 i = 0; i < n1; ++i)
    for (i64 j = 0; j < n2; ++j) cross_d += d_case1(data, merged, static_cast<int>(i), static_cast<int>(n1 + j)).v;
  res.element = scale(res.element, a_pow(2 * cross_d));
  return res;
}

}  // namespace skein
