#include "skein/samplers.hpp"

#include <numeric>

namespace skein {

Word random_word(const GroupSpec& s, Rng& rng, int max_len) {
  const int n = s.generators();
  if (n == 0) return identity_word(s);
  int len = static_cast<int>(rng.below(max_len + 1));
  std::vector<i64> letters;
  for (int k = 0; k < len; ++k) letters.push_back(rng.sign() * rng.range(1, n));
  return word_from_letters(s, letters);
}

ClassRep random_class(const GroupSpec& s, Rng& rng, int max_len) {
  return class_rep(s, random_word(s, rng, max_len));
}

Diagram random_diagram(const SurfaceModel& m, Rng& rng, const DiagramOpts& opts) {
  const int n = static_cast<int>(rng.range(opts.min_components, opts.max_components));
  Diagram d;
  std::vector<Word> words;
  for (int i = 0; i < n; ++i) {
    Component comp;
    int len = static_cast<int>(rng.below(opts.max_letters + 1));
    std::vector<i64> letters;
    for (int k = 0; k < len; ++k) letters.push_back(rng.sign() * rng.range(1, m.generators()));
    for (i64 l : letters) comp.items.push_back(Item::letter(l));
    comp.twists = static_cast<int>(rng.range(-opts.max_twists, opts.max_twists));
    words.push_back(word_from_letters(m, letters));
    d.components.push_back(std::move(comp));
  }

  int next_id = 0;
  auto add_crossing = [&](int ci, int cj, int sign, int over_end) {
    d.crossings.push_back({next_id, sign, over_end});
    auto& items_i = d.components[ci].items;
    auto& items_j = d.components[cj].items;
    items_i.insert(items_i.begin() + rng.below(static_cast<i64>(items_i.size()) + 1), Item::pass(next_id, 0));
    items_j.insert(items_j.begin() + rng.below(static_cast<i64>(items_j.size()) + 1), Item::pass(next_id, 1));
    ++next_id;
  };

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      // iota = sign when the over pass sits on the first component, else -sign
      auto add_with_iota = [&](int iota) {
        bool over_first = rng.coin();
        add_crossing(i, j, over_first ? iota : -iota, over_first ? 0 : 1);
      };
      i64 net = omega_form(m, words[i], words[j]);
      for (i64 k = 0; k < (net < 0 ? -net : net); ++k) add_with_iota(net > 0 ? 1 : -1);
      i64 pairs = rng.below(opts.max_extra_pairs + 1);
      for (i64 k = 0; k < pairs; ++k) {
        add_with_iota(1);
        add_with_iota(-1);
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    i64 selfs = rng.below(opts.max_self + 1);
    for (i64 k = 0; k < selfs; ++k) {
      d.crossings.push_back({next_id, rng.sign(), static_cast<int>(rng.below(2))});
      auto& items = d.components[i].items;
      items.insert(items.begin() + rng.below(static_cast<i64>(items.size()) + 1), Item::pass(next_id, 0));
      items.insert(items.begin() + rng.below(static_cast<i64>(items.size()) + 1), Item::pass(next_id, 1));
      ++next_id;
    }
  }
  return d;
}

Diagram random_smoothable_diagram(const SurfaceModel& m, Rng& rng, const DiagramOpts& opts) {
  for (;;) {
    Diagram d = random_diagram(m, rng, opts);
    bool good = validate(m, d).empty();
    for (size_t k = 0; good && k < d.crossings.size(); ++k) {
      int id = d.crossings[k].id;
      good = validate(m, smooth(d, id, SmoothKind::A)).empty() &&
             validate(m, smooth(d, id, SmoothKind::B)).empty();
    }
    if (good) return d;
  }
}

namespace {

i64 random_odd_divisor(i64 n, Rng& rng) {
  std::vector<i64> divs;
  for (i64 d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      if (d % 2 == 1) divs.push_back(d);
      if ((n / d) % 2 == 1) divs.push_back(n / d);
    }
  }
  return divs[rng.below(static_cast<i64>(divs.size()))];
}

}  // namespace

RhsData random_rhs(Rng& rng, int max_factors, i64 max_order) {
  RhsData data;
  int k = static_cast<int>(rng.range(1, max_factors));
  for (int i = 0; i < k; ++i) data.torsion.push_back(2 * rng.range(1, (max_order - 1) / 2) + 1);
  data.lf = Mat<Frac>(k, k);
  for (int i = 0; i < k; ++i) {
    for (int j = i; j < k; ++j) {
      i64 l = random_odd_divisor(std::gcd(data.torsion[i], data.torsion[j]), rng);
      i64 num = 0;
      if (l > 1) {
        do {
          num = rng.range(0, l - 1);
        } while (std::gcd(num, l) != 1);
      }
      data.lf(i, j) = Frac(num, l);
      data.lf(j, i) = data.lf(i, j);
    }
  }
  return data;
}

HomLink random_homlink(const RhsData& data, Rng& rng, int components, const GroupSpec* word_backend,
                       int max_word_len) {
  HomLink link;
  for (int i = 0; i < components; ++i) {
    HomLinkComponent comp;
    for (i64 n : data.torsion) comp.hom_class.push_back(rng.below(n));
    if (word_backend) comp.word = random_word(*word_backend, rng, max_word_len);
    comp.frame = lf_value(data, comp.hom_class, comp.hom_class) + Frac(rng.range(-2, 2));
    link.components.push_back(std::move(comp));
  }
  link.lk = Mat<Frac>(components, components);
  for (int i = 0; i < components; ++i) {
    for (int j = i + 1; j < components; ++j) {
      Frac v = lf_value(data, link.components[i].hom_class, link.components[j].hom_class) +
               Frac(rng.range(-2, 2));
      link.lk(i, j) = v;
      link.lk(j, i) = v;
    }
  }
  return link;
}

Mat<Frac> random_cross_lk(const RhsData& data, const HomLink& a, const HomLink& b, Rng& rng) {
  Mat<Frac> out(a.components.size(), b.components.size());
  for (i64 i = 0; i < out.rows(); ++i)
    for (i64 j = 0; j < out.cols(); ++j)
      out(i, j) = lf_value(data, a.components[i].hom_class, b.components[j].hom_class) + Frac(rng.range(-2, 2));
  return out;
}

}  // namespace skein
