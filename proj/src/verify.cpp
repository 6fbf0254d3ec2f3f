#include "skein/verify.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace skein::verify {

namespace {

std::uint64_t case_seed(std::uint64_t seed, i64 i) {
  return seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(i + 1);
}

struct Harness {
  SuiteResult result;
  CheckRecord current;
  bool current_ok = true;

  explicit Harness(std::string name) { result.name = std::move(name); }

  void begin_case(const std::string& check, i64 idx, std::uint64_t seed) {
    current = CheckRecord{check, idx, seed, true, ""};
    current_ok = true;
  }
  void expect(bool ok, const std::string& detail) {
    ++result.checks;
    if (!ok) {
      if (current_ok) current.detail = detail;
      current_ok = false;
      current.pass = false;
      ++result.failures;
    }
  }
  void end_case() { result.records.push_back(current); }
};

}  // namespace

bool phi_elements_equal(const SkeinElt& a, const SkeinElt& b, std::uint64_t seed) {
  if (formal_eq(a, b)) return true;
  const GroupSpec& g = a.group;
  if (g.kind == GroupKind::Abelian) return false;
  if (g.kind == GroupKind::Free && g.omega_zero()) {
    Eq r = eq(a, b, seed);
    return r == Eq::Equal || r == Eq::ProbablyEqual;
  }
  return formal_eq(abelianized(a), abelianized(b));
}

const std::vector<SurfaceModel>& suite_backends() {
  static const std::vector<SurfaceModel> models = {
      GroupSpec::torus(), GroupSpec::free_group(2, symplectic_form(1)), GroupSpec::closed_surface(2)};
  return models;
}

// --- criterion 1: linking-form lift ---------------------------------------------

static SuiteResult suite_lift(std::uint64_t seed, i64 cases) {
  Harness h("lift");
  for (i64 i = 0; i < cases; ++i) {
    std::uint64_t s = case_seed(seed, i);
    h.begin_case("linking-form-lift", i, s);
    Rng rng(s);
    RhsData data = random_rhs(rng);
    Mat<QuarterFrac> lift = lift_linking_form(data);
    for (i64 a = 0; a < lift.rows(); ++a) {
      for (i64 b = 0; b < lift.cols(); ++b) {
        h.expect(lift(a, b) == lift(b, a), "lift not symmetric");
        h.expect(data.torsion[a] * lift(a, b) == QuarterFrac(0, 1), "n_i * a_ij != 0 mod 4");
        h.expect(data.torsion[b] * lift(a, b) == QuarterFrac(0, 1), "n_j * a_ij != 0 mod 4");
        h.expect((lift(a, b) - QuarterFrac(data.lf(a, b))).is_integral(), "a_ij != lf mod Z");
      }
    }
    h.end_case();
  }
  return h.result;
}

// --- criteria 2 and 3: crossing switch, skein invariance -----------------------

static SuiteResult suite_crossing_switch(std::uint64_t seed, i64 cases) {
  Harness h("crossing-switch");
  const auto& models = suite_backends();
  for (i64 i = 0; i < cases; ++i) {
    std::uint64_t s = case_seed(seed, i);
    h.begin_case("crossing-switch", i, s);
    const SurfaceModel& m = models[i % models.size()];
    Rng rng(s);
    DiagramOpts opts;
    opts.max_extra_pairs = 2;
    Diagram d = random_smoothable_diagram(m, rng, opts);
    SkeinElt minus_phi = scale(phi(m, d).element, -cyc_one);
    for (const auto& c : d.crossings)
      h.expect(formal_eq(phi(m, crossing_change(d, c.id)).element, minus_phi),
               "phi(crossing_change) != -phi at crossing " + std::to_string(c.id));
    h.end_case();
  }
  return h.result;
}

static SuiteResult suite_skein_invariance(std::uint64_t seed, i64 cases) {
  Harness h("skein-invariance");
  const auto& models = suite_backends();
  i64 inter_seen = 0, self_seen = 0;
  for (i64 i = 0; i < cases; ++i) {
    std::uint64_t s = case_seed(seed, i);
    h.begin_case("skein-invariance", i, s);
    const SurfaceModel& m = models[i % models.size()];
    Rng rng(s);
    DiagramOpts opts;
    opts.max_extra_pairs = 2;
    Diagram d = random_smoothable_diagram(m, rng, opts);
    SkeinElt base = phi(m, d).element;
    for (const auto& c : d.crossings) {
      Diagram sa = smooth(d, c.id, SmoothKind::A);
      Diagram sb = smooth(d, c.id, SmoothKind::B);
      SkeinElt rhs = add(scale(phi(m, sa).element, cyc_a), scale(phi(m, sb).element, a_pow(-1)));
      h.expect(phi_elements_equal(base, rhs, s), "skein relation fails at crossing " + std::to_string(c.id));

      // D-identities on this configuration
      Diagram oriented = c.sign > 0 ? sa : sb;
      Diagram reversing = c.sign > 0 ? sb : sa;
      auto loc = locate_passes(d, c.id);
      if (loc[0].comp != loc[1].comp) {
        ++inter_seen;
        int a = std::min(loc[0].comp, loc[1].comp), b = std::max(loc[0].comp, loc[1].comp);
        i64 om = inter_stats(d, a, b).omega;
        i64 sum = D_diagram(d, a).v + D_diagram(d, b).v + 2 * inter_stats(d, a, b).d.v;
        h.expect(Z4(sum - D_diagram(oriented, a).v) == Z4(om - c.sign), "D-identity (oriented merge) fails");
        h.expect(Z4(sum - D_diagram(reversing, a).v) == Z4(c.sign - om), "D-identity (reversing merge) fails");
      } else {
        ++self_seen;
        int a = loc[0].comp;  // oriented smoothing splits into components a, a+1
        i64 om = inter_stats(oriented, a, a + 1).omega;
        i64 sum = D_diagram(oriented, a).v + D_diagram(oriented, a + 1).v +
                  2 * inter_stats(oriented, a, a + 1).d.v;
        h.expect(Z4(sum - D_diagram(d, a).v) == Z4(om + c.sign), "D-identity (split) fails");
        h.expect(Z4(sum - D_diagram(reversing, a).v) == Z4(-om), "D-identity (reversing self) fails");
      }
    }
    h.end_case();
  }
  if (cases >= 50) {
    h.begin_case("connection-cases-exercised", cases, seed);
    h.expect(inter_seen > 0 && self_seen > 0, "population missed a connection case");
    h.end_case();
  }
  return h.result;
}

// --- criterion 4: torus product-to-sum ----------------------------------------

static SuiteResult suite_torus_product(std::uint64_t seed, i64 cases) {
  Harness h("torus-product-to-sum");
  const GroupSpec torus = GroupSpec::torus();
  i64 idx = 0;
  for (i64 p = -5; p <= 5; ++p) {
    for (i64 q = -5; q <= 5; ++q) {
      for (i64 r = -5; r <= 5; ++r) {
        for (i64 t = -5; t <= 5; ++t) {
          if (cases >= 0 && idx >= cases) return h.result;
          h.begin_case("product-to-sum", idx, seed);
          Word u = word_from_exponents(torus, {p, q});
          Word v = word_from_exponents(torus, {r, t});
          i64 om = p * t - q * r;
          SkeinElt lhs = mul(gen(torus, u), gen(torus, v));
          SkeinElt rhs = add(scale(gen(torus, word_from_exponents(torus, {p + r, q + t})), a_pow(om)),
                             scale(gen(torus, word_from_exponents(torus, {p - r, q - t})), a_pow(-om)));
          h.expect(formal_eq(lhs, rhs), "product-to-sum fails at (" + std::to_string(p) + "," +
                                            std::to_string(q) + ")(" + std::to_string(r) + "," +
                                            std::to_string(t) + ")");
          h.end_case();
          ++idx;
        }
      }
    }
  }
  return h.result;
}

// --- criterion 5: deformed-algebra lemmas --------------------------------------

static SuiteResult suite_algebra_lemmas(std::uint64_t seed, i64 cases) {
  Harness h("algebra-lemmas");
  const auto& models = suite_backends();
  for (size_t b = 0; b < models.size(); ++b) {
    const GroupSpec& m = models[b];
    for (i64 i = 0; i < cases; ++i) {
      std::uint64_t s = case_seed(seed, static_cast<i64>(b) * cases + i);
      h.begin_case("algebra-lemmas-backend" + std::to_string(b), i, s);
      Rng rng(s);
      Word g = random_word(m, rng), k = random_word(m, rng);
      h.expect(class_rep(m, g) == class_rep(m, inv(m, g)), "x_g != x_{g^-1}");
      h.expect(class_rep(m, mul(m, g, k)) == class_rep(m, mul(m, k, g)), "x_gh != x_hg");
      SkeinElt xg = gen(m, g), xk = gen(m, k);
      h.expect(formal_eq(mul(xk, xg), scale(mul(xg, xk), a_pow(2 * omega_form(m, g, k)))),
               "x_h x_g != (-1)^omega x_g x_h");
      h.end_case();
    }
  }
  return h.result;
}

// --- criterion 6: associativity -------------------------------------------------

static SuiteResult suite_associativity(std::uint64_t seed, i64 cases) {
  Harness h("associativity");
  const std::vector<GroupSpec> abelians = {GroupSpec::torus(), GroupSpec::abelian(1, {5}),
                                           GroupSpec::abelian(0, {3, 9})};
  for (i64 i = 0; i < cases; ++i) {
    std::uint64_t s = case_seed(seed, i);
    h.begin_case("abelian-associativity", i, s);
    Rng rng(s);
    const GroupSpec& m = abelians[i % abelians.size()];
    SkeinElt x = gen(m, random_word(m, rng)), y = gen(m, random_word(m, rng)), z = gen(m, random_word(m, rng));
    h.expect(formal_eq(mul(mul(x, y), z), mul(x, mul(y, z))), "abelian associativity fails");
    h.end_case();
  }
  const GroupSpec f3 = GroupSpec::free_group(3);
  i64 free_cases = cases < 0 ? 500 : cases == 1000 ? 500 : cases;
  for (i64 i = 0; i < free_cases; ++i) {
    std::uint64_t s = case_seed(seed ^ 0xF3ULL, i);
    h.begin_case("free3-trace-associativity", i, s);
    Rng rng(s);
    SkeinElt x = gen(f3, random_word(f3, rng)), y = gen(f3, random_word(f3, rng)), z = gen(f3, random_word(f3, rng));
    SkeinElt lhs = mul(mul(x, y), z), rhs = mul(x, mul(y, z));
    for (int k = 0; k < kTraceAssignments; ++k) {
      TraceAssignment asg = random_trace_assignment(f3, s + static_cast<std::uint64_t>(k));
      h.expect(trace_eval(lhs, asg) == trace_eval(rhs, asg), "trace oracle disagreement");
    }
    h.end_case();
  }
  return h.result;
}

// --- criterion 7: round trip + enumeration invariance ---------------------------

static SuiteResult suite_round_trip(std::uint64_t seed, i64 cases) {
  Harness h("round-trip");
  const auto& models = suite_backends();
  for (size_t b = 0; b < models.size(); ++b) {
    const SurfaceModel& m = models[b];
    for (i64 i = 0; i < cases; ++i) {
      std::uint64_t s = case_seed(seed, static_cast<i64>(b) * cases + i);
      h.begin_case("phi-psi-backend" + std::to_string(b), i, s);
      Rng rng(s);
      ClassRep c = random_class(m, rng);
      PsiResult p = psi(m, c);
      SkeinElt back = scale(phi(m, p.diagram).element, a_pow(p.scale));
      h.expect(formal_eq(back, gen(m, c)), "phi(psi(c)) != gen(c)");
      h.end_case();
    }
  }
  i64 perms = cases < 0 ? 100 : std::min<i64>(cases, 100);
  for (i64 i = 0; i < perms; ++i) {
    std::uint64_t s = case_seed(seed ^ 0x9EULL, i);
    h.begin_case("permutation-invariance", i, s);
    const SurfaceModel& m = models[i % models.size()];
    Rng rng(s);
    DiagramOpts opts;
    opts.min_components = 2;
    Diagram d = random_diagram(m, rng, opts);
    SkeinElt base = phi(m, d).element;
    Diagram shuffled = d;
    for (int k = static_cast<int>(shuffled.components.size()) - 1; k > 0; --k)
      std::swap(shuffled.components[k], shuffled.components[rng.below(k + 1)]);
    h.expect(phi_elements_equal(phi(m, shuffled).element, base, s), "phi depends on component order");
    h.end_case();
  }
  return h.result;
}

// --- criterion 8: d cross-check and the d-calculus -------------------------------

static SuiteResult suite_d_crosscheck(std::uint64_t seed, i64 cases) {
  Harness h("d-crosscheck");
  const auto& models = suite_backends();
  for (i64 i = 0; i < cases; ++i) {
    std::uint64_t s = case_seed(seed, i);
    h.begin_case("d-crosscheck", i, s);
    const SurfaceModel& m = models[i % models.size()];
    Rng rng(s);
    DiagramOpts opts;
    opts.max_components = 3;
    Diagram d = random_diagram(m, rng, opts);
    const int n = static_cast<int>(d.components.size());
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (a == b) continue;
        InterStats st = inter_stats(d, a, b);
        h.expect(st.d == d_over_count(d, a, b), "lf-hat - lk route != signed over-count");
        h.expect(Z4(st.d.v - inter_stats(d, b, a).d.v) == Z4(st.omega), "antisymmetry defect != omega");
        Diagram rev = reverse_component(d, b);
        h.expect((inter_stats(rev, a, b).d.v - st.d.v) % 2 == 0, "orientation reversal changed d mod 2");
      }
    }
    if (n >= 3) {
      Z4 grouped = inter_stats_group(d, {0}, {1, 2}).d;
      h.expect(grouped == Z4(inter_stats(d, 0, 1).d.v + inter_stats(d, 0, 2).d.v), "grouping additivity fails");
    }
    {
      Diagram with_loop = d;
      with_loop.components.push_back(Component{0, {}});
      std::vector<int> others(n);
      for (int k = 0; k < n; ++k) others[k] = k;
      if (n > 0)
        h.expect(inter_stats_group(with_loop, {n}, others).d == Z4(0), "trivial-loop pairing != 0");
    }
    // smoothing invariance: d(L, .) mod 2 across the three skein-related diagrams
    for (const auto& c : d.crossings) {
      auto loc = locate_passes(d, c.id);
      int a = loc[0].comp, b = loc[1].comp;
      for (int l = 0; l < n; ++l) {
        if (l == a || l == b) continue;
        std::vector<int> group = a == b ? std::vector<int>{a} : std::vector<int>{std::min(a, b), std::max(a, b)};
        i64 before = inter_stats_group(d, {l}, group).d.v;
        for (SmoothKind kind : {SmoothKind::A, SmoothKind::B}) {
          Diagram sm = smooth(d, c.id, kind);
          bool oriented = (kind == SmoothKind::A) == (c.sign > 0);
          std::vector<int> image;
          int l2;
          if (a != b) {
            image = {std::min(a, b)};
            l2 = l > std::max(a, b) ? l - 1 : l;
          } else if (oriented) {
            image = {a, a + 1};
            l2 = l > a ? l + 1 : l;
          } else {
            image = {a};
            l2 = l;
          }
          h.expect((inter_stats_group(sm, {l2}, image).d.v - before) % 2 == 0, "smoothing changed d(L,.) mod 2");
        }
      }
    }
    h.end_case();
  }
  return h.result;
}

// --- criterion 9: D well-definedness -------------------------------------------

static SuiteResult suite_d_welldefined(std::uint64_t seed, i64 cases) {
  Harness h("d-welldefined");
  const auto& models = suite_backends();
  for (i64 i = 0; i < cases; ++i) {
    std::uint64_t s = case_seed(seed, i);
    h.begin_case("D-closed-form", i, s);
    const SurfaceModel& m = models[i % models.size()];
    Rng rng(s);
    DiagramOpts opts;
    opts.min_components = 1;
    opts.max_components = 1;
    opts.max_self = 3;
    opts.max_twists = 3;
    Diagram d = random_diagram(m, rng, opts);
    h.expect(D_diagram(d, 0) == Z4(-(writhe(d, 0) + d.components[0].twists)),
             "doubling route != -(writhe + twists)");
    h.expect(D_diagram(reverse_component(d, 0), 0) == D_diagram(d, 0), "D depends on orientation");
    h.end_case();
  }
  i64 links = cases < 0 ? 100 : std::min<i64>(cases, 100);
  const GroupSpec f2 = GroupSpec::free_group(2);
  for (i64 i = 0; i < links; ++i) {
    std::uint64_t s = case_seed(seed ^ 0xD0ULL, i);
    h.begin_case("split-independence", i, s);
    Rng rng(s);
    RhsData data = random_rhs(rng);
    int n = static_cast<int>(rng.range(1, 4));
    HomLink link = random_homlink(data, rng, n, &f2);
    Z4 ref = split_d(data, link, 0);
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask)
      h.expect(split_d(data, link, mask) == ref, "split_d depends on the splitting");
    i64 formula = 0;
    for (int a = 0; a < n; ++a) formula += D_case1(data, link, a).v;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) formula += 2 * d_case1(data, link, a, b).v;
    h.expect(ref == Z4(formula), "split_d != sum D + 2 sum d");
    h.end_case();
  }
  return h.result;
}

// --- criterion 10: cyclic-group span count --------------------------------------

static SuiteResult suite_class_count(std::uint64_t seed, i64 cases) {
  Harness h("class-count");
  i64 idx = 0;
  for (i64 p = 1; p <= 199; p += 2) {
    if (cases >= 0 && idx >= cases) break;
    h.begin_case("classes-Z" + std::to_string(p), idx, seed);
    GroupSpec zp = p == 1 ? GroupSpec::abelian(0, {}) : GroupSpec::abelian(0, {p});
    std::set<Word> classes;
    for (i64 r = 0; r < p; ++r) {
      std::vector<i64> exps(zp.generators(), 0);
      if (p > 1) exps[0] = r;
      classes.insert(class_rep(zp, word_from_exponents(zp, exps)).word);
    }
    i64 count = static_cast<i64>(classes.size());
    h.expect(count == p / 2 + 1, "expected " + std::to_string(p / 2 + 1) + " classes, got " + std::to_string(count));
    h.end_case();
    ++idx;
  }
  return h.result;
}

// --- criterion 11: homomorphism --------------------------------------------------

static SuiteResult suite_homomorphism(std::uint64_t seed, i64 cases) {
  Harness h("homomorphism");
  const auto& models = suite_backends();
  for (i64 i = 0; i < cases; ++i) {
    std::uint64_t s = case_seed(seed, i);
    h.begin_case("surface-product", i, s);
    const SurfaceModel& m = models[i % models.size()];
    Rng rng(s);
    Diagram a = random_diagram(m, rng);
    Diagram b = random_diagram(m, rng);
    PhiResult prod = skein_product(m, a, b);
    h.expect(phi_elements_equal(prod.element, mul(phi(m, a).element, phi(m, b).element), s),
             "phi(L1 L2) != phi(L1) phi(L2)");
    h.end_case();
  }
  const GroupSpec f2 = GroupSpec::free_group(2);
  for (i64 i = 0; i < cases; ++i) {
    std::uint64_t s = case_seed(seed ^ 0x11ULL, i);
    h.begin_case("homological-product", i, s);
    Rng rng(s);
    RhsData data = random_rhs(rng);
    HomLink a = random_homlink(data, rng, static_cast<int>(rng.range(1, 2)), &f2);
    HomLink b = random_homlink(data, rng, static_cast<int>(rng.range(1, 2)), &f2);
    Mat<Frac> cross = random_cross_lk(data, a, b, rng);
    PhiResult prod = skein_product(f2, data, a, b, cross);
    h.expect(phi_elements_equal(prod.element, mul(phi(f2, data, a).element, phi(f2, data, b).element), s),
             "case-I product != mul of images");
    h.end_case();
  }
  return h.result;
}

// --- the verify_identities op ------------------------------------------------

SuiteResult verify_identities(std::uint64_t seed, i64 cases) {
  Harness h("identities");
  const auto& models = suite_backends();
  if (cases < 0) cases = 100;
  for (i64 i = 0; i < cases; ++i) {
    std::uint64_t s = case_seed(seed, i);
    const SurfaceModel& m = models[i % models.size()];
    Rng rng(s);
    DiagramOpts opts;
    opts.max_extra_pairs = 2;
    Diagram d = random_smoothable_diagram(m, rng, opts);
    SkeinElt base = phi(m, d).element;

    h.begin_case("skein-relation", i, s);
    for (const auto& c : d.crossings) {
      SkeinElt rhs = add(scale(phi(m, smooth(d, c.id, SmoothKind::A)).element, cyc_a),
                         scale(phi(m, smooth(d, c.id, SmoothKind::B)).element, a_pow(-1)));
      h.expect(phi_elements_equal(base, rhs, s), "relation (1) fails");
    }
    h.end_case();

    h.begin_case("crossing-switch", i, s);
    for (const auto& c : d.crossings)
      h.expect(formal_eq(phi(m, crossing_change(d, c.id)).element, scale(base, -cyc_one)),
               "switch rule fails");
    h.end_case();

    h.begin_case("d-identities", i, s);
    for (const auto& c : d.crossings) {
      Diagram oriented = smooth(d, c.id, c.sign > 0 ? SmoothKind::A : SmoothKind::B);
      Diagram reversing = smooth(d, c.id, c.sign > 0 ? SmoothKind::B : SmoothKind::A);
      auto loc = locate_passes(d, c.id);
      if (loc[0].comp != loc[1].comp) {
        int a = std::min(loc[0].comp, loc[1].comp), b = std::max(loc[0].comp, loc[1].comp);
        i64 om = inter_stats(d, a, b).omega;
        i64 sum = D_diagram(d, a).v + D_diagram(d, b).v + 2 * inter_stats(d, a, b).d.v;
        h.expect(Z4(sum - D_diagram(oriented, a).v) == Z4(om - c.sign), "oriented merge");
        h.expect(Z4(sum - D_diagram(reversing, a).v) == Z4(c.sign - om), "reversing merge");
      } else {
        int a = loc[0].comp;
        i64 om = inter_stats(oriented, a, a + 1).omega;
        i64 sum = D_diagram(oriented, a).v + D_diagram(oriented, a + 1).v +
                  2 * inter_stats(oriented, a, a + 1).d.v;
        h.expect(Z4(sum - D_diagram(d, a).v) == Z4(om + c.sign), "split");
        h.expect(Z4(sum - D_diagram(reversing, a).v) == Z4(-om), "reversing self");
      }
    }
    h.end_case();

    h.begin_case("product-homomorphism", i, s);
    {
      Diagram e = random_diagram(m, rng);
      h.expect(phi_elements_equal(skein_product(m, d, e).element, mul(base, phi(m, e).element), s),
               "product homomorphism fails");
    }
    h.end_case();

    h.begin_case("trivial-loop-factor", i, s);
    {
      Diagram with_loop = d;
      with_loop.components.push_back(Component{0, {}});
      h.expect(formal_eq(phi(m, with_loop).element, scale(base, CycCoeff{2, 0})), "factor != 2");
    }
    h.end_case();
  }
  return h.result;
}

// --- registry ------------------------------------------------------------------

namespace {

struct SuiteEntry {
  const char* name;
  i64 default_cases;
  SuiteResult (*fn)(std::uint64_t, i64);
};

const SuiteEntry kSuites[] = {
    {"lift", 500, suite_lift},
    {"crossing-switch", 200, suite_crossing_switch},
    {"skein-invariance", 200, suite_skein_invariance},
    {"torus-product-to-sum", -1, suite_torus_product},
    {"algebra-lemmas", 1000, suite_algebra_lemmas},
    {"associativity", 1000, suite_associativity},
    {"round-trip", 500, suite_round_trip},
    {"d-crosscheck", 500, suite_d_crosscheck},
    {"d-welldefined", 300, suite_d_welldefined},
    {"class-count", -1, suite_class_count},
    {"homomorphism", 200, suite_homomorphism},
    {"identities", 100, verify_identities},
};

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& e : kSuites) names.push_back(e.name);
  return names;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed, i64 cases) {
  for (const auto& e : kSuites) {
    if (name == e.name) return e.fn(seed, cases < 0 ? e.default_cases : cases);
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace skein::verify
