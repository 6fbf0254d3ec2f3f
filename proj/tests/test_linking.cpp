#include <doctest.h>

#include "skein/linking.hpp"
#include "skein/samplers.hpp"

using namespace skein;

namespace {

RhsData one_factor(i64 n, Frac lf) {
  RhsData data;
  data.torsion = {n};
  data.lf = Mat<Frac>(1, 1);
  data.lf(0, 0) = lf;
  return data;
}

// Independent oracle: the unique delta in {0,1,2,3} with
// k + delta*l = 0 mod 4.
i64 delta_search(i64 k, i64 l) {
  for (i64 d = 0; d < 4; ++d)
    if ((k + d * l) % 4 == 0) return d;
  return -1;
}

}  // namespace

TEST_CASE("lift examples against the delta-search oracle") {
  CHECK(lift_linking_form(one_factor(5, Frac(1, 5)))(0, 0) == QuarterFrac(16, 5));  // delta = 3
  CHECK(lift_linking_form(one_factor(3, Frac(2, 3)))(0, 0) == QuarterFrac(8, 3));   // delta = 2
  CHECK(lift_linking_form(one_factor(7, Frac(0, 1)))(0, 0) == QuarterFrac(0, 1));

  Rng rng(99);
  for (int c = 0; c < 200; ++c) {
    RhsData data = random_rhs(rng);
    Mat<QuarterFrac> lift = lift_linking_form(data);
    for (i64 i = 0; i < lift.rows(); ++i) {
      for (i64 j = 0; j < lift.cols(); ++j) {
        Frac f = data.lf(i, j);
        i64 delta = delta_search(f.num, f.den);
        REQUIRE(delta >= 0);
        CHECK(lift(i, j) == QuarterFrac(f.num + delta * f.den, f.den));
      }
    }
  }
}

TEST_CASE("lift input validation") {
  CHECK_THROWS_WITH_AS(lift_linking_form(one_factor(4, Frac(1, 2))), doctest::Contains("odd"),
                       std::invalid_argument);
  RhsData asym;
  asym.torsion = {5, 5};
  asym.lf = Mat<Frac>(2, 2);
  asym.lf(0, 1) = Frac(1, 5);
  CHECK_THROWS_WITH_AS(lift_linking_form(asym), doctest::Contains("symmetric"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(lift_linking_form(one_factor(5, Frac(1, 3))), doctest::Contains("divide"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(lift_linking_form(one_factor(5, Frac(6, 5))), doctest::Contains("[0,1)"),
                       std::invalid_argument);
}

TEST_CASE("d and D on homological links") {
  RhsData sphere = RhsData::sphere();

  HomLink hopf;
  hopf.components = {{{}, std::nullopt, Frac(0)}, {{}, std::nullopt, Frac(0)}};
  hopf.lk = Mat<Frac>(2, 2);
  hopf.lk(0, 1) = hopf.lk(1, 0) = Frac(1);
  CHECK(d_case1(sphere, hopf, 0, 1) == Z4(3));
  CHECK(d_case1(sphere, hopf, 1, 0) == Z4(3));  // symmetric in case I

  HomLink unlinked;
  unlinked.components = {{{}, std::nullopt, Frac(0)}, {{}, std::nullopt, Frac(0)}};
  unlinked.lk = Mat<Frac>(2, 2);
  CHECK(d_case1(sphere, unlinked, 0, 1) == Z4(0));
  CHECK(D_case1(sphere, unlinked, 0) == Z4(0));

  HomLink framed;
  framed.components = {{{}, std::nullopt, Frac(1)}};
  framed.lk = Mat<Frac>(1, 1);
  CHECK(D_case1(sphere, framed, 0) == Z4(3));

  RhsData five = one_factor(5, Frac(1, 5));
  HomLink pair;
  pair.components = {{{1}, std::nullopt, Frac(1, 5)}, {{1}, std::nullopt, Frac(1, 5)}};
  pair.lk = Mat<Frac>(2, 2);
  pair.lk(0, 1) = pair.lk(1, 0) = Frac(1, 5);
  CHECK(d_case1(five, pair, 0, 1) == Z4(3));  // (16 - 1)/5
  CHECK(D_case1(five, pair, 0) == Z4(3));
}

TEST_CASE("congruence violations are rejected") {
  RhsData five = one_factor(5, Frac(1, 5));
  HomLink bad;
  bad.components = {{{1}, std::nullopt, Frac(0)}};  // frame must be 1/5 mod Z
  bad.lk = Mat<Frac>(1, 1);
  CHECK_THROWS_AS(D_case1(five, bad, 0), std::invalid_argument);

  HomLink bad2;
  bad2.components = {{{1}, std::nullopt, Frac(1, 5)}, {{1}, std::nullopt, Frac(1, 5)}};
  bad2.lk = Mat<Frac>(2, 2);
  bad2.lk(0, 1) = bad2.lk(1, 0) = Frac(1, 3);
  CHECK_THROWS_AS(d_case1(five, bad2, 0, 1), std::invalid_argument);
}

TEST_CASE("split_d") {
  RhsData sphere = RhsData::sphere();
  HomLink knot;
  knot.components = {{{}, std::nullopt, Frac(2)}};
  knot.lk = Mat<Frac>(1, 1);
  CHECK(split_d(sphere, knot, 0) == D_case1(sphere, knot, 0));
  CHECK(split_d(sphere, knot, 1) == D_case1(sphere, knot, 0));

  HomLink hopf;
  hopf.components = {{{}, std::nullopt, Frac(0)}, {{}, std::nullopt, Frac(0)}};
  hopf.lk = Mat<Frac>(2, 2);
  hopf.lk(0, 1) = hopf.lk(1, 0) = Frac(1);
  for (std::uint32_t mask = 0; mask < 4; ++mask) CHECK(split_d(sphere, hopf, mask) == Z4(2));
}

TEST_CASE("lk shift moves d by -1 mod 4") {
  Rng rng(17);
  for (int c = 0; c < 100; ++c) {
    RhsData data = random_rhs(rng);
    HomLink link = random_homlink(data, rng, 2);
    Z4 before = d_case1(data, link, 0, 1);
    HomLink shifted = link;
    shifted.lk(0, 1) = shifted.lk(0, 1) + Frac(1);
    shifted.lk(1, 0) = shifted.lk(0, 1);
    Z4 after = d_case1(data, shifted, 0, 1);
    CHECK(after == before - Z4(1));
    CHECK((after.v - before.v + 4) % 2 == 1);  // parity flips by exactly one
    // orientation reversal of one component: D unchanged, d unchanged mod 2
    HomLink reversed = link;
    for (size_t t = 0; t < data.torsion.size(); ++t)
      reversed.components[1].hom_class[t] = (data.torsion[t] - link.components[1].hom_class[t]) % data.torsion[t];
    reversed.lk(0, 1) = -link.lk(0, 1);
    reversed.lk(1, 0) = -link.lk(0, 1);
    reversed.components[1].frame = link.components[1].frame;  // lk(K-,K-) = lk(K+,K+)
    CHECK(D_case1(data, reversed, 1) == D_case1(data, link, 1));
    CHECK((d_case1(data, reversed, 0, 1).v - before.v) % 2 == 0);
  }
}

TEST_CASE("d additivity under component merge (case I)") {
  Rng rng(23);
  for (int c = 0; c < 100; ++c) {
    RhsData data = random_rhs(rng);
    HomLink link = random_homlink(data, rng, 3);
    // d(K_0, K_1 u K_2) via a merged two-row link with summed class and lk
    HomLinkComponent merged;
    merged.hom_class.resize(data.torsion.size());
    for (size_t t = 0; t < data.torsion.size(); ++t)
      merged.hom_class[t] = (link.components[1].hom_class[t] + link.components[2].hom_class[t]) % data.torsion[t];
    Mat<QuarterFrac> lift = lift_linking_form(data);
    QuarterFrac direct = lf_hat(lift, link.components[0].hom_class, merged.hom_class) -
                         QuarterFrac(link.lk(0, 1) + link.lk(0, 2));
    CHECK(direct.as_z4() == Z4(d_case1(data, link, 0, 1).v + d_case1(data, link, 0, 2).v));
  }
}
