#include <doctest.h>

#include "skein/json_io.hpp"
#include "skein/samplers.hpp"

using namespace skein;

TEST_CASE("group JSON round-trip") {
  for (const GroupSpec& g : {GroupSpec::torus(), GroupSpec::abelian(1, {5, 9}), GroupSpec::free_group(2),
                             GroupSpec::free_group(2, symplectic_form(1)), GroupSpec::closed_surface(3)}) {
    CHECK(group_from_json(group_to_json(g)) == g);
  }
  CHECK(group_from_json(Json::parse(R"({"kind":"free","rank":2,"omega":[[0,1],[-1,0]]})")) ==
        GroupSpec::free_group(2, symplectic_form(1)));
  CHECK(group_from_json(Json::parse(R"({"kind":"abelian","free_rank":0,"torsion":[5]})")) ==
        GroupSpec::abelian(0, {5}));
  CHECK(group_from_json(Json::parse(R"({"kind":"surface","genus":2})")) == GroupSpec::closed_surface(2));
  CHECK_THROWS_AS(group_from_json(Json::parse(R"({"kind":"nope"})")), std::invalid_argument);
  CHECK_THROWS_AS(group_from_json(Json::parse(R"({"kind":"abelian","torsion":[4]})")), std::invalid_argument);
}

TEST_CASE("rhs and homlink JSON round-trip") {
  Rng rng(71);
  GroupSpec f2 = GroupSpec::free_group(2);
  for (int k = 0; k < 50; ++k) {
    RhsData data = random_rhs(rng);
    RhsData back = rhs_from_json(rhs_to_json(data));
    CHECK(back.torsion == data.torsion);
    for (i64 i = 0; i < data.lf.rows(); ++i)
      for (i64 j = 0; j < data.lf.cols(); ++j) CHECK(back.lf(i, j) == data.lf(i, j));

    HomLink link = random_homlink(data, rng, static_cast<int>(rng.range(1, 3)), &f2);
    HomLink lback = homlink_from_json(f2, homlink_to_json(f2, link), data.torsion.size());
    validate_homlink(data, lback);
    REQUIRE(lback.components.size() == link.components.size());
    for (size_t i = 0; i < link.components.size(); ++i) {
      CHECK(lback.components[i].hom_class == link.components[i].hom_class);
      CHECK(lback.components[i].frame == link.components[i].frame);
      CHECK(*lback.components[i].word == *link.components[i].word);
    }
  }
  CHECK_THROWS_AS(rhs_from_json(Json::parse(R"({"torsion":[4],"lf":[["0"]]})")), std::invalid_argument);
}

TEST_CASE("diagram JSON error paths") {
  auto parse = [](const char* text) { return diagram_from_json(Json::parse(text)); };
  CHECK_THROWS_WITH_AS(parse(R"({"components":[]})"), doctest::Contains("surface"), std::invalid_argument);
  // over must point at a pass of the crossing
  CHECK_THROWS_WITH_AS(
      parse(R"({"surface":{"kind":"free","rank":1},
               "components":[{"twists":0,"items":[{"gen":1},{"cross":0}]},
                              {"twists":0,"items":[{"cross":0}]}],
               "crossings":[{"id":0,"over":[0,0],"sign":1}]})"),
      doctest::Contains("over"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      parse(R"({"surface":{"kind":"free","rank":1},
               "components":[{"twists":0,"items":[{"cross":-1},{"cross":-1}]}],
               "crossings":[{"id":-1,"over":[0,0],"sign":1}]})"),
      doctest::Contains("nonnegative"), std::invalid_argument);
  // the one-crossing torus diagram parses and validates
  auto [m, d] = parse(R"({"surface":{"kind":"abelian","free_rank":2,"omega":[[0,1],[-1,0]]},
    "components":[{"twists":0,"items":[{"gen":1},{"cross":0}]},
                   {"twists":0,"items":[{"gen":2},{"cross":0}]}],
    "crossings":[{"id":0,"over":[1,1],"sign":-1}]})");
  CHECK(validate(m, d).empty());
  CHECK(inter_stats(d, 0, 1).d == Z4(1));
}
