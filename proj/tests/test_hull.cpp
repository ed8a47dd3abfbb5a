#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "ihull/hull.hpp"

using namespace ihull;
using namespace ihull::fixtures;

namespace {

PartialBijection pb(Elem n,
                    std::initializer_list<std::pair<Elem, Elem>> pairs) {
  PartialBijection f(n);
  for (auto [x, y] : pairs) f.set(x, y);
  return f;
}

// Reference enumeration: every F_Λ over nonempty Λ ⊆ S, and every image
// θ_u(F_Λ) over u with F_Λ ⊆ F_u (unit included).
std::set<Mask> brute_f_values(const Semigroup& sg) {
  std::set<Mask> out;
  Mask all = (sg.size() == 64) ? ~Mask{0} : (bit(sg.size()) - 1);
  for (Mask lam = 1; lam <= all; ++lam) {
    Mask f = sg.nonzero_mask();
    for_each_bit(lam, [&](Elem s) { f &= sg.f_set(UElem(s)); });
    out.insert(f);
  }
  return out;
}

std::set<Mask> brute_sets(const Semigroup& sg) {
  Representation rep = regular_representation(sg);
  std::set<Mask> out;
  for (Mask f : brute_f_values(sg)) {
    out.insert(f);  // u = 1
    for (Elem u = 0; u < sg.size(); ++u)
      if ((f & sg.f_set(UElem(u))) == f)
        out.insert(rep.maps[u].image(f));
  }
  return out;
}

void check_witnesses_recompose(const Semigroup& sg, const HullData& hull) {
  Representation rep = regular_representation(sg);
  Elem n = sg.size();
  for (const HullElement& el : hull.elements) {
    REQUIRE_FALSE(el.witnesses.empty());
    for (const HullWitness& w : el.witnesses) {
      PartialBijection f =
          PartialBijection::identity_on(n, hull.f_values[w.f_index]);
      PartialBijection got =
          compose(theta_of(rep, w.u), compose(f, theta_of(rep, w.v).inverse()));
      CHECK(got == el.map);
    }
  }
  for (const ConstructibleSet& cs : hull.sets) {
    REQUIRE_FALSE(cs.witnesses.empty());
    for (const SetWitness& w : cs.witnesses)
      CHECK(theta_of(rep, w.u).image(hull.f_values[w.f_index]) == cs.members);
  }
}

}  // namespace

TEST_CASE("hull of the three-element example") {
  Semigroup sg = three_element();
  HullData hull = build_hull(sg);

  CHECK(hull.f_values == std::vector<Mask>{0, bit(1)});

  std::vector<PartialBijection> expected = {
      PartialBijection::empty(3),
      PartialBijection::identity_on(3, bit(1)),  // on {e}
      PartialBijection::identity_on(3, bit(2)),  // on {s}
      pb(3, {{1, 2}}),                           // e -> s
      pb(3, {{2, 1}}),                           // s -> e
  };
  std::sort(expected.begin(), expected.end());
  REQUIRE(hull.elements.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i)
    CHECK(hull.elements[i].map == expected[i]);

  std::vector<Mask> set_masks;
  for (const auto& cs : hull.sets) set_masks.push_back(cs.members);
  CHECK(set_masks == std::vector<Mask>{0, bit(1), bit(2)});

  std::vector<PartialBijection> closure = hull_closure(sg);
  REQUIRE(closure.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i)
    CHECK(closure[i] == expected[i]);

  check_witnesses_recompose(sg, hull);
}

TEST_CASE("hull of the unital nilpotent example") {
  Semigroup sg = unital_nilpotent();
  HullData hull = build_hull(sg);
  Mask m1 = bit(1), ma = bit(2), maa = bit(3);

  CHECK(hull.f_values ==
        std::vector<Mask>{0, m1, m1 | ma, m1 | ma | maa});

  std::vector<PartialBijection> expected = {
      PartialBijection::empty(4),
      PartialBijection::identity_on(4, 0),
      PartialBijection::identity_on(4, m1),
      PartialBijection::identity_on(4, ma),
      PartialBijection::identity_on(4, maa),
      PartialBijection::identity_on(4, m1 | ma),
      PartialBijection::identity_on(4, ma | maa),
      PartialBijection::identity_on(4, m1 | ma | maa),
      pb(4, {{1, 2}}),          // 1 -> a
      pb(4, {{1, 3}}),          // 1 -> aa
      pb(4, {{2, 1}}),          // a -> 1
      pb(4, {{2, 3}}),          // a -> aa
      pb(4, {{3, 1}}),          // aa -> 1
      pb(4, {{3, 2}}),          // aa -> a
      pb(4, {{1, 2}, {2, 3}}),  // theta_a
      pb(4, {{2, 1}, {3, 2}}),  // theta_a inverse
  };
  // The two empty entries coincide; drop the duplicate.
  std::sort(expected.begin(), expected.end());
  expected.erase(std::unique(expected.begin(), expected.end()),
                 expected.end());
  REQUIRE(expected.size() == 15);
  REQUIRE(hull.elements.size() == 15);
  for (std::size_t i = 0; i < expected.size(); ++i)
    CHECK(hull.elements[i].map == expected[i]);

  std::vector<Mask> set_masks;
  for (const auto& cs : hull.sets) set_masks.push_back(cs.members);
  CHECK(set_masks == std::vector<Mask>{0, m1, ma, m1 | ma, maa, ma | maa,
                                       m1 | ma | maa});

  // Unital model: every constructible set sits inside E of the unit.
  std::vector<char> ideal = e_one_ideal(sg, hull);
  CHECK(std::count(ideal.begin(), ideal.end(), char(1)) == 7);

  check_witnesses_recompose(sg, hull);
}

TEST_CASE("normal forms exhaust the closure when lcms exist") {
  for (const Semigroup& sg :
       {three_element(), unital_nilpotent(), null_three()}) {
    REQUIRE(admits_lcms(sg));
    HullData hull = build_hull(sg);
    std::vector<PartialBijection> closure = hull_closure(sg);
    REQUIRE(hull.elements.size() == closure.size());
    for (std::size_t i = 0; i < closure.size(); ++i)
      CHECK(hull.elements[i].map == closure[i]);
  }
}

TEST_CASE("normal forms stay inside the closure without lcms") {
  Semigroup sg = no_lcm_five();
  REQUIRE_FALSE(admits_lcms(sg));
  HullData hull = build_hull(sg);
  std::vector<PartialBijection> closure = hull_closure(sg);
  CHECK(closure.size() == 5);
  for (const HullElement& el : hull.elements)
    CHECK(std::find(closure.begin(), closure.end(), el.map) != closure.end());
  check_witnesses_recompose(sg, hull);
}

TEST_CASE("degenerate hull of a null semigroup") {
  Semigroup sg = null_three();
  HullData hull = build_hull(sg);
  CHECK(hull.f_values == std::vector<Mask>{0});
  REQUIRE(hull.elements.size() == 1);
  CHECK(hull.elements[0].map == PartialBijection::empty(3));
  REQUIRE(hull.elements[0].witnesses.size() == 1);
  CHECK(hull.elements[0].witnesses[0].u.is_unit());
  CHECK(hull.elements[0].witnesses[0].v.is_unit());
  CHECK(hull.elements[0].witnesses[0].f_index == 0);
  REQUIRE(hull.sets.size() == 1);
  CHECK(hull.sets[0].members == 0);
  CHECK(e_one_ideal(sg, hull) == std::vector<char>{1});
}

TEST_CASE("constructible data agrees with the exhaustive witness scan") {
  for (const Semigroup& sg : {three_element(), unital_nilpotent(),
                              null_three(), no_lcm_five()}) {
    HullData hull = build_hull(sg);
    std::set<Mask> fs = brute_f_values(sg);
    std::set<Mask> got_f(hull.f_values.begin(), hull.f_values.end());
    CHECK(got_f == fs);

    std::set<Mask> ss = brute_sets(sg);
    std::set<Mask> got_s;
    for (const auto& cs : hull.sets) got_s.insert(cs.members);
    CHECK(got_s == ss);

    // Stored witnesses are the maximal ones.
    for (std::size_t i = 0; i < hull.f_values.size(); ++i) {
      const LambdaSet& lam = hull.f_witnesses[i];
      CHECK(lam.unit);
      Mask expect = 0;
      for (Elem s = 0; s < sg.size(); ++s)
        if ((hull.f_values[i] & sg.f_set(UElem(s))) == hull.f_values[i])
          expect |= bit(s);
      CHECK(lam.elems == expect);
    }
  }
}

TEST_CASE("index lookups") {
  Semigroup sg = unital_nilpotent();
  HullData hull = build_hull(sg);
  CHECK(hull.f_index(0) == 0);
  CHECK(hull.f_index(bit(1)) == 1);
  CHECK_FALSE(hull.f_index(bit(2)).has_value());
  CHECK(hull.set_index(bit(2)).has_value());
  CHECK_FALSE(hull.set_index(bit(1) | bit(3)).has_value());
  CHECK(hull.element_index(PartialBijection::empty(4)) == 0);
  CHECK(hull.element_index(pb(4, {{1, 1}})).has_value());
  // The transposition of 1 and a is not a normal form.
  CHECK_FALSE(hull.element_index(pb(4, {{1, 2}, {2, 1}})).has_value());
}

TEST_CASE("set names and the cover diagram") {
  Semigroup sg = unital_nilpotent();
  HullData hull = build_hull(sg);
  CHECK(set_name(sg, 0) == "{}");
  CHECK(set_name(sg, bit(1) | bit(2)) == "{1,a}");
  std::string dot = hasse_export(sg, hull);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("{1,a}") != std::string::npos);
  CHECK(dot.find("{a,aa}") != std::string::npos);
  CHECK(dot.find("\"{1,a}\" -> \"{1,a,aa}\"") != std::string::npos);
  // Covers only: the bottom never points straight at the top.
  CHECK(dot.find("\"{}\" -> \"{1,a,aa}\"") == std::string::npos);
}
