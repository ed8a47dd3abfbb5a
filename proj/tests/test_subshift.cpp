#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <functional>
#include <string>

#include "fixtures.hpp"
#include "ihull/subshift.hpp"

using namespace ihull;
using namespace ihull::fixtures;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidDocument;
}

}  // namespace

TEST_CASE("parsing subshift documents") {
  SubshiftSpec spec = parse_subshift(R"({
    "alphabet": ["0", "1"], "forbidden": ["11"], "depth": 4
  })");
  CHECK_FALSE(spec.explicit_mode);
  CHECK(spec.alphabet == std::vector<char>{'0', '1'});
  CHECK(spec.forbidden == std::vector<Word>{"11"});
  CHECK(spec.depth == 4);

  spec = parse_subshift(R"({
    "alphabet": ["a", "b"], "words": ["a", "b", "aa", "ba"]
  })");
  CHECK(spec.explicit_mode);
  CHECK(spec.depth == 2);  // defaults to the longest word

  // Defects: empty factor, missing depth, multi-char symbol, both sources.
  CHECK_THROWS_AS(parse_subshift(R"({
    "alphabet": ["a"], "forbidden": [""], "depth": 2
  })"),
                  Error);
  CHECK_THROWS_AS(parse_subshift(R"({
    "alphabet": ["a"], "forbidden": ["aa"]
  })"),
                  Error);
  CHECK_THROWS_AS(parse_subshift(R"({
    "alphabet": ["ab"], "forbidden": ["aa"], "depth": 2
  })"),
                  Error);
  CHECK_THROWS_AS(parse_subshift(R"({
    "alphabet": ["a"], "forbidden": ["aa"], "words": ["a"], "depth": 2
  })"),
                  Error);
}

TEST_CASE("follower automaton decides avoidance and admissibility") {
  FollowerAutomaton golden = follower_automaton(golden_mean_spec());
  CHECK(golden.avoids("0101"));
  CHECK_FALSE(golden.avoids("0110"));
  CHECK(golden.admissible("10"));
  CHECK_FALSE(golden.admissible("11"));
  CHECK(golden.symbol_index('1') == 1);
  CHECK_FALSE(golden.symbol_index('x').has_value());
  CHECK(golden.run(0, "11") == std::nullopt);

  FollowerAutomaton norep = follower_automaton(no_repetition_spec());
  // "aa" avoids every forbidden factor but cannot be extended.
  CHECK(norep.avoids("aa"));
  CHECK_FALSE(norep.admissible("aa"));
  CHECK(norep.admissible("abc"));
  CHECK_FALSE(norep.avoids("aba"));

  FollowerAutomaton full = follower_automaton(full_shift_spec());
  CHECK(full.states == std::vector<Word>{""});
  CHECK(full.admissible("0101010"));
}

TEST_CASE("language enumeration in shortlex order") {
  std::vector<Word> full = build_language(full_shift_spec(), 3);
  CHECK(full.size() == 14);
  CHECK(full.front() == "0");
  CHECK(full.back() == "111");

  std::vector<Word> golden = build_language(golden_mean_spec(), 4);
  CHECK(golden.size() == 18);
  CHECK(std::find(golden.begin(), golden.end(), "11") == golden.end());
  CHECK(std::find(golden.begin(), golden.end(), "1010") != golden.end());
  CHECK(std::is_sorted(golden.begin(), golden.end(),
                       [](const Word& a, const Word& b) {
                         return a.size() != b.size() ? a.size() < b.size()
                                                     : a < b;
                       }));

  // Non-extendable words are not part of the language.
  std::vector<Word> norep = build_language(no_repetition_spec(), 3);
  CHECK(norep.size() == 15);
  CHECK(std::find(norep.begin(), norep.end(), "aa") == norep.end());

  std::vector<Word> listed = build_language(two_prefix_spec(), 2);
  CHECK(listed == std::vector<Word>{"a", "b", "aa", "ba"});

  SubshiftSpec open_list = two_prefix_spec();
  open_list.language = {"ab", "a"};  // "b" is a factor but not a word
  CHECK(kind_of([&] { build_language(open_list, 2); }) ==
        ErrorKind::NotFactorClosed);
}

TEST_CASE("the language semigroup truncates concatenation") {
  SubshiftSpec spec = golden_mean_spec();
  Semigroup sg = language_semigroup(spec, spec.depth);
  CHECK(sg.size() == 19);
  CHECK(sg.zero() == 0);
  CHECK(sg.name(0) == "zero");  // "0" is a word here
  CHECK(sg.name(1) == "0");

  Elem one = index_of(sg, "1"), ten = index_of(sg, "10");
  CHECK(sg.product(one, one) == 0);  // "11" is forbidden
  CHECK(sg.product(ten, ten) == index_of(sg, "1010"));
  CHECK(sg.product(index_of(sg, "0"), ten) == index_of(sg, "010"));
  CHECK(sg.product(index_of(sg, "010"), ten) == 0);  // length 5 > depth
  CHECK(sg.product(index_of(sg, "01"), one) == 0);   // "011" is forbidden

  Semigroup tp = language_semigroup(two_prefix_spec(), 2);
  CHECK(tp.name(0) == "0");
  CHECK(semigroup_words(tp) ==
        std::vector<Word>{"", "a", "b", "aa", "ba"});

  PropertyReport pr = classify(sg);
  CHECK(pr.zero_left_cancellative);
  CHECK(pr.zero_right_cancellative);
  // Truncation kills categoricity and reductivity: all full-depth rows
  // are zero.
  CHECK_FALSE(pr.categorical_at_zero);
  CHECK_FALSE(pr.right_reductive);
  CHECK_FALSE(pr.has_right_local_units);
}

TEST_CASE("divisibility in a language semigroup is the prefix order") {
  Semigroup sg = language_semigroup(golden_mean_spec(), 4);
  std::vector<Word> words = semigroup_words(sg);
  for (Elem i = 1; i < sg.size(); ++i)
    for (Elem j = 1; j < sg.size(); ++j) {
      bool prefix = words[j].size() >= words[i].size() &&
                    words[j].compare(0, words[i].size(), words[i]) == 0;
      CHECK(divides(sg, UElem(i), UElem(j)) == prefix);
    }
}

TEST_CASE("words map to prefix strings bijectively") {
  for (const SubshiftSpec& spec :
       {two_prefix_spec(), length_two_spec(), no_repetition_spec(),
        full_shift_spec(), golden_mean_spec()}) {
    Semigroup sg = language_semigroup(spec, spec.depth);
    WordStringBridge bridge = word_string_bridge(sg);
    CHECK(bridge.bijective);
    CHECK(bridge.entries.size() == sg.size() - 1);
    std::vector<Word> words = semigroup_words(sg);
    for (const BridgeEntry& e : bridge.entries) {
      CHECK(e.prefix_string == divisors(sg, e.element));
      // The truncated model has no open strings at all.
      CHECK_FALSE(e.open);
      // Full depth words are exactly the maximal ones here: every shorter
      // admissible word of these fixtures extends.
      CHECK(e.maximal == e.full_depth);
      CHECK(e.full_depth == (words[e.element].size() == spec.depth));
    }
  }
}

TEST_CASE("character evaluation by prefix and extension") {
  SubshiftSpec golden = golden_mean_spec();
  // eta = "01": appending to "0" stays admissible.
  CHECK(char_eval_by_word(golden, "01", std::nullopt, {"0"}));
  CHECK(char_eval_by_word(golden, "01", std::nullopt, {"1"}));
  // eta = "1" after "1" would produce the forbidden factor.
  CHECK_FALSE(char_eval_by_word(golden, "1", std::nullopt, {"1"}));
  CHECK(char_eval_by_word(golden, "1", std::nullopt, {"0"}));
  CHECK(char_eval_by_word(golden, "01", {"0"}, {"0"}));
  CHECK_FALSE(char_eval_by_word(golden, "01", {"0"}, {"0", "1"}));
  // u equal to omega leaves no extension evidence.
  CHECK_FALSE(char_eval_by_word(golden, "01", {"01"}, {"01"}));
  // u not a prefix of omega.
  CHECK_FALSE(char_eval_by_word(golden, "01", {"1"}, {"1", "0"}));

  CHECK(kind_of([&] { char_eval_by_word(golden, "01", {"0"}, {"1"}); }) ==
        ErrorKind::BadLambda);
  CHECK(kind_of([&] { char_eval_by_word(golden, "11", std::nullopt, {"0"}); }) ==
        ErrorKind::InadmissibleWord);
  CHECK(kind_of([&] { char_eval_by_word(golden, "0", std::nullopt, {}); }) ==
        ErrorKind::EmptyLambda);
  CHECK(kind_of([&] {
          char_eval_by_word(two_prefix_spec(), "a", std::nullopt, {"a"});
        }) == ErrorKind::ExplicitLanguageUnsupported);
}

TEST_CASE("infiniteness of untruncated constructible sets") {
  SubshiftSpec norep = no_repetition_spec();
  InfinitenessResult r = constructible_infinite(norep, {"a", "b"},
                                                std::nullopt);
  CHECK(r.kind == InfinitenessResult::Kind::Finite);
  CHECK(r.members == std::vector<Word>{"c"});

  r = constructible_infinite(norep, {"a", "b"}, {"a"});
  CHECK(r.kind == InfinitenessResult::Kind::Finite);
  CHECK(r.members == std::vector<Word>{"ac"});

  r = constructible_infinite(norep, {"ab", "ac"}, std::nullopt);
  CHECK(r.kind == InfinitenessResult::Kind::Empty);
  CHECK(r.members.empty());

  // "aa" avoids the factors but has no future: the set is empty.
  r = constructible_infinite(norep, {"aa"}, std::nullopt);
  CHECK(r.kind == InfinitenessResult::Kind::Empty);

  CHECK(constructible_infinite(norep, {"a"}, std::nullopt).kind ==
        InfinitenessResult::Kind::Infinite);
  CHECK(constructible_infinite(full_shift_spec(), {"0"}, std::nullopt).kind ==
        InfinitenessResult::Kind::Infinite);
  CHECK(constructible_infinite(golden_mean_spec(), {"1"}, std::nullopt).kind ==
        InfinitenessResult::Kind::Infinite);

  CHECK(kind_of([&] { constructible_infinite(norep, {"a"}, {"b"}); }) ==
        ErrorKind::BadLambda);
  CHECK(kind_of([&] { constructible_infinite(norep, {}, std::nullopt); }) ==
        ErrorKind::EmptyLambda);
  CHECK(kind_of([&] {
          constructible_infinite(two_prefix_spec(), {"a"}, std::nullopt);
        }) == ErrorKind::ExplicitLanguageUnsupported);
}

TEST_CASE("ground-ultra verdicts split under truncation on the full shift") {
  GroundUltraReport rep = ground_ultra_report(full_shift_spec(), 3);
  Semigroup sg = language_semigroup(full_shift_spec(), 3);
  CHECK_FALSE(rep.not_a_subshift);
  REQUIRE(rep.cond_i.has_value());
  REQUIRE(rep.cond_ii.has_value());
  CHECK(*rep.cond_i);
  CHECK(*rep.cond_ii);
  CHECK_FALSE(rep.cond_iii);
  CHECK_FALSE(rep.cond_iv);
  CHECK_FALSE(rep.cond_v);
  CHECK(rep.truncation_disagreement);
  CHECK(rep.ground_ultra_min == mask_of(sg, {"0", "1"}));
  CHECK(rep.unmatched_ultra_min == mask_of(sg, {"0", "1"}));
  CHECK(rep.uncovered_set.has_value());
  // The witness really avoids every letter range.
  for (Elem i = 1; i < sg.size(); ++i)
    if (sg.name(i).size() == 1)
      CHECK((*rep.uncovered_set & sg.e_set(UElem(i))) == 0);
}

TEST_CASE("a finite constructible set breaks the first verdict") {
  GroundUltraReport rep = ground_ultra_report(no_repetition_spec(), 3);
  REQUIRE(rep.cond_i.has_value());
  CHECK_FALSE(*rep.cond_i);
  CHECK_FALSE(*rep.cond_ii);
  CHECK(rep.finite_witness_lambda == std::vector<Word>{"a", "b"});
  CHECK(rep.finite_witness_members == std::vector<Word>{"c"});
  // All five verdicts fail here, so they agree.
  CHECK_FALSE(rep.cond_iii);
  CHECK_FALSE(rep.cond_iv);
  CHECK_FALSE(rep.cond_v);
  CHECK_FALSE(rep.truncation_disagreement);
}

TEST_CASE("explicit languages are flagged as non-subshifts") {
  GroundUltraReport rep = ground_ultra_report(two_prefix_spec(), 2);
  CHECK(rep.not_a_subshift);
  CHECK_FALSE(rep.cond_i.has_value());
  CHECK_FALSE(rep.cond_ii.has_value());
  Semigroup sg = language_semigroup(two_prefix_spec(), 2);
  CHECK_FALSE(rep.cond_iii);
  CHECK(rep.uncovered_set == mask_of(sg, {"a"}));
  CHECK_FALSE(rep.cond_iv);
  CHECK(rep.ground_ultra_min == mask_of(sg, {"a"}));
  CHECK_FALSE(rep.cond_v);
  CHECK_FALSE(rep.truncation_disagreement);
}

TEST_CASE("normal forms are unique over language semigroups") {
  for (const SubshiftSpec& spec :
       {two_prefix_spec(), no_repetition_spec(), full_shift_spec(),
        golden_mean_spec()}) {
    Semigroup sg = language_semigroup(spec, spec.depth);
    UniquenessReport rep = normal_form_uniqueness(build_hull(sg));
    CHECK(rep.unique);
    CHECK_FALSE(rep.witness.has_value());
  }
  // A unit collapses distinct witness triples onto one map.
  UniquenessReport rep =
      normal_form_uniqueness(build_hull(unital_nilpotent()));
  CHECK_FALSE(rep.unique);
  REQUIRE(rep.witness.has_value());
  CHECK((rep.witness->first.u != rep.witness->second.u ||
         rep.witness->first.v != rep.witness->second.v ||
         rep.witness->first.f_index != rep.witness->second.f_index));
}
