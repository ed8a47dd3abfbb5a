#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ihull/common.hpp"
#include "ihull/hull.hpp"
#include "ihull/semigroup.hpp"
#include "ihull/spectrum.hpp"

namespace ihull {

// A word over the alphabet; one char per symbol, length >= 1 except where
// a function explicitly admits the empty word.
using Word = std::string;

struct SubshiftSpec {
  std::vector<char> alphabet;
  // Exactly one source: a finite set of forbidden factors, or an explicit
  // finite language given outright.
  bool explicit_mode = false;
  std::vector<Word> forbidden;
  std::vector<Word> language;
  // Truncation depth: products longer than this become zero.
  std::size_t depth = 1;
};

// Parses {"alphabet": [..], "forbidden": [..] | "words": [..],
// "depth": N}; single-char symbols only. "depth" defaults to the longest
// explicit word; it is required in forbidden-factor mode.
SubshiftSpec parse_subshift(const std::string& json_text);

// Deterministic partial automaton whose states are the short suffixes that
// matter for factor avoidance; a word is in the language iff its run stays
// defined and ends in a trim state (one from which a cycle is reachable).
struct FollowerAutomaton {
  std::vector<char> alphabet;
  std::vector<Word> states;  // states[0] is the empty suffix
  // transitions[state][symbol index] = next state, or -1 when the step
  // would complete a forbidden factor.
  std::vector<std::vector<std::int32_t>> transitions;
  std::vector<char> trim;  // per state

  std::optional<std::size_t> symbol_index(char c) const;
  // State after reading w from the given state; nullopt when the run dies.
  std::optional<std::size_t> run(std::size_t from, const Word& w) const;
  bool avoids(const Word& w) const;
  // Avoidance plus right extendability: membership in the full language.
  bool admissible(const Word& w) const;
};

FollowerAutomaton follower_automaton(const SubshiftSpec& spec);

// Words of length 1..N in the language: factor avoidance plus
// right-extendability in forbidden-factor mode, the validated list itself
// in explicit mode. Shortlex order. Throws InvalidSpec, NotFactorClosed.
std::vector<Word> build_language(const SubshiftSpec& spec, std::size_t n);

// The language with a zero adjoined; the product is concatenation when the
// result stays in the depth-N language and zero otherwise. The zero is
// named by the first of "0", "zero", "_zero_" that is not itself a word.
Semigroup language_semigroup(const SubshiftSpec& spec, std::size_t n);

// Element index of each word, per the semigroup built above.
std::vector<Word> semigroup_words(const Semigroup& sg);

struct BridgeEntry {
  Elem element = 0;  // word element index
  Mask prefix_string = 0;  // positive-length prefixes, as element mask
  bool open = false;
  bool maximal = false;
  bool full_depth = false;  // length equals the truncation depth
};

struct WordStringBridge {
  std::vector<BridgeEntry> entries;  // one per word
  bool bijective = false;  // word -> prefix string hits all_strings 1:1
};

// δ_ω = the positive-length prefixes of ω; the map ω ↦ δ_ω is a bijection
// onto the strings of the language semigroup. Open/maximal flags are per
// the truncated model, where full-depth words stand in for infinite ones.
WordStringBridge word_string_bridge(const Semigroup& sg);

// φ_{δ_ω}(θ_u(F_Λ)) by the prefix-and-extension criterion: u is a proper
// prefix of ω (or the unit), and writing ω = uη, every t ∈ Λ has tη in the
// untruncated language. ω and the Λ words must themselves be admissible;
// throws InadmissibleWord. Forbidden-factor mode only
// (ExplicitLanguageUnsupported).
bool char_eval_by_word(const SubshiftSpec& spec, const Word& omega,
                       const std::optional<Word>& u,
                       const std::vector<Word>& lambda);

struct InfinitenessResult {
  enum class Kind { Empty, Finite, Infinite } kind = Kind::Empty;
  // Members of θ_u(F_Λ) in the Finite case.
  std::vector<Word> members;
};

// Decides the untruncated θ_u(F_Λ) = {ux : tx admissible for all t ∈ Λ}
// by intersecting follower constraints into a product automaton: infinite
// iff the useful part has a cycle. u must be the unit or a member of Λ.
// Throws ExplicitLanguageUnsupported, EmptyLambda, BadLambda,
// InadmissibleWord.
InfinitenessResult constructible_infinite(const SubshiftSpec& spec,
                                          const std::vector<Word>& lambda,
                                          const std::optional<Word>& u);

struct GroundUltraReport {
  bool not_a_subshift = false;  // explicit-language input
  std::size_t lambda_bound = 3;
  std::size_t depth = 0;

  // Untruncated, by automaton sweep over Λ up to the bound:
  // (i) every F_Λ is empty or infinite; (ii) the same for the
  // constructible sets θ_u(F_Λ). Unset in explicit mode.
  std::optional<bool> cond_i, cond_ii;
  std::vector<Word> finite_witness_lambda;   // first finite nonempty F_Λ
  std::vector<Word> finite_witness_members;  // its members

  // Depth-N model: (iii) {E_a : a ∈ Σ} meets every nonzero constructible
  // set, (iv) no ground ultra-character, (v) every ultra-character is
  // φ_{δ_ω} with ω of full depth.
  bool cond_iii = false, cond_iv = false, cond_v = false;
  std::optional<Mask> uncovered_set;        // (iii) witness
  std::optional<Mask> ground_ultra_min;     // (iv) witness
  std::optional<Mask> unmatched_ultra_min;  // (v) witness

  // The five verdicts are equivalent for the untruncated object; at finite
  // depth they may split, and this records that they did.
  bool truncation_disagreement = false;
};

GroundUltraReport ground_ultra_report(const SubshiftSpec& spec, std::size_t n,
                                      std::size_t lambda_bound = 3);

struct UniquenessReport {
  bool unique = true;
  // Two witnesses of one hull element that disagree in u, v, or F_Λ.
  std::optional<std::pair<HullWitness, HullWitness>> witness;
};

// Every nonzero hull element has a single normal form: all stored witness
// triples agree in u, v, and the domain value F_Λ.
UniquenessReport normal_form_uniqueness(const HullData& hull);

}  // namespace ihull
