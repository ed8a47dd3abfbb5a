#include "ihull/subshift.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "ihull/strings.hpp"
#include "json.hpp"

namespace ihull {

namespace {

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

void require_symbols(const SubshiftSpec& spec, const Word& w,
                     const char* role) {
  for (char c : w)
    if (std::find(spec.alphabet.begin(), spec.alphabet.end(), c) ==
        spec.alphabet.end())
      fail(ErrorKind::InadmissibleWord, std::string(role) + " \"" + w +
                                            "\" uses a symbol outside the "
                                            "alphabet");
}

}  // namespace

SubshiftSpec parse_subshift(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::InvalidDocument, std::string("bad JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("alphabet"))
    fail(ErrorKind::InvalidDocument, "expected an object with \"alphabet\"");
  SubshiftSpec spec;
  if (!doc["alphabet"].is_array() || doc["alphabet"].empty())
    fail(ErrorKind::InvalidSpec, "\"alphabet\" must be a nonempty array");
  for (const auto& sym : doc["alphabet"]) {
    if (!sym.is_string() || sym.get<std::string>().size() != 1)
      fail(ErrorKind::InvalidSpec, "symbols must be single characters");
    char c = sym.get<std::string>()[0];
    if (std::find(spec.alphabet.begin(), spec.alphabet.end(), c) !=
        spec.alphabet.end())
      fail(ErrorKind::InvalidSpec, "duplicate symbol in alphabet");
    spec.alphabet.push_back(c);
  }
  bool has_forbidden = doc.contains("forbidden");
  bool has_language = doc.contains("words");
  if (has_forbidden == has_language)
    fail(ErrorKind::InvalidSpec,
         "exactly one of \"forbidden\" or \"words\" is required");
  auto read_words = [&](const char* key, std::vector<Word>* out) {
    if (!doc[key].is_array())
      fail(ErrorKind::InvalidSpec,
           std::string("\"") + key + "\" must be an array of words");
    for (const auto& w : doc[key]) {
      if (!w.is_string() || w.get<std::string>().empty())
        fail(ErrorKind::InvalidSpec,
             std::string("\"") + key + "\" entries must be nonempty words");
      out->push_back(w.get<std::string>());
      require_symbols(spec, out->back(), key);
    }
  };
  if (has_language) {
    spec.explicit_mode = true;
    read_words("words", &spec.language);
    if (spec.language.empty())
      fail(ErrorKind::InvalidSpec, "\"words\" must be nonempty");
    std::size_t longest = 1;
    for (const Word& w : spec.language) longest = std::max(longest, w.size());
    spec.depth = longest;
  } else {
    read_words("forbidden", &spec.forbidden);
    if (!doc.contains("depth"))
      fail(ErrorKind::InvalidSpec, "forbidden-factor mode requires \"depth\"");
  }
  if (doc.contains("depth")) {
    if (!doc["depth"].is_number_unsigned() ||
        doc["depth"].get<unsigned long long>() < 1)
      fail(ErrorKind::InvalidSpec, "\"depth\" must be a positive integer");
    spec.depth = doc["depth"].get<std::size_t>();
  }
  return spec;
}

std::optional<std::size_t> FollowerAutomaton::symbol_index(char c) const {
  auto it = std::find(alphabet.begin(), alphabet.end(), c);
  if (it == alphabet.end()) return std::nullopt;
  return static_cast<std::size_t>(it - alphabet.begin());
}

std::optional<std::size_t> FollowerAutomaton::run(std::size_t from,
                                                  const Word& w) const {
  std::size_t q = from;
  for (char c : w) {
    auto sym = symbol_index(c);
    if (!sym) return std::nullopt;
    std::int32_t next = transitions[q][*sym];
    if (next < 0) return std::nullopt;
    q = static_cast<std::size_t>(next);
  }
  return q;
}

bool FollowerAutomaton::avoids(const Word& w) const {
  return run(0, w).has_value();
}

bool FollowerAutomaton::admissible(const Word& w) const {
  auto q = run(0, w);
  return q && trim[*q];
}

FollowerAutomaton follower_automaton(const SubshiftSpec& spec) {
  if (spec.explicit_mode)
    fail(ErrorKind::ExplicitLanguageUnsupported,
         "explicit languages carry no factor-avoidance automaton");
  FollowerAutomaton fa;
  fa.alphabet = spec.alphabet;
  std::size_t memory = 0;  // m - 1 where m is the longest forbidden factor
  for (const Word& f : spec.forbidden) {
    if (f.empty())
      fail(ErrorKind::InvalidSpec, "forbidden factors must be nonempty");
    require_symbols(spec, f, "forbidden factor");
    memory = std::max(memory, f.size() - 1);
  }

  std::map<Word, std::size_t> index;
  auto intern = [&](const Word& w) {
    auto [it, fresh] = index.emplace(w, fa.states.size());
    if (fresh) {
      fa.states.push_back(w);
      fa.transitions.emplace_back(spec.alphabet.size(), -1);
    }
    return it->second;
  };
  intern(Word{});
  // BFS over suffix states; a step dies iff it completes a forbidden factor.
  for (std::size_t q = 0; q < fa.states.size(); ++q) {
    for (std::size_t a = 0; a < spec.alphabet.size(); ++a) {
      Word ext = fa.states[q] + spec.alphabet[a];
      bool dead = false;
      for (const Word& f : spec.forbidden)
        if (f.size() <= ext.size() &&
            ext.compare(ext.size() - f.size(), f.size(), f) == 0)
          dead = true;
      if (dead) continue;
      Word suffix = ext.size() > memory
                        ? ext.substr(ext.size() - memory)
                        : ext;
      fa.transitions[q][a] = static_cast<std::int32_t>(intern(suffix));
    }
  }

  // Trim: a state survives iff an infinite run starts there, decided by
  // iterated removal of states with no remaining successor.
  std::vector<char> alive(fa.states.size(), 1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t q = 0; q < fa.states.size(); ++q) {
      if (!alive[q]) continue;
      bool out = false;
      for (std::int32_t next : fa.transitions[q])
        if (next >= 0 && alive[static_cast<std::size_t>(next)]) out = true;
      if (!out) {
        alive[q] = 0;
        changed = true;
      }
    }
  }
  fa.trim.assign(alive.begin(), alive.end());
  return fa;
}

std::vector<Word> build_language(const SubshiftSpec& spec, std::size_t n) {
  if (n < 1) fail(ErrorKind::InvalidSpec, "depth must be at least 1");
  std::vector<Word> out;
  if (spec.explicit_mode) {
    std::set<Word> members(spec.language.begin(), spec.language.end());
    for (const Word& w : members) {
      if (w.size() > n)
        fail(ErrorKind::InvalidSpec,
             "explicit word \"" + w + "\" exceeds the depth");
      // Factor-closed: every prefix and suffix of a member is a member.
      for (std::size_t len = 1; len < w.size(); ++len) {
        if (!members.count(w.substr(0, len)))
          fail(ErrorKind::NotFactorClosed,
               "prefix \"" + w.substr(0, len) + "\" of \"" + w +
                   "\" is missing");
        if (!members.count(w.substr(w.size() - len)))
          fail(ErrorKind::NotFactorClosed,
               "suffix \"" + w.substr(w.size() - len) + "\" of \"" + w +
                   "\" is missing");
      }
    }
    out.assign(members.begin(), members.end());
  } else {
    FollowerAutomaton fa = follower_automaton(spec);
    // Grow words breadth-first; a prefix that already fails avoidance or
    // extendability admits no admissible extension, so pruning is safe.
    std::deque<std::pair<Word, std::size_t>> queue;
    if (fa.trim[0]) queue.emplace_back(Word{}, 0);
    while (!queue.empty()) {
      auto [w, q] = queue.front();
      queue.pop_front();
      if (!w.empty()) out.push_back(w);
      if (w.size() == n) continue;
      for (std::size_t a = 0; a < spec.alphabet.size(); ++a) {
        std::int32_t next = fa.transitions[q][a];
        if (next >= 0 && fa.trim[static_cast<std::size_t>(next)])
          queue.emplace_back(w + spec.alphabet[a],
                             static_cast<std::size_t>(next));
      }
    }
  }
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

Semigroup language_semigroup(const SubshiftSpec& spec, std::size_t n) {
  std::vector<Word> words = build_language(spec, n);
  if (words.size() + 1 > kMaxElements)
    fail(ErrorKind::CarrierTooLarge,
         "language has " + std::to_string(words.size()) +
             " words; the carrier limit is " + std::to_string(kMaxElements));

  std::string zero_name;
  for (const char* candidate : {"0", "zero", "_zero_"}) {
    if (std::find(words.begin(), words.end(), candidate) == words.end()) {
      zero_name = candidate;
      break;
    }
  }
  if (zero_name.empty())
    fail(ErrorKind::InvalidSpec, "no available zero name");

  std::vector<std::string> names;
  names.push_back(zero_name);
  names.insert(names.end(), words.begin(), words.end());

  std::map<Word, Elem> of_word;
  for (std::size_t i = 0; i < words.size(); ++i)
    of_word[words[i]] = static_cast<Elem>(i + 1);

  Elem m = static_cast<Elem>(names.size());
  std::vector<Elem> table(static_cast<std::size_t>(m) * m, 0);
  for (Elem i = 1; i < m; ++i)
    for (Elem j = 1; j < m; ++j) {
      Word cat = words[i - 1] + words[j - 1];
      auto it = of_word.find(cat);
      if (it != of_word.end()) table[i * m + j] = it->second;
    }
  return Semigroup(std::move(names), 0, std::move(table));
}

std::vector<Word> semigroup_words(const Semigroup& sg) {
  std::vector<Word> words(sg.size());
  for (Elem i = 0; i < sg.size(); ++i)
    if (!sg.is_zero(i)) words[i] = sg.name(i);
  return words;
}

WordStringBridge word_string_bridge(const Semigroup& sg) {
  WordStringBridge bridge;
  std::vector<Word> words = semigroup_words(sg);
  std::size_t depth = 0;
  for (const Word& w : words) depth = std::max(depth, w.size());

  std::map<Word, Elem> of_word;
  for (Elem i = 0; i < sg.size(); ++i)
    if (!sg.is_zero(i)) of_word[words[i]] = i;

  MaximalReport max_report = maximal_strings(sg);
  std::set<Mask> seen;
  for_each_bit(sg.nonzero_mask(), [&](Elem i) {
    const Word& w = words[i];
    BridgeEntry entry;
    entry.element = i;
    for (std::size_t len = 1; len <= w.size(); ++len) {
      auto it = of_word.find(w.substr(0, len));
      if (it != of_word.end()) entry.prefix_string |= bit(it->second);
    }
    entry.open = is_open_string(sg, entry.prefix_string);
    entry.maximal =
        std::find(max_report.maximal.begin(), max_report.maximal.end(),
                  entry.prefix_string) != max_report.maximal.end();
    entry.full_depth = w.size() == depth;
    seen.insert(entry.prefix_string);
    bridge.entries.push_back(entry);
  });

  std::vector<Mask> strings = all_strings(sg);
  bridge.bijective =
      bridge.entries.size() == strings.size() &&
      std::equal(seen.begin(), seen.end(), strings.begin(), strings.end());
  return bridge;
}

bool char_eval_by_word(const SubshiftSpec& spec, const Word& omega,
                       const std::optional<Word>& u,
                       const std::vector<Word>& lambda) {
  if (spec.explicit_mode)
    fail(ErrorKind::ExplicitLanguageUnsupported,
         "character evaluation by word needs the factor-avoidance automaton");
  if (lambda.empty())
    fail(ErrorKind::EmptyLambda, "the witness word set is empty");
  FollowerAutomaton fa = follower_automaton(spec);
  require_symbols(spec, omega, "word");
  if (omega.empty() || !fa.admissible(omega))
    fail(ErrorKind::InadmissibleWord, "\"" + omega + "\" is not admissible");
  for (const Word& t : lambda) {
    require_symbols(spec, t, "witness word");
    if (!fa.admissible(t))
      fail(ErrorKind::InadmissibleWord, "\"" + t + "\" is not admissible");
  }
  Word eta;
  if (u) {
    if (std::find(lambda.begin(), lambda.end(), *u) == lambda.end())
      fail(ErrorKind::BadLambda, "\"" + *u + "\" is not a witness word");
    // A finite stand-in that equals u leaves no extension evidence; the
    // truncated model gives 0 there as well.
    if (u->size() >= omega.size() || omega.compare(0, u->size(), *u) != 0)
      return false;
    eta = omega.substr(u->size());
  } else {
    eta = omega;
  }
  for (const Word& t : lambda)
    if (!fa.admissible(t + eta)) return false;
  return true;
}

InfinitenessResult constructible_infinite(const SubshiftSpec& spec,
                                          const std::vector<Word>& lambda,
                                          const std::optional<Word>& u) {
  if (spec.explicit_mode)
    fail(ErrorKind::ExplicitLanguageUnsupported,
         "infiniteness needs the factor-avoidance automaton");
  if (lambda.empty())
    fail(ErrorKind::EmptyLambda, "the witness word set is empty");
  if (u && std::find(lambda.begin(), lambda.end(), *u) == lambda.end())
    fail(ErrorKind::BadLambda, "\"" + *u + "\" is not a witness word");
  FollowerAutomaton fa = follower_automaton(spec);

  // Component start states: one for membership of x itself, one per t ∈ Λ
  // for membership of tx. A dead or non-extendable component start forces
  // F_Λ = ∅ outright.
  std::set<std::size_t> starts{0};
  for (const Word& t : lambda) {
    require_symbols(spec, t, "witness word");
    auto q = fa.run(0, t);
    if (!q || !fa.trim[*q]) return {};
    starts.insert(*q);
  }
  if (!fa.trim[0]) return {};

  using Tuple = std::vector<std::size_t>;
  Tuple start(starts.begin(), starts.end());
  std::map<Tuple, std::size_t> index;
  std::vector<Tuple> tuples;
  std::vector<std::vector<std::int32_t>> next;
  std::vector<char> accepting;
  auto intern = [&](const Tuple& t) {
    auto [it, fresh] = index.emplace(t, tuples.size());
    if (fresh) {
      tuples.push_back(t);
      next.emplace_back(spec.alphabet.size(), -1);
      bool all_trim = std::all_of(t.begin(), t.end(),
                                  [&](std::size_t q) { return fa.trim[q]; });
      accepting.push_back(all_trim ? 1 : 0);
    }
    return it->second;
  };
  intern(start);
  for (std::size_t p = 0; p < tuples.size(); ++p) {
    for (std::size_t a = 0; a < spec.alphabet.size(); ++a) {
      Tuple stepped;
      bool ok = true;
      for (std::size_t q : tuples[p]) {
        std::int32_t r = fa.transitions[q][a];
        if (r < 0) {
          ok = false;
          break;
        }
        stepped.push_back(static_cast<std::size_t>(r));
      }
      if (!ok) continue;
      std::sort(stepped.begin(), stepped.end());
      stepped.erase(std::unique(stepped.begin(), stepped.end()),
                    stepped.end());
      next[p][a] = static_cast<std::int32_t>(intern(stepped));
    }
  }

  // Useful = co-reachable to an accepting product state.
  std::size_t m = tuples.size();
  std::vector<char> useful(m, 0);
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t p = 0; p < m; ++p) {
      if (useful[p]) continue;
      bool ok = accepting[p] != 0;
      for (std::int32_t r : next[p])
        if (r >= 0 && useful[static_cast<std::size_t>(r)]) ok = true;
      if (ok) {
        useful[p] = 1;
        grew = true;
      }
    }
  }
  if (!useful[0]) return {};

  // A cycle within the useful part makes the accepted set infinite.
  // Kahn elimination: survivors have a successor forever, hence a cycle.
  std::vector<char> on_cycle_side(useful.begin(), useful.end());
  grew = true;
  while (grew) {
    grew = false;
    for (std::size_t p = 0; p < m; ++p) {
      if (!on_cycle_side[p]) continue;
      bool out = false;
      for (std::int32_t r : next[p])
        if (r >= 0 && on_cycle_side[static_cast<std::size_t>(r)]) out = true;
      if (!out) {
        on_cycle_side[p] = 0;
        grew = true;
      }
    }
  }
  // Every product state is reachable by construction, so one survivor
  // yields unboundedly long accepted words.
  InfinitenessResult result;
  for (std::size_t p = 0; p < m; ++p)
    if (on_cycle_side[p]) {
      result.kind = InfinitenessResult::Kind::Infinite;
      return result;
    }

  // Acyclic useful part: enumerate the finite member set outright.
  Word prefix = u ? *u : Word{};
  std::vector<std::pair<std::size_t, Word>> stack{{0, Word{}}};
  while (!stack.empty()) {
    auto [p, w] = stack.back();
    stack.pop_back();
    if (!w.empty() && accepting[p])
      result.members.push_back(prefix + w);
    for (std::size_t a = 0; a < spec.alphabet.size(); ++a) {
      std::int32_t r = next[p][a];
      if (r >= 0 && useful[static_cast<std::size_t>(r)])
        stack.emplace_back(static_cast<std::size_t>(r),
                           w + spec.alphabet[a]);
    }
  }
  std::sort(result.members.begin(), result.members.end(), shortlex_less);
  result.kind = result.members.empty() ? InfinitenessResult::Kind::Empty
                                       : InfinitenessResult::Kind::Finite;
  return result;
}

GroundUltraReport ground_ultra_report(const SubshiftSpec& spec, std::size_t n,
                                      std::size_t lambda_bound) {
  GroundUltraReport report;
  report.lambda_bound = lambda_bound;
  report.depth = n;
  report.not_a_subshift = spec.explicit_mode;

  Semigroup sg = language_semigroup(spec, n);
  SpectrumData data = build_spectrum(sg);
  std::vector<Word> words = semigroup_words(sg);

  if (!spec.explicit_mode) {
    std::vector<Word> pool;
    for (Elem i = 0; i < sg.size(); ++i)
      if (!sg.is_zero(i)) pool.push_back(words[i]);
    bool all_infinite = true;
    std::vector<std::size_t> pick;
    auto sweep = [&](auto&& self, std::size_t from) -> void {
      if (!pick.empty()) {
        std::vector<Word> lam;
        for (std::size_t k : pick) lam.push_back(pool[k]);
        InfinitenessResult r =
            constructible_infinite(spec, lam, std::nullopt);
        if (r.kind == InfinitenessResult::Kind::Finite && all_infinite) {
          all_infinite = false;
          report.finite_witness_lambda = lam;
          report.finite_witness_members = r.members;
        }
      }
      if (pick.size() == lambda_bound) return;
      for (std::size_t k = from; k < pool.size(); ++k) {
        pick.push_back(k);
        self(self, k + 1);
        pick.pop_back();
      }
    };
    sweep(sweep, 0);
    report.cond_i = all_infinite;
    // Each constructible set is a θ_u-image of some F_Λ with u ∈ Λ, and
    // θ_u is injective on it, so the cardinality verdicts coincide.
    report.cond_ii = all_infinite;
  }

  // (iii): the range idempotents of the letters meet every nonzero set.
  report.cond_iii = true;
  Mask letters = 0;
  for_each_bit(sg.nonzero_mask(), [&](Elem i) {
    if (words[i].size() == 1) letters |= bit(i);
  });
  for (const auto& cs : data.hull.sets) {
    if (cs.members == 0) continue;
    bool covered = false;
    for_each_bit(letters, [&](Elem a) {
      if (cs.members & sg.e_set(UElem(a))) covered = true;
    });
    if (!covered && report.cond_iii) {
      report.cond_iii = false;
      report.uncovered_set = cs.members;
    }
  }

  // (iv): no ultra-character with empty string.
  report.cond_iv = true;
  for (const Character& phi : data.chars) {
    if (!is_ultra(data.hull, phi)) continue;
    if (sigma_of_char(sg, phi) == 0 && report.cond_iv) {
      report.cond_iv = false;
      report.ground_ultra_min = phi.min;
    }
  }

  // (v): every ultra-character comes from a full-depth word, the finite
  // stand-in for an infinite admissible word.
  report.cond_v = true;
  std::vector<Character> full_depth_chars;
  for_each_bit(sg.nonzero_mask(), [&](Elem i) {
    if (words[i].size() != n) return;
    Mask sigma = divisors(sg, i);
    try {
      full_depth_chars.push_back(phi_of_string(sg, data, sigma));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::DegenerateString) throw;
    }
  });
  for (const Character& phi : data.chars) {
    if (!is_ultra(data.hull, phi)) continue;
    bool matched =
        std::find(full_depth_chars.begin(), full_depth_chars.end(), phi) !=
        full_depth_chars.end();
    if (!matched && report.cond_v) {
      report.cond_v = false;
      report.unmatched_ultra_min = phi.min;
    }
  }

  std::vector<bool> verdicts{report.cond_iii, report.cond_iv, report.cond_v};
  if (report.cond_i) verdicts.push_back(*report.cond_i);
  if (report.cond_ii) verdicts.push_back(*report.cond_ii);
  report.truncation_disagreement =
      std::adjacent_find(verdicts.begin(), verdicts.end(),
                         std::not_equal_to<>()) != verdicts.end();
  return report;
}

UniquenessReport normal_form_uniqueness(const HullData& hull) {
  UniquenessReport report;
  for (const HullElement& h : hull.elements) {
    if (h.map.domain() == 0) continue;  // the zero of the hull
    for (std::size_t i = 1; i < h.witnesses.size(); ++i) {
      const HullWitness& a = h.witnesses.front();
      const HullWitness& b = h.witnesses[i];
      if (a.u != b.u || a.v != b.v || a.f_index != b.f_index) {
        report.unique = false;
        if (!report.witness) report.witness = {a, b};
      }
    }
  }
  return report;
}

}  // namespace ihull
