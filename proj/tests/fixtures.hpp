#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "ihull/semigroup.hpp"
#include "ihull/subshift.hpp"

namespace ihull::fixtures {

// {0, e, s}: ee = e, se = s, everything else zero. All five table
// predicates hold; s is prime but not irreducible.
inline Semigroup three_element() {
  return Semigroup({"0", "e", "s"}, 0,
                   {0, 0, 0,
                    0, 1, 0,
                    0, 2, 0});
}

// {0, 1, a, aa} with a^3 = 0. Six nonzero constructible sets and three
// strings; the standard small unital example.
inline Semigroup unital_nilpotent() {
  return Semigroup({"0", "1", "a", "aa"}, 0,
                   {0, 0, 0, 0,
                    0, 1, 2, 3,
                    0, 2, 3, 0,
                    0, 3, 0, 0});
}

// {0, x, y} with every product zero. 0-left-cancellative vacuously; the
// lcm of (x, y) is witnessed by zero alone.
inline Semigroup null_three() {
  return Semigroup({"0", "x", "y"}, 0,
                   {0, 0, 0,
                    0, 0, 0,
                    0, 0, 0});
}

// {0, s, t, p, q}: ss = p, st = q, ts = p, tt = q, all else zero.
// sS and tS share the value set {0, p, q}, but no element generates it,
// so the pair (s, t) has no lcm.
inline Semigroup no_lcm_five() {
  return Semigroup({"0", "s", "t", "p", "q"}, 0,
                   {0, 0, 0, 0, 0,
                    0, 3, 4, 0, 0,
                    0, 3, 4, 0, 0,
                    0, 0, 0, 0, 0,
                    0, 0, 0, 0, 0});
}

inline SubshiftSpec two_prefix_spec() {
  SubshiftSpec spec;
  spec.alphabet = {'a', 'b'};
  spec.explicit_mode = true;
  spec.language = {"a", "b", "aa", "ba"};
  spec.depth = 2;
  return spec;
}

inline SubshiftSpec length_two_spec() {
  SubshiftSpec spec;
  spec.alphabet = {'a', 'b', 'c'};
  spec.explicit_mode = true;
  spec.language = {"a", "b", "c", "aa", "ab", "ac", "ba", "bb",
                   "bc", "ca", "cb", "cc"};
  spec.depth = 2;
  return spec;
}

// All length-three windows with a repeated letter are forbidden.
inline SubshiftSpec no_repetition_spec() {
  SubshiftSpec spec;
  spec.alphabet = {'a', 'b', 'c'};
  spec.forbidden = {"aaa", "aab", "aac", "aba", "abb", "aca", "acc",
                    "baa", "bab", "bba", "bbb", "bbc", "bcb", "bcc",
                    "caa", "cac", "cbb", "cbc", "cca", "ccb", "ccc"};
  spec.depth = 3;
  return spec;
}

inline SubshiftSpec full_shift_spec() {
  SubshiftSpec spec;
  spec.alphabet = {'0', '1'};
  spec.depth = 3;
  return spec;
}

inline SubshiftSpec golden_mean_spec() {
  SubshiftSpec spec;
  spec.alphabet = {'0', '1'};
  spec.forbidden = {"11"};
  spec.depth = 4;
  return spec;
}

inline Elem index_of(const Semigroup& sg, const std::string& name) {
  for (Elem i = 0; i < sg.size(); ++i)
    if (sg.name(i) == name) return i;
  throw std::runtime_error("no element named " + name);
}

inline Mask mask_of(const Semigroup& sg,
                    std::initializer_list<std::string> names) {
  Mask m = 0;
  for (const auto& n : names) m |= bit(index_of(sg, n));
  return m;
}

}  // namespace ihull::fixtures
