#pragma once

#include <optional>
#include <vector>

#include "ihull/common.hpp"
#include "ihull/hull.hpp"
#include "ihull/representation.hpp"
#include "ihull/semigroup.hpp"

namespace ihull {

struct StringCheck {
  bool ok = false;
  // 1: empty or contains zero; 2: divisor missing; 3: no common multiple.
  int violated_clause = 0;
  // Clause 2: (divisor, member); clause 3: the undirected pair.
  Elem witness_a = 0, witness_b = 0;
};

bool is_string(const Semigroup& sg, Mask sigma, StringCheck* check = nullptr);

// Every string of a finite semigroup is some divisor set δ_s: a finite
// directed set has an internal upper bound s, and hereditarity then forces
// σ = δ_s. Enumerates δ over S′ and deduplicates; sorted as masks.
std::vector<Mask> all_strings(const Semigroup& sg);

struct ElementClass {
  bool prime = false;        // δ_s = {s}
  bool irreducible = false;  // s ∉ S·S
  bool degenerate = false;   // irreducible and S·s = {0}
};

ElementClass classify_element(const Semigroup& sg, Elem s);

// r*σ: divisor closure of rσ. Throws ZeroHit when 0 ∈ rσ.
Mask star_apply(const Semigroup& sg, Elem r, Mask sigma);
// r⁻¹*σ = {t : rt ∈ σ}. Throws EmptyIntersection when σ ∩ rS = ∅.
Mask star_inverse(const Semigroup& sg, Elem r, Mask sigma);

// The action of S on the set of strings, materialized on string indices.
struct StarData {
  std::vector<Mask> strings;        // carrier: strings[i] is point i
  Representation rep;               // θ⋆ on string indices
  std::vector<Mask> fstar, estar;   // per element: {i : strings[i] ∈ F⋆/E⋆}

  std::optional<std::size_t> index_of(Mask sigma) const;
};

StarData star_rep(const Semigroup& sg);

// σ ∈ θ⋆_u(F⋆_Λ), decided as ∅ ≠ σ ∩ E_u ⊆ θ_u(F_Λ).
bool star_image_membership(const Semigroup& sg, UElem u,
                           const LambdaSet& lambda, Mask sigma);

// σ̊ = {s : ∃x, sx ∈ σ}.
Mask interior(const Semigroup& sg, Mask sigma);
bool is_open_string(const Semigroup& sg, Mask sigma);

struct MaximalReport {
  std::vector<Mask> maximal;  // S∞, sorted as masks
  bool forward_invariant = false;
  // (r, σ): σ maximal, r*σ defined but not maximal.
  std::optional<std::pair<Elem, Mask>> forward_witness;
  // First (r, σ) with σ maximal, r⁻¹*σ defined but not maximal.
  std::optional<std::pair<Elem, Mask>> inverse_failure;
};

MaximalReport maximal_strings(const Semigroup& sg);

// δ_{s·x} = θ⋆_s(δ_x) on F_s, and x ∈ F_s ⇔ δ_x ∈ F⋆_s.
bool delta_covariance_check(const Semigroup& sg,
                            std::optional<std::pair<Elem, Elem>>* witness
                            = nullptr);

}  // namespace ihull
