#pragma once

#include <cstdint>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "ihull/common.hpp"
#include "ihull/hull.hpp"
#include "ihull/semigroup.hpp"
#include "ihull/strings.hpp"

namespace ihull {

// Character of the semilattice of constructible sets. On a finite
// semilattice every character is the principal filter of its minimum, so
// the minimum is the whole representation; the support predicate is value().
struct Character {
  Mask min = 0;

  bool value(Mask x) const { return min != 0 && (min & ~x) == 0; }
  friend bool operator==(const Character&, const Character&) = default;
  friend bool operator<(const Character& a, const Character& b) {
    return a.min < b.min;
  }
};

struct CharacterClass {
  bool ultra = false;
  bool open = false;
  bool ground = false;
  bool in_e_one = false;
  bool tight = false;  // finite model: defined as ultra
  bool essentially_tight = false;
};

struct SpectrumData {
  HullData hull;
  StarData star;
  std::vector<Character> chars;    // sorted by min
  std::vector<Mask> epsilon_sets;  // per hull.sets index: string-index mask

  std::optional<std::size_t> char_index(const Character& phi) const;
};

SpectrumData build_spectrum(const Semigroup& sg);

// One character per nonzero constructible set.
std::vector<Character> enumerate_characters(const HullData& hull);

// min is minimal among nonzero constructible sets.
bool is_ultra(const HullData& hull, const Character& phi);

// ε(X) as a mask of string indices, from the first stored witness; the
// verify suite asserts agreement across all witnesses. Throws NoWitness.
Mask epsilon(const Semigroup& sg, const SpectrumData& spec,
             const ConstructibleSet& x);

// φ_σ as a principal character; throws DegenerateString when the support
// is empty (σ = {s} with s degenerate).
Character phi_of_string(const Semigroup& sg, const SpectrumData& spec,
                        Mask sigma);

// σ_φ = {s : φ(E_s) = 1}; empty exactly for ground characters.
Mask sigma_of_char(const Semigroup& sg, const Character& phi);

// essentially_tight evaluated with family bound 2.
CharacterClass classify_character(const Semigroup& sg,
                                  const SpectrumData& spec,
                                  const Character& phi);

// θ̂_s(φ)(X) = φ(θ_s⁻¹(E_s ∩ X)); θ̂_u with the unit is the identity.
// Requires φ(F_s) = 1, else DomainViolation.
Character dual_apply(const Semigroup& sg, const SpectrumData& spec, UElem u,
                     const Character& phi);
// θ̂_s⁻¹(φ)(X) = φ(θ_s(F_s ∩ X)); requires φ(E_s) = 1.
Character dual_inverse(const Semigroup& sg, const SpectrumData& spec, UElem u,
                       const Character& phi);

// θ̂ materialized on character indices.
Representation dual_rep(const Semigroup& sg, const SpectrumData& spec);

struct DualStringLaws {
  // σ_{θ̂_s⁻¹ φ} = {p : s·p ∈ σ_φ} over all φ ∈ Ê_s.
  bool back_invar = false;
  // s ∈ interior(σ_φ) ⇒ σ_{θ̂_s⁻¹ φ} = star_inverse; otherwise ∅.
  bool back_on_strings = false;
  // θ̂_s φ has nonempty string: θ⋆_s(σ_φ) when σ_φ ≠ ∅, else δ_s.
  bool birth = false;
  // σ_φ = δ_s with s ∉ sS ⇒ φ ∈ Ê_s and θ̂_s⁻¹ φ ground.
  bool orbit_ground = false;
  std::optional<std::pair<Elem, Character>> witness;
};

DualStringLaws dual_string_laws_check(const Semigroup& sg,
                                      const SpectrumData& spec);

// The unique (u, ground φ₀) with φ = θ̂_u(φ₀); nullopt when φ is open.
// match_count receives the number of decompositions found (1 expected).
std::optional<std::pair<UElem, Character>> nonopen_decomposition(
    const Semigroup& sg, const SpectrumData& spec, const Character& phi,
    std::size_t* match_count = nullptr);

struct UltraClassification {
  std::vector<std::size_t> ultra;       // char indices
  std::vector<std::size_t> open_ultra;  // subset of ultra
  std::vector<Mask> quasi_maximal;      // S∝: σ non-degenerate, φ_σ ultra
  // Per open ultra-character: an open quasi-maximal σ with φ_σ = φ.
  std::vector<std::optional<Mask>> open_ultra_string;
  // Per non-open ultra-character: the decomposition θ̂_u(ground ultra).
  std::vector<std::optional<std::pair<UElem, Character>>> nonopen_ultra_decomp;
  bool open_maximal_all_ultra = false;
  bool relatively_maximal_all_ultra = false;
  bool open_ultra_all_matched = false;
  bool nonopen_ultra_all_ground_decomposed = false;
};

UltraClassification ultra_classification(const Semigroup& sg,
                                         const SpectrumData& spec);

// ρ(θ_u f_Λ θ_v⁻¹) = θ⋆_u f⋆_Λ θ⋆_v⁻¹ on string indices, from the first
// witness. Requires admits_lcms (NoLcms).
PartialBijection rho_on_strings(const Semigroup& sg, const SpectrumData& spec,
                                const HullElement& h);

struct InvarianceReport {
  bool invariant = true;
  // (s, char index, true = inverse direction)
  std::optional<std::tuple<Elem, std::size_t, bool>> witness;
};

struct SpectraSubsets {
  std::vector<std::size_t> ultra, max, tight, open;  // char indices
  InvarianceReport ultra_inv, max_inv, tight_inv, open_inv;
  bool max_within_tight = false;
};

SpectraSubsets spectra_subsets(const Semigroup& sg, const SpectrumData& spec);

struct TightnessWitness {
  Mask x;
  std::vector<Mask> family;
};

// Literal sweep over families of lattice sets with size ≤ family_bound.
// On a finite carrier the family {∅} already forces failure.
bool is_essentially_tight(const Semigroup& sg, const SpectrumData& spec,
                          const Character& phi, std::size_t family_bound,
                          TightnessWitness* witness = nullptr);

struct GermArrow {
  std::size_t source = 0, target = 0;  // unit indices
  // The germ invariant: the representative restricted to min(source).
  PartialBijection restriction;
  std::size_t hull_index = 0;  // least hull element index realizing it
};

struct GermGroupoid {
  std::vector<Character> units;
  std::vector<GermArrow> arrows;
  // composition[i][j] = index of arrows[i] ∘ arrows[j], or -1 when
  // source(i) ≠ target(j).
  std::vector<std::vector<std::int64_t>> composition;
  std::vector<std::size_t> identity_arrows;  // per unit
  bool associative = false;
  bool identities_ok = false;
  bool inverses_ok = false;
};

// Germs of the hull action restricted to the characters listed in y
// (indices into spec.chars). Throws NotInvariant when y is not closed
// under the action.
GermGroupoid germ_groupoid(const Semigroup& sg, const SpectrumData& spec,
                           const std::vector<std::size_t>& y);

}  // namespace ihull
