#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ihull/common.hpp"
#include "ihull/partial_bijection.hpp"
#include "ihull/representation.hpp"
#include "ihull/semigroup.hpp"

namespace ihull {

// One way of writing a hull element as θ_u · f_Λ · θ_v⁻¹, identified by the
// index of F_Λ in HullData::f_values (Λ itself is recoverable as the stored
// maximal witness; any Λ with the same intersection gives the same map).
struct HullWitness {
  UElem u;
  std::uint32_t f_index;
  UElem v;
  friend bool operator==(const HullWitness&, const HullWitness&) = default;
};

struct HullElement {
  PartialBijection map;
  std::vector<HullWitness> witnesses;
};

struct SetWitness {
  UElem u;
  std::uint32_t f_index;  // X = θ_u(F_Λ)
  friend bool operator==(const SetWitness&, const SetWitness&) = default;
};

struct ConstructibleSet {
  Mask members = 0;
  std::vector<SetWitness> witnesses;
};

struct HullData {
  // Every value of F_Λ over finite Λ ⊆ S̃ with Λ ∩ S ≠ ∅: the closure of
  // {F_s : s ∈ S} under intersection (F_0 = ∅ is always present), ascending
  // as masks.
  std::vector<Mask> f_values;
  // The maximal Λ with F_Λ = f_values[i], namely {s ∈ S : F ⊆ F_s} ∪ {1}.
  std::vector<LambdaSet> f_witnesses;
  // Normal forms θ_u f_Λ θ_v⁻¹ over u, v ∈ Λ, deduplicated by map and
  // sorted. The empty map keeps the single witness (1, index of ∅, 1).
  std::vector<HullElement> elements;
  // θ_u(F_Λ) over u ∈ Λ, deduplicated and sorted by mask; sets[0] = ∅.
  std::vector<ConstructibleSet> sets;

  std::optional<std::size_t> set_index(Mask members) const;
  std::optional<std::size_t> element_index(const PartialBijection& map) const;
  std::optional<std::size_t> f_index(Mask f) const;
};

// Inverse subsemigroup of partial bijections generated by the regular
// representation: worklist closure of {θ_s, θ_s⁻¹} under composition.
// Sorted; always contains the empty map (θ of the zero element).
std::vector<PartialBijection> hull_closure(const Semigroup& sg);

// Normal-form enumeration of the hull and of the constructible sets.
HullData build_hull(const Semigroup& sg);

// flags[i] = whether sets[i] lies in the ideal generated by the E_s,
// equivalently sets[i].members ⊆ E_s for some s ∈ S.
std::vector<char> e_one_ideal(const Semigroup& sg, const HullData& hull);

// DOT digraph of the cover relation of the semilattice of constructible
// sets ordered by inclusion (edges point from covered set to cover).
std::string hasse_export(const Semigroup& sg, const HullData& hull);

// Human-readable name of a carrier subset, e.g. "{e,s}".
std::string set_name(const Semigroup& sg, Mask members);

}  // namespace ihull
