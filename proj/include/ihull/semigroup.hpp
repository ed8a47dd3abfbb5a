#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ihull/common.hpp"

namespace ihull {

// Finite semigroup with zero. Element 0-based indices; `zero` is one of them.
// The table is row-major: product(i, j) = table[i * n + j].
class Semigroup {
 public:
  Semigroup(std::vector<std::string> names, Elem zero,
            std::vector<Elem> table);

  Elem size() const { return n_; }
  Elem zero() const { return zero_; }
  const std::string& name(Elem i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  void set_names(std::vector<std::string> names);

  Elem product(Elem a, Elem b) const { return table_[a * n_ + b]; }
  // Product over S̃ = S ∪ {1}; unit·x = x·unit = x, unit·unit = unit.
  UElem product(UElem a, UElem b) const;

  bool is_zero(Elem a) const { return a == zero_; }

  // All nonzero element indices.
  Mask nonzero_mask() const { return nonzero_; }

  // F_s = { x ∈ S′ : s·x ≠ 0 }; F_1 = S′.
  Mask f_set(UElem s) const;
  // E_s = s·S ∖ {0}; E_1 = S′.
  Mask e_set(UElem s) const;
  // s·S̃ ∖ {0} = ({s} ∪ sS) ∖ {0}; principal right ideal with the unit adjoined.
  Mask right_ideal(UElem s) const;

  // θ_s(x) = s·x restricted to F_s → E_s; nullopt when x ∉ F_s.
  std::optional<Elem> apply_theta(UElem s, Elem x) const;
  // θ_s⁻¹(y): the unique x ∈ F_s with s·x = y, when the model is
  // left cancellative at s; nullopt when y ∉ E_s.
  std::optional<Elem> preimage_theta(UElem s, Elem y) const;

 private:
  Elem n_;
  Elem zero_;
  std::vector<std::string> names_;
  std::vector<Elem> table_;
  Mask nonzero_;
  std::vector<Mask> f_;            // F_s per element
  std::vector<Mask> e_;            // E_s per element
  std::vector<Mask> right_ideal_;  // ({s} ∪ sS) ∖ {0} per element
};

// Parses a semigroup document:
//   {"elements": [...names...], "zero": "name", "table": [[..],..]}
// Table entries are element names. Validates associativity and the
// two-sided zero law; throws Error on any defect, with a witness in what().
Semigroup load_semigroup(const std::string& json_text);

struct TripleWitness {
  Elem r, s, t;
};

struct PropertyReport {
  bool zero_left_cancellative = false;
  bool zero_right_cancellative = false;
  bool categorical_at_zero = false;
  bool right_reductive = false;
  bool has_right_local_units = false;

  // First failing triple in (r, s, t) index order, when the flag is false.
  std::optional<TripleWitness> left_witness;
  std::optional<TripleWitness> right_witness;
  std::optional<TripleWitness> categorical_witness;
  // For the categorical witness: the nonzero pair (r·s, s·t).
  std::optional<std::pair<Elem, Elem>> categorical_pair;
  // First pair s ≠ t with the same left action (sx = tx for all x).
  std::optional<std::pair<Elem, Elem>> reductive_witness;
  // First s with s ∉ sS.
  std::optional<Elem> local_unit_witness;

  Mask nonzero_idempotents = 0;
  // Two-sided identity, if present.
  std::optional<Elem> unit;
  // Whether distinct nonzero idempotents multiply to zero both ways.
  bool orthogonal_idempotents = false;
};

PropertyReport classify(const Semigroup& s);

// Least-index nonzero idempotent e with s·e = s. Throws NoRightUnit if none.
Elem right_local_unit(const Semigroup& sg, Elem s);

// s ‖ t  ⇔  t ∈ ({s} ∪ sS) ∪ {0}; everything divides zero, the unit
// divides everything.
bool divides(const Semigroup& sg, UElem s, UElem t);

// δ_s = set of nonzero divisors of s. Throws ZeroArgument when s is zero.
Mask divisors(const Semigroup& sg, Elem s);

struct LcmResult {
  // All r with sS ∩ tS = rS and s ‖ r, t ‖ r. May include zero.
  std::vector<Elem> witnesses;
  // Least-index witness.
  Elem canonical;
};

// Least common multiple data for a nonzero pair; nullopt when no r
// generates the intersection ideal.
std::optional<LcmResult> lcm(const Semigroup& sg, Elem s, Elem t);

struct LcmFailure {
  Elem s, t;
};

// Every nonzero pair admits an lcm; on failure reports the first bad pair.
bool admits_lcms(const Semigroup& sg, std::optional<LcmFailure>* failure = nullptr);

// lcm over S̃: lcm(1, v) = v, lcm(u, 1) = u, lcm(1, 1) = 1; otherwise
// the canonical lcm in S. Throws NoLcm when the pair has none.
UElem lcm_unitized(const Semigroup& sg, UElem u, UElem v);

}  // namespace ihull
