#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ihull/common.hpp"
#include "ihull/partial_bijection.hpp"
#include "ihull/semigroup.hpp"

namespace ihull {

// An action of the semigroup by partial bijections of a finite set.
// maps[s] is the partial bijection attached to element s; `carrier` is the
// set of live points and every domain/range must stay inside it.
struct Representation {
  std::vector<std::string> carrier_labels;
  Mask carrier = 0;
  std::vector<PartialBijection> maps;

  Elem carrier_size() const {
    return static_cast<Elem>(carrier_labels.size());
  }
};

// θ_s(x) = s·x on the carrier S ∖ {0}. Carrier indices coincide with
// element indices; the zero index stays as a permanently undefined point
// so that domain masks equal the F_s / E_s masks of the semigroup.
// Throws NotLeftCancellative when some θ_s is not injective.
Representation regular_representation(const Semigroup& sg);

struct RepReport {
  bool is_representation = false;
  // First (s, t) with π_s ∘ π_t ≠ π_{s·t}, or (s, s) when π_zero is
  // not the empty map or some map leaves the carrier.
  std::optional<std::pair<Elem, Elem>> multiplicativity_witness;
  bool essential = false;  // ranges of the π_s cover the carrier
  // π_s e_t = e_{s·t} π_s where e_x = π_x ∘ π_x⁻¹.
  bool covariance_range = false;
  std::optional<std::pair<Elem, Elem>> covariance_range_witness;
  // f_t π_s = π_s f_{t·s} where f_x = π_x⁻¹ ∘ π_x.
  bool covariance_domain = false;
  std::optional<std::pair<Elem, Elem>> covariance_domain_witness;
};

RepReport check_representation(const Semigroup& sg, const Representation& rep);

struct LcmRangeViolation {
  Elem s, t, r;  // lcm witness r with ran(π_r) ≠ ran(π_s) ∩ ran(π_t)
};

// Range of π_r equals ran(π_s) ∩ ran(π_t) for every lcm witness r of
// every nonzero pair (pairs without an lcm are skipped).
bool respects_lcms(const Semigroup& sg, const Representation& rep,
                   std::optional<LcmRangeViolation>* violation = nullptr);

// f_Λ = identity on ∩_{t ∈ Λ} dom(π_t), with the unit contributing the
// whole carrier. Throws EmptyLambda when Λ is empty.
PartialBijection f_lambda(const Representation& rep, const LambdaSet& lambda);

// Domain mask of f_Λ without building the map.
Mask f_lambda_mask(const Representation& rep, const LambdaSet& lambda);

// π_u with π_1 = identity on the carrier.
PartialBijection theta_of(const Representation& rep, UElem u);

}  // namespace ihull
