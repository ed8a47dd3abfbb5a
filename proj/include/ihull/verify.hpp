#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ihull/semigroup.hpp"
#include "ihull/subshift.hpp"

namespace ihull {

struct Violation {
  std::string check;    // short name of the law that failed
  std::string witness;  // human-readable counterexample
};

struct VerifyOptions {
  // Λ sweep bound for the subshift infiniteness cross-checks.
  std::size_t lambda_bound = 3;
  // Seed for the sampled partial-bijection algebra laws.
  std::uint64_t seed = 1;
};

struct VerifyReport {
  std::vector<std::string> checks;  // checks that ran, in order
  std::vector<std::string> notes;   // skips and informational findings
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
};

// Runs every table-level law: the classification predicates re-derived
// from scratch, divisibility and lcm axioms, the covariance identities of
// the regular representation, hull closure against the normal forms, the
// string action, and the character space. Checks whose hypotheses the
// semigroup does not meet are skipped with a note, never failed.
VerifyReport verify_semigroup(const Semigroup& sg,
                              const VerifyOptions& opts = {});

// Language-level laws for a subshift or explicit-language document at the
// given truncation depth, plus all semigroup-level laws of the language
// semigroup.
VerifyReport verify_subshift(const SubshiftSpec& spec, std::size_t depth,
                             const VerifyOptions& opts = {});

}  // namespace ihull
