#pragma once

#include <cstddef>
#include <string>

#include "ihull/semigroup.hpp"
#include "ihull/subshift.hpp"
#include "ihull/verify.hpp"

namespace ihull {

// FNV-1a 64 of the raw input bytes, as 16 hex digits. Reports carry it so
// a stored report can be matched to its exact input.
std::string input_digest(const std::string& bytes);

// Deterministic JSON reports, one per CLI command. Keys are emitted in a
// fixed order and nothing time- or path-dependent is included, so byte
// equality of reports means equality of (input, tool version, options).
std::string classify_report(const Semigroup& sg, const std::string& digest);
std::string hull_report(const Semigroup& sg, const std::string& digest);
std::string strings_report(const Semigroup& sg, const std::string& digest);
std::string spectrum_report(const Semigroup& sg, const std::string& digest);

// space: "all", "ultra", or "max". Reports a violation entry instead of
// throwing when the selected character set is not action-invariant.
std::string germs_report(const Semigroup& sg, const std::string& digest,
                         const std::string& space, bool* violations);

std::string subshift_report(const SubshiftSpec& spec, std::size_t depth,
                            const std::string& digest);

std::string verify_report_json(const VerifyReport& rep,
                               const std::string& digest);

// Core-schema document {"elements", "zero", "table"} accepted verbatim by
// load_semigroup.
std::string semigroup_document(const Semigroup& sg);

}  // namespace ihull
