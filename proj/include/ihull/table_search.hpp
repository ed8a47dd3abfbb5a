#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ihull/common.hpp"
#include "ihull/semigroup.hpp"

namespace ihull {

// Whether the flat row-major table on n elements is associative.
bool associative_table(Elem n, const std::vector<Elem>& table);

// Whether s·t = s·r ≠ 0 forces t = r, with the zero at index 0.
bool zero_left_cancellative_table(Elem n, const std::vector<Elem>& table);

// Visits every associative table on n elements whose index-0 element is a
// two-sided zero; the (n-1)² remaining entries run over all n values.
// Tables are visited in odometer order, so the sweep is deterministic.
void for_each_semigroup_with_zero(
    Elem n, const std::function<void(const std::vector<Elem>&)>& visit);

// Seeded sample of semigroups with a two-sided zero: associative,
// 0-left-cancellative, lcm-admitting tables of size 2..max_size, with a
// per-table zero bias so the filters stay reachable. Deterministic in the
// seed. Element names are "0", "x1", "x2", ...
std::vector<Semigroup> random_semigroups(std::size_t count, Elem max_size,
                                         std::uint64_t seed);

}  // namespace ihull
