#include "ihull/table_search.hpp"

#include <random>
#include <string>

namespace ihull {

bool associative_table(Elem n, const std::vector<Elem>& table) {
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      Elem ab = table[a * n + b];
      for (Elem c = 0; c < n; ++c)
        if (table[ab * n + c] != table[a * n + table[b * n + c]]) return false;
    }
  return true;
}

bool zero_left_cancellative_table(Elem n, const std::vector<Elem>& table) {
  for (Elem s = 1; s < n; ++s)
    for (Elem t = 0; t < n; ++t) {
      Elem st = table[s * n + t];
      if (st == 0) continue;
      for (Elem r = t + 1; r < n; ++r)
        if (table[s * n + r] == st) return false;
    }
  return true;
}

void for_each_semigroup_with_zero(
    Elem n, const std::function<void(const std::vector<Elem>&)>& visit) {
  if (n == 0) return;
  std::vector<Elem> table(static_cast<std::size_t>(n) * n, 0);
  // Free entries are the products of nonzero pairs; the zero row and
  // column stay pinned. The all-zero table is the first candidate.
  std::vector<std::size_t> slots;
  for (Elem a = 1; a < n; ++a)
    for (Elem b = 1; b < n; ++b) slots.push_back(a * n + b);
  for (;;) {
    if (associative_table(n, table)) visit(table);
    std::size_t i = slots.size();
    while (i > 0) {
      std::size_t slot = slots[i - 1];
      if (++table[slot] < n) break;
      table[slot] = 0;
      --i;
    }
    if (i == 0) return;
  }
}

std::vector<Semigroup> random_semigroups(std::size_t count, Elem max_size,
                                         std::uint64_t seed) {
  if (max_size < 2) fail(ErrorKind::CarrierMismatch, "max_size must be >= 2");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<unsigned> size_dist(2, max_size);
  std::uniform_real_distribution<double> bias_dist(0.35, 0.85);
  std::uniform_real_distribution<double> coin(0.0, 1.0);

  std::vector<Semigroup> out;
  out.reserve(count);
  while (out.size() < count) {
    Elem n = static_cast<Elem>(size_dist(rng));
    double zero_bias = bias_dist(rng);
    std::uniform_int_distribution<unsigned> value_dist(1, n - 1);
    std::vector<Elem> table(static_cast<std::size_t>(n) * n, 0);
    for (Elem a = 1; a < n; ++a)
      for (Elem b = 1; b < n; ++b)
        if (coin(rng) >= zero_bias)
          table[a * n + b] = static_cast<Elem>(value_dist(rng));
    if (!associative_table(n, table)) continue;
    if (!zero_left_cancellative_table(n, table)) continue;
    std::vector<std::string> names;
    names.reserve(n);
    names.push_back("0");
    for (Elem i = 1; i < n; ++i) names.push_back("x" + std::to_string(i));
    Semigroup sg(names, 0, table);
    if (!admits_lcms(sg)) continue;
    out.push_back(std::move(sg));
  }
  return out;
}

}  // namespace ihull
