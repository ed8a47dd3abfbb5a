#pragma once

#include <cstdint>
#include <vector>

#include "ihull/common.hpp"

namespace ihull {

// Injective partial self-map of {0, .., n-1}. Entry -1 means undefined.
class PartialBijection {
 public:
  PartialBijection() = default;
  explicit PartialBijection(Elem n) : map_(n, -1) {}
  // Validates injectivity and range bounds; throws DomainViolation.
  explicit PartialBijection(std::vector<std::int32_t> map);

  static PartialBijection identity_on(Elem n, Mask domain);
  static PartialBijection empty(Elem n) { return PartialBijection(n); }

  Elem carrier_size() const { return static_cast<Elem>(map_.size()); }
  bool defined(Elem x) const { return map_[x] >= 0; }
  Elem at(Elem x) const { return static_cast<Elem>(map_[x]); }

  void set(Elem x, Elem y);

  Mask domain() const;
  Mask range() const;
  bool is_identity() const;
  // Identity on its own domain (an idempotent of the symmetric
  // inverse monoid).
  bool is_partial_identity() const;

  PartialBijection inverse() const;
  // Image of a subset under the map.
  Mask image(Mask xs) const;

  friend bool operator==(const PartialBijection&,
                         const PartialBijection&) = default;
  // Lexicographic on the entry vector; total order for canonical sorting.
  friend bool operator<(const PartialBijection& a, const PartialBijection& b) {
    return a.map_ < b.map_;
  }

 private:
  std::vector<std::int32_t> map_;
};

// (f ∘ g)(x) = f(g(x)); defined where g(x) and f(g(x)) both are.
PartialBijection compose(const PartialBijection& f, const PartialBijection& g);

}  // namespace ihull
