#include "ihull/partial_bijection.hpp"

#include <string>

namespace ihull {

PartialBijection::PartialBijection(std::vector<std::int32_t> map)
    : map_(std::move(map)) {
  Mask seen = 0;
  for (size_t x = 0; x < map_.size(); ++x) {
    std::int32_t y = map_[x];
    if (y < 0) continue;
    if (static_cast<size_t>(y) >= map_.size())
      fail(ErrorKind::DomainViolation,
           "image " + std::to_string(y) + " out of range");
    if (has(seen, static_cast<Elem>(y)))
      fail(ErrorKind::DomainViolation,
           "image " + std::to_string(y) + " hit twice; map not injective");
    seen |= bit(static_cast<Elem>(y));
  }
}

PartialBijection PartialBijection::identity_on(Elem n, Mask domain) {
  PartialBijection p(n);
  for_each_bit(domain, [&](Elem x) { p.map_[x] = static_cast<std::int32_t>(x); });
  return p;
}

void PartialBijection::set(Elem x, Elem y) {
  for (size_t z = 0; z < map_.size(); ++z)
    if (map_[z] == static_cast<std::int32_t>(y) && z != x)
      fail(ErrorKind::DomainViolation,
           "image " + std::to_string(y) + " hit twice; map not injective");
  map_[x] = static_cast<std::int32_t>(y);
}

Mask PartialBijection::domain() const {
  Mask m = 0;
  for (size_t x = 0; x < map_.size(); ++x)
    if (map_[x] >= 0) m |= bit(static_cast<Elem>(x));
  return m;
}

Mask PartialBijection::range() const {
  Mask m = 0;
  for (std::int32_t y : map_)
    if (y >= 0) m |= bit(static_cast<Elem>(y));
  return m;
}

bool PartialBijection::is_identity() const {
  for (size_t x = 0; x < map_.size(); ++x)
    if (map_[x] != static_cast<std::int32_t>(x)) return false;
  return true;
}

bool PartialBijection::is_partial_identity() const {
  for (size_t x = 0; x < map_.size(); ++x)
    if (map_[x] >= 0 && map_[x] != static_cast<std::int32_t>(x)) return false;
  return true;
}

PartialBijection PartialBijection::inverse() const {
  PartialBijection inv(carrier_size());
  for (size_t x = 0; x < map_.size(); ++x)
    if (map_[x] >= 0) inv.map_[map_[x]] = static_cast<std::int32_t>(x);
  return inv;
}

Mask PartialBijection::image(Mask xs) const {
  Mask out = 0;
  for_each_bit(xs, [&](Elem x) {
    if (defined(x)) out |= bit(at(x));
  });
  return out;
}

PartialBijection compose(const PartialBijection& f, const PartialBijection& g) {
  if (f.carrier_size() != g.carrier_size())
    fail(ErrorKind::CarrierMismatch, "composing maps on different carriers");
  PartialBijection h(f.carrier_size());
  for (Elem x = 0; x < g.carrier_size(); ++x)
    if (g.defined(x) && f.defined(g.at(x))) h.set(x, f.at(g.at(x)));
  return h;
}

}  // namespace ihull
