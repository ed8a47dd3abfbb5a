#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ihull {

inline constexpr const char* kVersion = "0.1.0";

// Dense subsets of the carrier; one bit per element index.
using Mask = std::uint64_t;
using Elem = std::uint32_t;

inline constexpr Elem kMaxElements = 64;

constexpr Mask bit(Elem i) { return Mask{1} << i; }
constexpr bool has(Mask m, Elem i) { return (m >> i) & 1; }
constexpr int popcount(Mask m) { return std::popcount(m); }

template <typename F>
void for_each_bit(Mask m, F&& f) {
  while (m) {
    Elem i = static_cast<Elem>(std::countr_zero(m));
    f(i);
    m &= m - 1;
  }
}

// Least set bit, as an index; mask must be nonzero.
inline Elem first_bit(Mask m) { return static_cast<Elem>(std::countr_zero(m)); }

enum class ErrorKind {
  MalformedTable,
  NonAssociative,
  ZeroLawViolation,
  NoRightUnit,
  ZeroArgument,
  NoLcm,
  NoLcms,
  CarrierMismatch,
  NotLeftCancellative,
  EmptyLambda,
  CarrierTooLarge,
  ZeroHit,
  EmptyIntersection,
  BadLambda,
  NoWitness,
  DegenerateString,
  DomainViolation,
  NotInvariant,
  InvalidSpec,
  NotFactorClosed,
  InadmissibleWord,
  ExplicitLanguageUnsupported,
  InvalidDocument,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

// Element of S ∪ {1}: either a carrier index or the formal unit.
// The unit never collides with the zero element (zero is a carrier index).
class UElem {
 public:
  static constexpr Elem kUnit = 0xffffffffu;

  constexpr UElem() : v_(kUnit) {}
  constexpr explicit UElem(Elem e) : v_(e) {}
  static constexpr UElem unit() { return UElem(); }

  constexpr bool is_unit() const { return v_ == kUnit; }
  constexpr Elem elem() const { return v_; }

  friend constexpr bool operator==(UElem a, UElem b) { return a.v_ == b.v_; }
  friend constexpr bool operator!=(UElem a, UElem b) { return a.v_ != b.v_; }
  friend constexpr bool operator<(UElem a, UElem b) {
    // Unit sorts first.
    if (a.is_unit() != b.is_unit()) return a.is_unit();
    return a.v_ < b.v_;
  }

 private:
  Elem v_;
};

// Finite subset of S̃ = S ∪ {1}: carrier indices plus an optional unit flag.
struct LambdaSet {
  Mask elems = 0;
  bool unit = false;

  bool empty() const { return elems == 0 && !unit; }
  friend bool operator==(const LambdaSet&, const LambdaSet&) = default;
};

}  // namespace ihull
