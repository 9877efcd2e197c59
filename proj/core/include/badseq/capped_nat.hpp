#pragma once

#include <cstddef>

#include "badseq/nat.hpp"

namespace badseq {

// A natural number evaluated under an explicit cap: either an exact value
// <= cap, or the absorbing Overflow state recording that the true value
// exceeds cap. Fast-growing-hierarchy values leave any storable range almost
// immediately, so every evaluation in their orbit goes through this type.
class CappedNat {
public:
  // Value v if v <= cap, otherwise Overflow(cap).
  static CappedNat bounded(Nat v, Nat cap);
  static CappedNat overflow(Nat cap);

  bool is_overflow() const { return overflow_; }
  // Requires !is_overflow().
  const Nat& value() const;
  const Nat& cap() const { return cap_; }

  // True when the represented value exceeds t. Requires t <= cap so the
  // answer is determined even in the Overflow state.
  bool exceeds(const Nat& t) const;

  friend bool operator==(const CappedNat&, const CappedNat&) = default;

private:
  CappedNat(bool overflow, Nat v, Nat cap);
  bool overflow_ = false;
  Nat value_;
  Nat cap_;
};

// Overflow-absorbing arithmetic. Binary forms require equal caps.
CappedNat capped_add(const CappedNat& a, const Nat& b);
CappedNat capped_add(const CappedNat& a, const CappedNat& b);
CappedNat capped_mul(const CappedNat& a, const Nat& b);

// 2^e under cap, without materializing out-of-cap powers.
CappedNat capped_pow2(const Nat& e, const Nat& cap);

// base^exp under cap.
CappedNat capped_pow(const Nat& base, const Nat& exp, const Nat& cap);

}  // namespace badseq
