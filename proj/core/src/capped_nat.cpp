#include "badseq/capped_nat.hpp"

#include "badseq/errors.hpp"

namespace badseq {

CappedNat::CappedNat(bool overflow, Nat v, Nat cap)
    : overflow_(overflow), value_(std::move(v)), cap_(std::move(cap)) {}

CappedNat CappedNat::bounded(Nat v, Nat cap) {
  if (v < 0 || cap < 0) throw Error("CappedNat requires nonnegative values");
  if (v > cap) return CappedNat(true, 0, std::move(cap));
  return CappedNat(false, std::move(v), std::move(cap));
}

CappedNat CappedNat::overflow(Nat cap) { return CappedNat(true, 0, std::move(cap)); }

const Nat& CappedNat::value() const {
  if (overflow_) throw Error("value() on an overflowed CappedNat");
  return value_;
}

bool CappedNat::exceeds(const Nat& t) const {
  if (overflow_) {
    if (t > cap_) throw Error("CappedNat::exceeds threshold above cap");
    return true;
  }
  return value_ > t;
}

CappedNat capped_add(const CappedNat& a, const Nat& b) {
  if (a.is_overflow()) return a;
  return CappedNat::bounded(a.value() + b, a.cap());
}

CappedNat capped_add(const CappedNat& a, const CappedNat& b) {
  if (a.cap() != b.cap()) throw Error("capped_add: mismatched caps");
  if (a.is_overflow() || b.is_overflow()) return CappedNat::overflow(a.cap());
  return CappedNat::bounded(a.value() + b.value(), a.cap());
}

CappedNat capped_mul(const CappedNat& a, const Nat& b) {
  if (a.is_overflow()) return a;
  return CappedNat::bounded(a.value() * b, a.cap());
}

CappedNat capped_pow2(const Nat& e, const Nat& cap) {
  if (cap < 1) return CappedNat::overflow(cap);
  if (e > floor_log2(cap)) return CappedNat::overflow(cap);
  return CappedNat::bounded(pow2_exact(e), cap);
}

CappedNat capped_pow(const Nat& base, const Nat& exp, const Nat& cap) {
  if (exp == 0) return CappedNat::bounded(1, cap);
  if (base == 0) return CappedNat::bounded(0, cap);
  if (base == 1) return CappedNat::bounded(1, cap);
  // base >= 2: the result exceeds cap unless exp <= log2(cap), so the loop
  // below runs a bounded number of times.
  if (cap < 1 || exp > floor_log2(cap)) return CappedNat::overflow(cap);
  Nat acc = 1;
  for (Nat k = 0; k < exp; ++k) {
    acc *= base;
    if (acc > cap) return CappedNat::overflow(cap);
  }
  return CappedNat::bounded(std::move(acc), cap);
}

}  // namespace badseq
