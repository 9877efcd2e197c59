#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "badseq/nat.hpp"

namespace badseq {

// Ordinal below omega^omega in Cantor normal form, stored as the dense
// coefficient vector (n_d, ..., n_1, n_0), most significant first. The empty
// vector is 0; otherwise the leading coefficient is positive.
class OrdinalCnf {
public:
  OrdinalCnf() = default;  // zero

  // Coefficients most significant first; leading zeros are stripped.
  explicit OrdinalCnf(std::vector<Nat> coeffs);

  static OrdinalCnf from_nat(const Nat& n);
  // coeff * omega^power, coeff > 0.
  static OrdinalCnf omega_power(std::size_t power, const Nat& coeff = 1);

  const std::vector<Nat>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  // Largest power with nonzero coefficient. Requires a nonzero ordinal.
  std::size_t degree() const;

  // Coefficient of omega^power (0 beyond the stored range).
  const Nat& coeff_at(std::size_t power) const;

  Nat coeff_sum() const;

  // alpha - 1 for successor ordinals.
  OrdinalCnf predecessor() const;
  OrdinalCnf plus_one() const;

  friend bool operator==(const OrdinalCnf&, const OrdinalCnf&) = default;

private:
  std::vector<Nat> coeffs_;
};

enum class OrdinalKind { Zero, Successor, Limit };

// Convention for fundamental sequences of limit ordinals:
//   TimesI:        (beta + omega^(k+1))[i] = beta + omega^k * i
//   TimesIPlusOne: (beta + omega^(k+1))[i] = beta + omega^k * (i+1)
// The second variant is the one under which h_(alpha[l]) = h_alpha + 2l holds
// exactly. Every consumer (fast-growing hierarchy, sequence builders) takes
// the convention as a parameter so one definition is shared.
enum class FundSeqStyle { TimesI, TimesIPlusOne };

OrdinalKind classify(const OrdinalCnf& alpha);

// The i-th member of the canonical fundamental sequence of a limit ordinal.
// Throws NotALimitError otherwise.
OrdinalCnf fund_seq(const OrdinalCnf& alpha, const Nat& i,
                    FundSeqStyle style = FundSeqStyle::TimesI);

// The bookkeeping number 2*n_d + ... + 2*n_0 + d + 1. Throws
// DimensionTooSmallError unless alpha < omega^(d+1).
Nat h_alpha(const OrdinalCnf& alpha, std::size_t d);

std::strong_ordering compare(const OrdinalCnf& a, const OrdinalCnf& b);

inline std::strong_ordering operator<=>(const OrdinalCnf& a, const OrdinalCnf& b) {
  return compare(a, b);
}

// Ordinal literals: sum of terms "w^k*n" with strictly descending k, where
// "w^1" may be written "w", "*1" may be dropped and a bare number is the
// constant term. Examples: "0", "w", "w^2*1+w*3+2". Whitespace insignificant.
OrdinalCnf parse_ordinal(std::string_view text);
std::string to_string(const OrdinalCnf& alpha);

}  // namespace badseq
