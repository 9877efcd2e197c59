#pragma once

#include <cstdint>

#include "badseq/sequence.hpp"

namespace badseq {

// Caps and budgets shared by the recursive builders. `cap` bounds every
// fast-growing value the recursion needs; `max_entries` bounds how many
// ideals are materialized.
struct BuildLimits {
  Nat cap = 1'000'000;
  std::uint64_t max_entries = 1'000'000;
  FundSeqStyle style = FundSeqStyle::TimesI;
};

// The recursive family Seq(alpha, l) over K[X_d, ..., X_0, Y] certifying
// F_alpha(l) < M_d^id(l + h_alpha). The full sequence is emitted whenever its
// length fits the budget; otherwise the emitted prefix still has
// F_alpha(l) + 1 entries, which is exactly what the certificate needs (meta
// records the truncation). Throws DimensionTooSmallError when alpha is not
// below omega^(d+1), CapExceededError when F_alpha(l) overflows the cap, and
// BudgetExceededError when even the certifying prefix does not fit.
IdealSequence seq_maclagan(const OrdinalCnf& alpha, std::uint64_t l, std::uint32_t d,
                           const BuildLimits& limits = {});

// The doubling family over K[X_0, Y]: 2^j + 1 ideals of degree <= 2j+2 with
// constant degree budget, certifying M_0^0(2j+2) >= 2^j.
IdealSequence seq_exp(std::uint32_t j);

// Track product of two bad sequences over the same dimension d: the result
// lives over dimension d+2, has |a|*|b| entries, and entry i is
// { X_(d+2)*g : g in a_(i/|b|) } united with { X_(d+1)*g : g in b_(i mod |b|) }.
// Generators from the two tracks cannot divide each other, so badness is
// inherited. Max degree grows by exactly 1.
IdealSequence seq_track_product(const IdealSequence& a, const IdealSequence& b);

// Iterated track product over seq_exp(j): c lemma steps, each reusing one
// fresh variable pair, yielding >= 2^(j^(c+1)) ideals over dimension 2c with
// degrees <= 2^(c+1) * (j+1).
IdealSequence seq_polypower(std::uint32_t c, std::uint32_t j,
                            std::uint64_t max_entries = 200'000);

// Prefix of the rootlog(c) conversion: a strictly descending run of pure
// powers of one extra variable, followed by entries pairing an
// identity-construction block (over X_d..X_0, Y) with polypower blocks over
// 2c+2 fresh variables, re-indexed by the rootlog parameter function. The
// recorded offset l is the theorem's 2^((c+4)^2) + 1; verifiers certify the
// prefix.
IdealSequence seq_rootlog(std::uint32_t c, std::uint32_t d, std::uint64_t prefix_len,
                          const BuildLimits& limits = {});

}  // namespace badseq
