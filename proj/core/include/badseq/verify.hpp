#pragma once

#include <cstddef>
#include <optional>
#include <utility>

#include "badseq/sequence.hpp"

namespace badseq {

// Least pair i < j with I_i containing I_j, or nullopt when the sequence is
// bad. Pairs may be evaluated in parallel; the result is the lexicographic
// minimum regardless of schedule.
std::optional<std::pair<std::size_t, std::size_t>> verify_bad(const IdealSequence& s);

enum class DegreeMode {
  // deg(I_i) <= l + h_alpha + i, with alpha taken from the sequence meta.
  PlusH,
  // deg(I_i) <= l + f(i) for the sequence's parameter function.
  Param,
};

// Least index violating the degree bound, or nullopt. Throws
// MissingMetaError when PlusH is requested without recorded alpha.
std::optional<std::size_t> verify_degrees(const IdealSequence& s, DegreeMode mode);

// True iff the sequence has at least target+1 ideals (its last index then
// reaches the claimed target). Throws TargetOverflowError on an overflowed
// target.
bool verify_length(const IdealSequence& s, const CappedNat& target);

// Combined run of the three verifiers, as the CLI reports it.
struct VerifyReport {
  DegreeMode mode = DegreeMode::Param;
  std::optional<std::pair<std::size_t, std::size_t>> bad;
  std::optional<std::size_t> degree;
  std::optional<CappedNat> target;  // set when a length check ran
  std::optional<bool> length_ok;

  bool ok() const { return !bad && !degree && length_ok.value_or(true); }
};

// Target defaults to the one recorded in meta; pass a CappedNat to override,
// or nothing to skip the length check when no target is known.
VerifyReport run_verify(const IdealSequence& s, DegreeMode mode,
                        std::optional<CappedNat> target = std::nullopt);

}  // namespace badseq
