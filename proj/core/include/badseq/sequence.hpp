#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "badseq/capped_nat.hpp"
#include "badseq/hierarchy.hpp"
#include "badseq/monomial.hpp"
#include "badseq/nat.hpp"
#include "badseq/ordinal.hpp"

namespace badseq {

// Provenance carried by constructed sequences: which family built it, for
// which ordinal, and the length target the construction claims to certify
// (the sequence must have at least target+1 entries to witness
// target < M_d^f(l)).
struct SequenceMeta {
  std::string construction;
  std::optional<OrdinalCnf> alpha;
  std::optional<CappedNat> length_target;
  bool truncated = false;

  friend bool operator==(const SequenceMeta&, const SequenceMeta&) = default;
};

// A sequence of monomial ideals in K[X_d, ..., X_0, Y] together with the
// offset l and the parameter function bounding its degrees. This is the
// object every verifier consumes.
class IdealSequence {
public:
  IdealSequence(std::uint32_t d, Nat l, ParamFn param, std::vector<MonomialIdeal> ideals,
                std::optional<SequenceMeta> meta = std::nullopt);

  std::uint32_t d() const { return d_; }
  std::size_t width() const { return d_ + 2u; }
  const Nat& l() const { return l_; }
  const ParamFn& param() const { return param_; }
  const std::optional<SequenceMeta>& meta() const { return meta_; }
  const std::vector<MonomialIdeal>& ideals() const { return ideals_; }
  std::size_t size() const { return ideals_.size(); }

  friend bool operator==(const IdealSequence&, const IdealSequence&) = default;

private:
  std::uint32_t d_;
  Nat l_;
  ParamFn param_;
  std::optional<SequenceMeta> meta_;
  std::vector<MonomialIdeal> ideals_;
};

}  // namespace badseq
