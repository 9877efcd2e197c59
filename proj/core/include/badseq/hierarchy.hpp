#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "badseq/capped_nat.hpp"
#include "badseq/nat.hpp"
#include "badseq/ordinal.hpp"

namespace badseq {

// Fast-growing (Wainer) hierarchy value F_alpha(i) under a cap:
//   F_0(i) = i+1,  F_(alpha+1)(i) = F_alpha^i(i),  F_lambda(i) = F_(lambda[i])(i).
// Evaluation bails out to Overflow as soon as any intermediate exceeds cap;
// full values above cap are never materialized.
CappedNat fgh(const OrdinalCnf& alpha, const Nat& i, const Nat& cap,
              FundSeqStyle style = FundSeqStyle::TimesI);

// max { j : F_alpha(j) <= i } united with {0}, by upward scan.
Nat fgh_inverse(const OrdinalCnf& alpha, const Nat& i,
                FundSeqStyle style = FundSeqStyle::TimesI);

// Nondecreasing parameter functions f: N -> N, the degree-growth budgets of
// the parametrized statement. Inverted kinds follow
//   f^{-1}(i) = max { j : f(j) <= i } united with {0},
// so log inverts i -> 2^i, loglog inverts i -> 2^(2^i), rootlog(c) inverts
// i -> 2^(i^c) and div(c) inverts i -> i*c.
struct ParamFn {
  enum class Kind { Const, Id, Log, LogLog, RootLog, DivBy, RootLogFgh };

  Kind kind = Kind::Id;
  Nat c = 0;          // Const, RootLog (c >= 1), DivBy (c >= 1)
  OrdinalCnf alpha;   // RootLogFgh
  FundSeqStyle style = FundSeqStyle::TimesI;  // RootLogFgh only

  static ParamFn constant(Nat c);
  static ParamFn id();
  static ParamFn log();
  static ParamFn loglog();
  static ParamFn rootlog(Nat c);
  static ParamFn div_by(Nat c);
  // The rootlog whose degree is steered by the fgh inverse:
  // i -> rootlog(F_alpha^{-1}(i))(i), clamped to log while the inverse is 0.
  static ParamFn rootlog_fgh(OrdinalCnf alpha, FundSeqStyle style = FundSeqStyle::TimesI);

  friend bool operator==(const ParamFn&, const ParamFn&) = default;
};

Nat param_eval(const ParamFn& f, const Nat& i);

// Grammar: "const:c", "id", "log", "loglog", "rootlog:c", "div:c",
// "rootlog-fgh:<ordinal>".
ParamFn parse_param_fn(std::string_view text);
std::string to_string(const ParamFn& f);

// Reference oracle: max { j : g(j) <= i } united with {0} for a nondecreasing
// g, by direct scan. Throws NotMonotoneError if a decrease is observed and
// BudgetExceededError if the scan does not resolve within scan_limit steps.
Nat inverse_eval(const std::function<Nat(const Nat&)>& g, const Nat& i,
                 std::uint64_t scan_limit = 1'000'000);

// Closed-form bound 2^((l+c+1)^(d+2)) + 1 from the pigeonhole count of
// monomial sets of bounded degree.
CappedNat bound_pigeonhole(std::size_t d, const Nat& l, const Nat& c, const Nat& cap);

// An increasing bound function B, evaluated under a cap.
using BoundFn = std::function<CappedNat(const Nat& arg, const Nat& cap)>;

// Closed-form bound 2^(B(l)^(d+2)) for parameter functions steered by the
// inverse of B. Requires B(l) > 2^(l+2); throws BoundPreconditionError.
CappedNat bound_slow(std::size_t d, const Nat& l, const BoundFn& B, const Nat& cap);

// CLI-facing bound functions: "pow2:c" is l -> 2^(l+c), "fgh:<ordinal>" is
// l -> F_alpha(l).
BoundFn parse_bound_fn(std::string_view text);

}  // namespace badseq
