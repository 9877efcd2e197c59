#include "badseq/hierarchy.hpp"

#include <algorithm>

#include "badseq/errors.hpp"

namespace badseq {

CappedNat fgh(const OrdinalCnf& alpha, const Nat& i, const Nat& cap, FundSeqStyle style) {
  if (i > cap) return CappedNat::overflow(cap);
  switch (classify(alpha)) {
    case OrdinalKind::Zero:
      return CappedNat::bounded(i + 1, cap);
    case OrdinalKind::Successor: {
      const OrdinalCnf pred = alpha.predecessor();
      // The i-fold iterate of the zero level is i + i in closed form. With
      // that, every surviving loop below at least doubles its value per step
      // (for arguments >= 2), so the early bailout is reached within
      // O(log cap) iterations instead of O(cap).
      if (pred.is_zero()) return CappedNat::bounded(2 * i, cap);
      Nat x = i;
      for (Nat k = 0; k < i; ++k) {
        CappedNat r = fgh(pred, x, cap, style);
        if (r.is_overflow()) return r;
        x = r.value();
      }
      return CappedNat::bounded(std::move(x), cap);
    }
    case OrdinalKind::Limit:
      return fgh(fund_seq(alpha, i, style), i, cap, style);
  }
  throw Error("unreachable ordinal kind");
}

Nat fgh_inverse(const OrdinalCnf& alpha, const Nat& i, FundSeqStyle style) {
  Nat best = 0;
  Nat j = 0;
  while (true) {
    CappedNat v = fgh(alpha, j, i, style);  // cap = i: anything above i stops the scan
    if (v.is_overflow()) break;
    best = j;
    ++j;
    // F_alpha(j) >= j for j >= 1, so the scan resolves by j = i+1.
    if (j > i + 1) break;
  }
  return best;
}

ParamFn ParamFn::constant(Nat c) { return {Kind::Const, std::move(c), {}, FundSeqStyle::TimesI}; }
ParamFn ParamFn::id() { return {}; }
ParamFn ParamFn::log() { return {Kind::Log, 0, {}, FundSeqStyle::TimesI}; }
ParamFn ParamFn::loglog() { return {Kind::LogLog, 0, {}, FundSeqStyle::TimesI}; }

ParamFn ParamFn::rootlog(Nat c) {
  if (c < 1) throw Error("rootlog requires c >= 1");
  return {Kind::RootLog, std::move(c), {}, FundSeqStyle::TimesI};
}

ParamFn ParamFn::div_by(Nat c) {
  if (c < 1) throw Error("div requires c >= 1");
  return {Kind::DivBy, std::move(c), {}, FundSeqStyle::TimesI};
}

ParamFn ParamFn::rootlog_fgh(OrdinalCnf alpha, FundSeqStyle style) {
  return {Kind::RootLogFgh, 0, std::move(alpha), style};
}

namespace {

// max { j : 2^(j^c) <= i } united with {0}. Equivalent to the largest j with
// j^c <= floor_log2(i).
Nat rootlog_value(const Nat& c, const Nat& i) {
  if (i < 1) return 0;
  const Nat bits = floor_log2(i);
  Nat j = 0;
  while (true) {
    CappedNat p = capped_pow(j + 1, c, bits);
    if (p.is_overflow()) break;  // (j+1)^c > bits
    ++j;
  }
  return j;
}

}  // namespace

Nat param_eval(const ParamFn& f, const Nat& i) {
  switch (f.kind) {
    case ParamFn::Kind::Const:
      return f.c;
    case ParamFn::Kind::Id:
      return i;
    case ParamFn::Kind::Log:
      return i < 1 ? Nat(0) : Nat(floor_log2(i));
    case ParamFn::Kind::LogLog: {
      if (i < 2) return 0;
      const Nat bits = floor_log2(i);
      return bits < 1 ? Nat(0) : Nat(floor_log2(bits));
    }
    case ParamFn::Kind::RootLog:
      return rootlog_value(f.c, i);
    case ParamFn::Kind::DivBy:
      return i / f.c;
    case ParamFn::Kind::RootLogFgh: {
      const Nat k = fgh_inverse(f.alpha, i, f.style);
      // The zeroth root is undefined; clamp to the plain log.
      if (k < 1) return i < 1 ? Nat(0) : Nat(floor_log2(i));
      return rootlog_value(k, i);
    }
  }
  throw Error("unreachable ParamFn kind");
}

ParamFn parse_param_fn(std::string_view text) {
  auto arg_after = [&](std::string_view prefix) {
    return text.substr(prefix.size());
  };
  if (text == "id") return ParamFn::id();
  if (text == "log") return ParamFn::log();
  if (text == "loglog") return ParamFn::loglog();
  if (text.starts_with("const:")) return ParamFn::constant(parse_decimal(arg_after("const:")));
  if (text.starts_with("rootlog-fgh:"))
    return ParamFn::rootlog_fgh(parse_ordinal(arg_after("rootlog-fgh:")));
  if (text.starts_with("rootlog:")) {
    Nat c = parse_decimal(arg_after("rootlog:"));
    if (c < 1) throw ParseError("rootlog:c requires c >= 1");
    return ParamFn::rootlog(std::move(c));
  }
  if (text.starts_with("div:")) {
    Nat c = parse_decimal(arg_after("div:"));
    if (c < 1) throw ParseError("div:c requires c >= 1");
    return ParamFn::div_by(std::move(c));
  }
  throw ParseError("unknown parameter function: '" + std::string(text) + "'");
}

std::string to_string(const ParamFn& f) {
  switch (f.kind) {
    case ParamFn::Kind::Const:
      return "const:" + to_decimal(f.c);
    case ParamFn::Kind::Id:
      return "id";
    case ParamFn::Kind::Log:
      return "log";
    case ParamFn::Kind::LogLog:
      return "loglog";
    case ParamFn::Kind::RootLog:
      return "rootlog:" + to_decimal(f.c);
    case ParamFn::Kind::DivBy:
      return "div:" + to_decimal(f.c);
    case ParamFn::Kind::RootLogFgh:
      return "rootlog-fgh:" + to_string(f.alpha);
  }
  throw Error("unreachable ParamFn kind");
}

Nat inverse_eval(const std::function<Nat(const Nat&)>& g, const Nat& i,
                 std::uint64_t scan_limit) {
  Nat best = 0;
  Nat prev = -1;
  Nat j = 0;
  for (std::uint64_t steps = 0; steps <= scan_limit; ++steps) {
    const Nat v = g(j);
    if (v < prev)
      throw NotMonotoneError("function decreases at " + to_decimal(j) + ": " +
                             to_decimal(v) + " < " + to_decimal(prev));
    if (v > i) return best;
    best = j;
    prev = v;
    ++j;
  }
  throw BudgetExceededError("inverse_eval scan did not resolve within " +
                            std::to_string(scan_limit) + " steps");
}

CappedNat bound_pigeonhole(std::size_t d, const Nat& l, const Nat& c, const Nat& cap) {
  if (cap < 1) return CappedNat::overflow(cap);
  const Nat base = l + c + 1;
  const Nat exp_cap = floor_log2(cap);
  CappedNat e = capped_pow(base, Nat(d) + 2, exp_cap);
  if (e.is_overflow()) return CappedNat::overflow(cap);
  return CappedNat::bounded(pow2_exact(e.value()) + 1, cap);
}

CappedNat bound_slow(std::size_t d, const Nat& l, const BoundFn& B, const Nat& cap) {
  // Evaluate B with enough headroom to decide the precondition B(l) > 2^(l+2).
  const Nat threshold = pow2_exact(l + 2);
  const Nat eval_cap = std::max(cap, threshold);
  CappedNat b = B(l, eval_cap);
  if (!b.is_overflow() && b.value() <= threshold)
    throw BoundPreconditionError("bound_slow requires B(l) > 2^(l+2), got B(" +
                                 to_decimal(l) + ") = " + to_decimal(b.value()));
  if (b.is_overflow() || cap < 1) return CappedNat::overflow(cap);
  const Nat exp_cap = floor_log2(cap);
  CappedNat e = capped_pow(b.value(), Nat(d) + 2, exp_cap);
  if (e.is_overflow()) return CappedNat::overflow(cap);
  return CappedNat::bounded(pow2_exact(e.value()), cap);
}

BoundFn parse_bound_fn(std::string_view text) {
  if (text.starts_with("pow2:")) {
    Nat shift = parse_decimal(text.substr(5));
    return [shift](const Nat& arg, const Nat& cap) { return capped_pow2(arg + shift, cap); };
  }
  if (text.starts_with("fgh:")) {
    OrdinalCnf alpha = parse_ordinal(text.substr(4));
    return [alpha](const Nat& arg, const Nat& cap) { return fgh(alpha, arg, cap); };
  }
  throw ParseError("unknown bound function: '" + std::string(text) + "'");
}

}  // namespace badseq
