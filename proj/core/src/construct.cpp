#include "badseq/construct.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "badseq/errors.hpp"

namespace badseq {

namespace {

// ---------------------------------------------------------------------------
// Seq(alpha, l)
// ---------------------------------------------------------------------------

class MaclaganBuilder {
public:
  MaclaganBuilder(std::uint32_t d, Nat cap, FundSeqStyle style)
      : d_(d), width_(d + 2u), cap_(std::move(cap)), style_(style) {}

  // First `count` entries of Seq(gamma, l), fewer when the sequence is
  // shorter. Callers keep count <= cap+1, so a block whose length overflows
  // the cap is known to cover every remaining requested entry.
  std::vector<MonomialIdeal> build(const OrdinalCnf& gamma, const Nat& l,
                                   std::uint64_t count) const {
    switch (classify(gamma)) {
      case OrdinalKind::Zero:
        return build_zero(l, count);
      case OrdinalKind::Successor:
        return build_successor(gamma, l, count);
      case OrdinalKind::Limit:
        return build_limit(gamma, l, count);
    }
    throw Error("unreachable ordinal kind");
  }

  // Total length of Seq(gamma, l) under the cap.
  CappedNat full_length(const OrdinalCnf& gamma, const Nat& l) const {
    switch (classify(gamma)) {
      case OrdinalKind::Zero:
        return CappedNat::bounded(l + 3, cap_);
      case OrdinalKind::Successor: {
        const OrdinalCnf alpha = gamma.predecessor();
        CappedNat acc = CappedNat::bounded(l + 1, cap_);
        Nat arg = l;
        for (Nat j = 0; j <= l; ++j) {
          const CappedNat f = fgh(alpha, arg, cap_, style_);
          acc = capped_add(acc, f);
          if (f.is_overflow() || acc.is_overflow()) return CappedNat::overflow(cap_);
          arg = f.value();
        }
        return acc;
      }
      case OrdinalKind::Limit: {
        const CappedNat f = fgh(fund_seq(gamma, l, style_), l, cap_, style_);
        return capped_add(f, 3 * l + 2);
      }
    }
    throw Error("unreachable ordinal kind");
  }

private:
  // Head monomial of the generators associated with gamma: exponent 2*c_k + 1
  // on every X_k above the least nonzero position, `special` on X_(special_k),
  // nothing below, and the given Y exponent.
  Monomial assoc_head(const OrdinalCnf& gamma, std::size_t special_k,
                      std::uint64_t special_exp, std::uint64_t y_exp) const {
    std::vector<std::uint64_t> exps(width_, 0);
    for (std::size_t k = special_k + 1; k <= d_; ++k)
      exps[x_coord(d_, k)] = 2 * to_u64(gamma.coeff_at(k)) + 1;
    exps[x_coord(d_, special_k)] = special_exp;
    exps[y_coord(d_)] = y_exp;
    return Monomial(std::move(exps));
  }

  Monomial pure_y(std::uint64_t e) const {
    return Monomial::unit(width_).times_coord(y_coord(d_), e);
  }

  // Seq(0, l) = X_0, Y^(l+1), Y^l, ..., Y, 1.
  std::vector<MonomialIdeal> build_zero(const Nat& l, std::uint64_t count) const {
    const std::uint64_t lu = to_u64(l);
    std::vector<MonomialIdeal> out;
    if (count == 0) return out;
    out.emplace_back(width_, std::vector<Monomial>{
                                 Monomial::unit(width_).times_coord(x_coord(d_, 0), 1)});
    for (std::uint64_t i = 0; i <= lu + 1 && out.size() < count; ++i)
      out.emplace_back(width_, std::vector<Monomial>{pure_y(lu + 1 - i)});
    return out;
  }

  // Seq(alpha+1, l): a descending-Y run of the single generator with X_0
  // exponent 2*c_0+1, then for each j <= l a block of F_alpha(l_j) entries
  // pairing the X_0^(2*c_0) head with Seq(alpha, l_j) scaled by Y^(l+1),
  // where l_0 = l and l_(j+1) = F_alpha(l_j).
  std::vector<MonomialIdeal> build_successor(const OrdinalCnf& gamma, const Nat& l,
                                             std::uint64_t count) const {
    const OrdinalCnf alpha = gamma.predecessor();
    const std::uint64_t lu = to_u64(l);
    const std::uint64_t e_hi = 2 * to_u64(gamma.coeff_at(0)) + 1;
    std::vector<MonomialIdeal> out;

    for (std::uint64_t i = 0; i <= lu && out.size() < count; ++i)
      out.emplace_back(width_,
                       std::vector<Monomial>{assoc_head(gamma, 0, e_hi, lu - i)});

    Nat arg = l;
    for (std::uint64_t j = 0; j <= lu && out.size() < count; ++j) {
      const std::uint64_t remaining = count - out.size();
      const CappedNat f = fgh(alpha, arg, cap_, style_);
      const std::uint64_t block =
          f.is_overflow() ? remaining
                          : std::min(Nat(remaining), f.value()).convert_to<std::uint64_t>();
      append_scaled_block(out, assoc_head(gamma, 0, e_hi - 1, lu - j), alpha, arg,
                          block, lu + 1);
      if (f.is_overflow()) break;
      arg = f.value();
    }
    return out;
  }

  // Limit gamma with least nonzero coefficient c_j at position j >= 1: two
  // descending-Y runs with X_j exponents 2*c_j+1 and 2*c_j, then the tail
  // Seq(gamma[l], l)_i for 0 < i <= F_(gamma[l])(l).
  std::vector<MonomialIdeal> build_limit(const OrdinalCnf& gamma, const Nat& l,
                                         std::uint64_t count) const {
    const std::uint64_t lu = to_u64(l);
    std::size_t j = 1;
    while (gamma.coeff_at(j) == 0) ++j;
    const std::uint64_t e_hi = 2 * to_u64(gamma.coeff_at(j)) + 1;
    std::vector<MonomialIdeal> out;

    for (std::uint64_t i = 0; i <= lu && out.size() < count; ++i)
      out.emplace_back(width_,
                       std::vector<Monomial>{assoc_head(gamma, j, e_hi, lu - i)});
    for (std::uint64_t i = 0; i <= 2 * lu && out.size() < count; ++i)
      out.emplace_back(width_,
                       std::vector<Monomial>{assoc_head(gamma, j, e_hi - 1, 2 * lu - i)});

    if (out.size() < count) {
      const OrdinalCnf down = fund_seq(gamma, l, style_);
      const std::uint64_t remaining = count - out.size();
      const CappedNat f = fgh(down, l, cap_, style_);
      const std::uint64_t block =
          f.is_overflow() ? remaining
                          : std::min(Nat(remaining), f.value()).convert_to<std::uint64_t>();
      const std::vector<MonomialIdeal> inner = build(down, l, block + 1);
      if (inner.size() < block + 1) throw Error("inner sequence shorter than its block");
      for (std::uint64_t off = 1; off <= block; ++off) out.push_back(inner[off]);
    }
    return out;
  }

  // Appends `block` entries pairing `head` with Seq(alpha, arg) offsets 1..block
  // scaled by Y^y_shift.
  void append_scaled_block(std::vector<MonomialIdeal>& out, const Monomial& head,
                           const OrdinalCnf& alpha, const Nat& arg, std::uint64_t block,
                           std::uint64_t y_shift) const {
    if (block == 0) return;
    const std::vector<MonomialIdeal> inner = build(alpha, arg, block + 1);
    if (inner.size() < block + 1) throw Error("inner sequence shorter than its block");
    for (std::uint64_t off = 1; off <= block; ++off) {
      std::vector<Monomial> gens{head};
      for (const Monomial& g : inner[off].gens())
        gens.push_back(g.times_coord(y_coord(d_), y_shift));
      out.emplace_back(width_, std::move(gens));
    }
  }

  std::uint32_t d_;
  std::size_t width_;
  Nat cap_;
  FundSeqStyle style_;
};

// ---------------------------------------------------------------------------
// Track product
// ---------------------------------------------------------------------------

// Pads exponent vectors with `extra` zero coordinates at the top.
std::vector<MonomialIdeal> embed_top(const std::vector<MonomialIdeal>& ideals,
                                     std::size_t extra) {
  std::vector<MonomialIdeal> out;
  out.reserve(ideals.size());
  for (const MonomialIdeal& ideal : ideals) {
    std::vector<Monomial> gens;
    gens.reserve(ideal.gens().size());
    for (const Monomial& g : ideal.gens()) {
      std::vector<std::uint64_t> exps(ideal.width() + extra, 0);
      std::copy(g.exps().begin(), g.exps().end(), exps.begin() + static_cast<std::ptrdiff_t>(extra));
      gens.emplace_back(std::move(exps));
    }
    out.emplace_back(ideal.width() + extra, std::move(gens));
  }
  return out;
}

// Core of the track product: a lives over dimension d, b over dimension d+2
// (so repeated products can stack exponents on the same variable pair). The
// fresh-variable exponent pairs must form an antichain across tracks, so the
// new a-track is lifted above every X_(d+2) power already present in b;
// otherwise an a-track generator could divide a mixed track and erase the
// badness witness.
std::vector<MonomialIdeal> stacked_product(const IdealSequence& a,
                                           const std::vector<MonomialIdeal>& b,
                                           std::uint64_t max_entries) {
  const std::size_t wide = a.width() + 2;
  const std::size_t n = a.size() * b.size();
  if (b.empty() || n / b.size() != a.size() || n > max_entries)
    throw BudgetExceededError("track product of " + std::to_string(a.size()) + " x " +
                              std::to_string(b.size()) + " entries exceeds the budget");
  std::uint64_t lift = 0;
  for (const MonomialIdeal& ideal : b)
    for (const Monomial& g : ideal.gens()) lift = std::max(lift, g[0]);
  ++lift;
  const std::vector<MonomialIdeal> a_wide = embed_top(a.ideals(), 2);
  std::vector<MonomialIdeal> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t q = i / b.size();
    const std::size_t r = i % b.size();
    std::vector<Monomial> gens;
    for (const Monomial& g : a_wide[q].gens()) gens.push_back(g.times_coord(0, lift));
    for (const Monomial& g : b[r].gens()) gens.push_back(g.times_coord(1, 1));
    out.emplace_back(wide, std::move(gens));
  }
  return out;
}

IdealSequence product_sequence(const IdealSequence& a, std::vector<MonomialIdeal> ideals,
                               const Nat& l) {
  SequenceMeta meta{"track-product", std::nullopt,
                    CappedNat::bounded(Nat(ideals.size()) - 1, Nat(ideals.size())), false};
  return IdealSequence(a.d() + 2, l, ParamFn::constant(0), std::move(ideals),
                       std::move(meta));
}

}  // namespace

IdealSequence seq_maclagan(const OrdinalCnf& alpha, std::uint64_t l, std::uint32_t d,
                           const BuildLimits& limits) {
  if (!alpha.is_zero() && alpha.degree() > d)
    throw DimensionTooSmallError("ordinal " + to_string(alpha) + " needs dimension >= " +
                                 std::to_string(alpha.degree()));
  const CappedNat target = fgh(alpha, l, limits.cap, limits.style);
  if (target.is_overflow())
    throw CapExceededError("F_" + to_string(alpha) + "(" + std::to_string(l) +
                           ") exceeds the cap " + to_decimal(limits.cap));

  const MaclaganBuilder builder(d, limits.cap, limits.style);
  const CappedNat full = builder.full_length(alpha, l);
  std::uint64_t emit = 0;
  bool truncated = false;
  if (!full.is_overflow() && full.value() <= limits.max_entries) {
    emit = to_u64(full.value());
  } else {
    const Nat want = target.value() + 1;
    if (want > limits.max_entries)
      throw BudgetExceededError("certifying prefix of " + to_decimal(want) +
                                " entries exceeds the budget");
    emit = to_u64(want);
    truncated = true;
  }

  std::vector<MonomialIdeal> ideals = builder.build(alpha, l, emit);
  SequenceMeta meta{"maclagan", alpha, target, truncated};
  return IdealSequence(d, l, ParamFn::id(), std::move(ideals), std::move(meta));
}

IdealSequence seq_exp(std::uint32_t j) {
  if (j > 24) throw BudgetExceededError("2^" + std::to_string(j) + "+1 ideals will not fit");
  const std::size_t width = 2;
  const std::size_t y = y_coord(0);
  auto pure_y = [&](std::uint64_t e) {
    return Monomial::unit(width).times_coord(y, e);
  };

  std::vector<MonomialIdeal> cur{MonomialIdeal(width, {pure_y(2)}),
                                 MonomialIdeal(width, {pure_y(1)})};
  for (std::uint32_t step = 1; step <= j; ++step) {
    std::vector<MonomialIdeal> next;
    next.reserve(2 * cur.size());
    // First half keeps Y^1 on the new head and reuses every previous entry;
    // the second half drops to Y^0 and reuses all but the last.
    for (std::size_t half = 0; half < 2; ++half) {
      const std::size_t limit = cur.size() - half;
      for (std::size_t i = 0; i < limit; ++i) {
        std::vector<Monomial> gens{
            Monomial::unit(width).times_coord(x_coord(0, 0), step).times_coord(y, 1 - half)};
        for (const Monomial& g : cur[i].gens()) gens.push_back(g.times_coord(y, 2));
        next.emplace_back(width, std::move(gens));
      }
    }
    cur = std::move(next);
  }

  const Nat target = pow2_exact(j);
  SequenceMeta meta{"exp", std::nullopt, CappedNat::bounded(target, target), false};
  return IdealSequence(0, Nat(2) * j + 2, ParamFn::constant(0), std::move(cur),
                       std::move(meta));
}

IdealSequence seq_track_product(const IdealSequence& a, const IdealSequence& b) {
  if (a.d() != b.d())
    throw LengthMismatchError("track product needs equal dimensions, got " +
                              std::to_string(a.d()) + " and " + std::to_string(b.d()));
  std::vector<MonomialIdeal> wide_b = embed_top(b.ideals(), 2);
  std::vector<MonomialIdeal> ideals = stacked_product(a, wide_b, 50'000'000);
  return product_sequence(a, std::move(ideals), std::max(a.l(), b.l()) + 1);
}

IdealSequence seq_polypower(std::uint32_t c, std::uint32_t j, std::uint64_t max_entries) {
  const std::uint32_t times = std::max(2u, j);
  // Predicted length (2^j + 1)^(times^c); refuse early rather than mid-build.
  {
    CappedNat len = CappedNat::bounded(pow2_exact(j) + 1, Nat(max_entries));
    for (std::uint32_t step = 0; step < c && !len.is_overflow(); ++step) {
      const Nat base = len.value();
      for (std::uint32_t t = 1; t < times && !len.is_overflow(); ++t)
        len = capped_mul(len, base);
    }
    if (len.is_overflow())
      throw BudgetExceededError("polypower(" + std::to_string(c) + ", " + std::to_string(j) +
                                ") exceeds " + std::to_string(max_entries) + " entries");
  }

  IdealSequence s = seq_exp(j);
  for (std::uint32_t step = 1; step <= c; ++step) {
    std::vector<MonomialIdeal> t = stacked_product(s, embed_top(s.ideals(), 2), max_entries);
    for (std::uint32_t k = 2; k < times; ++k) t = stacked_product(s, t, max_entries);
    s = product_sequence(s, std::move(t), 0);
  }

  const Nat l = pow2_exact(Nat(c) + 1) * (Nat(j) + 1);
  const Nat target = pow2_exact(boost::multiprecision::pow(Nat(j), c + 1));
  SequenceMeta meta{"polypower", std::nullopt, CappedNat::bounded(target, target), false};
  return IdealSequence(2 * c, l, ParamFn::constant(0), s.ideals(), std::move(meta));
}

IdealSequence seq_rootlog(std::uint32_t c, std::uint32_t d, std::uint64_t prefix_len,
                          const BuildLimits& limits) {
  if (c < 1) throw Error("seq_rootlog requires c >= 1");
  if (prefix_len == 0) throw Error("seq_rootlog requires a nonempty prefix");
  if (prefix_len > limits.max_entries)
    throw BudgetExceededError("rootlog prefix of " + std::to_string(prefix_len) +
                              " entries exceeds the budget");

  const std::uint32_t D = d + 2 * c + 3;   // ambient dimension
  const std::size_t width = D + 2u;
  const Nat head_top = pow2_exact(Nat(c + 1) * (c + 1));  // 2^((c+1)^2)
  const ParamFn f = ParamFn::rootlog(c);

  std::vector<MonomialIdeal> entries;
  entries.reserve(prefix_len);
  for (std::uint64_t i = 0; i < prefix_len && Nat(i) <= head_top; ++i) {
    const std::uint64_t e = to_u64(head_top - i + 1);
    entries.emplace_back(width, std::vector<Monomial>{
                                    Monomial::unit(width).times_coord(0, e)});
  }

  if (Nat(prefix_len) > head_top + 1) {
    // Identity-construction block over X_d..X_0, Y (coordinates shifted past
    // the fresh variables) and polypower blocks over the 2c+2 fresh
    // variables, each sized for the entries the prefix actually touches.
    const IdealSequence a = seq_maclagan(OrdinalCnf::from_nat(2), 2, d, limits);
    const std::size_t a_shift = 2 * static_cast<std::size_t>(c) + 3;
    const std::vector<MonomialIdeal> a_wide = embed_top(a.ideals(), a_shift);
    std::map<std::uint64_t, std::vector<MonomialIdeal>> b_cache;

    for (std::uint64_t i = to_u64(head_top) + 1; i < prefix_len; ++i) {
      const Nat v = param_eval(f, Nat(i));
      const std::uint64_t vu = to_u64(v);
      if (vu >= a_wide.size())
        throw BudgetExceededError("identity block exhausted at prefix index " +
                                  std::to_string(i));
      const Nat k = Nat(i) - pow2_exact(boost::multiprecision::pow(v, c));
      auto it = b_cache.find(vu);
      if (it == b_cache.end()) {
        // Entries with this v use offsets up to min(prefix, 2^((v+1)^c)) - 2^(v^c).
        const Nat lo = pow2_exact(boost::multiprecision::pow(Nat(vu), c));
        const Nat hi = pow2_exact(boost::multiprecision::pow(Nat(vu) + 1, c));
        const Nat needed = std::min(Nat(prefix_len), hi) - lo;
        // Smallest jb whose polypower length (2^jb + 1)^(max(2,jb)^c) covers
        // the needed offsets.
        std::uint32_t jb = 1;
        while (true) {
          const std::uint32_t times = std::max(2u, jb);
          CappedNat acc = CappedNat::bounded(pow2_exact(jb) + 1, needed);
          for (std::uint32_t step = 0; step < c && !acc.is_overflow(); ++step) {
            const Nat base = acc.value();
            for (std::uint32_t t = 1; t < times && !acc.is_overflow(); ++t)
              acc = capped_mul(acc, base);
          }
          if (acc.is_overflow() || acc.value() >= needed) break;
          ++jb;
        }
        const IdealSequence b = seq_polypower(c, jb, limits.max_entries);
        // Fresh-variable range sits directly below the top variable: shift by
        // one and pad the a-side coordinates below.
        std::vector<MonomialIdeal> wide;
        wide.reserve(b.size());
        for (const MonomialIdeal& ideal : b.ideals()) {
          std::vector<Monomial> gens;
          for (const Monomial& g : ideal.gens()) {
            std::vector<std::uint64_t> exps(width, 0);
            std::copy(g.exps().begin(), g.exps().end(), exps.begin() + 1);
            gens.emplace_back(std::move(exps));
          }
          wide.emplace_back(width, std::move(gens));
        }
        it = b_cache.emplace(vu, std::move(wide)).first;
      }
      const std::vector<MonomialIdeal>& b_wide = it->second;
      const std::uint64_t ku = to_u64(k);
      if (ku >= b_wide.size()) throw Error("polypower block shorter than its stretch");
      std::vector<Monomial> gens = a_wide[vu].gens();
      for (const Monomial& g : b_wide[ku].gens()) gens.push_back(g);
      entries.emplace_back(width, std::move(gens));
    }
  }

  const Nat l = pow2_exact(Nat(c + 4) * (c + 4)) + 1;
  SequenceMeta meta{"rootlog", std::nullopt, std::nullopt, true};
  return IdealSequence(D, l, f, std::move(entries), std::move(meta));
}

}  // namespace badseq
