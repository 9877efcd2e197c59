#include "badseq/search.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <unordered_map>

#include "badseq/errors.hpp"

namespace badseq {

namespace {

// All exponent vectors of the given width with coordinate sum <= deg_bound,
// in lexicographic order.
void enumerate_monomials(std::size_t width, std::uint64_t deg_bound,
                         std::vector<std::uint64_t>& prefix,
                         std::vector<Monomial>& out) {
  if (prefix.size() == width) {
    out.emplace_back(prefix);
    return;
  }
  const std::uint64_t used =
      std::accumulate(prefix.begin(), prefix.end(), std::uint64_t{0});
  for (std::uint64_t e = 0; e <= deg_bound - used; ++e) {
    prefix.push_back(e);
    enumerate_monomials(width, deg_bound, prefix, out);
    prefix.pop_back();
  }
}

void enumerate_antichains(const std::vector<Monomial>& monomials, std::size_t start,
                          std::vector<Monomial>& chosen, std::uint32_t d,
                          std::uint64_t max_universe, std::vector<MonomialIdeal>& out) {
  if (out.size() > max_universe)
    throw BudgetExceededError("universe exceeds " + std::to_string(max_universe) +
                              " ideals");
  out.emplace_back(d + 2u, chosen);
  for (std::size_t t = start; t < monomials.size(); ++t) {
    bool comparable = false;
    for (const Monomial& m : chosen)
      if (divides(m, monomials[t]) || divides(monomials[t], m)) {
        comparable = true;
        break;
      }
    if (comparable) continue;
    chosen.push_back(monomials[t]);
    enumerate_antichains(monomials, t + 1, chosen, d, max_universe, out);
    chosen.pop_back();
  }
}

class Deadline {
public:
  explicit Deadline(const std::optional<std::uint64_t>& seconds) {
    if (seconds)
      at_ = std::chrono::steady_clock::now() + std::chrono::seconds(*seconds);
  }
  bool passed() const { return at_ && std::chrono::steady_clock::now() >= *at_; }

private:
  std::optional<std::chrono::steady_clock::time_point> at_;
};

// X-variable permutations act on the first d+1 coordinates; Y stays fixed.
MonomialIdeal orbit_canonical(const MonomialIdeal& ideal, std::uint32_t d) {
  std::vector<std::size_t> perm(d + 1u);
  std::iota(perm.begin(), perm.end(), 0);
  MonomialIdeal best = ideal;
  do {
    std::vector<Monomial> gens;
    gens.reserve(ideal.gens().size());
    for (const Monomial& g : ideal.gens()) {
      std::vector<std::uint64_t> exps(ideal.width(), 0);
      for (std::size_t t = 0; t <= d; ++t) exps[perm[t]] = g[t];
      exps[ideal.width() - 1] = g[ideal.width() - 1];
      gens.emplace_back(std::move(exps));
    }
    MonomialIdeal image(ideal.width(), std::move(gens));
    if (image < best) best = std::move(image);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

class PlainSearch {
public:
  PlainSearch(std::uint32_t d, std::uint64_t l, const ParamFn& f,
              const SearchBudget& budget, const SearchOptions& options)
      : d_(d), l_(l), f_(f), budget_(budget), options_(options) {}

  SearchResult run() {
    SearchResult result;
    exhausted_ = true;
    dfs();
    result.nodes = nodes_;
    result.exhausted = exhausted_;
    if (exhausted_) result.value = best_.size();
    if (!best_.empty())
      result.witness = IdealSequence(d_, Nat(l_), f_, best_,
                                     SequenceMeta{"search-witness", std::nullopt,
                                                  std::nullopt, !exhausted_});
    return result;
  }

private:
  // Universe for the degree bound at `position`. A bound whose universe
  // leaves the budget ends that branch and downgrades the result to a
  // partial one instead of failing the whole search.
  const std::vector<MonomialIdeal>& universe_at(std::size_t position) {
    static const std::vector<MonomialIdeal> empty;
    const Nat bound = Nat(l_) + param_eval(f_, Nat(position));
    if (bound > Nat(UINT64_MAX)) {
      exhausted_ = false;
      return empty;
    }
    const std::uint64_t key = to_u64(bound);
    auto it = universes_.find(key);
    if (it == universes_.end()) {
      try {
        it = universes_
                 .emplace(key, enumerate_universe(d_, key, options_.include_zero,
                                                  budget_.max_universe))
                 .first;
      } catch (const BudgetExceededError&) {
        exhausted_ = false;
        return empty;
      }
    }
    return it->second;
  }

  void dfs() {
    if (chosen_.size() > best_.size()) best_ = chosen_;
    if (nodes_ >= budget_.max_nodes ||
        ((nodes_ & 255) == 0 && deadline_.passed())) {
      exhausted_ = false;
      return;
    }
    const std::vector<MonomialIdeal>& candidates = universe_at(chosen_.size());
    for (const MonomialIdeal& next : candidates) {
      if (chosen_.empty() && options_.symmetry_reduction &&
          orbit_canonical(next, d_) != next)
        continue;
      bool blocked = false;
      for (const MonomialIdeal& prev : chosen_)
        if (contains(prev, next)) {
          blocked = true;
          break;
        }
      if (blocked) continue;
      ++nodes_;
      chosen_.push_back(next);
      dfs();
      chosen_.pop_back();
      if (!exhausted_) return;
    }
  }

  std::uint32_t d_;
  std::uint64_t l_;
  ParamFn f_;
  SearchBudget budget_;
  SearchOptions options_;
  Deadline deadline_{budget_.max_seconds};
  std::map<std::uint64_t, std::vector<MonomialIdeal>> universes_;
  std::vector<MonomialIdeal> chosen_;
  std::vector<MonomialIdeal> best_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = true;
};

// Allowed-set memoization for constant degree bounds over universes of at
// most 64 ideals: the best continuation depends only on the set of ideals
// not yet excluded by a containment.
class MemoSearch {
public:
  MemoSearch(std::uint32_t d, std::uint64_t l, const ParamFn& f,
             const SearchBudget& budget, const SearchOptions& options)
      : d_(d), l_(l), f_(f), budget_(budget), options_(options) {
    universe_ = enumerate_universe(d_, to_u64(Nat(l_) + param_eval(f_, 0)),
                                   options_.include_zero, budget_.max_universe);
    if (universe_.size() > 64)
      throw BudgetExceededError("memo strategy handles at most 64 ideals");
    kills_.resize(universe_.size());
    for (std::size_t t = 0; t < universe_.size(); ++t)
      for (std::size_t s = 0; s < universe_.size(); ++s)
        if (contains(universe_[t], universe_[s])) kills_[t] |= 1ull << s;
  }

  SearchResult run() {
    SearchResult result;
    const std::uint64_t all =
        universe_.size() == 64 ? ~0ull : (1ull << universe_.size()) - 1;
    const std::uint64_t length = best(all, /*first=*/true);
    result.nodes = nodes_;
    if (!exhausted_) {
      // Fall back to the plain search below the node budget rather than
      // reporting a partially memoized bound.
      return PlainSearch(d_, l_, f_, budget_, options_).run();
    }
    result.exhausted = true;
    result.value = length;

    // Reconstruct the lexicographically least maximal witness. Every mask
    // queried here was memoized by the exhausted main pass.
    std::vector<MonomialIdeal> picks;
    std::uint64_t mask = all;
    bool first = true;
    while (picks.size() < length) {
      const std::size_t before = picks.size();
      for (std::size_t t = 0; t < universe_.size(); ++t) {
        if (!(mask >> t & 1)) continue;
        if (first && options_.symmetry_reduction &&
            orbit_canonical(universe_[t], d_) != universe_[t])
          continue;
        if (1 + best(mask & ~kills_[t], false) == length - picks.size()) {
          picks.push_back(universe_[t]);
          mask &= ~kills_[t];
          break;
        }
      }
      if (picks.size() == before) throw Error("witness reconstruction stalled");
      first = false;
    }
    if (!picks.empty())
      result.witness = IdealSequence(d_, Nat(l_), f_, std::move(picks),
                                     SequenceMeta{"search-witness", std::nullopt,
                                                  std::nullopt, false});
    return result;
  }

private:
  std::uint64_t best(std::uint64_t mask, bool first) {
    if (!first) {
      auto it = memo_.find(mask);
      if (it != memo_.end()) return it->second;
    }
    if (++nodes_ >= budget_.max_nodes ||
        ((nodes_ & 255) == 0 && deadline_.passed())) {
      exhausted_ = false;
      return 0;
    }
    std::uint64_t out = 0;
    for (std::size_t t = 0; t < universe_.size() && exhausted_; ++t) {
      if (!(mask >> t & 1)) continue;
      if (first && options_.symmetry_reduction &&
          orbit_canonical(universe_[t], d_) != universe_[t])
        continue;
      out = std::max(out, 1 + best(mask & ~kills_[t], false));
    }
    if (!first && exhausted_) memo_.emplace(mask, out);
    return out;
  }

  std::uint32_t d_;
  std::uint64_t l_;
  ParamFn f_;
  SearchBudget budget_;
  SearchOptions options_;
  Deadline deadline_{budget_.max_seconds};
  std::vector<MonomialIdeal> universe_;
  std::vector<std::uint64_t> kills_;
  std::unordered_map<std::uint64_t, std::uint64_t> memo_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = true;
};

}  // namespace

std::vector<MonomialIdeal> enumerate_universe(std::uint32_t d, std::uint64_t deg_bound,
                                              bool include_zero,
                                              std::uint64_t max_universe) {
  const std::size_t width = d + 2u;
  const CappedNat grid =
      capped_pow(Nat(deg_bound) + 1, Nat(width), Nat(max_universe));
  if (grid.is_overflow())
    throw BudgetExceededError("monomial grid (deg+1)^(d+2) exceeds the budget");

  std::vector<Monomial> monomials;
  std::vector<std::uint64_t> prefix;
  enumerate_monomials(width, deg_bound, prefix, monomials);

  std::vector<MonomialIdeal> out;
  std::vector<Monomial> chosen;
  enumerate_antichains(monomials, 0, chosen, d, max_universe, out);
  if (!include_zero) std::erase_if(out, [](const MonomialIdeal& i) { return i.is_zero(); });
  return out;
}

SearchResult max_bad_length(std::uint32_t d, std::uint64_t l, const ParamFn& f,
                            const SearchBudget& budget, const SearchOptions& options) {
  SearchStrategy strategy = options.strategy;
  if (strategy == SearchStrategy::Auto) {
    strategy = SearchStrategy::Plain;
    if (f.kind == ParamFn::Kind::Const) {
      const std::uint64_t bound = to_u64(Nat(l) + f.c);
      try {
        if (enumerate_universe(d, bound, options.include_zero, 64).size() <= 64)
          strategy = SearchStrategy::Memo;
      } catch (const BudgetExceededError&) {
      }
    }
  }
  if (strategy == SearchStrategy::Memo) {
    if (f.kind != ParamFn::Kind::Const)
      throw BudgetExceededError("memo strategy needs a constant parameter function");
    return MemoSearch(d, l, f, budget, options).run();
  }
  return PlainSearch(d, l, f, budget, options).run();
}

}  // namespace badseq
