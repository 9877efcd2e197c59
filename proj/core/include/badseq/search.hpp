#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "badseq/sequence.hpp"

namespace badseq {

struct SearchBudget {
  std::uint64_t max_nodes = 10'000'000;
  std::uint64_t max_universe = 100'000;
  std::optional<std::uint64_t> max_seconds;

  friend bool operator==(const SearchBudget&, const SearchBudget&) = default;
};

enum class SearchStrategy {
  // Memoized over allowed-sets when the universe is constant and small,
  // otherwise plain depth-first search.
  Auto,
  // Straight depth-first enumeration in canonical order.
  Plain,
  // Allowed-set memoization; requires a constant parameter function and a
  // universe of at most 64 ideals.
  Memo,
};

struct SearchOptions {
  bool include_zero = true;
  // Restrict the first element to representatives of X-variable permutation
  // orbits (Y stays distinguished). Off by default.
  bool symmetry_reduction = false;
  SearchStrategy strategy = SearchStrategy::Auto;

  friend bool operator==(const SearchOptions&, const SearchOptions&) = default;
};

struct SearchResult {
  // The exact M_d^f(l); set only when the search exhausted.
  std::optional<std::uint64_t> value;
  // Longest bad sequence found (lexicographically least among the maximal
  // ones when exhausted).
  std::optional<IdealSequence> witness;
  bool exhausted = false;
  std::uint64_t nodes = 0;
};

// All monomial ideals whose minimal generators have degree <= deg_bound, as
// canonical antichains in a deterministic order. Throws BudgetExceededError
// when the monomial grid or the ideal count leaves the budget.
std::vector<MonomialIdeal> enumerate_universe(std::uint32_t d, std::uint64_t deg_bound,
                                              bool include_zero,
                                              std::uint64_t max_universe = 100'000);

// Maximum number of ideals in a bad sequence over K[X_d,...,X_0,Y] with
// deg(I_i) <= l + f(i): position i draws from the degree-bounded universe,
// and every appended ideal must not be contained in any earlier one. When
// the search exhausts, value equals M_d^f(l).
SearchResult max_bad_length(std::uint32_t d, std::uint64_t l, const ParamFn& f,
                            const SearchBudget& budget = {},
                            const SearchOptions& options = {});

}  // namespace badseq
