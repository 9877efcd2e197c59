#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "badseq/sequence.hpp"

namespace badseq {

// Bounded coloring C: {lo..hi}^2 -> N^r, stored on the pairs x < y only (the
// adjacent-triple conclusion never inspects the diagonal or symmetric
// entries). Bounded means max C(x,y) <= max{x,y} for every stored pair; the
// constructor enforces it.
class Coloring {
public:
  Coloring(std::uint64_t lo, std::uint64_t hi, std::uint32_t r,
           std::vector<std::uint64_t> flat);

  std::uint64_t lo() const { return lo_; }
  std::uint64_t hi() const { return hi_; }
  std::uint32_t r() const { return r_; }
  std::uint64_t domain_size() const { return hi_ - lo_ + 1; }

  // Color of the pair x < y; throws OutOfDomainError.
  std::span<const std::uint64_t> color(std::uint64_t x, std::uint64_t y) const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

private:
  std::size_t pair_offset(std::uint64_t x, std::uint64_t y) const;

  std::uint64_t lo_;
  std::uint64_t hi_;
  std::uint32_t r_;
  // Pair (x, y), x < y, lives at pair_offset(x, y) * r.
  std::vector<std::uint64_t> flat_;
};

// The coloring extracted from a bad sequence: C(i, j) is the exponent vector
// of the first generator of I_j (in canonical order) that no generator of
// I_i divides. Indices are shifted up by the least offset making the
// boundedness invariant hold. Throws NotBadError when some I_i contains I_j.
Coloring reduce_to_coloring(const IdealSequence& s);

// Lexicographically least triple a < b < c with C(a,b) <= C(b,c)
// coordinatewise, or nullopt.
std::optional<std::array<std::uint64_t, 3>> find_adjacent_monotone(const Coloring& C);

// 0 when C(x,y) <= C(y,z) coordinatewise, otherwise the least violating
// coordinate, reported 1-based. Colors therefore range over 0..r.
std::uint32_t triple_coloring(const Coloring& C, std::uint64_t x, std::uint64_t y,
                              std::uint64_t z);

struct RamseyNumberResult {
  // Least R <= r_max such that every bounded coloring on {l..R}^2 admits a
  // monotone adjacent triple; nullopt when none does.
  std::optional<std::uint64_t> number;
  // Lexicographically least counterexample for each failing R, ascending.
  std::vector<std::pair<std::uint64_t, Coloring>> counterexamples;
};

// Exhaustive computation by depth-first assignment over pairs with the
// triple check applied incrementally. Throws BudgetExceededError when the
// enumeration for some candidate R is larger than `budget` assignments.
RamseyNumberResult adjacent_ramsey_number(std::uint64_t l, std::uint32_t r,
                                          std::uint64_t r_max,
                                          const Nat& budget = Nat(10'000'000));

}  // namespace badseq
