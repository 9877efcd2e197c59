#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace badseq {

// Monomial in K[X_d, ..., X_0, Y], reduced to its exponent vector
// (i_d, ..., i_0, j) of length d+2. The Y exponent is always last. The field
// K never appears: membership and containment are coordinatewise
// combinatorics on these vectors.
class Monomial {
public:
  explicit Monomial(std::vector<std::uint64_t> exps);

  // The constant monomial 1.
  static Monomial unit(std::size_t width);

  std::size_t width() const { return exps_.size(); }
  const std::vector<std::uint64_t>& exps() const { return exps_; }
  std::uint64_t operator[](std::size_t t) const { return exps_[t]; }

  // Total degree (sum of exponents), overflow-checked.
  std::uint64_t degree() const;

  Monomial times(const Monomial& other) const;
  // Multiplies by the variable stored at coordinate `coord`, `amount` times.
  Monomial times_coord(std::size_t coord, std::uint64_t amount) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    return a.exps_ <=> b.exps_;
  }

private:
  std::vector<std::uint64_t> exps_;
};

// Coordinate of X_k in a width-(d+2) exponent vector.
inline std::size_t x_coord(std::size_t d, std::size_t k) { return d - k; }
// Coordinate of Y.
inline std::size_t y_coord(std::size_t d) { return d + 1; }

// a | b: every exponent of a is <= the matching exponent of b.
// Throws LengthMismatchError.
bool divides(const Monomial& a, const Monomial& b);

std::uint64_t degree_monomial(const Monomial& m);
// Max degree over a set; 0 for the empty set.
std::uint64_t degree_set(const std::vector<Monomial>& gens);

// Monomial ideal as its unique minimal generating set: an antichain under
// divisibility, stored lexicographically sorted. The empty set is the zero
// ideal; {1} is the unit ideal. The width is kept explicitly so the zero
// ideal still knows its ambient ring.
class MonomialIdeal {
public:
  // Minimalizes, sorts and deduplicates the generators.
  MonomialIdeal(std::size_t width, std::vector<Monomial> gens);

  static MonomialIdeal zero(std::size_t width);
  static MonomialIdeal unit(std::size_t width);

  std::size_t width() const { return width_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;
  friend std::strong_ordering operator<=>(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.gens_ <=> b.gens_;
  }

private:
  std::size_t width_;
  std::vector<Monomial> gens_;
};

// Canonical form of an arbitrary generating set.
MonomialIdeal minimalize(std::size_t width, std::vector<Monomial> gens);

// m is in the ideal iff some generator divides m.
bool member(const MonomialIdeal& ideal, const Monomial& m);

// I contains J iff every generator of J is a member of I. Contains every
// zero ideal vacuously.
bool contains(const MonomialIdeal& I, const MonomialIdeal& J);

// Degree of the ideal = max degree of its minimal generators (0 for the zero
// and unit ideals). Equals the min over all monomial generating sets, since
// the minimal set is contained in every generating set.
std::uint64_t degree_ideal(const MonomialIdeal& ideal);

}  // namespace badseq
