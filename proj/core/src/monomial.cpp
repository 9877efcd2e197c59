#include "badseq/monomial.hpp"

#include <algorithm>

#include "badseq/errors.hpp"

namespace badseq {

namespace {

void require_same_width(std::size_t a, std::size_t b, const char* what) {
  if (a != b)
    throw LengthMismatchError(std::string(what) + ": exponent vectors of length " +
                              std::to_string(a) + " and " + std::to_string(b));
}

}  // namespace

Monomial::Monomial(std::vector<std::uint64_t> exps) : exps_(std::move(exps)) {
  if (exps_.empty()) throw Error("monomials need at least the Y coordinate");
}

Monomial Monomial::unit(std::size_t width) {
  return Monomial(std::vector<std::uint64_t>(width, 0));
}

std::uint64_t Monomial::degree() const {
  unsigned __int128 sum = 0;
  for (std::uint64_t e : exps_) sum += e;
  if (sum > UINT64_MAX) throw Error("monomial degree overflows 64 bits");
  return static_cast<std::uint64_t>(sum);
}

Monomial Monomial::times(const Monomial& other) const {
  require_same_width(width(), other.width(), "times");
  std::vector<std::uint64_t> out(exps_);
  for (std::size_t t = 0; t < out.size(); ++t) {
    if (out[t] > UINT64_MAX - other.exps_[t]) throw Error("exponent overflow in times");
    out[t] += other.exps_[t];
  }
  return Monomial(std::move(out));
}

Monomial Monomial::times_coord(std::size_t coord, std::uint64_t amount) const {
  if (coord >= width()) throw Error("times_coord: coordinate out of range");
  std::vector<std::uint64_t> out(exps_);
  if (out[coord] > UINT64_MAX - amount) throw Error("exponent overflow in times_coord");
  out[coord] += amount;
  return Monomial(std::move(out));
}

bool divides(const Monomial& a, const Monomial& b) {
  require_same_width(a.width(), b.width(), "divides");
  for (std::size_t t = 0; t < a.width(); ++t)
    if (a[t] > b[t]) return false;
  return true;
}

std::uint64_t degree_monomial(const Monomial& m) { return m.degree(); }

std::uint64_t degree_set(const std::vector<Monomial>& gens) {
  std::uint64_t best = 0;
  for (const Monomial& m : gens) best = std::max(best, m.degree());
  return best;
}

MonomialIdeal::MonomialIdeal(std::size_t width, std::vector<Monomial> gens) : width_(width) {
  for (const Monomial& m : gens) require_same_width(width_, m.width(), "ideal generator");
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  // Keep a generator only if no other generator divides it.
  for (std::size_t t = 0; t < gens.size(); ++t) {
    bool redundant = false;
    for (std::size_t s = 0; s < gens.size() && !redundant; ++s)
      redundant = s != t && divides(gens[s], gens[t]);
    if (!redundant) gens_.push_back(gens[t]);
  }
}

MonomialIdeal MonomialIdeal::zero(std::size_t width) { return MonomialIdeal(width, {}); }

MonomialIdeal MonomialIdeal::unit(std::size_t width) {
  return MonomialIdeal(width, {Monomial::unit(width)});
}

bool MonomialIdeal::is_unit() const {
  return gens_.size() == 1 && gens_[0] == Monomial::unit(width_);
}

MonomialIdeal minimalize(std::size_t width, std::vector<Monomial> gens) {
  return MonomialIdeal(width, std::move(gens));
}

bool member(const MonomialIdeal& ideal, const Monomial& m) {
  require_same_width(ideal.width(), m.width(), "member");
  for (const Monomial& g : ideal.gens())
    if (divides(g, m)) return true;
  return false;
}

bool contains(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_width(I.width(), J.width(), "contains");
  for (const Monomial& g : J.gens())
    if (!member(I, g)) return false;
  return true;
}

std::uint64_t degree_ideal(const MonomialIdeal& ideal) { return degree_set(ideal.gens()); }

}  // namespace badseq
