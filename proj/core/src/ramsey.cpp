#include "badseq/ramsey.hpp"

#include <algorithm>

#include "badseq/errors.hpp"

namespace badseq {

namespace {

bool leq_coordinatewise(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  for (std::size_t t = 0; t < a.size(); ++t)
    if (a[t] > b[t]) return false;
  return true;
}

}  // namespace

Coloring::Coloring(std::uint64_t lo, std::uint64_t hi, std::uint32_t r,
                   std::vector<std::uint64_t> flat)
    : lo_(lo), hi_(hi), r_(r), flat_(std::move(flat)) {
  if (hi_ < lo_) throw Error("coloring domain is empty");
  const std::uint64_t n = domain_size();
  if (flat_.size() != n * (n - 1) / 2 * r_)
    throw Error("coloring table has the wrong size");
  for (std::uint64_t x = lo_; x < hi_; ++x)
    for (std::uint64_t y = x + 1; y <= hi_; ++y)
      for (std::uint64_t v : color(x, y))
        if (v > y)
          throw Error("coloring is not bounded: C(" + std::to_string(x) + "," +
                      std::to_string(y) + ") has a coordinate " + std::to_string(v) +
                      " > " + std::to_string(y));
}

std::size_t Coloring::pair_offset(std::uint64_t x, std::uint64_t y) const {
  if (x < lo_ || y > hi_ || x >= y)
    throw OutOfDomainError("pair (" + std::to_string(x) + "," + std::to_string(y) +
                           ") outside {" + std::to_string(lo_) + ".." +
                           std::to_string(hi_) + "}");
  // Row-major over the strict upper triangle.
  const std::uint64_t i = x - lo_;
  const std::uint64_t j = y - lo_;
  const std::uint64_t n = domain_size();
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

std::span<const std::uint64_t> Coloring::color(std::uint64_t x, std::uint64_t y) const {
  return {flat_.data() + pair_offset(x, y) * r_, r_};
}

Coloring reduce_to_coloring(const IdealSequence& s) {
  const std::size_t n = s.size();
  const std::uint32_t r = static_cast<std::uint32_t>(s.width());

  // Least shift making every C(i,j) coordinate (bounded by deg I_j) fit
  // under the domain point it lands on.
  std::uint64_t lo = 0;
  for (std::size_t j = 1; j < n; ++j) {
    const std::uint64_t deg = degree_ideal(s.ideals()[j]);
    if (deg > j) lo = std::max(lo, deg - j);
  }

  std::vector<std::uint64_t> flat;
  flat.reserve(n * (n - 1) / 2 * r);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const MonomialIdeal& I = s.ideals()[i];
      const MonomialIdeal& J = s.ideals()[j];
      const Monomial* pick = nullptr;
      for (const Monomial& g : J.gens()) {
        if (!member(I, g)) {
          pick = &g;
          break;
        }
      }
      if (pick == nullptr) throw NotBadError(i, j);
      flat.insert(flat.end(), pick->exps().begin(), pick->exps().end());
    }
  }
  return Coloring(lo, lo + n - 1, r, std::move(flat));
}

std::optional<std::array<std::uint64_t, 3>> find_adjacent_monotone(const Coloring& C) {
  const std::uint64_t lo = C.lo();
  const std::uint64_t hi = C.hi();
  if (hi - lo < 2) return std::nullopt;

  // Existence scan first: for each middle point b keep the minimal elements
  // of { C(a,b) : a < b } and test each C(b,c) against them. Only when a
  // monotone triple exists is the cubic lexicographic search run.
  bool exists = false;
  std::vector<std::vector<std::uint64_t>> frontier;
  for (std::uint64_t b = lo + 1; b < hi && !exists; ++b) {
    frontier.clear();
    for (std::uint64_t a = lo; a < b; ++a) {
      const auto col = C.color(a, b);
      bool dominated = false;
      for (const auto& f : frontier)
        if (leq_coordinatewise({f.data(), f.size()}, col)) {
          dominated = true;
          break;
        }
      if (dominated) continue;
      std::erase_if(frontier, [&](const std::vector<std::uint64_t>& f) {
        return leq_coordinatewise(col, {f.data(), f.size()});
      });
      frontier.emplace_back(col.begin(), col.end());
    }
    for (std::uint64_t c = b + 1; c <= hi && !exists; ++c) {
      const auto col = C.color(b, c);
      for (const auto& f : frontier)
        if (leq_coordinatewise({f.data(), f.size()}, col)) {
          exists = true;
          break;
        }
    }
  }
  if (!exists) return std::nullopt;

  for (std::uint64_t a = lo; a + 2 <= hi; ++a)
    for (std::uint64_t b = a + 1; b + 1 <= hi; ++b)
      for (std::uint64_t c = b + 1; c <= hi; ++c)
        if (leq_coordinatewise(C.color(a, b), C.color(b, c)))
          return std::array<std::uint64_t, 3>{a, b, c};
  throw Error("existence scan and lexicographic scan disagree");
}

std::uint32_t triple_coloring(const Coloring& C, std::uint64_t x, std::uint64_t y,
                              std::uint64_t z) {
  if (!(x < y && y < z)) throw OutOfDomainError("triple_coloring needs x < y < z");
  const auto ab = C.color(x, y);
  const auto bc = C.color(y, z);
  for (std::uint32_t t = 0; t < C.r(); ++t)
    if (ab[t] > bc[t]) return t + 1;
  return 0;
}

namespace {

// DFS over the pairs of {l..R} in lexicographic order, assigning each color
// vector in counting order and backtracking as soon as an adjacent monotone
// triple appears among the assigned pairs. The first complete assignment is
// therefore the lexicographically least counterexample.
class CounterexampleSearch {
public:
  CounterexampleSearch(std::uint64_t l, std::uint32_t r, std::uint64_t R)
      : lo_(l), hi_(R), r_(r) {
    for (std::uint64_t x = lo_; x < hi_; ++x)
      for (std::uint64_t y = x + 1; y <= hi_; ++y) pairs_.push_back({x, y});
    values_.assign(pairs_.size() * r_, 0);
  }

  std::optional<Coloring> run() {
    if (dfs(0)) return Coloring(lo_, hi_, r_, values_);
    return std::nullopt;
  }

private:
  std::span<const std::uint64_t> value_of(std::size_t pair_index) const {
    return {values_.data() + pair_index * r_, r_};
  }

  // Triples completed by assigning pair p = (x, y): those (a, x, y) whose
  // first leg (a, x) precedes p in lexicographic pair order.
  bool creates_monotone_triple(std::size_t p) const {
    const auto [x, y] = pairs_[p];
    for (std::uint64_t a = lo_; a < x; ++a) {
      const std::size_t q = pair_index(a, x);
      if (leq_coordinatewise(value_of(q), value_of(p))) return true;
    }
    return false;
  }

  std::size_t pair_index(std::uint64_t x, std::uint64_t y) const {
    const std::uint64_t n = hi_ - lo_ + 1;
    const std::uint64_t i = x - lo_;
    const std::uint64_t j = y - lo_;
    return i * (2 * n - i - 1) / 2 + (j - i - 1);
  }

  bool dfs(std::size_t p) {
    if (p == pairs_.size()) return true;
    const std::uint64_t bound = pairs_[p].second;  // coordinates range 0..max{x,y}
    std::uint64_t* slot = values_.data() + p * r_;
    std::fill(slot, slot + r_, 0);
    while (true) {
      if (!creates_monotone_triple(p) && dfs(p + 1)) return true;
      // Next color vector in counting order.
      std::uint32_t t = r_;
      while (t > 0) {
        --t;
        if (slot[t] < bound) {
          ++slot[t];
          std::fill(slot + t + 1, slot + r_, 0);
          break;
        }
        if (t == 0) return false;
      }
      if (r_ == 0) return false;  // single empty assignment already tried
    }
  }

  std::uint64_t lo_;
  std::uint64_t hi_;
  std::uint32_t r_;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs_;
  std::vector<std::uint64_t> values_;
};

}  // namespace

RamseyNumberResult adjacent_ramsey_number(std::uint64_t l, std::uint32_t r,
                                          std::uint64_t r_max, const Nat& budget) {
  RamseyNumberResult out;
  for (std::uint64_t R = l; R <= r_max; ++R) {
    // Enumeration size: product over pairs of (max{x,y}+1)^r.
    CappedNat size = CappedNat::bounded(1, budget);
    for (std::uint64_t x = l; x < R; ++x)
      for (std::uint64_t y = x + 1; y <= R; ++y)
        size = capped_mul(size, boost::multiprecision::pow(Nat(y) + 1, r));
    if (size.is_overflow())
      throw BudgetExceededError("enumeration for R = " + std::to_string(R) +
                                " exceeds the budget");
    CounterexampleSearch search(l, r, R);
    if (auto counterexample = search.run()) {
      out.counterexamples.emplace_back(R, std::move(*counterexample));
    } else {
      out.number = R;
      return out;
    }
  }
  return out;
}

}  // namespace badseq
