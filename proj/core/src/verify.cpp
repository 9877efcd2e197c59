#include "badseq/verify.hpp"

#include <atomic>
#include <mutex>
#include <thread>
#include <vector>

#include "badseq/errors.hpp"

namespace badseq {

IdealSequence::IdealSequence(std::uint32_t d, Nat l, ParamFn param,
                             std::vector<MonomialIdeal> ideals,
                             std::optional<SequenceMeta> meta)
    : d_(d), l_(std::move(l)), param_(std::move(param)), meta_(std::move(meta)),
      ideals_(std::move(ideals)) {
  if (l_ < 0) throw Error("sequence offset l must be nonnegative");
  if (ideals_.empty()) throw Error("ideal sequences must be nonempty");
  for (const MonomialIdeal& ideal : ideals_)
    if (ideal.width() != width())
      throw LengthMismatchError("sequence over dimension " + std::to_string(d_) +
                                " contains an ideal of width " +
                                std::to_string(ideal.width()));
}

namespace {

// Least j > i in row i with I_i containing I_j.
std::optional<std::size_t> row_violation(const std::vector<MonomialIdeal>& ideals,
                                         std::size_t i) {
  for (std::size_t j = i + 1; j < ideals.size(); ++j)
    if (contains(ideals[i], ideals[j])) return j;
  return std::nullopt;
}

std::optional<std::pair<std::size_t, std::size_t>> verify_bad_parallel(
    const std::vector<MonomialIdeal>& ideals, unsigned threads) {
  // Rows are scanned in parallel; best_i lets workers skip rows that can no
  // longer improve the lexicographic minimum, keeping the result
  // schedule-independent.
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best_i{ideals.size()};
  std::mutex mu;
  std::optional<std::pair<std::size_t, std::size_t>> best;

  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= ideals.size()) return;
      if (i >= best_i.load()) continue;
      if (auto j = row_violation(ideals, i)) {
        std::lock_guard<std::mutex> lock(mu);
        if (!best || i < best->first) {
          best = {i, *j};
          best_i.store(i);
        }
      }
    }
  };

  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  return best;
}

}  // namespace

std::optional<std::pair<std::size_t, std::size_t>> verify_bad(const IdealSequence& s) {
  const auto& ideals = s.ideals();
  const unsigned hw = std::thread::hardware_concurrency();
  if (ideals.size() >= 512 && hw > 1)
    return verify_bad_parallel(ideals, std::min(hw, 8u));
  for (std::size_t i = 0; i < ideals.size(); ++i)
    if (auto j = row_violation(ideals, i)) return std::make_pair(i, *j);
  return std::nullopt;
}

std::optional<std::size_t> verify_degrees(const IdealSequence& s, DegreeMode mode) {
  Nat base;  // bound at index i is base + i (PlusH) or l + f(i) (Param)
  if (mode == DegreeMode::PlusH) {
    if (!s.meta() || !s.meta()->alpha)
      throw MissingMetaError("PlusH degree check needs the ordinal recorded in meta");
    base = s.l() + h_alpha(*s.meta()->alpha, s.d());
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Nat deg = degree_ideal(s.ideals()[i]);
    const Nat bound = mode == DegreeMode::PlusH
                          ? Nat(base + i)
                          : Nat(s.l() + param_eval(s.param(), Nat(i)));
    if (deg > bound) return i;
  }
  return std::nullopt;
}

bool verify_length(const IdealSequence& s, const CappedNat& target) {
  if (target.is_overflow())
    throw TargetOverflowError("length target overflowed its cap " +
                              to_decimal(target.cap()));
  return Nat(s.size()) >= target.value() + 1;
}

VerifyReport run_verify(const IdealSequence& s, DegreeMode mode,
                        std::optional<CappedNat> target) {
  VerifyReport report;
  report.mode = mode;
  report.bad = verify_bad(s);
  report.degree = verify_degrees(s, mode);
  if (!target && s.meta()) target = s.meta()->length_target;
  if (target) {
    report.target = target;
    report.length_ok = verify_length(s, *target);
  }
  return report;
}

}  // namespace badseq
