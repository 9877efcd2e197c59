// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Every expected value is pinned here; nothing is tuned at runtime.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "badseq/construct.hpp"
#include "badseq/errors.hpp"
#include "badseq/hierarchy.hpp"
#include "badseq/ramsey.hpp"
#include "badseq/search.hpp"
#include "badseq/verify.hpp"

using namespace badseq;

namespace {

struct Checker {
  int failures = 0;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition) {
      ++failures;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

int run_criterion(int number, const std::string& name,
                  const std::function<void(Checker&)>& body) {
  Checker checker;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(checker);
  } catch (const std::exception& e) {
    checker.require(false, std::string("exception: ") + e.what());
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%s  %d  %-22s  %6.2fs%s%s\n", checker.failures == 0 ? "PASS" : "FAIL",
              number, name.c_str(), seconds, checker.detail.empty() ? "" : "  -- ",
              checker.detail.c_str());
  std::fflush(stdout);
  return checker.failures == 0 ? 0 : 1;
}

std::uint64_t max_degree(const IdealSequence& s) {
  std::uint64_t best = 0;
  for (const MonomialIdeal& ideal : s.ideals()) best = std::max(best, degree_ideal(ideal));
  return best;
}

std::vector<IdealSequence> certificates;  // collected by criteria 1-4 for criterion 6

}  // namespace

int main() {
  int failed = 0;

  // 1. Seq grid: alpha in {0,1,2,3,w,w+1,w*2,w^2,w^2+w+1} at minimal d,
  //    l in {0,1,2}, wherever F_alpha(l) <= 5000.
  failed += run_criterion(1, "seq-grid", [](Checker& c) {
    const char* alphas[] = {"0", "1",   "2",   "3",  "w",
                            "w+1", "w*2", "w^2", "w^2+w+1"};
    BuildLimits limits;
    limits.cap = 5000;
    int certified = 0;
    for (const char* lit : alphas) {
      const OrdinalCnf alpha = parse_ordinal(lit);
      const std::uint32_t d = alpha.is_zero() ? 0 : static_cast<std::uint32_t>(alpha.degree());
      for (std::uint64_t l = 0; l <= 2; ++l) {
        const CappedNat target = fgh(alpha, l, limits.cap);
        if (target.is_overflow()) continue;
        const IdealSequence s = seq_maclagan(alpha, l, d, limits);
        const std::string tag = std::string(lit) + "/l=" + std::to_string(l);
        c.require(verify_bad(s) == std::nullopt, tag + " badness");
        c.require(verify_degrees(s, DegreeMode::PlusH) == std::nullopt, tag + " degrees");
        c.require(verify_length(s, target), tag + " length");
        certificates.push_back(s);
        ++certified;
      }
    }
    // F_alpha(l) stays under 5000 for every l at alpha <= w and for l <= 1
    // beyond; 5 * 3 + 4 * 2 = 23 grid points.
    c.require(certified == 23, "expected 23 grid points, saw " + std::to_string(certified));
  });

  // 2. Exponential family: exactly 2^j + 1 ideals, degree <= 2j+2, bad.
  failed += run_criterion(2, "exp-family", [](Checker& c) {
    for (std::uint32_t j = 0; j <= 8; ++j) {
      const IdealSequence s = seq_exp(j);
      const std::string tag = "j=" + std::to_string(j);
      c.require(s.size() == (std::uint64_t{1} << j) + 1, tag + " length");
      c.require(max_degree(s) <= 2 * std::uint64_t{j} + 2, tag + " degree");
      c.require(verify_bad(s) == std::nullopt, tag + " badness");
      certificates.push_back(s);
    }
  });

  // 3. Track/polypower: length >= 2^(j^2), degrees <= 4(j+1), bad.
  failed += run_criterion(3, "polypower", [](Checker& c) {
    for (std::uint32_t j = 1; j <= 2; ++j) {
      const IdealSequence s = seq_polypower(1, j);
      const std::string tag = "j=" + std::to_string(j);
      c.require(Nat(s.size()) >= pow2_exact(Nat(j) * j), tag + " length");
      c.require(max_degree(s) <= 4 * (std::uint64_t{j} + 1), tag + " degree");
      c.require(verify_bad(s) == std::nullopt, tag + " badness");
      certificates.push_back(s);
    }
  });

  // 4. Rootlog prefix of 300 entries; first 17 are descending pure powers.
  failed += run_criterion(4, "rootlog-prefix", [](Checker& c) {
    const IdealSequence s = seq_rootlog(1, 0, 300);
    c.require(s.size() == 300, "prefix length");
    c.require(verify_bad(s) == std::nullopt, "badness");
    bool heads = true;
    for (std::uint64_t i = 0; i < 17; ++i) {
      const auto& gens = s.ideals()[i].gens();
      heads = heads && gens.size() == 1 && gens[0][0] == 17 - i &&
              gens[0].degree() == 17 - i;
    }
    c.require(heads, "pure-power head");
    certificates.push_back(s);
  });

  // 5. Search oracle: M_0^const0(0) = 2 and M_0^const0(1) = 5, both under
  //    the pigeonhole bounds 3 and 17; witnesses re-verify.
  failed += run_criterion(5, "search-oracle", [](Checker& c) {
    const SearchResult r0 = max_bad_length(0, 0, ParamFn::constant(0));
    c.require(r0.exhausted && r0.value == 2, "M(0) = 2");
    const SearchResult r1 = max_bad_length(0, 1, ParamFn::constant(0));
    c.require(r1.exhausted && r1.value == 5, "M(1) = 5");
    const Nat cap = Nat(1) << 64;
    const CappedNat b0 = bound_pigeonhole(0, 0, 0, cap);
    const CappedNat b1 = bound_pigeonhole(0, 1, 0, cap);
    c.require(!b0.is_overflow() && b0.value() == 3, "pigeonhole(0) = 3");
    c.require(!b1.is_overflow() && b1.value() == 17, "pigeonhole(1) = 17");
    c.require(Nat(*r0.value) <= b0.value() && Nat(*r1.value) <= b1.value(),
              "oracle under bound");
    for (const SearchResult* r : {&r0, &r1}) {
      c.require(r->witness.has_value(), "witness exists");
      c.require(verify_bad(*r->witness) == std::nullopt, "witness badness");
      c.require(verify_degrees(*r->witness, DegreeMode::Param) == std::nullopt,
                "witness degrees");
    }
  });

  // 6. Duality: every certificate reduces to a coloring without a monotone
  //    adjacent triple.
  failed += run_criterion(6, "duality", [](Checker& c) {
    c.require(!certificates.empty(), "certificates collected");
    for (const IdealSequence& s : certificates) {
      const Coloring coloring = reduce_to_coloring(s);
      c.require(find_adjacent_monotone(coloring) == std::nullopt, "monotone triple");
    }
  });

  // 7. Adjacent Ramsey tiny instance: number = 3, with the stored R = 2
  //    counterexample C(0,1) = 1, C(1,2) = 0 re-checked.
  failed += run_criterion(7, "adjacent-ramsey", [](Checker& c) {
    const RamseyNumberResult r = adjacent_ramsey_number(0, 1, 5);
    c.require(r.number == 3, "number = 3");
    c.require(r.counterexamples.size() == 3, "failing R = 0, 1, 2");
    if (!r.counterexamples.empty()) {
      const auto& [R, cex] = r.counterexamples.back();
      c.require(R == 2, "last failing R");
      c.require(cex.color(0, 1)[0] == 1 && cex.color(1, 2)[0] == 0,
                "counterexample values");
      c.require(find_adjacent_monotone(cex) == std::nullopt, "counterexample re-check");
    }
  });

  // 8. Hierarchy and parameter functions.
  failed += run_criterion(8, "hierarchy-params", [](Checker& c) {
    const Nat cap = 1'000'000;
    auto value = [&](const char* lit, std::uint64_t i) {
      return fgh(parse_ordinal(lit), i, cap).value();
    };
    c.require(value("0", 3) == 4, "F_0(3)");
    c.require(value("1", 2) == 4, "F_1(2)");
    c.require(value("2", 3) == 24, "F_2(3)");
    c.require(value("w", 2) == 8, "F_w(2)");

    auto two_pow = [](const Nat& j) { return pow2_exact(j); };
    auto two_tower = [](const Nat& j) { return pow2_exact(pow2_exact(j)); };
    auto two_pow_sq = [](const Nat& j) { return pow2_exact(j * j); };
    auto two_pow_cube = [](const Nat& j) { return pow2_exact(j * j * j); };
    auto triple = [](const Nat& j) { return Nat(j * 3); };

    bool inverted_ok = true;
    for (std::uint64_t i = 0; i <= 10'000; ++i) {
      inverted_ok = inverted_ok &&
                    param_eval(ParamFn::log(), i) == inverse_eval(two_pow, i) &&
                    param_eval(ParamFn::loglog(), i) == inverse_eval(two_tower, i) &&
                    param_eval(ParamFn::rootlog(2), i) == inverse_eval(two_pow_sq, i) &&
                    param_eval(ParamFn::rootlog(3), i) == inverse_eval(two_pow_cube, i) &&
                    param_eval(ParamFn::div_by(3), i) == inverse_eval(triple, i);
      if (!inverted_ok) {
        c.require(false, "inverse disagreement at i = " + std::to_string(i));
        break;
      }
    }

    const ParamFn fns[] = {ParamFn::constant(3),  ParamFn::id(),
                           ParamFn::log(),        ParamFn::loglog(),
                           ParamFn::rootlog(2),   ParamFn::rootlog(3),
                           ParamFn::div_by(3),    ParamFn::rootlog_fgh(parse_ordinal("w^2"))};
    for (const ParamFn& f : fns) {
      Nat prev = 0;
      bool nondecreasing = true;
      for (std::uint64_t i = 0; i <= 10'000; ++i) {
        const Nat cur = param_eval(f, i);
        nondecreasing = nondecreasing && cur >= prev;
        prev = cur;
      }
      c.require(nondecreasing, to_string(f) + " nondecreasing");
    }
  });

  // 9. Ideal-algebra oracle: containment agrees with brute-force membership
  //    enumeration on 1000 random pairs; minimalize idempotent; the
  //    degree_ideal example cross-checks against generating-set enumeration.
  failed += run_criterion(9, "ideal-oracle", [](Checker& c) {
    std::mt19937_64 rng(97);
    std::uniform_int_distribution<int> width_pick(2, 3);
    std::uniform_int_distribution<int> count(0, 4);
    std::uniform_int_distribution<std::uint64_t> exp(0, 4);

    auto monomials_up_to = [](std::size_t width, std::uint64_t bound) {
      std::vector<Monomial> out;
      std::vector<std::uint64_t> cur(width, 0);
      while (true) {
        std::uint64_t deg = 0;
        for (std::uint64_t e : cur) deg += e;
        if (deg <= bound) out.emplace_back(cur);
        std::size_t t = width;
        bool advanced = false;
        while (t > 0) {
          --t;
          if (cur[t] < bound) {
            ++cur[t];
            std::fill(cur.begin() + static_cast<std::ptrdiff_t>(t) + 1, cur.end(), 0);
            advanced = true;
            break;
          }
          if (t == 0) break;
        }
        if (!advanced) return out;
      }
    };

    auto random_ideal = [&](std::size_t width) {
      std::vector<Monomial> gens;
      for (int g = count(rng); g > 0; --g) {
        std::vector<std::uint64_t> exps(width);
        std::uint64_t left = 4;
        for (auto& e : exps) {
          e = std::min(exp(rng), left);
          left -= e;
        }
        gens.emplace_back(std::move(exps));
      }
      return MonomialIdeal(width, std::move(gens));
    };

    bool agree = true;
    for (int trial = 0; trial < 1000 && agree; ++trial) {
      const std::size_t width = static_cast<std::size_t>(width_pick(rng));
      const MonomialIdeal I = random_ideal(width);
      const MonomialIdeal J = random_ideal(width);
      const std::uint64_t bound = degree_set(I.gens()) + degree_set(J.gens()) + 1;
      bool brute = true;
      for (const Monomial& m : monomials_up_to(width, bound))
        if (member(J, m) && !member(I, m)) {
          brute = false;
          break;
        }
      agree = contains(I, J) == brute;
      if (agree) {
        const MonomialIdeal twice = minimalize(width, I.gens());
        agree = twice == I;
      }
    }
    c.require(agree, "containment agreement");

    // deg <X^2 Y, Y^3, X^2 Y^2> = 3, by enumeration over all generating sets
    // drawn from the degree <= 4 monomials.
    const MonomialIdeal target(2, {Monomial({2, 1}), Monomial({0, 3}), Monomial({2, 2})});
    const std::vector<Monomial> pool = monomials_up_to(2, 4);
    std::uint64_t best = UINT64_MAX;
    for (std::uint32_t mask = 0; mask < (1u << pool.size()); ++mask) {
      std::vector<Monomial> gens;
      for (std::size_t t = 0; t < pool.size(); ++t)
        if (mask >> t & 1) gens.push_back(pool[t]);
      const MonomialIdeal candidate(2, gens);
      if (contains(candidate, target) && contains(target, candidate))
        best = std::min(best, degree_set(gens));
    }
    c.require(best == 3 && degree_ideal(target) == 3, "degree_ideal cross-check");
  });

  if (failed == 0)
    std::printf("all 9 acceptance criteria passed\n");
  else
    std::printf("%d acceptance criteria FAILED\n", failed);
  return failed;
}
