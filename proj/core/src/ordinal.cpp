#include "badseq/ordinal.hpp"

#include <algorithm>
#include <cctype>

#include "badseq/errors.hpp"

namespace badseq {

namespace {

void strip_leading_zeros(std::vector<Nat>& coeffs) {
  std::size_t skip = 0;
  while (skip < coeffs.size() && coeffs[skip] == 0) ++skip;
  if (skip > 0) coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(skip));
}

}  // namespace

OrdinalCnf::OrdinalCnf(std::vector<Nat> coeffs) : coeffs_(std::move(coeffs)) {
  for (const Nat& c : coeffs_)
    if (c < 0) throw Error("ordinal coefficients must be nonnegative");
  strip_leading_zeros(coeffs_);
}

OrdinalCnf OrdinalCnf::from_nat(const Nat& n) {
  if (n == 0) return OrdinalCnf();
  return OrdinalCnf({n});
}

OrdinalCnf OrdinalCnf::omega_power(std::size_t power, const Nat& coeff) {
  if (coeff <= 0) throw Error("omega_power requires a positive coefficient");
  std::vector<Nat> coeffs(power + 1, Nat(0));
  coeffs[0] = coeff;
  return OrdinalCnf(std::move(coeffs));
}

std::size_t OrdinalCnf::degree() const {
  if (is_zero()) throw Error("degree of the zero ordinal is undefined");
  return coeffs_.size() - 1;
}

const Nat& OrdinalCnf::coeff_at(std::size_t power) const {
  static const Nat zero = 0;
  if (power >= coeffs_.size()) return zero;
  return coeffs_[coeffs_.size() - 1 - power];
}

Nat OrdinalCnf::coeff_sum() const {
  Nat sum = 0;
  for (const Nat& c : coeffs_) sum += c;
  return sum;
}

OrdinalCnf OrdinalCnf::predecessor() const {
  if (classify(*this) != OrdinalKind::Successor)
    throw Error("predecessor of a non-successor ordinal");
  std::vector<Nat> coeffs = coeffs_;
  coeffs.back() -= 1;
  return OrdinalCnf(std::move(coeffs));
}

OrdinalCnf OrdinalCnf::plus_one() const {
  if (is_zero()) return from_nat(1);
  std::vector<Nat> coeffs = coeffs_;
  coeffs.back() += 1;
  return OrdinalCnf(std::move(coeffs));
}

OrdinalKind classify(const OrdinalCnf& alpha) {
  if (alpha.is_zero()) return OrdinalKind::Zero;
  if (alpha.coeffs().back() > 0) return OrdinalKind::Successor;
  return OrdinalKind::Limit;
}

OrdinalCnf fund_seq(const OrdinalCnf& alpha, const Nat& i, FundSeqStyle style) {
  if (classify(alpha) != OrdinalKind::Limit)
    throw NotALimitError("fund_seq requires a limit ordinal, got " + to_string(alpha));
  // Least power with nonzero coefficient; >= 1 for a limit ordinal.
  std::vector<Nat> coeffs = alpha.coeffs();
  std::size_t pos = coeffs.size();
  while (coeffs[pos - 1] == 0) --pos;
  --pos;  // index of the omega^j term, j = coeffs.size()-1-pos >= 1
  coeffs[pos] -= 1;
  coeffs[pos + 1] = (style == FundSeqStyle::TimesI) ? i : i + 1;
  return OrdinalCnf(std::move(coeffs));
}

Nat h_alpha(const OrdinalCnf& alpha, std::size_t d) {
  if (!alpha.is_zero() && alpha.degree() > d)
    throw DimensionTooSmallError("ordinal " + to_string(alpha) +
                                 " is not below omega^" + std::to_string(d + 1));
  return 2 * alpha.coeff_sum() + d + 1;
}

std::strong_ordering compare(const OrdinalCnf& a, const OrdinalCnf& b) {
  // No leading zeros, so more coefficients means a strictly larger ordinal.
  if (a.coeffs().size() != b.coeffs().size())
    return a.coeffs().size() <=> b.coeffs().size();
  for (std::size_t t = 0; t < a.coeffs().size(); ++t) {
    if (a.coeffs()[t] != b.coeffs()[t])
      return a.coeffs()[t] < b.coeffs()[t] ? std::strong_ordering::less
                                           : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

namespace {

struct Term {
  std::size_t power;
  Nat coeff;
};

Term parse_term(std::string_view term) {
  if (term.empty()) throw ParseError("empty term in ordinal literal");
  if (term[0] != 'w') return {0, parse_decimal(term)};  // constant term
  term.remove_prefix(1);
  Term out{1, 1};
  if (!term.empty() && term[0] == '^') {
    term.remove_prefix(1);
    std::size_t stop = term.find('*');
    std::string_view exp = term.substr(0, stop);
    out.power = static_cast<std::size_t>(to_u64(parse_decimal(exp)));
    term = stop == std::string_view::npos ? std::string_view() : term.substr(stop);
  }
  if (!term.empty()) {
    if (term[0] != '*') throw ParseError("expected '*' in ordinal term");
    out.coeff = parse_decimal(term.substr(1));
  }
  return out;
}

}  // namespace

OrdinalCnf parse_ordinal(std::string_view text) {
  std::string compact;
  compact.reserve(text.size());
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) compact.push_back(ch);
  if (compact.empty()) throw ParseError("empty ordinal literal");
  if (compact == "0") return OrdinalCnf();

  std::vector<Term> terms;
  std::size_t begin = 0;
  while (begin <= compact.size()) {
    std::size_t end = compact.find('+', begin);
    if (end == std::string::npos) end = compact.size();
    terms.push_back(parse_term(std::string_view(compact).substr(begin, end - begin)));
    begin = end + 1;
    if (end == compact.size()) break;
  }

  std::vector<Nat> coeffs(terms.front().power + 1, Nat(0));
  std::size_t prev = terms.front().power + 1;
  for (const Term& t : terms) {
    if (t.power >= prev)
      throw ParseError("ordinal terms must have strictly descending powers");
    if (t.coeff == 0) throw ParseError("ordinal terms must have positive coefficients");
    coeffs[coeffs.size() - 1 - t.power] = t.coeff;
    prev = t.power;
  }
  return OrdinalCnf(std::move(coeffs));
}

std::string to_string(const OrdinalCnf& alpha) {
  if (alpha.is_zero()) return "0";
  std::string out;
  const auto& coeffs = alpha.coeffs();
  for (std::size_t t = 0; t < coeffs.size(); ++t) {
    if (coeffs[t] == 0) continue;
    if (!out.empty()) out += '+';
    std::size_t power = coeffs.size() - 1 - t;
    if (power == 0) {
      out += to_decimal(coeffs[t]);
      continue;
    }
    out += 'w';
    if (power > 1) out += '^' + std::to_string(power);
    if (coeffs[t] > 1) out += '*' + to_decimal(coeffs[t]);
  }
  return out;
}

}  // namespace badseq
