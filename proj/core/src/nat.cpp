#include "badseq/nat.hpp"

#include <cctype>

#include "badseq/errors.hpp"

namespace badseq {

namespace {
// 2^e above this many bits is not a number anyone wants materialized.
constexpr std::uint64_t kMaxPow2Bits = 1u << 24;
}  // namespace

std::uint64_t floor_log2(const Nat& n) {
  if (n < 1) throw Error("floor_log2 requires a positive argument");
  return static_cast<std::uint64_t>(boost::multiprecision::msb(n));
}

Nat pow2_exact(const Nat& e) {
  if (e > kMaxPow2Bits)
    throw BudgetExceededError("2^" + to_decimal(e) + " is too large to materialize");
  Nat r = 1;
  return r << static_cast<unsigned>(e.convert_to<std::uint64_t>());
}

std::uint64_t to_u64(const Nat& n) {
  if (n < 0 || n > Nat(UINT64_MAX))
    throw BudgetExceededError("value " + to_decimal(n) + " does not fit in 64 bits");
  return n.convert_to<std::uint64_t>();
}

std::string to_decimal(const Nat& n) { return n.str(); }

Nat parse_decimal(std::string_view text) {
  if (text.empty()) throw ParseError("empty number");
  for (char ch : text)
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw ParseError("invalid digit in number: '" + std::string(text) + "'");
  return Nat(std::string(text));
}

}  // namespace badseq
