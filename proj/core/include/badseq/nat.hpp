#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace badseq {

// Arbitrary-precision natural number. cpp_int is a signed type; everything in
// this library keeps Nat values nonnegative by construction.
using Nat = boost::multiprecision::cpp_int;

// Largest e with 2^e <= n. Requires n >= 1.
std::uint64_t floor_log2(const Nat& n);

// Exact 2^e. Throws BudgetExceededError for exponents whose result would not
// reasonably fit in memory.
Nat pow2_exact(const Nat& e);

// Checked narrowing; throws BudgetExceededError when n does not fit.
std::uint64_t to_u64(const Nat& n);

std::string to_decimal(const Nat& n);

// Parses a nonempty decimal digit string. Throws ParseError.
Nat parse_decimal(std::string_view text);

}  // namespace badseq
