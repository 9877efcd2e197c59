#pragma once

#include <string>
#include <string_view>

#include "badseq/ramsey.hpp"
#include "badseq/search.hpp"
#include "badseq/sequence.hpp"
#include "badseq/verify.hpp"

namespace badseq {

// JSON interchange. Output is canonical: minimalized, lexicographically
// sorted generators, fixed key order, one trailing newline. Naturals are
// emitted as JSON numbers when they fit in 64 bits and as decimal strings
// otherwise; readers accept both. Readers throw ParseError on malformed
// input.

std::string write_sequence(const IdealSequence& s);
IdealSequence read_sequence(std::string_view text);

std::string write_coloring(const Coloring& c);
Coloring read_coloring(std::string_view text);

std::string write_search_result(const SearchResult& r);

std::string write_ramsey_result(const RamseyNumberResult& r);

std::string write_verify_report(const VerifyReport& r);

// {"value": n} or {"overflow": true, "cap": n}.
std::string write_capped_value(const CappedNat& v);

}  // namespace badseq
