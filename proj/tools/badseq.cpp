// badseq: construct, verify and search bad sequences of monomial ideals,
// evaluate fast-growing hierarchy values, and run adjacent-Ramsey reductions.
// JSON in, JSON out; every potentially explosive computation is bounded by a
// --cap or budget flag.
//
// Exit codes: 0 verified/ok, 1 violation or counterexample found (witness on
// stdout), 2 usage error, 3 budget or cap exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "badseq/construct.hpp"
#include "badseq/errors.hpp"
#include "badseq/json_io.hpp"
#include "badseq/ramsey.hpp"
#include "badseq/search.hpp"
#include "badseq/verify.hpp"

namespace {

using namespace badseq;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

class UsageError : public Error {
public:
  using Error::Error;
};

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw UsageError("cannot open output file '" + out_path + "'");
  out << text;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open input file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

FundSeqStyle parse_style(const std::string& text) {
  if (text == "times-i") return FundSeqStyle::TimesI;
  if (text == "times-i-plus-1") return FundSeqStyle::TimesIPlusOne;
  throw UsageError("unknown fundamental-sequence convention '" + text + "'");
}

struct SeqArgs {
  std::string family;
  std::string alpha;
  std::uint64_t l = 0;
  std::uint32_t d = 0;
  std::string cap = "1000000";
  std::uint64_t max_len = 1'000'000;
  std::uint32_t j = 0;
  std::uint32_t c = 1;
  std::uint64_t prefix = 0;
  std::string out;
};

int run_seq(const SeqArgs& args, FundSeqStyle style) {
  BuildLimits limits;
  limits.cap = parse_decimal(args.cap);
  limits.max_entries = args.max_len;
  limits.style = style;
  std::optional<IdealSequence> s;
  if (args.family == "maclagan") {
    if (args.alpha.empty()) throw UsageError("--family maclagan needs --alpha");
    s = seq_maclagan(parse_ordinal(args.alpha), args.l, args.d, limits);
  } else if (args.family == "exp") {
    s = seq_exp(args.j);
  } else if (args.family == "polypower") {
    s = seq_polypower(args.c, args.j, args.max_len);
  } else if (args.family == "rootlog") {
    if (args.prefix == 0) throw UsageError("--family rootlog needs --prefix");
    s = seq_rootlog(args.c, args.d, args.prefix, limits);
  } else {
    throw UsageError("unknown family '" + args.family + "'");
  }
  emit(write_sequence(*s), args.out);
  return kOk;
}

struct VerifyArgs {
  std::string in;
  std::string mode;  // empty = infer from meta
  std::string target_fgh;
  std::string cap = "1000000";
};

int run_verify_cmd(const VerifyArgs& args, FundSeqStyle style) {
  const IdealSequence s = read_sequence(slurp(args.in));
  DegreeMode mode;
  if (args.mode == "plus-h") {
    mode = DegreeMode::PlusH;
  } else if (args.mode == "param") {
    mode = DegreeMode::Param;
  } else if (args.mode.empty()) {
    mode = s.meta() && s.meta()->alpha ? DegreeMode::PlusH : DegreeMode::Param;
  } else {
    throw UsageError("unknown mode '" + args.mode + "'");
  }
  std::optional<CappedNat> target;
  if (!args.target_fgh.empty())
    target = fgh(parse_ordinal(args.target_fgh), s.l(), parse_decimal(args.cap), style);
  const VerifyReport report = run_verify(s, mode, target);
  std::cout << write_verify_report(report);
  return report.ok() ? kOk : kViolation;
}

struct SearchArgs {
  std::uint32_t d = 0;
  std::uint64_t l = 0;
  std::string param;
  bool include_zero = true;
  bool symmetry = false;
  std::uint64_t max_nodes = 10'000'000;
  std::uint64_t max_universe = 100'000;
  std::uint64_t max_seconds = 0;  // 0 = unlimited
  std::string strategy = "auto";
  std::string out;
};

int run_search(const SearchArgs& args) {
  SearchBudget budget;
  budget.max_nodes = args.max_nodes;
  budget.max_universe = args.max_universe;
  if (args.max_seconds > 0) budget.max_seconds = args.max_seconds;
  SearchOptions options;
  options.include_zero = args.include_zero;
  options.symmetry_reduction = args.symmetry;
  if (args.strategy == "plain")
    options.strategy = SearchStrategy::Plain;
  else if (args.strategy == "memo")
    options.strategy = SearchStrategy::Memo;
  else if (args.strategy == "auto")
    options.strategy = SearchStrategy::Auto;
  else
    throw UsageError("unknown strategy '" + args.strategy + "'");
  const SearchResult result =
      max_bad_length(args.d, args.l, parse_param_fn(args.param), budget, options);
  emit(write_search_result(result), args.out);
  return result.exhausted ? kOk : kBudget;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bad sequences of monomial ideals: construct, verify, search"};
  app.require_subcommand(1);
  std::string style_text = "times-i";
  app.add_option("--fund-seq", style_text,
                 "fundamental sequence convention: times-i | times-i-plus-1");

  SeqArgs seq_args;
  CLI::App* seq = app.add_subcommand("seq", "emit a constructed sequence");
  seq->add_option("--family", seq_args.family, "maclagan | exp | polypower | rootlog")
      ->required();
  seq->add_option("--alpha", seq_args.alpha, "ordinal literal, e.g. w^2*1+w*3+2");
  seq->add_option("--l", seq_args.l, "offset l");
  seq->add_option("--d", seq_args.d, "ambient dimension d");
  seq->add_option("--cap", seq_args.cap, "cap for fast-growing values");
  seq->add_option("--max-len", seq_args.max_len, "entry budget");
  seq->add_option("--j", seq_args.j, "doubling parameter j");
  seq->add_option("--c", seq_args.c, "track/root parameter c");
  seq->add_option("--prefix", seq_args.prefix, "rootlog prefix length");
  seq->add_option("-o,--out", seq_args.out, "output file (default stdout)");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "verify a sequence file");
  verify->add_option("--in", verify_args.in, "sequence file")->required();
  verify->add_option("--mode", verify_args.mode, "plus-h | param");
  verify->add_option("--target-fgh", verify_args.target_fgh,
                     "check length against F_alpha(l) for this ordinal");
  verify->add_option("--cap", verify_args.cap, "cap for the length target");

  SearchArgs search_args;
  CLI::App* search = app.add_subcommand("search", "exact maximum bad-sequence length");
  search->add_option("--d", search_args.d, "ambient dimension")->required();
  search->add_option("--l", search_args.l, "offset l")->required();
  search->add_option("--param", search_args.param, "parameter function")->required();
  search->add_option("--include-zero", search_args.include_zero,
                     "count the zero ideal (default true)");
  search->add_option("--symmetry", search_args.symmetry,
                     "restrict the first element to X-permutation orbit representatives");
  search->add_option("--max-nodes", search_args.max_nodes, "node budget");
  search->add_option("--max-universe", search_args.max_universe, "universe budget");
  search->add_option("--max-seconds", search_args.max_seconds, "time budget (0 = none)");
  search->add_option("--strategy", search_args.strategy, "auto | plain | memo");
  search->add_option("-o,--out", search_args.out, "output file (default stdout)");

  CLI::App* ramsey = app.add_subcommand("ramsey", "adjacent-Ramsey reductions");
  ramsey->require_subcommand(1);
  std::string ramsey_in, ramsey_out;
  CLI::App* reduce = ramsey->add_subcommand("reduce", "sequence file -> coloring file");
  reduce->add_option("--in", ramsey_in, "sequence file")->required();
  reduce->add_option("-o,--out", ramsey_out, "output file (default stdout)");
  std::string check_in;
  CLI::App* check = ramsey->add_subcommand("check", "search a coloring for a monotone triple");
  check->add_option("--in", check_in, "coloring file")->required();
  std::uint64_t ramsey_l = 0, ramsey_rmax = 0;
  std::uint32_t ramsey_r = 0;
  std::string ramsey_budget = "10000000";
  CLI::App* number = ramsey->add_subcommand("number", "exhaustive adjacent-Ramsey number");
  number->add_option("--l", ramsey_l, "domain start")->required();
  number->add_option("--r", ramsey_r, "codimension")->required();
  number->add_option("--rmax", ramsey_rmax, "largest candidate R")->required();
  number->add_option("--budget", ramsey_budget, "enumeration budget");

  std::string fgh_alpha, fgh_i, fgh_cap;
  CLI::App* fgh_cmd = app.add_subcommand("fgh", "fast-growing hierarchy value");
  fgh_cmd->add_option("--alpha", fgh_alpha, "ordinal literal");
  fgh_cmd->add_option("--i", fgh_i, "argument");
  fgh_cmd->add_option("--cap", fgh_cap, "cap");
  std::string inv_alpha, inv_i;
  CLI::App* fgh_inv = fgh_cmd->add_subcommand("inverse", "max { j : F_alpha(j) <= i }");
  fgh_inv->add_option("--alpha", inv_alpha, "ordinal literal")->required();
  fgh_inv->add_option("--i", inv_i, "argument")->required();

  CLI::App* bounds = app.add_subcommand("bounds", "closed-form upper bounds");
  bounds->require_subcommand(1);
  std::uint32_t pig_d = 0;
  std::string pig_l, pig_c, pig_cap = "1000000";
  CLI::App* pigeonhole = bounds->add_subcommand("pigeonhole", "2^((l+c+1)^(d+2)) + 1");
  pigeonhole->add_option("--d", pig_d)->required();
  pigeonhole->add_option("--l", pig_l)->required();
  pigeonhole->add_option("--c", pig_c)->required();
  pigeonhole->add_option("--cap", pig_cap);
  std::uint32_t slow_d = 0;
  std::string slow_l, slow_b, slow_cap = "1000000";
  CLI::App* slow = bounds->add_subcommand("slow", "2^(B(l)^(d+2)) for increasing B");
  slow->add_option("--d", slow_d)->required();
  slow->add_option("--l", slow_l)->required();
  slow->add_option("--b", slow_b, "bound function: pow2:c | fgh:<ordinal>")->required();
  slow->add_option("--cap", slow_cap);

  try {
    app.parse(argc, argv);
    const FundSeqStyle style = parse_style(style_text);

    if (seq->parsed()) return run_seq(seq_args, style);
    if (verify->parsed()) return run_verify_cmd(verify_args, style);
    if (search->parsed()) return run_search(search_args);

    if (ramsey->parsed()) {
      if (reduce->parsed()) {
        try {
          const Coloring c = reduce_to_coloring(read_sequence(slurp(ramsey_in)));
          emit(write_coloring(c), ramsey_out);
          return kOk;
        } catch (const NotBadError& e) {
          VerifyReport report;
          report.bad = {e.i, e.j};
          std::cout << write_verify_report(report);
          return kViolation;
        }
      }
      if (check->parsed()) {
        const Coloring c = read_coloring(slurp(check_in));
        if (const auto triple = find_adjacent_monotone(c)) {
          std::cout << "{\"verdict\":\"violation\",\"witness\":[" << (*triple)[0] << ","
                    << (*triple)[1] << "," << (*triple)[2] << "]}\n";
          return kViolation;
        }
        std::cout << "{\"verdict\":\"ok\"}\n";
        return kOk;
      }
      const RamseyNumberResult result = adjacent_ramsey_number(
          ramsey_l, ramsey_r, ramsey_rmax, parse_decimal(ramsey_budget));
      std::cout << write_ramsey_result(result);
      return result.number ? kOk : kViolation;
    }

    if (fgh_cmd->parsed()) {
      if (fgh_inv->parsed()) {
        const Nat value = fgh_inverse(parse_ordinal(inv_alpha), parse_decimal(inv_i), style);
        std::cout << "{\"value\":" << to_decimal(value) << "}\n";
        return kOk;
      }
      if (fgh_alpha.empty() || fgh_i.empty() || fgh_cap.empty())
        throw UsageError("fgh needs --alpha, --i and --cap");
      const CappedNat value = fgh(parse_ordinal(fgh_alpha), parse_decimal(fgh_i),
                                  parse_decimal(fgh_cap), style);
      std::cout << write_capped_value(value);
      return value.is_overflow() ? kBudget : kOk;
    }

    if (bounds->parsed()) {
      CappedNat value = CappedNat::overflow(0);
      if (pigeonhole->parsed())
        value = bound_pigeonhole(pig_d, parse_decimal(pig_l), parse_decimal(pig_c),
                                 parse_decimal(pig_cap));
      else
        value = bound_slow(slow_d, parse_decimal(slow_l), parse_bound_fn(slow_b),
                           parse_decimal(slow_cap));
      std::cout << write_capped_value(value);
      return value.is_overflow() ? kBudget : kOk;
    }

    throw UsageError("no subcommand given");
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  } catch (const CapExceededError& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const BudgetExceededError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const TargetOverflowError& e) {
    std::cerr << "target overflow: " << e.what() << "\n";
    return kBudget;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
