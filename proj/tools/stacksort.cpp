#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "stacksort/constructions.hpp"
#include "stacksort/enumerate.hpp"
#include "stacksort/greedy.hpp"
#include "stacksort/oracle.hpp"
#include "stacksort/trace.hpp"
#include "stacksort/verification.hpp"

namespace {

using namespace stacksort;

// Exit codes: 0 sorted/true/pass, 1 not sorted/false/fail, 2 usage or parse
// error, 3 resource limit (oracle search limit, infeasible size).
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

Permutation perm_from_tokens(const std::vector<std::string>& tokens) {
  std::string joined;
  for (const auto& token : tokens) {
    if (!joined.empty()) joined += ' ';
    joined += token;
  }
  return parse_permutation(joined);
}

std::vector<Decider> parse_deciders(const std::string& list, int stacks) {
  std::vector<Decider> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    const std::size_t comma = list.find(',', start);
    const std::string token = list.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!token.empty()) {
      const auto kind = decider_kind_from_name(token);
      if (!kind) throw std::invalid_argument("unknown algorithm '" + token + "'");
      out.push_back({*kind, stacks});
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.empty()) throw std::invalid_argument("no algorithm given");
  return out;
}

struct TraceArgs {
  int stacks = 1;
  std::string algo;
  bool pretty = false;
  std::vector<std::string> perm;
};

struct CheckArgs {
  int stacks = 1;
  std::string algo;
  bool prune = false;
  bool witness = false;
  std::vector<std::string> perm;
};

struct TableArgs {
  int stacks = 1;
  int len = 0;
  std::string algos;
  int workers = 0;
  std::string format = "csv";
};

struct GenerateArgs {
  std::string family;
  int stacks = 2;
  int len = 0;
  int position = 1;
  std::vector<std::string> base;
};

int run_trace(const TraceArgs& args) {
  const Permutation p = perm_from_tokens(args.perm);
  const Priority priority = args.algo == "left" ? Priority::Left : Priority::Right;
  const SortOutcome outcome = run_greedy(p, args.stacks, priority);
  if (args.pretty) {
    write_pretty_trace(std::cout, p, args.stacks, outcome);
  } else {
    write_trace_jsonl(std::cout, p, args.stacks, outcome.moves);
    std::cout << outcome_json(outcome) << "\n";
  }
  return outcome.sorted ? 0 : 1;
}

int run_check(const CheckArgs& args) {
  const Permutation p = perm_from_tokens(args.perm);
  bool verdict = false;
  if (args.algo == "left" || args.algo == "right") {
    verdict = run_greedy(p, args.stacks,
                         args.algo == "left" ? Priority::Left : Priority::Right)
                  .sorted;
  } else if (args.algo == "west") {
    verdict = west_t_stack_sortable(p, args.stacks);
  } else {
    OracleOptions options;
    options.pruning = args.prune ? Pruning::NoEmptyGap : Pruning::None;
    const auto witness = sortable(p, args.stacks, options);
    verdict = witness.has_value();
    if (verdict && args.witness) {
      std::cout << witness_json(p, args.stacks, *witness) << "\n";
    }
  }
  std::cout << (verdict ? "sortable" : "not sortable") << "\n";
  return verdict ? 0 : 1;
}

int run_count(const TableArgs& args) {
  std::vector<CountRow> rows;
  for (const Decider& d : parse_deciders(args.algos, args.stacks)) {
    rows.push_back(count_sortable(args.len, args.stacks, d, args.workers));
  }
  std::cout << (args.format == "json" ? count_rows_json(rows) : count_rows_csv(rows));
  return 0;
}

int run_compare(const TableArgs& args) {
  const std::vector<Decider> deciders = parse_deciders(args.algos, args.stacks);
  if (deciders.size() != 2) {
    throw std::invalid_argument("compare needs exactly two algorithms, e.g. left,right");
  }
  const SetDiff diff =
      diff_sets(args.len, args.stacks, deciders[0], deciders[1], args.workers);
  std::cout << (args.format == "json"
                    ? diff_json(args.len, args.stacks, deciders[0], deciders[1], diff)
                    : diff_csv(args.len, args.stacks, deciders[0], deciders[1], diff));
  return 0;
}

int run_generate(const GenerateArgs& args) {
  if (args.family == "right-fail") {
    std::cout << right_fail_family(args.stacks).str() << "\n";
  } else if (args.family == "left-fail") {
    std::cout << left_fail_family(args.stacks).str() << "\n";
  } else if (args.family == "superpattern") {
    std::cout << superpattern_family(args.stacks).str() << "\n";
  } else if (args.family == "lower-bound") {
    lower_bound_family(args.len, args.stacks,
                       [](const Permutation& p) { std::cout << p.str() << "\n"; });
  } else if (args.family == "insert-max") {
    std::cout << insert_max(perm_from_tokens(args.base), args.position).str() << "\n";
  } else {
    throw std::invalid_argument("unknown family '" + args.family + "'");
  }
  return 0;
}

int run_contains(const std::string& perm_text, const std::string& pattern_text) {
  const Permutation p = parse_permutation(perm_text);
  const Permutation q = parse_permutation(pattern_text);
  const bool found = contains_pattern(p, q);
  std::cout << (found ? "contains" : "avoids") << "\n";
  return found ? 0 : 1;
}

int run_verify(int workers) {
  const auto results = verification::run_claims(std::cout, workers);
  for (const auto& result : results) {
    if (!result.passed) return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sorting permutations with t stacks in series"};
  app.require_subcommand(1);

  TraceArgs trace_args;
  auto* trace = app.add_subcommand("trace", "run a greedy strategy and print its trace");
  trace->add_option("--stacks,-t", trace_args.stacks, "stacks in series")
      ->required()
      ->check(CLI::PositiveNumber);
  trace->add_option("--algo,-a", trace_args.algo, "left or right")
      ->required()
      ->check(CLI::IsMember({"left", "right"}));
  trace->add_flag("--pretty", trace_args.pretty, "stack diagrams instead of JSON lines");
  trace->add_option("perm", trace_args.perm, "permutation, one-line notation")->required();

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "decide sortability under one algorithm");
  check->add_option("--stacks,-t", check_args.stacks, "stacks in series")
      ->required()
      ->check(CLI::PositiveNumber);
  check->add_option("--algo,-a", check_args.algo, "left, right, west or oracle")
      ->required()
      ->check(CLI::IsMember({"left", "right", "west", "oracle"}));
  check->add_flag("--prune", check_args.prune, "oracle: cut empty-gap push branches");
  check->add_flag("--witness", check_args.witness, "oracle: print the witness moves");
  check->add_option("perm", check_args.perm, "permutation, one-line notation")->required();

  TableArgs count_args;
  auto* count = app.add_subcommand("count", "count sortable permutations of a length");
  count->add_option("--stacks,-t", count_args.stacks)->required()->check(CLI::PositiveNumber);
  count->add_option("--len,-n", count_args.len)->required()->check(CLI::NonNegativeNumber);
  count->add_option("--algo,-a", count_args.algos, "comma-separated algorithm list")
      ->required();
  count->add_option("--workers,-w", count_args.workers, "0 = default")
      ->check(CLI::NonNegativeNumber);
  count->add_option("--format,-f", count_args.format)
      ->check(CLI::IsMember({"csv", "json"}));

  TableArgs compare_args;
  auto* compare = app.add_subcommand("compare", "diff two sortable sets");
  compare->add_option("--stacks,-t", compare_args.stacks)
      ->required()
      ->check(CLI::PositiveNumber);
  compare->add_option("--len,-n", compare_args.len)
      ->required()
      ->check(CLI::NonNegativeNumber);
  compare->add_option("--algo,-a", compare_args.algos, "two algorithms, e.g. left,right")
      ->required();
  compare->add_option("--workers,-w", compare_args.workers, "0 = default")
      ->check(CLI::NonNegativeNumber);
  compare->add_option("--format,-f", compare_args.format)
      ->check(CLI::IsMember({"csv", "json"}));

  GenerateArgs generate_args;
  auto* generate = app.add_subcommand("generate", "emit the named permutation families");
  generate->add_option("--family", generate_args.family,
                       "right-fail, left-fail, superpattern, lower-bound or insert-max")
      ->required()
      ->check(CLI::IsMember(
          {"right-fail", "left-fail", "superpattern", "lower-bound", "insert-max"}));
  generate->add_option("--stacks,-t", generate_args.stacks)->check(CLI::PositiveNumber);
  generate->add_option("--len,-n", generate_args.len)->check(CLI::NonNegativeNumber);
  generate->add_option("--position,-p", generate_args.position, "insert-max slot")
      ->check(CLI::PositiveNumber);
  generate->add_option("base", generate_args.base, "insert-max base permutation");

  std::string contains_perm, contains_pattern_text;
  auto* contains = app.add_subcommand("contains", "pattern containment test");
  contains->add_option("perm", contains_perm, "haystack permutation")->required();
  contains->add_option("pattern", contains_pattern_text, "pattern permutation")
      ->required();

  int verify_workers = 0;
  auto* verify = app.add_subcommand(
      "verify-paper", "verify every bundled claim exhaustively at desk scale");
  verify->add_option("--workers,-w", verify_workers, "0 = default")
      ->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*trace) return run_trace(trace_args);
    if (*check) return run_check(check_args);
    if (*count) return run_count(count_args);
    if (*compare) return run_compare(compare_args);
    if (*generate) return run_generate(generate_args);
    if (*contains) return run_contains(contains_perm, contains_pattern_text);
    if (*verify) return run_verify(verify_workers);
  } catch (const SearchLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const InfeasibleSizeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << " (token " << e.position() << ")\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
