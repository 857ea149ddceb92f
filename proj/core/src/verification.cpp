#include "stacksort/verification.hpp"

#include <array>
#include <ostream>
#include <set>
#include <string>

#include "stacksort/constructions.hpp"
#include "stacksort/enumerate.hpp"
#include "stacksort/greedy.hpp"
#include "stacksort/oracle.hpp"
#include "stacksort/permutation.hpp"

namespace stacksort::verification {

namespace {

ClaimResult pass(const std::string& name) { return {name, true, "", ""}; }

ClaimResult fail(const std::string& name, const std::string& detail,
                 const std::string& repro) {
  return {name, false, detail, repro};
}

std::string check_cmd(int t, const std::string& algo, const Permutation& p) {
  return "stacksort check --stacks " + std::to_string(t) + " --algo " + algo + " \"" +
         p.str() + "\"";
}

std::string compare_cmd(int n, int t, const std::string& algos) {
  return "stacksort compare --stacks " + std::to_string(t) + " --len " +
         std::to_string(n) + " --algo " + algos;
}

bool left_sorts(const Permutation& p, int t) {
  return run_greedy(p, t, Priority::Left).sorted;
}
bool right_sorts(const Permutation& p, int t) {
  return run_greedy(p, t, Priority::Right).sorted;
}

// Oracle verdict plus witness validation: a witness that does not replay is
// an implementation bug, not a sortable permutation.
bool oracle_sorts(const Permutation& p, int t, Pruning pruning = Pruning::None) {
  const auto w = sortable(p, t, {pruning, 10});
  if (!w) return false;
  return replay(p, t, *w).ok;
}

ClaimResult figure_one(int) {
  const std::string name = "figure-1";
  const Permutation sortable_example({4, 1, 3, 2});
  const Permutation unsortable_example({2, 3, 1});
  if (!left_sorts(sortable_example, 1) || !right_sorts(sortable_example, 1)) {
    return fail(name, "4 1 3 2 must sort with one stack under both priorities",
                check_cmd(1, "left", sortable_example));
  }
  if (left_sorts(unsortable_example, 1) || right_sorts(unsortable_example, 1)) {
    return fail(name, "2 3 1 must not sort with one stack",
                check_cmd(1, "left", unsortable_example));
  }
  return pass(name);
}

ClaimResult west_equivalence(int workers) {
  const std::string name = "west-equivalence";
  for (int t = 1; t <= 3; ++t) {
    for (int n = 0; n <= 8; ++n) {
      const auto bad = find_counterexample(
          n,
          [t](const Permutation& p) {
            return right_sorts(p, t) == west_t_stack_sortable(p, t);
          },
          workers);
      if (bad) {
        return fail(name,
                    "right-greedy and west disagree on " + bad->str() + " at t=" +
                        std::to_string(t),
                    check_cmd(t, "right", *bad) + " ; " + check_cmd(t, "west", *bad));
      }
    }
  }
  return pass(name);
}

ClaimResult right_subsumed_by_left(int workers) {
  const std::string name = "right-subsumed-by-left";
  for (int t = 1; t <= 3; ++t) {
    for (int n = 0; n <= 8; ++n) {
      const auto bad = find_counterexample(
          n,
          [t](const Permutation& p) { return !right_sorts(p, t) || left_sorts(p, t); },
          workers);
      if (bad) {
        return fail(name,
                    bad->str() + " sorts right-greedy but not left-greedy at t=" +
                        std::to_string(t),
                    check_cmd(t, "left", *bad));
      }
    }
  }
  return pass(name);
}

ClaimResult dominance_lemma(int workers) {
  const std::string name = "dominance-lemma";
  for (int t = 1; t <= 4; ++t) {
    for (int n = 0; n <= 7; ++n) {
      const auto bad = find_counterexample(
          n, [t](const Permutation& p) { return dominance_check(p, t); }, workers);
      if (bad) {
        return fail(name,
                    "left-greedy leaves a value further right than right-greedy on " +
                        bad->str() + " at t=" + std::to_string(t),
                    "stacksort trace --stacks " + std::to_string(t) + " --algo left \"" +
                        bad->str() + "\"");
      }
    }
  }
  return pass(name);
}

ClaimResult named_examples(int) {
  const std::string name = "named-examples";
  const Permutation p3241({3, 2, 4, 1});
  if (!left_sorts(p3241, 2)) {
    return fail(name, "3 2 4 1 must left-greedy sort with 2 stacks",
                check_cmd(2, "left", p3241));
  }
  if (right_sorts(p3241, 2)) {
    return fail(name, "3 2 4 1 must not right-greedy sort with 2 stacks",
                check_cmd(2, "right", p3241));
  }
  for (int t = 2; t <= 4; ++t) {
    const Permutation f = right_fail_family(t);
    if (!left_sorts(f, 2)) {
      return fail(name, f.str() + " must left-greedy sort with just 2 stacks",
                  check_cmd(2, "left", f));
    }
    if (right_sorts(f, t)) {
      return fail(name,
                  f.str() + " must not right-greedy sort with t=" + std::to_string(t),
                  check_cmd(t, "right", f));
    }
  }
  const Permutation r7({6, 3, 7, 2, 4, 5, 1});
  if (!right_sorts(r7, 3)) {
    return fail(name, "6 3 7 2 4 5 1 must right-greedy sort with 3 stacks",
                check_cmd(3, "right", r7));
  }
  const Permutation r8({6, 8, 3, 7, 2, 4, 5, 1});
  if (right_sorts(r8, 3)) {
    return fail(name, "6 8 3 7 2 4 5 1 must not right-greedy sort with 3 stacks",
                check_cmd(3, "right", r8));
  }
  const Permutation hard = left_fail_family(3);  // 2 5 4 1 6 7 3
  const SortOutcome left_run = run_greedy(hard, 3, Priority::Left);
  if (left_run.sorted || !left_run.failure || left_run.failure->blocked_value != 7) {
    return fail(name, "2 5 4 1 6 7 3 must fail left-greedy at t=3 with 7 blocked",
                "stacksort trace --stacks 3 --algo left \"" + hard.str() + "\"");
  }
  if (!oracle_sorts(hard, 3)) {
    return fail(name, "2 5 4 1 6 7 3 must be sortable by 3 stacks in series",
                check_cmd(3, "oracle", hard));
  }
  const Permutation super = superpattern_family(3);  // 2 6 3 5 1 7 8 4
  if (!left_sorts(super, 3)) {
    return fail(name, "2 6 3 5 1 7 8 4 must left-greedy sort with 3 stacks",
                check_cmd(3, "left", super));
  }
  if (!contains_pattern(super, hard)) {
    return fail(name, "2 6 3 5 1 7 8 4 must contain 2 5 4 1 6 7 3",
                "stacksort contains \"" + super.str() + "\" \"" + hard.str() + "\"");
  }
  return pass(name);
}

ClaimResult left_optimal_small_t(int workers) {
  const std::string name = "left-optimal-small-t";
  for (int t = 1; t <= 2; ++t) {
    for (int n = 0; n <= 8; ++n) {
      const auto bad = find_counterexample(
          n,
          [t](const Permutation& p) { return left_sorts(p, t) == oracle_sorts(p, t); },
          workers);
      if (bad) {
        return fail(name,
                    "left-greedy and the oracle disagree on " + bad->str() + " at t=" +
                        std::to_string(t),
                    check_cmd(t, "left", *bad) + " ; " + check_cmd(t, "oracle", *bad));
      }
    }
  }
  const Permutation pattern231({2, 3, 1});
  for (int n = 0; n <= 8; ++n) {
    const auto bad = find_counterexample(
        n,
        [&](const Permutation& p) {
          return left_sorts(p, 1) == !contains_pattern(p, pattern231);
        },
        workers);
    if (bad) {
      return fail(name, "t=1 class must equal the 231-avoiders; differs on " + bad->str(),
                  check_cmd(1, "left", *bad));
    }
  }
  // Catalan numbers C_1..C_8, counted through the independent
  // pattern-avoidance route as well as the machine.
  constexpr std::array<std::uint64_t, 8> catalan = {1, 2, 5, 14, 42, 132, 429, 1430};
  for (int n = 1; n <= 8; ++n) {
    const std::uint64_t machine_count =
        count_sortable(n, 1, {DeciderKind::GreedyLeft, 1}, workers).count;
    const std::uint64_t avoider_count = parallel_count(
        n, [&](const Permutation& p) { return !contains_pattern(p, pattern231); },
        workers);
    const std::uint64_t expected = catalan[static_cast<std::size_t>(n - 1)];
    if (machine_count != expected || avoider_count != expected) {
      return fail(name,
                  "t=1 count at n=" + std::to_string(n) + " must be " +
                      std::to_string(expected) + ", got machine=" +
                      std::to_string(machine_count) + " avoiders=" +
                      std::to_string(avoider_count),
                  "stacksort count --stacks 1 --len " + std::to_string(n) +
                      " --algo left");
    }
  }
  return pass(name);
}

// Slots allowed by the first-t-or-last statements for a result of the given
// length: {1..t} plus the last slot.
std::vector<int> first_t_or_last_slots(int result_length, int t) {
  std::vector<int> slots;
  for (int s = 1; s <= t && s <= result_length; ++s) slots.push_back(s);
  if (result_length > t) slots.push_back(result_length);
  return slots;
}

// All four insertion statements for one base permutation at one t.
// Returns an empty string when they hold, else a description.
std::string insertion_failure(const Permutation& base, int t) {
  const int result_length = base.size() + 1;
  if (left_sorts(base, t - 1)) {
    for (int slot = 1; slot <= result_length; ++slot) {
      if (!left_sorts(insert_max(base, slot), t)) {
        return "max inserted at slot " + std::to_string(slot) + " of " + base.str() +
               " (left-greedy sortable with " + std::to_string(t - 1) +
               " stacks) is not left-greedy sortable with " + std::to_string(t);
      }
    }
  }
  if (oracle_sorts(base, t - 1)) {
    for (int slot = 1; slot <= result_length; ++slot) {
      if (!oracle_sorts(insert_max(base, slot), t)) {
        return "max inserted at slot " + std::to_string(slot) + " of " + base.str() +
               " (sortable with " + std::to_string(t - 1) +
               " stacks) is not sortable with " + std::to_string(t);
      }
    }
  }
  if (left_sorts(base, t)) {
    for (int slot : first_t_or_last_slots(result_length, t)) {
      if (!left_sorts(insert_max(base, slot), t)) {
        return "max inserted at slot " + std::to_string(slot) + " of " + base.str() +
               " must stay left-greedy sortable with " + std::to_string(t) + " stacks";
      }
    }
  }
  if (oracle_sorts(base, t)) {
    for (int slot : first_t_or_last_slots(result_length, t)) {
      if (!oracle_sorts(insert_max(base, slot), t)) {
        return "max inserted at slot " + std::to_string(slot) + " of " + base.str() +
               " must stay sortable with " + std::to_string(t) + " stacks";
      }
    }
  }
  return "";
}

ClaimResult insertion_closure(int workers) {
  const std::string name = "insertion-closure";
  for (int t = 2; t <= 3; ++t) {
    for (int n = 0; n <= 6; ++n) {
      const auto bad = find_counterexample(
          n, [t](const Permutation& p) { return insertion_failure(p, t).empty(); },
          workers);
      if (bad) {
        return fail(name, insertion_failure(*bad, t),
                    "stacksort generate --family insert-max --position 1 \"" +
                        bad->str() + "\"");
      }
    }
  }
  return pass(name);
}

ClaimResult lower_bound_claim(int workers) {
  const std::string name = "lower-bound";
  for (int t = 2; t <= 3; ++t) {
    for (int n = t; n <= 8; ++n) {
      const std::uint64_t bound = lower_bound(n, t);
      if (n >= t + 1) {
        const std::vector<Permutation> family = lower_bound_family(n, t);
        const std::set<Permutation> distinct(family.begin(), family.end());
        if (family.size() != bound || distinct.size() != bound) {
          return fail(name,
                      "family at n=" + std::to_string(n) + ", t=" + std::to_string(t) +
                          " must have exactly " + std::to_string(bound) +
                          " distinct members, got " + std::to_string(family.size()) +
                          " (" + std::to_string(distinct.size()) + " distinct)",
                      "stacksort generate --family lower-bound --stacks " +
                          std::to_string(t) + " --len " + std::to_string(n));
        }
        for (const Permutation& p : family) {
          if (!left_sorts(p, t)) {
            return fail(name,
                        "family member " + p.str() + " is not left-greedy sortable at t=" +
                            std::to_string(t),
                        check_cmd(t, "left", p));
          }
        }
      }
      const std::uint64_t count =
          count_sortable(n, t, {DeciderKind::GreedyLeft, t}, workers).count;
      if (count < bound) {
        return fail(name,
                    "left-greedy count " + std::to_string(count) + " at n=" +
                        std::to_string(n) + ", t=" + std::to_string(t) +
                        " falls below the bound " + std::to_string(bound),
                    "stacksort count --stacks " + std::to_string(t) + " --len " +
                        std::to_string(n) + " --algo left");
      }
    }
  }
  return pass(name);
}

ClaimResult empty_stack_pruning(int workers) {
  const std::string name = "empty-stack-pruning";
  for (int t = 1; t <= 3; ++t) {
    for (int n = 0; n <= 7; ++n) {
      const auto bad = find_counterexample(
          n,
          [t](const Permutation& p) {
            return oracle_sorts(p, t, Pruning::None) ==
                   oracle_sorts(p, t, Pruning::NoEmptyGap);
          },
          workers);
      if (bad) {
        return fail(name,
                    "pruned and unpruned oracle disagree on " + bad->str() + " at t=" +
                        std::to_string(t),
                    check_cmd(t, "oracle", *bad) + " ; " +
                        check_cmd(t, "oracle --prune", *bad));
      }
    }
  }
  return pass(name);
}

ClaimResult deletion_closure(int workers) {
  const std::string name = "deletion-closure";
  for (int n = 2; n <= 7; ++n) {
    const auto violations = closure_violations(n, 2, {DeciderKind::GreedyLeft, 2}, workers);
    if (!violations.empty()) {
      return fail(name,
                  "left-greedy t=2 class must be deletion-closed; " +
                      violations.front().sortable_perm.str() + " has unsortable deletion " +
                      violations.front().unsortable_deletion.str(),
                  check_cmd(2, "left", violations.front().unsortable_deletion));
    }
  }
  const Permutation super = superpattern_family(3);
  const Permutation hard = left_fail_family(3);
  const auto violations = deletion_violations(super, 3, {DeciderKind::GreedyLeft, 3});
  bool found = false;
  for (const auto& v : violations) {
    found = found || v.unsortable_deletion == hard;
  }
  if (!found) {
    return fail(name,
                "deleting from " + super.str() + " must expose the unsortable pattern " +
                    hard.str() + " at t=3",
                check_cmd(3, "left", hard));
  }
  return pass(name);
}

ClaimResult parallel_determinism(int) {
  const std::string name = "parallel-determinism";
  const Decider left2{DeciderKind::GreedyLeft, 2};
  const std::string single = count_rows_csv({count_sortable(8, 2, left2, 1)});
  const std::string pooled = count_rows_csv({count_sortable(8, 2, left2, 8)});
  if (single != pooled) {
    return fail(name, "count output differs between 1 and 8 workers",
                "STACKSORT_WORKERS=1 stacksort count --stacks 2 --len 8 --algo left");
  }
  return pass(name);
}

}  // namespace

const std::vector<Claim>& acceptance_claims() {
  static const std::vector<Claim> claims = {
      {"figure-1", "4132 sorts with one stack; 231 does not", figure_one},
      {"west-equivalence",
       "right-greedy sorts exactly the t-stack-sortable permutations (n<=8, t<=3)",
       west_equivalence},
      {"right-subsumed-by-left",
       "every right-greedy-sortable permutation is left-greedy-sortable (n<=8, t<=3)",
       right_subsumed_by_left},
      {"dominance-lemma",
       "left-greedy keeps every value at least as far left at every critical moment "
       "(n<=7, t<=4)",
       dominance_lemma},
      {"named-examples", "the named example permutations behave as stated",
       named_examples},
      {"left-optimal-small-t",
       "left-greedy matches the oracle for t<=2; t=1 class is the 231-avoiders with "
       "Catalan counts (n<=8)",
       left_optimal_small_t},
      {"insertion-closure",
       "inserting a new maximum preserves sortability as stated (bases up to length 6, "
       "t in {2,3})",
       insertion_closure},
      {"lower-bound",
       "the t!(t+1)^(n-t) family is distinct and sortable, and bounds the class size "
       "(t in {2,3}, n<=8)",
       lower_bound_claim},
      {"empty-stack-pruning",
       "the no-empty-gap prune never changes the oracle verdict (n<=7, t<=3)",
       empty_stack_pruning},
      {"deletion-closure",
       "left-greedy class is deletion-closed at t=2 (n<=7) and provably not at t=3",
       deletion_closure},
      {"parallel-determinism",
       "count output is byte-identical for 1 and 8 workers (n=8, t=2, greedy-left)",
       parallel_determinism},
  };
  return claims;
}

std::vector<ClaimResult> run_claims(std::ostream& os, int workers,
                                    const std::vector<std::string>& filter) {
  std::vector<ClaimResult> results;
  const auto& claims = acceptance_claims();
  std::size_t index = 0;
  for (const auto& claim : claims) {
    ++index;
    if (!filter.empty() &&
        std::find(filter.begin(), filter.end(), claim.name) == filter.end()) {
      continue;
    }
    ClaimResult result = claim.run(workers);
    os << "[" << index << "/" << claims.size() << "] "
       << (result.passed ? "PASS" : "FAIL") << " " << result.name;
    if (!result.passed) {
      os << "\n      " << result.detail << "\n      repro: " << result.repro;
    }
    os << "\n" << std::flush;
    results.push_back(std::move(result));
  }
  return results;
}

}  // namespace stacksort::verification
