#ifndef STACKSORT_GREEDY_HPP
#define STACKSORT_GREEDY_HPP

#include <optional>
#include <vector>

#include "stacksort/machine.hpp"
#include "stacksort/permutation.hpp"

namespace stacksort {

// Left-greedy always takes the legal move with the leftmost destination
// (output preferred, new input admitted last); right-greedy is the exact
// reverse (new input first, output last).
enum class Priority { Left, Right };

struct FailureInfo {
  int blocked_value = 0;   // first input value that can never enter
  int blocking_value = 0;  // top of the entry stack at failure (< blocked_value)

  friend bool operator==(const FailureInfo&, const FailureInfo&) = default;
};

struct SortOutcome {
  bool sorted = false;
  std::vector<Move> moves;
  // One snapshot per critical moment i = 1..n, taken right before the i-th
  // input value enters. After a failure the failure-time snapshot stands in
  // for every remaining index.
  std::vector<Snapshot> critical_snapshots;
  std::optional<FailureInfo> failure;
};

// Deterministic run of the chosen greedy strategy until sorted or stuck.
SortOutcome run_greedy(const Permutation& p, int stack_count, Priority priority);

// One optimal pass through a single stack: pop only when the next value
// could not enter without breaking the increasing order. The output word is
// a permutation of the same length, not necessarily the identity.
Permutation stack_pass(const Permutation& p);

// True iff t applications of stack_pass reach the identity.
bool west_t_stack_sortable(const Permutation& p, int t);

// Runs both greedy strategies and checks that at every critical moment each
// value sits at least as far left (rank no larger) under left-greedy as
// under right-greedy.
bool dominance_check(const Permutation& p, int stack_count);

}  // namespace stacksort

#endif
