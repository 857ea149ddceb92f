#ifndef STACKSORT_ENUMERATE_HPP
#define STACKSORT_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "stacksort/permutation.hpp"

namespace stacksort {

// Raised when an exhaustive request is outside the decider's feasible range.
class InfeasibleSizeError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class DeciderKind { GreedyLeft, GreedyRight, West, Oracle };

// A named sortability predicate. Pure: equal inputs give equal verdicts.
struct Decider {
  DeciderKind kind = DeciderKind::GreedyLeft;
  int stacks = 1;

  bool operator()(const Permutation& p) const;
  std::string name() const;  // "greedy-left", "greedy-right", "west", "oracle"
  int max_feasible_length() const;  // 10 for greedy/west, 8 for oracle
};

std::optional<DeciderKind> decider_kind_from_name(const std::string& name);

struct CountRow {
  int n = 0;
  int t = 0;
  std::string decider;
  std::uint64_t count = 0;

  friend bool operator==(const CountRow&, const CountRow&) = default;
};

struct SetDiff {
  std::vector<Permutation> only_a;  // lexicographically sorted
  std::vector<Permutation> only_b;
  std::uint64_t both = 0;
};

struct ClosureViolation {
  Permutation sortable_perm;
  Permutation unsortable_deletion;

  friend bool operator==(const ClosureViolation&, const ClosureViolation&) = default;
};

// Worker-count default: STACKSORT_WORKERS if set, else hardware concurrency.
int default_workers();

// Parallel scan over all n! permutations in lexicographic order, split into
// contiguous lexicographic blocks merged in block order, so every result is
// identical no matter how many workers run. workers = 0 means default.
std::uint64_t parallel_count(int n, const std::function<bool(const Permutation&)>& pred,
                             int workers = 0);
std::vector<Permutation> parallel_filter(int n,
                                         const std::function<bool(const Permutation&)>& pred,
                                         int workers = 0);
// First violation found (earliest block); nullopt when `holds` is universal.
std::optional<Permutation> find_counterexample(int n,
                                               const std::function<bool(const Permutation&)>& holds,
                                               int workers = 0);

// Exact count of sortable permutations of length n under the decider.
CountRow count_sortable(int n, int t, const Decider& d, int workers = 0);

// Exact partition of the two sortable sets.
SetDiff diff_sets(int n, int t, const Decider& a, const Decider& b, int workers = 0);

// All pairs (p sortable, q = one-element deletion of p, q not sortable).
// An empty result certifies deletion-closure at this size.
std::vector<ClosureViolation> closure_violations(int n, int t, const Decider& d,
                                                 int workers = 0);
// Deletion check for a single permutation.
std::vector<ClosureViolation> deletion_violations(const Permutation& p, int t,
                                                  const Decider& d);

// Table rendering (UTF-8, LF endings). CSV columns are fixed: n,t,decider,count.
std::string count_rows_csv(const std::vector<CountRow>& rows);
std::string count_rows_json(const std::vector<CountRow>& rows);
std::string diff_csv(int n, int t, const Decider& a, const Decider& b, const SetDiff& diff);
std::string diff_json(int n, int t, const Decider& a, const Decider& b, const SetDiff& diff);

}  // namespace stacksort

#endif
