#include "stacksort/greedy.hpp"

#include <cassert>

namespace stacksort {

SortOutcome run_greedy(const Permutation& p, int stack_count, Priority priority) {
  const int n = p.size();
  MachineState state = initial_state(p, stack_count);

  SortOutcome outcome;
  int pushes = 0;
  for (;;) {
    const std::vector<Move> legal = legal_moves(state);
    if (legal.empty()) break;
    const Move m = (priority == Priority::Left) ? legal.front() : legal.back();
    if (m.kind == MoveKind::Push) {
      outcome.critical_snapshots.push_back(take_snapshot(state, ++pushes));
    }
    state = apply_move(std::move(state), m);
    outcome.moves.push_back(m);
  }

  outcome.sorted = is_sorted(state);
  if (!outcome.sorted) {
    // Stuck with input waiting: the blocked value cannot enter because the
    // entry stack's top is smaller.
    assert(!state.input_empty());
    assert(!state.stacks.front().empty());
    FailureInfo failure;
    failure.blocked_value = state.next_input();
    failure.blocking_value = state.stacks.front().back();
    outcome.failure = failure;
    // The failure moment stands in for every critical moment not reached.
    while (static_cast<int>(outcome.critical_snapshots.size()) < n) {
      const int index = static_cast<int>(outcome.critical_snapshots.size()) + 1;
      outcome.critical_snapshots.push_back(take_snapshot(state, index));
    }
  }
  return outcome;
}

Permutation stack_pass(const Permutation& p) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(p.size()));
  std::vector<int> stack;
  for (int x : p) {
    while (!stack.empty() && stack.back() < x) {
      out.push_back(stack.back());
      stack.pop_back();
    }
    stack.push_back(x);
  }
  while (!stack.empty()) {
    out.push_back(stack.back());
    stack.pop_back();
  }
  return Permutation(std::move(out));
}

bool west_t_stack_sortable(const Permutation& p, int t) {
  if (t < 1) throw std::invalid_argument("stack count must be at least 1");
  Permutation current = p;
  for (int i = 0; i < t; ++i) current = stack_pass(current);
  return current.is_identity();
}

bool dominance_check(const Permutation& p, int stack_count) {
  const SortOutcome left = run_greedy(p, stack_count, Priority::Left);
  const SortOutcome right = run_greedy(p, stack_count, Priority::Right);
  assert(left.critical_snapshots.size() == right.critical_snapshots.size());
  for (std::size_t i = 0; i < left.critical_snapshots.size(); ++i) {
    const auto& lhs = left.critical_snapshots[i].ranks;
    const auto& rhs = right.critical_snapshots[i].ranks;
    for (std::size_t v = 0; v < lhs.size(); ++v) {
      if (lhs[v] > rhs[v]) return false;
    }
  }
  return true;
}

}  // namespace stacksort
