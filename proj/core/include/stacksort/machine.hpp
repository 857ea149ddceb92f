#ifndef STACKSORT_MACHINE_HPP
#define STACKSORT_MACHINE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "stacksort/permutation.hpp"

namespace stacksort {

// The machine is t stacks in series. Values flow right to left:
//
//   output <- [stack t] <- ... <- [stack 2] <- [stack 1] <- input
//
// Stack 1 is the entry (rightmost) stack, stack t the exit (leftmost) one.
// Every stack must read strictly increasing from top to bottom at all times,
// so a value may land on a stack only if the stack is empty or its top is
// larger. Output is legal only for the value the identity needs next.

enum class MoveKind { Push, Transfer, Output };

// One atomic transfer: exactly one value moves one station leftward.
struct Move {
  MoveKind kind = MoveKind::Push;
  int from = 0;  // Transfer only: source stack index in [1, t-1]

  static Move push() { return {MoveKind::Push, 0}; }
  static Move transfer(int source_stack) { return {MoveKind::Transfer, source_stack}; }
  static Move output() { return {MoveKind::Output, 0}; }

  friend bool operator==(const Move&, const Move&) = default;
};

std::string move_label(const Move& m);  // "push", "transfer:k", "output"

struct MachineState {
  Permutation input;      // the permutation being sorted
  std::size_t cursor = 0; // input[0..cursor) have already entered the stacks
  std::vector<std::vector<int>> stacks;  // stacks[k-1] = stack k, top at back
  int next_output = 1;    // the value the output needs next

  int stack_count() const noexcept { return static_cast<int>(stacks.size()); }
  bool input_empty() const noexcept {
    return cursor >= static_cast<std::size_t>(input.size());
  }
  int next_input() const;  // value about to enter; requires !input_empty()
};

// All values in the input, all stacks empty, next_output = 1. t >= 1.
MachineState initial_state(Permutation p, int stack_count);

// next_output = n+1: everything emitted in identity order.
bool is_sorted(const MachineState& s);

bool is_legal(const MachineState& s, const Move& m);

// Legal moves ordered leftmost destination first:
// Output, Transfer(t-1), ..., Transfer(1), Push.
// Empty result means the state is terminal (sorted) or stuck (failure).
std::vector<Move> legal_moves(const MachineState& s);

// Applies a legal move; throws std::logic_error on an illegal one.
MachineState apply_move(MachineState s, const Move& m);

// Station rank of a value: 0 = output, t+1-k = stack k, t+1 = input.
// Ranks only ever decrease over the lifetime of a run.
int position_rank(const MachineState& s, int value);

// Per-value station ranks at one critical moment.
struct Snapshot {
  int index = 0;           // which critical moment (1-based)
  std::vector<int> ranks;  // ranks[v-1] = station rank of value v

  friend bool operator==(const Snapshot&, const Snapshot&) = default;
};

Snapshot take_snapshot(const MachineState& s, int index);

}  // namespace stacksort

#endif
