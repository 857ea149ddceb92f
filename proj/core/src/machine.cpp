#include "stacksort/machine.hpp"

#include <stdexcept>

namespace stacksort {

std::string move_label(const Move& m) {
  switch (m.kind) {
    case MoveKind::Push:
      return "push";
    case MoveKind::Transfer:
      return "transfer:" + std::to_string(m.from);
    case MoveKind::Output:
      return "output";
  }
  return "?";
}

int MachineState::next_input() const {
  if (input_empty()) throw std::logic_error("next_input on exhausted input");
  return input.value_at(static_cast<int>(cursor) + 1);
}

MachineState initial_state(Permutation p, int stack_count) {
  if (stack_count < 1) {
    throw std::invalid_argument("stack count must be at least 1, got " +
                                std::to_string(stack_count));
  }
  MachineState s;
  s.input = std::move(p);
  s.cursor = 0;
  s.stacks.assign(static_cast<std::size_t>(stack_count), {});
  s.next_output = 1;
  return s;
}

bool is_sorted(const MachineState& s) { return s.next_output == s.input.size() + 1; }

bool is_legal(const MachineState& s, const Move& m) {
  const int t = s.stack_count();
  switch (m.kind) {
    case MoveKind::Push: {
      if (s.input_empty()) return false;
      const auto& dst = s.stacks.front();
      return dst.empty() || s.next_input() < dst.back();
    }
    case MoveKind::Transfer: {
      if (m.from < 1 || m.from >= t) return false;
      const auto& src = s.stacks[static_cast<std::size_t>(m.from - 1)];
      if (src.empty()) return false;
      const auto& dst = s.stacks[static_cast<std::size_t>(m.from)];
      return dst.empty() || src.back() < dst.back();
    }
    case MoveKind::Output: {
      const auto& exit = s.stacks.back();
      return !exit.empty() && exit.back() == s.next_output;
    }
  }
  return false;
}

std::vector<Move> legal_moves(const MachineState& s) {
  const int t = s.stack_count();
  std::vector<Move> out;
  out.reserve(static_cast<std::size_t>(t) + 1);
  if (is_legal(s, Move::output())) out.push_back(Move::output());
  for (int k = t - 1; k >= 1; --k) {
    if (is_legal(s, Move::transfer(k))) out.push_back(Move::transfer(k));
  }
  if (is_legal(s, Move::push())) out.push_back(Move::push());
  return out;
}

MachineState apply_move(MachineState s, const Move& m) {
  if (!is_legal(s, m)) {
    throw std::logic_error("illegal move " + move_label(m));
  }
  switch (m.kind) {
    case MoveKind::Push:
      s.stacks.front().push_back(s.next_input());
      ++s.cursor;
      break;
    case MoveKind::Transfer: {
      auto& src = s.stacks[static_cast<std::size_t>(m.from - 1)];
      s.stacks[static_cast<std::size_t>(m.from)].push_back(src.back());
      src.pop_back();
      break;
    }
    case MoveKind::Output:
      s.stacks.back().pop_back();
      ++s.next_output;
      break;
  }
  return s;
}

int position_rank(const MachineState& s, int value) {
  if (value < 1 || value > s.input.size()) {
    throw std::out_of_range("value " + std::to_string(value) + " not in [1, " +
                            std::to_string(s.input.size()) + "]");
  }
  const int t = s.stack_count();
  if (value < s.next_output) return 0;
  for (int k = 1; k <= t; ++k) {
    for (int v : s.stacks[static_cast<std::size_t>(k - 1)]) {
      if (v == value) return t + 1 - k;
    }
  }
  return t + 1;
}

Snapshot take_snapshot(const MachineState& s, int index) {
  const int t = s.stack_count();
  const int n = s.input.size();
  Snapshot snap;
  snap.index = index;
  snap.ranks.assign(static_cast<std::size_t>(n), t + 1);
  for (int v = 1; v < s.next_output; ++v) snap.ranks[static_cast<std::size_t>(v - 1)] = 0;
  for (int k = 1; k <= t; ++k) {
    for (int v : s.stacks[static_cast<std::size_t>(k - 1)]) {
      snap.ranks[static_cast<std::size_t>(v - 1)] = t + 1 - k;
    }
  }
  return snap;
}

}  // namespace stacksort
