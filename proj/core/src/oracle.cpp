#include "stacksort/oracle.hpp"

#include <cassert>
#include <string>
#include <unordered_set>

namespace stacksort {

namespace {

// Canonical encoding of a configuration: cursor, next_output, then each
// stack bottom-to-top separated by 0. next_output is derivable from the
// rest; carrying it and asserting consistency catches state corruption.
std::string encode(const MachineState& s) {
  std::size_t stacked = 0;
  for (const auto& st : s.stacks) stacked += st.size();
  assert(s.next_output ==
         static_cast<int>(s.cursor - stacked) + 1);  // emitted = entered - stacked

  std::string key;
  key.reserve(static_cast<std::size_t>(s.input.size()) + s.stacks.size() + 2);
  key.push_back(static_cast<char>(s.cursor));
  key.push_back(static_cast<char>(s.next_output));
  for (const auto& st : s.stacks) {
    for (int v : st) key.push_back(static_cast<char>(v));
    key.push_back('\0');
  }
  return key;
}

// True when an empty stack sits strictly left (higher index) of a nonempty one.
bool has_empty_gap(const MachineState& s) {
  bool seen_nonempty = false;
  for (const auto& st : s.stacks) {
    if (st.empty() && seen_nonempty) return true;
    seen_nonempty = seen_nonempty || !st.empty();
  }
  return false;
}

struct Search {
  Pruning pruning;
  std::unordered_set<std::string> visited;
  std::vector<Move> moves;

  bool run(const MachineState& s) {
    if (is_sorted(s)) return true;
    if (!visited.insert(encode(s)).second) return false;
    for (const Move& m : legal_moves(s)) {
      if (pruning == Pruning::NoEmptyGap && m.kind == MoveKind::Push &&
          has_empty_gap(s)) {
        continue;
      }
      moves.push_back(m);
      if (run(apply_move(s, m))) return true;
      moves.pop_back();
    }
    return false;
  }
};

}  // namespace

std::optional<Witness> sortable(const Permutation& p, int stack_count,
                                const OracleOptions& options) {
  if (static_cast<std::size_t>(p.size()) > options.max_length) {
    throw SearchLimitError("search limit exceeded: length " +
                           std::to_string(p.size()) + " > " +
                           std::to_string(options.max_length));
  }
  Search search{options.pruning, {}, {}};
  if (search.run(initial_state(p, stack_count))) {
    return Witness{std::move(search.moves)};
  }
  return std::nullopt;
}

ReplayResult replay(const Permutation& p, int stack_count, const Witness& w) {
  MachineState state = initial_state(p, stack_count);
  for (std::size_t i = 0; i < w.moves.size(); ++i) {
    if (!is_legal(state, w.moves[i])) return {false, i};
    state = apply_move(std::move(state), w.moves[i]);
  }
  return {is_sorted(state), std::nullopt};
}

}  // namespace stacksort
