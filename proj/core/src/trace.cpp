#include "stacksort/trace.hpp"

#include <nlohmann/json.hpp>

namespace stacksort {

namespace {

using json = nlohmann::ordered_json;

json stacks_json(const MachineState& s) {
  json arr = json::array();
  for (const auto& st : s.stacks) {
    json stack = json::array();
    for (auto it = st.rbegin(); it != st.rend(); ++it) stack.push_back(*it);  // top first
    arr.push_back(std::move(stack));
  }
  return arr;
}

int moved_value(const MachineState& before, const Move& m) {
  switch (m.kind) {
    case MoveKind::Push:
      return before.next_input();
    case MoveKind::Transfer:
      return before.stacks[static_cast<std::size_t>(m.from - 1)].back();
    case MoveKind::Output:
      return before.stacks.back().back();
  }
  return 0;
}

json event(int step, const Move& m, int value, const MachineState& after) {
  return json{{"step", step},
              {"move", move_label(m)},
              {"value", value},
              {"stacks", stacks_json(after)},
              {"emitted", after.next_output - 1}};
}

}  // namespace

std::string trace_event_json(int step, const Move& m, int value, const MachineState& after) {
  return event(step, m, value, after).dump();
}

void write_trace_jsonl(std::ostream& os, const Permutation& p, int stack_count,
                       const std::vector<Move>& moves) {
  MachineState state = initial_state(p, stack_count);
  int step = 0;
  for (const Move& m : moves) {
    const int value = moved_value(state, m);
    state = apply_move(std::move(state), m);
    os << event(++step, m, value, state).dump() << '\n';
  }
}

std::string outcome_json(const SortOutcome& outcome) {
  json obj;
  obj["sorted"] = outcome.sorted;
  obj["blocked"] = outcome.failure ? json(outcome.failure->blocked_value) : json(nullptr);
  obj["gamma"] = outcome.failure ? json(outcome.failure->blocking_value) : json(nullptr);
  return obj.dump();
}

std::string witness_json(const Permutation& p, int stack_count, const Witness& w) {
  MachineState state = initial_state(p, stack_count);
  json arr = json::array();
  int step = 0;
  for (const Move& m : w.moves) {
    const int value = moved_value(state, m);
    state = apply_move(std::move(state), m);
    arr.push_back(event(++step, m, value, state));
  }
  return arr.dump();
}

namespace {

std::string stack_text(const std::vector<int>& st) {
  std::string out = "[";
  for (auto it = st.rbegin(); it != st.rend(); ++it) {
    if (it != st.rbegin()) out += ' ';
    out += std::to_string(*it);
  }
  return out + "]";
}

void pretty_line(std::ostream& os, int step, const std::string& what,
                 const MachineState& s) {
  os << "step " << step << "  " << what << "\n   in: ";
  for (int i = static_cast<int>(s.cursor) + 1; i <= s.input.size(); ++i) {
    os << s.input.value_at(i) << ' ';
  }
  os << "\n";
  for (int k = s.stack_count(); k >= 1; --k) {
    os << "   s" << k << ": " << stack_text(s.stacks[static_cast<std::size_t>(k - 1)]);
    if (k == s.stack_count()) os << "  (exit)";
    if (k == 1) os << "  (entry)";
    os << "\n";
  }
  os << "  out: ";
  for (int v = 1; v < s.next_output; ++v) os << v << ' ';
  os << "\n";
}

}  // namespace

void write_pretty_trace(std::ostream& os, const Permutation& p, int stack_count,
                        const SortOutcome& outcome) {
  MachineState state = initial_state(p, stack_count);
  int step = 0;
  for (const Move& m : outcome.moves) {
    const int value = moved_value(state, m);
    state = apply_move(std::move(state), m);
    pretty_line(os, ++step, move_label(m) + "  value " + std::to_string(value), state);
  }
  if (outcome.sorted) {
    os << "sorted in " << outcome.moves.size() << " moves\n";
  } else if (outcome.failure) {
    os << "stuck: " << outcome.failure->blocked_value
       << " cannot enter (top of entry stack is " << outcome.failure->blocking_value
       << ")\n";
  }
}

}  // namespace stacksort
