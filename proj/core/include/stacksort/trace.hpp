#ifndef STACKSORT_TRACE_HPP
#define STACKSORT_TRACE_HPP

#include <ostream>
#include <string>
#include <vector>

#include "stacksort/greedy.hpp"
#include "stacksort/machine.hpp"
#include "stacksort/oracle.hpp"
#include "stacksort/permutation.hpp"

namespace stacksort {

// Trace event records, one JSON object per applied move:
//   {"step": int, "move": "push|transfer:k|output", "value": int,
//    "stacks": [[top,...,bottom],...], "emitted": int}
// "stacks" lists stack 1 (entry) first; "emitted" counts values already in
// the output after the move.
std::string trace_event_json(int step, const Move& m, int moved_value,
                             const MachineState& after);

// Replays `moves` from the initial state and writes one event per line.
void write_trace_jsonl(std::ostream& os, const Permutation& p, int stack_count,
                       const std::vector<Move>& moves);

// Final outcome record: {"sorted": bool, "blocked": int|null, "gamma": int|null}.
std::string outcome_json(const SortOutcome& outcome);

// Witness serialization: JSON array of the same event records.
std::string witness_json(const Permutation& p, int stack_count, const Witness& w);

// Human-readable rendering of a whole run, one line per step.
void write_pretty_trace(std::ostream& os, const Permutation& p, int stack_count,
                        const SortOutcome& outcome);

}  // namespace stacksort

#endif
