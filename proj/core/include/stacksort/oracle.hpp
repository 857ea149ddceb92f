#ifndef STACKSORT_ORACLE_HPP
#define STACKSORT_ORACLE_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "stacksort/machine.hpp"
#include "stacksort/permutation.hpp"

namespace stacksort {

// Raised when an input exceeds the configured search limit. Distinct from
// "not sortable": the caller must never conflate the two.
class SearchLimitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A complete legal move sequence ending with everything emitted.
struct Witness {
  std::vector<Move> moves;
};

// NoEmptyGap cuts InputPush branches from states where an empty stack lies
// strictly left of a nonempty one. Applied only at critical moments (right
// before a push), which is the scope where skipping such configurations is
// known not to lose any sortable permutation.
enum class Pruning { None, NoEmptyGap };

struct OracleOptions {
  Pruning pruning = Pruning::None;
  std::size_t max_length = 10;  // permutation-length search limit
};

// Decides sortability by t stacks in series under an arbitrary strategy:
// depth-first search over legal moves (left-priority order) with a
// visited-set keyed on the full machine configuration. Returns a witness
// iff some legal move sequence sorts p.
std::optional<Witness> sortable(const Permutation& p, int stack_count,
                                const OracleOptions& options = {});

struct ReplayResult {
  bool ok = false;
  // Set when a move in the sequence was illegal (0-based step index); unset
  // when the moves were legal but the final state is not sorted.
  std::optional<std::size_t> offending_step;
};

// Validates a witness by replaying it move by move from the initial state.
ReplayResult replay(const Permutation& p, int stack_count, const Witness& w);

}  // namespace stacksort

#endif
