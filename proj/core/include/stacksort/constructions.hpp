#ifndef STACKSORT_CONSTRUCTIONS_HPP
#define STACKSORT_CONSTRUCTIONS_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "stacksort/permutation.hpp"

namespace stacksort {

// Inserts the new maximum n = base.size()+1 at the given 1-based slot.
Permutation insert_max(const Permutation& base, int position);

// <t+1, t, ..., 3, 2, t+2, 1>: sortable by two stacks with the left-greedy
// strategy for every t, but not by t stacks with the right-greedy one. t >= 2.
Permutation right_fail_family(int t);

// <2, 5, 4, 1, 6, 7, ..., t+4, 3>: sortable by t stacks in series, but the
// left-greedy strategy fails on it when t+4 would need to enter. t >= 3.
Permutation left_fail_family(int t);

// <2, 6, 3, 5, 1, 7, 8, ..., t+5, 4>: contains left_fail_family(t) yet is
// left-greedy sortable by t stacks, so the left-greedy class is not closed
// under pattern containment for t >= 3.
Permutation superpattern_family(int t);

// t! * (t+1)^(n-t), exactly. Overflow-checked: throws std::overflow_error
// rather than wrapping. Requires n >= t >= 1.
std::uint64_t lower_bound(int n, int t);

// Every permutation reachable from a length-(t+1) seed by repeatedly
// inserting the next maximum into one of the first t slots or the last slot.
// Seeds stream in lexicographic order, slots ascending {1..t, last}; the
// construction is injective, so exactly lower_bound(n, t) permutations are
// emitted. Requires n >= t+1.
void lower_bound_family(int n, int t,
                        const std::function<void(const Permutation&)>& emit);
std::vector<Permutation> lower_bound_family(int n, int t);

}  // namespace stacksort

#endif
