#include "stacksort/constructions.hpp"

#include <stdexcept>

namespace stacksort {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error("lower bound does not fit in 64 bits");
  }
  return r;
}

}  // namespace

Permutation insert_max(const Permutation& base, int position) {
  const int n = base.size() + 1;
  if (position < 1 || position > n) {
    throw std::out_of_range("insert_max: slot " + std::to_string(position) +
                            " not in [1, " + std::to_string(n) + "]");
  }
  std::vector<int> values = base.values();
  values.insert(values.begin() + (position - 1), n);
  return Permutation(std::move(values));
}

Permutation right_fail_family(int t) {
  if (t < 2) throw std::invalid_argument("right_fail_family requires t >= 2");
  std::vector<int> values;
  values.reserve(static_cast<std::size_t>(t) + 2);
  for (int v = t + 1; v >= 2; --v) values.push_back(v);
  values.push_back(t + 2);
  values.push_back(1);
  return Permutation(std::move(values));
}

Permutation left_fail_family(int t) {
  if (t < 3) throw std::invalid_argument("left_fail_family requires t >= 3");
  std::vector<int> values = {2, 5, 4, 1};
  for (int v = 6; v <= t + 4; ++v) values.push_back(v);
  values.push_back(3);
  return Permutation(std::move(values));
}

Permutation superpattern_family(int t) {
  if (t < 3) throw std::invalid_argument("superpattern_family requires t >= 3");
  std::vector<int> values = {2, 6, 3, 5, 1};
  for (int v = 7; v <= t + 5; ++v) values.push_back(v);
  values.push_back(4);
  return Permutation(std::move(values));
}

std::uint64_t lower_bound(int n, int t) {
  if (t < 1) throw std::invalid_argument("lower_bound requires t >= 1");
  if (n < t) throw std::invalid_argument("lower_bound requires n >= t");
  std::uint64_t result = 1;
  for (int i = 2; i <= t; ++i) result = checked_mul(result, static_cast<std::uint64_t>(i));
  for (int i = 0; i < n - t; ++i) {
    result = checked_mul(result, static_cast<std::uint64_t>(t) + 1);
  }
  return result;
}

namespace {

void grow(std::vector<int>& values, int next_value, int n, int t,
          const std::function<void(const Permutation&)>& emit) {
  if (next_value > n) {
    emit(Permutation(values));
    return;
  }
  // Admissible slots for the new maximum: the first t, then the last.
  for (int slot = 1; slot <= t; ++slot) {
    values.insert(values.begin() + (slot - 1), next_value);
    grow(values, next_value + 1, n, t, emit);
    values.erase(values.begin() + (slot - 1));
  }
  values.push_back(next_value);
  grow(values, next_value + 1, n, t, emit);
  values.pop_back();
}

}  // namespace

void lower_bound_family(int n, int t,
                        const std::function<void(const Permutation&)>& emit) {
  if (t < 1) throw std::invalid_argument("lower_bound_family requires t >= 1");
  if (n < t + 1) throw std::invalid_argument("lower_bound_family requires n >= t+1");
  // Every permutation of length t+1 is a seed.
  PermutationStream seeds(t + 1);
  Permutation seed;
  while (seeds.next(seed)) {
    std::vector<int> values = seed.values();
    grow(values, t + 2, n, t, emit);
  }
}

std::vector<Permutation> lower_bound_family(int n, int t) {
  std::vector<Permutation> out;
  lower_bound_family(n, t, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

}  // namespace stacksort
