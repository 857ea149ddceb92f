#ifndef STACKSORT_PERMUTATION_HPP
#define STACKSORT_PERMUTATION_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace stacksort {

// Raised when permutation text or values fail validation. `position` is the
// 1-based index of the offending token (0 if not tied to a single token).
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message), position_(position) {}
  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

// A permutation of {1..n} in one-line notation, 1-based values.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> values);  // validates, throws ParseError

  static Permutation identity(int n);

  int size() const noexcept { return static_cast<int>(values_.size()); }
  bool empty() const noexcept { return values_.empty(); }
  // 1-based accessor, matching one-line notation indices.
  int value_at(int position) const;
  const std::vector<int>& values() const noexcept { return values_; }
  bool is_identity() const noexcept;

  // Canonical text: values separated by single spaces, e.g. "4 1 3 2".
  std::string str() const;

  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> values_;
};

// Parses whitespace- or comma-separated one-line notation.
Permutation parse_permutation(const std::string& text);

// Generation limit for exhaustive streams (12! fits comfortably in 64 bits;
// anything larger is no longer desk scale).
inline constexpr int kMaxEnumerationLength = 12;

// Streams permutations of length n in lexicographic order. Also supports
// contiguous sub-ranges of the n! space by lexicographic rank, which is what
// the parallel scan partitions on.
class PermutationStream {
public:
  explicit PermutationStream(int n);
  PermutationStream(int n, std::uint64_t first_rank, std::uint64_t count);

  // Returns false when the stream is exhausted.
  bool next(Permutation& out);

private:
  std::vector<int> current_;
  std::uint64_t remaining_ = 0;
  bool fresh_ = true;
};

PermutationStream all_permutations(int n);
void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn);

// n! for n <= kMaxEnumerationLength.
std::uint64_t factorial(int n);

// Removes p_i (1-based) and renormalizes the remaining values to {1..n-1}.
Permutation delete_at(const Permutation& p, int position);

// True iff p has a subsequence order-isomorphic to q. Exhaustive search with
// remaining-length pruning; fine at desk scale.
bool contains_pattern(const Permutation& p, const Permutation& q);

}  // namespace stacksort

#endif
