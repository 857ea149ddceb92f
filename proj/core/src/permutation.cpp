#include "stacksort/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace stacksort {

namespace {

void validate(const std::vector<int>& values) {
  const int n = static_cast<int>(values.size());
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (std::size_t i = 0; i < values.size(); ++i) {
    const int v = values[i];
    if (v < 1 || v > n) {
      throw ParseError("value " + std::to_string(v) + " out of range {1.." +
                           std::to_string(n) + "}",
                       i + 1);
    }
    if (seen[static_cast<std::size_t>(v)]) {
      throw ParseError("duplicate value " + std::to_string(v), i + 1);
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  validate(values_);
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw ParseError("negative length", 0);
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

int Permutation::value_at(int position) const {
  if (position < 1 || position > size()) {
    throw std::out_of_range("position " + std::to_string(position) +
                            " not in [1, " + std::to_string(size()) + "]");
  }
  return values_[static_cast<std::size_t>(position - 1)];
}

bool Permutation::is_identity() const noexcept {
  for (int i = 0; i < size(); ++i) {
    if (values_[static_cast<std::size_t>(i)] != i + 1) return false;
  }
  return true;
}

std::string Permutation::str() const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(values_[i]);
  }
  return out;
}

Permutation parse_permutation(const std::string& text) {
  std::string normalized = text;
  std::replace(normalized.begin(), normalized.end(), ',', ' ');

  std::vector<int> values;
  std::istringstream in(normalized);
  std::string token;
  std::size_t index = 0;
  while (in >> token) {
    ++index;
    int v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw ParseError("malformed token '" + token + "'", index);
    }
    values.push_back(v);
  }
  return Permutation(std::move(values));
}

std::uint64_t factorial(int n) {
  if (n < 0 || n > kMaxEnumerationLength) {
    throw std::invalid_argument("factorial: n out of range");
  }
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

namespace {

// Lexicographic unranking via the factorial number system.
std::vector<int> nth_permutation(int n, std::uint64_t rank) {
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = n; i >= 1; --i) {
    const std::uint64_t f = factorial(i - 1);
    const std::uint64_t digit = rank / f;
    rank %= f;
    out.push_back(pool[static_cast<std::size_t>(digit)]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
  }
  return out;
}

}  // namespace

PermutationStream::PermutationStream(int n) : PermutationStream(n, 0, factorial(n)) {}

PermutationStream::PermutationStream(int n, std::uint64_t first_rank, std::uint64_t count) {
  if (n < 0 || n > kMaxEnumerationLength) {
    throw std::invalid_argument("permutation stream: length " + std::to_string(n) +
                                " above limit " + std::to_string(kMaxEnumerationLength));
  }
  const std::uint64_t total = factorial(n);
  if (first_rank > total || count > total - first_rank) {
    throw std::invalid_argument("permutation stream: rank range out of bounds");
  }
  remaining_ = count;
  if (remaining_ > 0) current_ = nth_permutation(n, first_rank);
}

bool PermutationStream::next(Permutation& out) {
  if (remaining_ == 0) return false;
  if (!fresh_) std::next_permutation(current_.begin(), current_.end());
  fresh_ = false;
  --remaining_;
  out = Permutation(current_);
  return true;
}

PermutationStream all_permutations(int n) { return PermutationStream(n); }

void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn) {
  PermutationStream stream(n);
  Permutation p;
  while (stream.next(p)) fn(p);
}

Permutation delete_at(const Permutation& p, int position) {
  if (position < 1 || position > p.size()) {
    throw std::out_of_range("delete_at: position " + std::to_string(position) +
                            " not in [1, " + std::to_string(p.size()) + "]");
  }
  const int removed = p.value_at(position);
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(p.size()) - 1);
  for (int i = 1; i <= p.size(); ++i) {
    if (i == position) continue;
    const int v = p.value_at(i);
    out.push_back(v > removed ? v - 1 : v);
  }
  return Permutation(std::move(out));
}

namespace {

bool extend_match(const std::vector<int>& haystack, const std::vector<int>& pattern,
                  std::vector<int>& chosen, std::size_t start) {
  const std::size_t j = chosen.size();
  if (j == pattern.size()) return true;
  // Prune: not enough haystack left for the rest of the pattern.
  const std::size_t last_start = haystack.size() - (pattern.size() - j);
  for (std::size_t i = start; i <= last_start; ++i) {
    const int v = haystack[i];
    bool consistent = true;
    for (std::size_t l = 0; l < j && consistent; ++l) {
      consistent = (pattern[l] < pattern[j]) == (chosen[l] < v);
    }
    if (!consistent) continue;
    chosen.push_back(v);
    if (extend_match(haystack, pattern, chosen, i + 1)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

bool contains_pattern(const Permutation& p, const Permutation& q) {
  if (q.empty()) return true;
  if (q.size() > p.size()) return false;
  std::vector<int> chosen;
  chosen.reserve(static_cast<std::size_t>(q.size()));
  return extend_match(p.values(), q.values(), chosen, 0);
}

}  // namespace stacksort
