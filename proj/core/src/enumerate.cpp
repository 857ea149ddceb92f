#include "stacksort/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

#include <nlohmann/json.hpp>

#include "stacksort/greedy.hpp"
#include "stacksort/oracle.hpp"

namespace stacksort {

bool Decider::operator()(const Permutation& p) const {
  switch (kind) {
    case DeciderKind::GreedyLeft:
      return run_greedy(p, stacks, Priority::Left).sorted;
    case DeciderKind::GreedyRight:
      return run_greedy(p, stacks, Priority::Right).sorted;
    case DeciderKind::West:
      return west_t_stack_sortable(p, stacks);
    case DeciderKind::Oracle:
      return sortable(p, stacks).has_value();
  }
  return false;
}

std::string Decider::name() const {
  switch (kind) {
    case DeciderKind::GreedyLeft:
      return "greedy-left";
    case DeciderKind::GreedyRight:
      return "greedy-right";
    case DeciderKind::West:
      return "west";
    case DeciderKind::Oracle:
      return "oracle";
  }
  return "?";
}

int Decider::max_feasible_length() const {
  return kind == DeciderKind::Oracle ? 8 : 10;
}

std::optional<DeciderKind> decider_kind_from_name(const std::string& name) {
  if (name == "greedy-left" || name == "left") return DeciderKind::GreedyLeft;
  if (name == "greedy-right" || name == "right") return DeciderKind::GreedyRight;
  if (name == "west") return DeciderKind::West;
  if (name == "oracle") return DeciderKind::Oracle;
  return std::nullopt;
}

int default_workers() {
  if (const char* env = std::getenv("STACKSORT_WORKERS")) {
    const int v = std::atoi(env);
    if (v >= 1) return std::min(v, 64);
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(std::min(hc, 64u));
}

namespace {

// Runs `body` over contiguous lexicographic rank blocks. Results must be
// written into per-block slots by the caller; blocks are merged in block
// order afterwards, which keeps every output independent of the worker
// count and of scheduling.
void run_blocks(int n, int workers,
                const std::function<void(std::size_t block, std::uint64_t first,
                                         std::uint64_t count)>& body) {
  const std::uint64_t total = factorial(n);
  if (workers <= 0) workers = default_workers();
  const std::uint64_t block_count =
      std::max<std::uint64_t>(1, std::min<std::uint64_t>(total, static_cast<std::uint64_t>(workers) * 4));
  const std::uint64_t per_block = total / block_count;
  const std::uint64_t leftover = total % block_count;

  auto block_range = [&](std::size_t b) {
    // First `leftover` blocks take one extra permutation.
    const std::uint64_t extra = std::min<std::uint64_t>(b, leftover);
    const std::uint64_t first = per_block * b + extra;
    const std::uint64_t count = per_block + (b < leftover ? 1 : 0);
    return std::pair<std::uint64_t, std::uint64_t>{first, count};
  };

  if (workers == 1 || block_count == 1) {
    for (std::size_t b = 0; b < block_count; ++b) {
      const auto [first, count] = block_range(b);
      body(b, first, count);
    }
    return;
  }

  std::atomic<std::size_t> next{0};
  auto drain = [&] {
    for (;;) {
      const std::size_t b = next.fetch_add(1);
      if (b >= block_count) return;
      const auto [first, count] = block_range(b);
      body(b, first, count);
    }
  };
  std::vector<std::thread> pool;
  const std::size_t thread_count =
      std::min<std::size_t>(static_cast<std::size_t>(workers), block_count);
  pool.reserve(thread_count);
  for (std::size_t i = 0; i < thread_count; ++i) pool.emplace_back(drain);
  for (auto& th : pool) th.join();
}

std::size_t block_count_for(int n, int workers) {
  const std::uint64_t total = factorial(n);
  if (workers <= 0) workers = default_workers();
  return static_cast<std::size_t>(
      std::max<std::uint64_t>(1, std::min<std::uint64_t>(total, static_cast<std::uint64_t>(workers) * 4)));
}

}  // namespace

std::uint64_t parallel_count(int n, const std::function<bool(const Permutation&)>& pred,
                             int workers) {
  std::vector<std::uint64_t> counts(block_count_for(n, workers), 0);
  run_blocks(n, workers, [&](std::size_t b, std::uint64_t first, std::uint64_t count) {
    PermutationStream stream(n, first, count);
    Permutation p;
    std::uint64_t local = 0;
    while (stream.next(p)) {
      if (pred(p)) ++local;
    }
    counts[b] = local;
  });
  std::uint64_t total = 0;
  for (std::uint64_t c : counts) total += c;
  return total;
}

std::vector<Permutation> parallel_filter(int n,
                                         const std::function<bool(const Permutation&)>& pred,
                                         int workers) {
  std::vector<std::vector<Permutation>> hits(block_count_for(n, workers));
  run_blocks(n, workers, [&](std::size_t b, std::uint64_t first, std::uint64_t count) {
    PermutationStream stream(n, first, count);
    Permutation p;
    while (stream.next(p)) {
      if (pred(p)) hits[b].push_back(p);
    }
  });
  std::vector<Permutation> out;
  for (auto& block : hits) {
    out.insert(out.end(), std::make_move_iterator(block.begin()),
               std::make_move_iterator(block.end()));
  }
  return out;
}

std::optional<Permutation> find_counterexample(
    int n, const std::function<bool(const Permutation&)>& holds, int workers) {
  std::vector<std::optional<Permutation>> found(block_count_for(n, workers));
  std::atomic<bool> stop{false};
  run_blocks(n, workers, [&](std::size_t b, std::uint64_t first, std::uint64_t count) {
    PermutationStream stream(n, first, count);
    Permutation p;
    while (stream.next(p)) {
      if (stop.load(std::memory_order_relaxed)) return;
      if (!holds(p)) {
        found[b] = p;
        stop.store(true, std::memory_order_relaxed);
        return;
      }
    }
  });
  for (auto& f : found) {
    if (f.has_value()) return f;
  }
  return std::nullopt;
}

namespace {

void check_feasible(int n, const Decider& d) {
  if (n < 0) throw InfeasibleSizeError("length must be nonnegative");
  if (n > d.max_feasible_length()) {
    throw InfeasibleSizeError("length " + std::to_string(n) + " infeasible for " +
                              d.name() + " (limit " +
                              std::to_string(d.max_feasible_length()) + ")");
  }
}

}  // namespace

CountRow count_sortable(int n, int t, const Decider& d, int workers) {
  check_feasible(n, d);
  const std::uint64_t count =
      parallel_count(n, [&](const Permutation& p) { return d(p); }, workers);
  return CountRow{n, t, d.name(), count};
}

SetDiff diff_sets(int n, int t, const Decider& a, const Decider& b, int workers) {
  (void)t;
  check_feasible(n, a);
  check_feasible(n, b);
  const std::vector<Permutation> set_a =
      parallel_filter(n, [&](const Permutation& p) { return a(p); }, workers);
  const std::vector<Permutation> set_b =
      parallel_filter(n, [&](const Permutation& p) { return b(p); }, workers);

  SetDiff diff;
  std::set_difference(set_a.begin(), set_a.end(), set_b.begin(), set_b.end(),
                      std::back_inserter(diff.only_a));
  std::set_difference(set_b.begin(), set_b.end(), set_a.begin(), set_a.end(),
                      std::back_inserter(diff.only_b));
  diff.both = set_a.size() - diff.only_a.size();
  return diff;
}

std::vector<ClosureViolation> deletion_violations(const Permutation& p, int t,
                                                  const Decider& d) {
  std::vector<ClosureViolation> out;
  if (!d(p)) return out;
  for (int i = 1; i <= p.size(); ++i) {
    Permutation q = delete_at(p, i);
    if (!d(q)) {
      // One entry per distinct pattern; multiple positions can yield the same q.
      ClosureViolation v{p, std::move(q)};
      if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(std::move(v));
    }
  }
  return out;
}

std::vector<ClosureViolation> closure_violations(int n, int t, const Decider& d,
                                                 int workers) {
  check_feasible(n, d);
  if (n >= 1) check_feasible(n - 1, d);
  std::vector<std::vector<ClosureViolation>> blocks(block_count_for(n, workers));
  run_blocks(n, workers, [&](std::size_t b, std::uint64_t first, std::uint64_t count) {
    PermutationStream stream(n, first, count);
    Permutation p;
    while (stream.next(p)) {
      auto violations = deletion_violations(p, t, d);
      blocks[b].insert(blocks[b].end(), std::make_move_iterator(violations.begin()),
                       std::make_move_iterator(violations.end()));
    }
  });
  std::vector<ClosureViolation> out;
  for (auto& block : blocks) {
    out.insert(out.end(), std::make_move_iterator(block.begin()),
               std::make_move_iterator(block.end()));
  }
  return out;
}

std::string count_rows_csv(const std::vector<CountRow>& rows) {
  std::string out = "n,t,decider,count\n";
  for (const auto& row : rows) {
    out += std::to_string(row.n) + ',' + std::to_string(row.t) + ',' + row.decider +
           ',' + std::to_string(row.count) + '\n';
  }
  return out;
}

std::string count_rows_json(const std::vector<CountRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    arr.push_back({{"n", row.n}, {"t", row.t}, {"decider", row.decider}, {"count", row.count}});
  }
  return arr.dump() + "\n";
}

std::string diff_csv(int n, int t, const Decider& a, const Decider& b, const SetDiff& diff) {
  std::string out = "n,t,set,permutation\n";
  const std::string prefix = std::to_string(n) + ',' + std::to_string(t) + ',';
  for (const auto& p : diff.only_a) out += prefix + "only-" + a.name() + ',' + p.str() + '\n';
  for (const auto& p : diff.only_b) out += prefix + "only-" + b.name() + ',' + p.str() + '\n';
  out += prefix + "both," + std::to_string(diff.both) + '\n';
  return out;
}

std::string diff_json(int n, int t, const Decider& a, const Decider& b, const SetDiff& diff) {
  nlohmann::ordered_json obj;
  obj["n"] = n;
  obj["t"] = t;
  obj["a"] = a.name();
  obj["b"] = b.name();
  auto render = [](const std::vector<Permutation>& list) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& p : list) arr.push_back(p.str());
    return arr;
  };
  obj["only_a"] = render(diff.only_a);
  obj["only_b"] = render(diff.only_b);
  obj["both"] = diff.both;
  return obj.dump() + "\n";
}

}  // namespace stacksort
