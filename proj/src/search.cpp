#include "ebring/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <memory>
#include <thread>
#include <unordered_map>

namespace ebring::search {

std::uint64_t default_node_budget() {
  if (const char *env = std::getenv("EBRING_BUDGET")) {
    char *end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0)
      return v;
  }
  return kDefaultNodeBudget;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Shared {
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<std::size_t> deepest{0};
  std::atomic<bool> exhausted{false};
  Clock::time_point deadline;
};

class Solver {
public:
  Solver(const MulTable &t, std::uint64_t forbidden, const Limits &limits,
         Shared &shared)
      : t_(t), forbidden_(forbidden), limits_(limits), shared_(shared) {}

  std::uint64_t extend(std::uint64_t s, Elem a) const {
    std::uint64_t next = s | bit(a);
    while (s) {
      const auto x = static_cast<Elem>(std::countr_zero(s));
      s &= s - 1;
      next |= bit(t_.mul(x, a));
    }
    return next;
  }

  bool allowed(std::uint64_t s) const { return (s & forbidden_) == 0; }

  // Longest extension of a state whose product set is s (s avoids the
  // forbidden set). depth is the length of the prefix that reached s.
  unsigned value(std::uint64_t s, unsigned depth) {
    if (auto it = memo_.find(s); it != memo_.end())
      return it->second;
    tick(depth);
    unsigned best = 0;
    for (Elem a = 0; a < t_.size(); ++a) {
      const std::uint64_t next = extend(s, a);
      if (!allowed(next))
        continue;
      // next != s: otherwise a and all its powers would lie in s, including
      // an idempotent power, so the recursion is well founded.
      best = std::max(best, 1 + value(next, depth + 1));
    }
    if (memo_.size() >= limits_.memo_cap)
      memo_.clear();
    memo_.emplace(s, static_cast<std::uint8_t>(best));
    return best;
  }

  // Greedy descent choosing the least term that keeps the optimum.
  void reconstruct(std::uint64_t s, unsigned remaining, std::vector<Elem> &out) {
    while (remaining > 0) {
      bool moved = false;
      for (Elem a = 0; a < t_.size(); ++a) {
        const std::uint64_t next = extend(s, a);
        if (!allowed(next) || 1 + value(next, 0) != remaining)
          continue;
        out.push_back(a);
        s = next;
        --remaining;
        moved = true;
        break;
      }
      if (!moved)
        throw InternalConsistencyError("witness reconstruction lost the optimum");
    }
  }

private:
  static std::uint64_t bit(Elem a) { return std::uint64_t{1} << a; }

  void tick(unsigned depth) {
    std::size_t seen = shared_.deepest.load(std::memory_order_relaxed);
    while (depth > seen &&
           !shared_.deepest.compare_exchange_weak(seen, depth, std::memory_order_relaxed)) {
    }
    const auto n = shared_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (shared_.exhausted.load(std::memory_order_relaxed))
      throw ResourceExhausted("search aborted");
    if (n > limits_.max_nodes ||
        ((n & 0x3fff) == 0 && Clock::now() > shared_.deadline)) {
      shared_.exhausted = true;
      throw ResourceExhausted("search budget exhausted");
    }
  }

  const MulTable &t_;
  std::uint64_t forbidden_;
  const Limits &limits_;
  Shared &shared_;
  std::unordered_map<std::uint64_t, std::uint8_t> memo_;
};

} // namespace

Result longest_free_sequence(const MulTable &table, std::uint64_t forbidden,
                             const Limits &limits) {
  Shared shared;
  shared.deadline = Clock::now() + limits.max_time;
  Result result;

  try {
    const unsigned threads = std::max(1u, limits.threads);
    if (threads == 1) {
      Solver solver(table, forbidden, limits, shared);
      const unsigned best = solver.value(0, 0);
      std::vector<Elem> terms;
      solver.reconstruct(0, best, terms);
      result.max_length = best;
      result.witness = Sequence(std::move(terms));
    } else {
      // Top-level branches fan out; each worker keeps a private memo and the
      // reduction is a max, so the answer does not depend on scheduling.
      const std::size_t n = table.size();
      std::vector<int> branch(n, -1);
      std::vector<std::size_t> owner(n, 0);
      std::vector<std::unique_ptr<Solver>> solvers;
      for (unsigned w = 0; w < threads; ++w)
        solvers.push_back(std::make_unique<Solver>(table, forbidden, limits, shared));
      std::atomic<std::size_t> next_task{0};
      std::vector<std::exception_ptr> errors(threads);
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < threads; ++w)
        pool.emplace_back([&, w] {
          try {
            for (std::size_t a; (a = next_task.fetch_add(1)) < n;) {
              const std::uint64_t s = solvers[w]->extend(0, static_cast<Elem>(a));
              if (!solvers[w]->allowed(s))
                continue;
              branch[a] = static_cast<int>(1 + solvers[w]->value(s, 1));
              owner[a] = w;
            }
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      for (auto &th : pool)
        th.join();
      for (auto &e : errors)
        if (e)
          std::rethrow_exception(e);
      const int best = std::max(0, *std::max_element(branch.begin(), branch.end()));
      std::vector<Elem> terms;
      for (std::size_t a = 0; a < n && best > 0; ++a)
        if (branch[a] == best) {
          Solver &s = *solvers[owner[a]];
          terms.push_back(static_cast<Elem>(a));
          s.reconstruct(s.extend(0, static_cast<Elem>(a)), best - 1, terms);
          break;
        }
      result.max_length = static_cast<std::size_t>(best);
      result.witness = Sequence(std::move(terms));
    }
  } catch (const ResourceExhausted &) {
    throw ResourceExhausted(
        "search budget exhausted after " + std::to_string(shared.nodes.load()) +
            " nodes; longest free sequence seen has length " +
            std::to_string(shared.deepest.load()),
        shared.deepest.load());
  }
  result.nodes = shared.nodes.load();
  return result;
}

} // namespace ebring::search
