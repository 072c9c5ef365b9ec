#pragma once

// Independent brute-force reference implementations. These deliberately avoid
// the library's product-set machinery and search engine: every check is a
// direct enumeration of subsequences by bitmask.

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace oracle {

using Op = std::function<std::uint32_t(std::uint32_t, std::uint32_t)>;

// All products of nonempty subsequences, by 2^|t| - 1 masks.
inline std::vector<bool> product_set(std::size_t order, const Op &mul,
                                     const std::vector<std::uint32_t> &t) {
  std::vector<bool> out(order, false);
  for (std::uint32_t mask = 1; mask < (1u << t.size()); ++mask) {
    std::uint32_t acc = 0;
    bool first = true;
    for (std::size_t i = 0; i < t.size(); ++i)
      if (mask & (1u << i)) {
        acc = first ? t[i] : mul(acc, t[i]);
        first = false;
      }
    out[acc] = true;
  }
  return out;
}

// Longest sequence (as a multiset) none of whose nonempty subsequence
// products is "bad". Canonical nondecreasing DFS without memoisation; each
// extension only checks the subsequences that contain the new last term.
struct LongestFree {
  std::size_t length = 0;
  std::vector<std::uint32_t> witness;
};

inline LongestFree longest_free(std::size_t order, const Op &mul,
                                const std::vector<bool> &bad) {
  LongestFree best;
  std::vector<std::uint32_t> cur;
  std::function<void(std::uint32_t)> dfs = [&](std::uint32_t from) {
    if (cur.size() > best.length) {
      best.length = cur.size();
      best.witness = cur;
    }
    for (std::uint32_t a = from; a < order; ++a) {
      if (bad[a])
        continue;
      bool ok = true;
      const std::size_t n = cur.size();
      for (std::uint32_t mask = 0; ok && mask < (1u << n); ++mask) {
        std::uint32_t acc = a;
        for (std::size_t i = 0; i < n; ++i)
          if (mask & (1u << i))
            acc = mul(acc, cur[i]);
        ok = !bad[acc];
      }
      if (!ok)
        continue;
      cur.push_back(a);
      dfs(a);
      cur.pop_back();
    }
  };
  dfs(0);
  return best;
}

// n = prod p^k by trial division, primes ascending.
inline std::vector<std::pair<std::uint64_t, unsigned>> factor(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p <= n; ++p) {
    unsigned k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    if (k)
      out.emplace_back(p, k);
  }
  return out;
}

inline unsigned big_omega(std::uint64_t n) {
  unsigned s = 0;
  for (auto [p, k] : factor(n))
    s += k;
  return s;
}

inline unsigned small_omega(std::uint64_t n) {
  return static_cast<unsigned>(factor(n).size());
}

} // namespace oracle
