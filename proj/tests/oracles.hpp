#pragma once

// Brute-force reference implementations used only by the tests. They take
// deliberately different routes from the library (explicit sentinels,
// greedy run extension, filtering all permutations, inversion counting).

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

namespace oracle {

inline std::vector<int> descents(const std::vector<int>& w) {
  std::vector<int> out;
  for (std::size_t a = 1; a < w.size(); ++a) {
    if (w[a - 1] > w[a]) out.push_back(static_cast<int>(a));
  }
  return out;
}

inline int peaks(const std::vector<int>& w) {
  int count = 0;
  for (std::size_t k = 1; k + 1 < w.size(); ++k) {
    if (w[k] > w[k - 1] && w[k] > w[k + 1]) ++count;
  }
  return count;
}

// Greedy maximal monotone runs: a run started at s extends while the
// direction of (s, s+1) persists; the next run starts at its last entry.
inline std::vector<int> birun_lengths(const std::vector<int>& w) {
  if (w.size() <= 1) return {static_cast<int>(w.size())};
  std::vector<int> out;
  std::size_t s = 0;
  while (s + 1 < w.size()) {
    const bool up = w[s + 1] > w[s];
    std::size_t e = s + 1;
    while (e + 1 < w.size() && (w[e + 1] > w[e]) == up) ++e;
    out.push_back(static_cast<int>(e - s + 1));
    s = e;
  }
  return out;
}

inline int udr(const std::vector<int>& w) {
  std::vector<int> padded{0};
  padded.insert(padded.end(), w.begin(), w.end());
  return static_cast<int>(birun_lengths(padded).size());
}

inline int epk(const std::vector<int>& w) {
  std::vector<int> padded{0};
  padded.insert(padded.end(), w.begin(), w.end());
  padded.push_back(0);
  return peaks(padded);
}

inline bool contains_subsequence(const std::vector<int>& hay,
                                 const std::vector<int>& needle) {
  auto it = hay.begin();
  for (int v : needle) {
    it = std::find(it, hay.end(), v);
    if (it == hay.end()) return false;
    ++it;
  }
  return true;
}

// All orderings of pi's and sigma's entries that keep both as subsequences.
inline std::set<std::vector<int>> shuffles(const std::vector<int>& pi,
                                           const std::vector<int>& sigma) {
  std::vector<int> all = pi;
  all.insert(all.end(), sigma.begin(), sigma.end());
  std::sort(all.begin(), all.end());
  std::set<std::vector<int>> out;
  do {
    if (contains_subsequence(all, pi) && contains_subsequence(all, sigma)) out.insert(all);
  } while (std::next_permutation(all.begin(), all.end()));
  return out;
}

inline std::uint64_t binomial(int n, int k) {
  std::vector<std::vector<std::uint64_t>> c(n + 1);
  for (int r = 0; r <= n; ++r) {
    c[r].assign(r + 1, 1);
    for (int j = 1; j < r; ++j) c[r][j] = c[r - 1][j - 1] + c[r - 1][j];
  }
  return (k < 0 || k > n) ? 0 : c[n][k];
}

// Gaussian binomial as the inversion generating function of 0/1 words
// with k ones: coefficient map degree -> count.
inline std::map<int, std::int64_t> q_binomial_by_inversions(int n, int k) {
  std::map<int, std::int64_t> out;
  std::vector<int> w(n, 0);
  std::fill(w.end() - k, w.end(), 1);
  do {
    int inv = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) inv += w[a] > w[b];
    ++out[inv];
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

inline std::vector<int> random_word(std::mt19937& rng, int length, int ceiling) {
  std::vector<int> pool(ceiling);
  for (int v = 0; v < ceiling; ++v) pool[v] = v + 1;
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(length);
  return pool;
}

}  // namespace oracle
