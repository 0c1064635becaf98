#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "shufcompat/error.hpp"
#include "shufcompat/permutation.hpp"

namespace shufcompat {

/// Enumeration refuses n + m above max_length unless it is raised.
struct EnumerationLimits {
  std::size_t max_length = 22;
};

/// Interleaving mask for a shuffle of pi (|pi| = n) and sigma (|sigma| = m):
/// slot k of the shuffle comes from pi iff from_sigma[k] == 0.
struct ShufflePattern {
  std::vector<std::uint8_t> from_sigma;

  std::size_t length() const { return from_sigma.size(); }
  std::size_t pi_slots() const;

  std::vector<int> interleave(std::span<const int> pi,
                              std::span<const int> sigma) const;

  friend bool operator==(const ShufflePattern&, const ShufflePattern&) = default;
  friend auto operator<=>(const ShufflePattern&, const ShufflePattern&) = default;
};

/// C(n + m, n). Throws std::overflow_error past 64 bits.
std::uint64_t shuffle_count(std::size_t n, std::size_t m);

/// Single-consumer stream over S(pi, sigma). Order is lexicographic in the
/// mask word (pi slot = 0 first), so pi.sigma comes first and sigma.pi last.
class ShuffleStream {
 public:
  ShuffleStream(Permutation pi, Permutation sigma,
                EnumerationLimits limits = {});

  std::optional<Permutation> next();
  /// Pattern of the shuffle the next call to next() will return.
  const ShufflePattern& pattern() const { return pattern_; }
  bool done() const { return done_; }

 private:
  Permutation pi_;
  Permutation sigma_;
  ShufflePattern pattern_;
  bool done_ = false;
};

namespace detail {
bool advance_mask(std::vector<std::uint8_t>& mask);
void check_shuffle_args(const Permutation& pi, const Permutation& sigma,
                        EnumerationLimits limits);
}  // namespace detail

/// Calls visit(std::span<const int> tau) for every shuffle, in stream order.
/// The span is only valid during the call.
template <typename Visit>
void for_each_shuffle(const Permutation& pi, const Permutation& sigma,
                      Visit&& visit, EnumerationLimits limits = {}) {
  detail::check_shuffle_args(pi, sigma, limits);
  const std::size_t n = pi.size();
  const std::size_t total = n + sigma.size();
  std::vector<std::uint8_t> mask(total, 0);
  for (std::size_t k = n; k < total; ++k) mask[k] = 1;
  std::vector<int> tau(total);
  do {
    std::size_t a = 0;
    std::size_t b = 0;
    for (std::size_t k = 0; k < total; ++k) {
      tau[k] = mask[k] ? sigma[b++] : pi[a++];
    }
    visit(std::span<const int>(tau));
  } while (detail::advance_mask(mask));
}

std::vector<Permutation> enumerate_shuffles(const Permutation& pi,
                                            const Permutation& sigma,
                                            EnumerationLimits limits = {});

/// S_k(pi, sigma): the shuffles with exactly k descents.
std::vector<Permutation> filter_by_descent_count(const Permutation& pi,
                                                 const Permutation& sigma,
                                                 int k,
                                                 EnumerationLimits limits = {});

/// True iff needle occurs in hay as a (not necessarily contiguous) subsequence.
bool is_subsequence(std::span<const int> needle, std::span<const int> hay);

}  // namespace shufcompat
