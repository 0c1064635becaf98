#include "shufcompat/shuffle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "shufcompat/statistics.hpp"

namespace shufcompat {

std::size_t ShufflePattern::pi_slots() const {
  return static_cast<std::size_t>(
      std::count(from_sigma.begin(), from_sigma.end(), std::uint8_t{0}));
}

std::vector<int> ShufflePattern::interleave(std::span<const int> pi,
                                            std::span<const int> sigma) const {
  if (pi_slots() != pi.size() || length() != pi.size() + sigma.size()) {
    throw PreconditionError("pattern does not match word lengths");
  }
  std::vector<int> tau;
  tau.reserve(length());
  std::size_t a = 0;
  std::size_t b = 0;
  for (auto bit : from_sigma) tau.push_back(bit ? sigma[b++] : pi[a++]);
  return tau;
}

std::uint64_t shuffle_count(std::size_t n, std::size_t m) {
  // C(n+i, i) for i = 1..m, exact at every step.
  std::uint64_t c = 1;
  for (std::size_t i = 1; i <= m; ++i) {
    std::uint64_t product = 0;
    if (__builtin_mul_overflow(c, static_cast<std::uint64_t>(n + i), &product)) {
      throw std::overflow_error("shuffle count exceeds 64 bits");
    }
    c = product / i;
  }
  return c;
}

namespace detail {

bool advance_mask(std::vector<std::uint8_t>& mask) {
  return std::next_permutation(mask.begin(), mask.end());
}

void check_shuffle_args(const Permutation& pi, const Permutation& sigma,
                        EnumerationLimits limits) {
  require_disjoint(pi, sigma);
  const auto total = pi.size() + sigma.size();
  if (total == 0) {
    throw PreconditionError("shuffle of two empty permutations");
  }
  if (total > limits.max_length) {
    throw PreconditionError("n + m = " + std::to_string(total) +
                            " exceeds the enumeration limit " +
                            std::to_string(limits.max_length));
  }
}

}  // namespace detail

ShuffleStream::ShuffleStream(Permutation pi, Permutation sigma,
                             EnumerationLimits limits)
    : pi_(std::move(pi)), sigma_(std::move(sigma)) {
  detail::check_shuffle_args(pi_, sigma_, limits);
  pattern_.from_sigma.assign(pi_.size() + sigma_.size(), 0);
  std::fill(pattern_.from_sigma.begin() + static_cast<std::ptrdiff_t>(pi_.size()),
            pattern_.from_sigma.end(), std::uint8_t{1});
}

std::optional<Permutation> ShuffleStream::next() {
  if (done_) return std::nullopt;
  auto tau = Permutation::trusted(pattern_.interleave(pi_.word(), sigma_.word()));
  done_ = !detail::advance_mask(pattern_.from_sigma);
  return tau;
}

std::vector<Permutation> enumerate_shuffles(const Permutation& pi,
                                            const Permutation& sigma,
                                            EnumerationLimits limits) {
  std::vector<Permutation> out;
  for_each_shuffle(
      pi, sigma,
      [&](std::span<const int> tau) {
        out.push_back(Permutation::trusted({tau.begin(), tau.end()}));
      },
      limits);
  return out;
}

std::vector<Permutation> filter_by_descent_count(const Permutation& pi,
                                                 const Permutation& sigma,
                                                 int k,
                                                 EnumerationLimits limits) {
  std::vector<Permutation> out;
  for_each_shuffle(
      pi, sigma,
      [&](std::span<const int> tau) {
        if (word::des(tau) == k) {
          out.push_back(Permutation::trusted({tau.begin(), tau.end()}));
        }
      },
      limits);
  return out;
}

bool is_subsequence(std::span<const int> needle, std::span<const int> hay) {
  std::size_t k = 0;
  for (int v : hay) {
    if (k < needle.size() && needle[k] == v) ++k;
  }
  return k == needle.size();
}

}  // namespace shufcompat
