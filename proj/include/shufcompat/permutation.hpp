#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace shufcompat {

/// Sorted list of 1-based positions (descent sets, peak sets).
using PositionSet = std::vector<int>;

/// A linear order of distinct positive integers, pi_1 pi_2 ... pi_n.
///
/// The empty word is representable (it is the sigma of a trivial shuffle)
/// but every statistic operation rejects it.
class Permutation {
 public:
  Permutation() = default;

  /// Throws InvalidPermutation on a duplicate or non-positive entry.
  explicit Permutation(std::vector<int> values);
  Permutation(std::initializer_list<int> values);

  /// Skips validation. Only for words produced by the library itself
  /// (shuffles, relabelings) whose distinctness is known.
  static Permutation trusted(std::vector<int> values);

  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }

  /// 1-based access, matching the pi_i indexing used throughout.
  int at(std::size_t position) const;
  int operator[](std::size_t index) const { return values_[index]; }

  std::span<const int> word() const { return values_; }
  const std::vector<int>& values() const { return values_; }

  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }

  /// True iff the ground set is exactly {1, ..., n}.
  bool is_standard() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> values_;
};

Permutation from_word(std::span<const int> values);

/// The order-isomorphic permutation of [n]. Throws on duplicates.
Permutation standardize(std::span<const int> values);

/// Parses whitespace-separated decimal integers, e.g. "2 5 7 9 6 4 3 1 10 8".
Permutation parse_permutation(std::string_view text);

/// Inverse of parse_permutation: entries joined by single spaces.
std::string to_string(const Permutation& p);
std::string format_word(std::span<const int> word);

/// {1..n} in increasing order.
Permutation identity(std::size_t n);

/// Throws InvalidPermutation unless the ground sets of a and b are disjoint.
void require_disjoint(const Permutation& a, const Permutation& b);

/// Every permutation of [n] in lexicographic order.
std::vector<Permutation> all_permutations(std::size_t n);

/// Every permutation of [n]+offset = {offset+1, ..., offset+n}, lexicographic.
std::vector<Permutation> all_permutations(std::size_t n, int offset);

}  // namespace shufcompat
