#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "shufcompat/permutation.hpp"
#include "shufcompat/shuffle.hpp"

namespace shufcompat {

/// Every statistic value is canonicalized to an ordered integer tuple;
/// set-valued statistics use the sorted position list.
using StatValue = std::vector<int>;

enum class ValueShape { scalar, tuple, set };

struct StatisticDescriptor {
  std::string name;
  ValueShape shape = ValueShape::scalar;
  std::function<StatValue(std::span<const int>)> evaluate;
  /// Declared property: the value depends only on (Des(w), |w|).
  bool descent_statistic = false;
  std::string summary;

  StatValue operator()(std::span<const int> w) const { return evaluate(w); }
  StatValue operator()(const Permutation& p) const { return evaluate(p.word()); }
};

/// des, maj, pk, epk, udr, bir, Des, maj_des, udr_pk, udr_pk_des, first.
const std::vector<StatisticDescriptor>& registered_statistics();
/// Throws std::invalid_argument for an unknown name.
const StatisticDescriptor& find_statistic(std::string_view name);

/// "3", "(4,2,5)", "{1,2,6}".
std::string format_value(ValueShape shape, const StatValue& value);

/// Multiset of statistic values, kept sorted by value so equality and
/// serialization are exact.
class Distribution {
 public:
  void add(const StatValue& value, std::uint64_t multiplicity = 1);
  void merge(const Distribution& other);

  std::uint64_t total() const;
  std::uint64_t multiplicity(const StatValue& value) const;
  const std::map<StatValue, std::uint64_t>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  /// "value:multiplicity" pairs separated by single spaces.
  std::string to_string(ValueShape shape) const;
  /// 64-bit FNV-1a over the canonical serialization, as 16 hex digits.
  std::string digest() const;

  friend bool operator==(const Distribution&, const Distribution&) = default;

 private:
  std::map<StatValue, std::uint64_t> entries_;
};

/// st(S(pi, sigma)).
Distribution distribution(const StatisticDescriptor& st, const Permutation& pi,
                          const Permutation& sigma, EnumerationLimits limits = {});

}  // namespace shufcompat
