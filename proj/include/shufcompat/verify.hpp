#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shufcompat/distribution.hpp"
#include "shufcompat/permutation.hpp"

namespace shufcompat {

struct DescentStatisticCheck {
  bool holds = true;
  /// Two permutations of equal length and descent set with different values.
  std::optional<std::pair<Permutation, Permutation>> witness;
};

/// Exhaustive over L([n]) for 1 <= n <= n_max.
DescentStatisticCheck is_descent_statistic(const StatisticDescriptor& st,
                                           int n_max);

enum class VerifyMode { full, reduced };

std::string to_string(VerifyMode mode);
VerifyMode parse_verify_mode(std::string_view text);

struct VerifyOptions {
  VerifyMode mode = VerifyMode::reduced;
  int n_max = 3;
  int m_max = 3;
  unsigned jobs = 1;
  /// Reuse distributions across pairs with the same (Des(pi), Des(sigma)).
  /// Only sound once Des is known to be shuffle-compatible.
  bool memoize = false;
};

/// One equivalence class of pairs that must share a distribution.
/// Reduced mode: fixed (n, m, sigma), key = st(pi).
/// Full mode: fixed (n, m), key = st(pi), sigma_key = st(sigma).
struct GroupRecord {
  int n = 0;
  int m = 0;
  std::optional<Permutation> sigma;
  StatValue key;
  std::optional<StatValue> sigma_key;
  std::size_t size = 0;
  std::string digest;
};

struct Counterexample {
  int n = 0;
  int m = 0;
  Permutation pi;
  Permutation pi_prime;
  Permutation sigma;
  /// Equal to sigma in reduced mode.
  Permutation sigma_prime;
  Distribution first;
  Distribution second;
};

struct VerifyReport {
  std::string statistic;
  VerifyMode mode = VerifyMode::reduced;
  int n_max = 0;
  int m_max = 0;
  bool passed = true;
  std::vector<GroupRecord> groups;
  std::optional<Counterexample> counterexample;
  std::size_t pairs_checked = 0;
  std::size_t shuffles_evaluated = 0;
};

/// Sweeps pi in L([n]), sigma in L([n]+m) for 1 <= n <= n_max,
/// 1 <= m <= m_max. Reduced mode throws PreconditionError unless the
/// statistic is a verified descent statistic. The report is identical for
/// every value of options.jobs.
VerifyReport verify_shuffle_compatibility(const StatisticDescriptor& st,
                                          const VerifyOptions& options);

std::string format_report(const VerifyReport& report, ValueShape shape);
/// JSON text with stable field names.
std::string report_to_json(const VerifyReport& report, ValueShape shape);

}  // namespace shufcompat
