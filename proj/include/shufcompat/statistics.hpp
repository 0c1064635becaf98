#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "shufcompat/permutation.hpp"

namespace shufcompat {

/// Birun decomposition: lengths (t_1, ..., t_b) of the maximal monotone
/// runs, left to right. Adjacent biruns share one entry, so
/// sum(t_r - 1) = n - 1. chi_plus = 1 iff the first birun decreases.
struct RunProfile {
  std::vector<int> lengths;
  int chi_plus = 0;

  int biruns() const { return static_cast<int>(lengths.size()); }
  /// 1-based: direction of the r-th birun.
  bool increasing(int r) const { return ((r % 2) == 1) == (chi_plus == 0); }
  /// 1-based position in the word where birun r starts / ends.
  int start(int r) const;
  int end(int r) const { return start(r) + lengths[r - 1] - 1; }

  friend bool operator==(const RunProfile&, const RunProfile&) = default;
  friend auto operator<=>(const RunProfile&, const RunProfile&) = default;
};

struct DescentStats {
  PositionSet des_set;
  int des = 0;
  int maj = 0;
};

struct PeakStats {
  PositionSet pk_set;
  int pk = 0;
  int epk = 0;
};

struct StatBundle {
  PositionSet des_set;
  int des = 0;
  int maj = 0;
  PositionSet pk_set;
  int pk = 0;
  int epk = 0;
  int bir = 0;
  int udr = 0;
  int chi_plus = 0;
  int chi_minus = 0;
};

// Word-level statistics. These accept any word of distinct integers,
// including the empty word (every count is 0 there), and are what the
// shuffle sweeps and the decomposition identities evaluate on sub-words.
namespace word {

PositionSet descent_set(std::span<const int> w);
int des(std::span<const int> w);
int maj(std::span<const int> w);
PositionSet peak_set(std::span<const int> w);
int pk(std::span<const int> w);
/// Peaks of 0 w 0, the sentinel 0 being smaller than every entry.
int epk(std::span<const int> w);
/// Biruns of 0 w.
int udr(std::span<const int> w);
int bir(std::span<const int> w);
/// 1 iff w_1 > w_2. Zero for words shorter than 2.
int chi_plus(std::span<const int> w);
/// 1 iff w_{n-1} < w_n. Zero for words shorter than 2.
int chi_minus(std::span<const int> w);
RunProfile run_profile(std::span<const int> w);

}  // namespace word

DescentStats descent_stats(const Permutation& p);
PeakStats peak_stats(const Permutation& p);
RunProfile run_profile(const Permutation& p);
int udr(const Permutation& p);
StatBundle stat_bundle(const Permutation& p);

/// udr from pk and the end indicators, valid for n >= 2:
/// 2pk, 2pk+1, 2pk+2, 2pk+3 for (chi+, chi-) = (0,0), (0,1), (1,0), (1,1).
int udr_from_peaks(int pk, int chi_plus, int chi_minus);

/// "chi_plus;t1,t2,..."
std::string format_profile(const RunProfile& profile);
RunProfile parse_profile(std::string_view text);

/// "{1,2,6}", "{}" for the empty set.
std::string format_positions(const PositionSet& positions);

}  // namespace shufcompat
