#include "shufcompat/statistics.hpp"

#include <charconv>
#include <numeric>

#include "shufcompat/error.hpp"

namespace shufcompat {

int RunProfile::start(int r) const {
  int pos = 1;
  for (int k = 1; k < r; ++k) pos += lengths[k - 1] - 1;
  return pos;
}

namespace word {

namespace {

// Visits each adjacent pair of w as an up (true) or down (false) step.
template <typename Visit>
void for_each_step(std::span<const int> w, Visit&& visit) {
  for (std::size_t k = 0; k + 1 < w.size(); ++k) visit(w[k] < w[k + 1]);
}

}  // namespace

PositionSet descent_set(std::span<const int> w) {
  PositionSet out;
  for (std::size_t k = 0; k + 1 < w.size(); ++k) {
    if (w[k] > w[k + 1]) out.push_back(static_cast<int>(k) + 1);
  }
  return out;
}

int des(std::span<const int> w) {
  int count = 0;
  for (std::size_t k = 0; k + 1 < w.size(); ++k) count += w[k] > w[k + 1];
  return count;
}

int maj(std::span<const int> w) {
  int sum = 0;
  for (std::size_t k = 0; k + 1 < w.size(); ++k) {
    if (w[k] > w[k + 1]) sum += static_cast<int>(k) + 1;
  }
  return sum;
}

PositionSet peak_set(std::span<const int> w) {
  PositionSet out;
  for (std::size_t k = 1; k + 1 < w.size(); ++k) {
    if (w[k - 1] < w[k] && w[k] > w[k + 1]) out.push_back(static_cast<int>(k) + 1);
  }
  return out;
}

int pk(std::span<const int> w) {
  int count = 0;
  for (std::size_t k = 1; k + 1 < w.size(); ++k) {
    count += w[k - 1] < w[k] && w[k] > w[k + 1];
  }
  return count;
}

int epk(std::span<const int> w) {
  if (w.empty()) return 0;
  // 0 w 0: a peak is an up step followed by a down step.
  bool previous_up = true;
  int count = 0;
  for_each_step(w, [&](bool up) {
    count += previous_up && !up;
    previous_up = up;
  });
  return count + (previous_up ? 1 : 0);
}

int udr(std::span<const int> w) {
  if (w.empty()) return 0;
  bool previous_up = true;
  int runs = 1;
  for_each_step(w, [&](bool up) {
    runs += up != previous_up;
    previous_up = up;
  });
  return runs;
}

int bir(std::span<const int> w) {
  if (w.empty()) return 0;
  if (w.size() == 1) return 1;
  return static_cast<int>(run_profile(w).lengths.size());
}

int chi_plus(std::span<const int> w) {
  return w.size() >= 2 && w[0] > w[1] ? 1 : 0;
}

int chi_minus(std::span<const int> w) {
  const auto n = w.size();
  return n >= 2 && w[n - 2] < w[n - 1] ? 1 : 0;
}

RunProfile run_profile(std::span<const int> w) {
  RunProfile profile;
  if (w.empty()) return profile;
  if (w.size() == 1) {
    profile.lengths = {1};
    return profile;
  }
  bool up = w[0] < w[1];
  profile.chi_plus = up ? 0 : 1;
  int current = 2;
  for (std::size_t k = 1; k + 1 < w.size(); ++k) {
    const bool next_up = w[k] < w[k + 1];
    if (next_up == up) {
      ++current;
    } else {
      profile.lengths.push_back(current);
      current = 2;
      up = next_up;
    }
  }
  profile.lengths.push_back(current);
  return profile;
}

}  // namespace word

namespace {

void require_nonempty(const Permutation& p) {
  if (p.empty()) {
    throw PreconditionError("statistics are undefined on the empty permutation");
  }
}

}  // namespace

DescentStats descent_stats(const Permutation& p) {
  require_nonempty(p);
  DescentStats out;
  out.des_set = word::descent_set(p.word());
  out.des = static_cast<int>(out.des_set.size());
  out.maj = std::accumulate(out.des_set.begin(), out.des_set.end(), 0);
  return out;
}

PeakStats peak_stats(const Permutation& p) {
  require_nonempty(p);
  PeakStats out;
  out.pk_set = word::peak_set(p.word());
  out.pk = static_cast<int>(out.pk_set.size());
  out.epk = word::epk(p.word());
  return out;
}

RunProfile run_profile(const Permutation& p) {
  require_nonempty(p);
  return word::run_profile(p.word());
}

int udr(const Permutation& p) {
  require_nonempty(p);
  return word::udr(p.word());
}

StatBundle stat_bundle(const Permutation& p) {
  require_nonempty(p);
  StatBundle out;
  auto descents = descent_stats(p);
  auto peaks = peak_stats(p);
  out.des_set = std::move(descents.des_set);
  out.des = descents.des;
  out.maj = descents.maj;
  out.pk_set = std::move(peaks.pk_set);
  out.pk = peaks.pk;
  out.epk = peaks.epk;
  out.bir = word::bir(p.word());
  out.udr = word::udr(p.word());
  out.chi_plus = word::chi_plus(p.word());
  out.chi_minus = word::chi_minus(p.word());
  return out;
}

int udr_from_peaks(int pk, int chi_plus, int chi_minus) {
  return 2 * pk + 2 * chi_plus + chi_minus;
}

std::string format_profile(const RunProfile& profile) {
  std::string out = std::to_string(profile.chi_plus) + ";";
  for (std::size_t k = 0; k < profile.lengths.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(profile.lengths[k]);
  }
  return out;
}

RunProfile parse_profile(std::string_view text) {
  const auto semi = text.find(';');
  if (semi == std::string_view::npos) {
    throw std::invalid_argument("profile must look like \"chi_plus;t1,t2,...\"");
  }
  auto parse_int = [&](std::string_view token) {
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw std::invalid_argument("bad integer in profile: \"" +
                                  std::string(token) + "\"");
    }
    return value;
  };
  RunProfile profile;
  profile.chi_plus = parse_int(text.substr(0, semi));
  if (profile.chi_plus != 0 && profile.chi_plus != 1) {
    throw std::invalid_argument("chi_plus must be 0 or 1");
  }
  auto rest = text.substr(semi + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    profile.lengths.push_back(parse_int(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return profile;
}

std::string format_positions(const PositionSet& positions) {
  std::string out = "{";
  for (std::size_t k = 0; k < positions.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(positions[k]);
  }
  return out + "}";
}

}  // namespace shufcompat
