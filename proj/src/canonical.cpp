#include "shufcompat/canonical.hpp"

#include <algorithm>
#include <charconv>
#include <vector>

#include "shufcompat/error.hpp"

namespace shufcompat {

namespace {

int class_number(CanonicalClass c) { return static_cast<int>(c); }

}  // namespace

CanonicalClass class_from_int(int class_id) {
  if (class_id < 1 || class_id > 4) {
    throw PreconditionError("class id must be 1, 2, 3 or 4");
  }
  return static_cast<CanonicalClass>(class_id);
}

ClassSpecVerdict canonical_spec(CanonicalClass class_id, int n, int k, int d) {
  ClassSpecVerdict verdict;
  if (n < 2 || k < 0 || d < 0) {
    verdict.violation = "requires n >= 2 and k, d >= 0";
    return verdict;
  }
  int chi_plus = 0;
  int biruns = 0;
  int t1 = 0;
  int t2 = 0;
  switch (class_id) {
    case CanonicalClass::one:
      chi_plus = 0, biruns = 2 * k, t1 = n - d - k + 1, t2 = d - k + 2;
      break;
    case CanonicalClass::two:
      chi_plus = 0, biruns = 2 * k + 1, t1 = n - d - k, t2 = d - k + 2;
      break;
    case CanonicalClass::three:
      chi_plus = 1, biruns = 2 * k + 1, t1 = d - k + 1, t2 = n - d - k + 1;
      break;
    case CanonicalClass::four:
      chi_plus = 1, biruns = 2 * k + 2, t1 = d - k + 1, t2 = n - d - k;
      break;
  }
  if (biruns < 1) {
    verdict.violation = "class " + std::to_string(class_number(class_id)) +
                        " needs k >= 1";
    return verdict;
  }
  RunProfile profile;
  profile.chi_plus = chi_plus;
  if (biruns == 1) {
    if (t1 != n) {
      verdict.violation = "single birun needs t1 = n, got t1 = " + std::to_string(t1);
      return verdict;
    }
    profile.lengths = {n};
  } else {
    profile.lengths.assign(static_cast<std::size_t>(biruns), 2);
    profile.lengths[0] = t1;
    profile.lengths[1] = t2;
    if (t1 < 2) {
      verdict.violation = "t1 = " + std::to_string(t1) + " < 2";
      return verdict;
    }
    if (t2 < 2) {
      verdict.violation = "t2 = " + std::to_string(t2) + " < 2";
      return verdict;
    }
    int span = 0;
    for (int t : profile.lengths) span += t - 1;
    if (span != n - 1) {
      verdict.violation = "lengths cover " + std::to_string(span + 1) +
                          " entries, not " + std::to_string(n);
      return verdict;
    }
  }
  verdict.spec = CanonicalClassSpec{class_id, n, k, d, std::move(profile)};
  return verdict;
}

CanonicalClassSpec require_canonical_spec(CanonicalClass class_id, int n, int k,
                                          int d) {
  auto verdict = canonical_spec(class_id, n, k, d);
  if (!verdict.spec) {
    throw PreconditionError("class " + std::to_string(class_number(class_id)) +
                            " is empty for (n, k, d) = (" + std::to_string(n) +
                            ", " + std::to_string(k) + ", " + std::to_string(d) +
                            "): " + verdict.violation);
  }
  return *verdict.spec;
}

std::string format_class_spec(const CanonicalClassSpec& spec) {
  return std::to_string(class_number(spec.class_id)) + ":" +
         std::to_string(spec.n) + ":" + std::to_string(spec.k) + ":" +
         std::to_string(spec.d);
}

CanonicalClassSpec parse_class_spec(std::string_view text) {
  int fields[4];
  std::size_t pos = 0;
  for (int f = 0; f < 4; ++f) {
    auto colon = text.find(':', pos);
    if ((f < 3) == (colon == std::string_view::npos)) {
      throw std::invalid_argument("class spec must look like \"class:n:k:d\"");
    }
    auto token = text.substr(pos, colon == std::string_view::npos
                                      ? std::string_view::npos
                                      : colon - pos);
    auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), fields[f]);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw std::invalid_argument("bad integer in class spec");
    }
    pos = colon + 1;
  }
  return require_canonical_spec(class_from_int(fields[0]), fields[1], fields[2],
                                fields[3]);
}

void validate_profile(const RunProfile& profile, int n) {
  if (n < 1 || profile.lengths.empty()) {
    throw PreconditionError("profile must describe a nonempty word");
  }
  if (profile.chi_plus != 0 && profile.chi_plus != 1) {
    throw PreconditionError("chi_plus must be 0 or 1");
  }
  if (profile.lengths.size() == 1) {
    if (profile.lengths[0] != n) {
      throw PreconditionError("single birun must have length n");
    }
    if (n == 1 && profile.chi_plus != 0) {
      throw PreconditionError("a single entry has chi_plus 0");
    }
    return;
  }
  int span = 0;
  for (int t : profile.lengths) {
    if (t < 2) throw PreconditionError("birun lengths must be at least 2");
    span += t - 1;
  }
  if (span != n - 1) {
    throw PreconditionError("birun lengths do not cover " + std::to_string(n) +
                            " entries");
  }
}

PositionSet profile_to_descents(const RunProfile& profile, int n) {
  validate_profile(profile, n);
  PositionSet out;
  if (n == 1) return out;
  int pos = 1;
  for (int r = 1; r <= profile.biruns(); ++r) {
    const int t = profile.lengths[static_cast<std::size_t>(r - 1)];
    if (!profile.increasing(r)) {
      for (int q = pos; q < pos + t - 1; ++q) out.push_back(q);
    }
    pos += t - 1;
  }
  return out;
}

Permutation perm_with_descents(int n, const PositionSet& descents) {
  if (n < 1) throw PreconditionError("n must be at least 1");
  int previous = 0;
  for (int d : descents) {
    if (d <= previous || d >= n) {
      throw PreconditionError("descent set must be a sorted subset of [n-1]");
    }
    previous = d;
  }
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n));
  int top = n;
  int cut = 0;
  auto emit_block = [&](int length) {
    for (int v = top - length + 1; v <= top; ++v) out.push_back(v);
    top -= length;
  };
  for (int d : descents) {
    emit_block(d - cut);
    cut = d;
  }
  emit_block(n - cut);
  return Permutation::trusted(std::move(out));
}

Classification classify(const Permutation& p) {
  if (p.size() < 2) throw PreconditionError("classification needs n >= 2");
  const auto profile = word::run_profile(p.word());
  Classification out;
  out.k = word::pk(p.word());
  out.d = word::des(p.word());
  const bool even = profile.biruns() % 2 == 0;
  if (profile.chi_plus == 0) {
    out.class_id = even ? CanonicalClass::one : CanonicalClass::two;
  } else {
    out.class_id = even ? CanonicalClass::four : CanonicalClass::three;
  }
  const auto n = static_cast<int>(p.size());
  auto verdict = canonical_spec(out.class_id, n, out.k, out.d);
  out.is_canonical = verdict.spec && verdict.spec->profile == profile;
  return out;
}

OmegaMove omega_move(const RunProfile& source, int ell) {
  if (ell < 3 || ell > source.biruns()) {
    throw PreconditionError("ell = " + std::to_string(ell) +
                            " outside [3, " + std::to_string(source.biruns()) +
                            "]");
  }
  const auto at = static_cast<std::size_t>(ell - 1);
  if (source.lengths[at] < 3) {
    throw PreconditionError("birun " + std::to_string(ell) + " has length " +
                            std::to_string(source.lengths[at]) + " < 3");
  }
  OmegaMove move{ell, source, source};
  move.target.lengths[at] -= 1;
  move.target.lengths[at - 2] += 1;
  return move;
}

Permutation omega_rep(const Permutation& p, int ell) {
  if (p.empty()) throw PreconditionError("empty permutation");
  const auto n = static_cast<int>(p.size());
  const auto move = omega_move(word::run_profile(p.word()), ell);
  auto standard = perm_with_descents(n, profile_to_descents(move.target, n));
  std::vector<int> ground(p.begin(), p.end());
  std::sort(ground.begin(), ground.end());
  std::vector<int> out;
  out.reserve(ground.size());
  for (int rank : standard) out.push_back(ground[static_cast<std::size_t>(rank - 1)]);
  return Permutation::trusted(std::move(out));
}

bool in_omega(const Permutation& p, const Permutation& q, int ell) {
  if (p.size() != q.size() || p.size() < 2) return false;
  std::vector<int> a(p.begin(), p.end());
  std::vector<int> b(q.begin(), q.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) return false;
  const auto source = word::run_profile(p.word());
  if (ell < 3 || ell > source.biruns() ||
      source.lengths[static_cast<std::size_t>(ell - 1)] < 3) {
    return false;
  }
  return omega_move(source, ell).target == word::run_profile(q.word());
}

std::optional<int> next_reduction(const Permutation& p) {
  if (p.size() < 2) throw PreconditionError("reduction needs n >= 2");
  const auto profile = word::run_profile(p.word());
  for (int ell = profile.biruns(); ell >= 3; --ell) {
    if (profile.lengths[static_cast<std::size_t>(ell - 1)] >= 3) return ell;
  }
  return std::nullopt;
}

int reduction_potential(const RunProfile& profile) {
  int sum = 0;
  for (int ell = 3; ell <= profile.biruns(); ++ell) {
    sum += ell * profile.lengths[static_cast<std::size_t>(ell - 1)];
  }
  return sum;
}

}  // namespace shufcompat
