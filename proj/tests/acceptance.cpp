// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "shufcompat/canonical.hpp"
#include "shufcompat/distribution.hpp"
#include "shufcompat/phi.hpp"
#include "shufcompat/qpoly.hpp"
#include "shufcompat/shuffle.hpp"
#include "shufcompat/statistics.hpp"
#include "shufcompat/verify.hpp"

using namespace shufcompat;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  std::optional<double> limit_seconds;
  std::function<Outcome()> body;
};

Outcome fail(std::string detail) { return {false, std::move(detail)}; }

bool same_triple(const Permutation& a, const Permutation& b) {
  const auto s = stat_bundle(a);
  const auto t = stat_bundle(b);
  return s.udr == t.udr && s.pk == t.pk && s.des == t.des;
}

Outcome worked_example() {
  const auto d = distribution(find_statistic("des"), Permutation{3, 1}, Permutation{2, 4});
  const auto text = d.to_string(ValueShape::scalar);
  if (text != "1:3 2:3") return fail("got " + text);
  return {true, "des(S(31,24)) = " + text};
}

Outcome udr_case_formula() {
  std::size_t checked = 0;
  for (int n = 2; n <= 9; ++n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    do {
      const int lhs = word::udr(w);
      const int rhs = udr_from_peaks(word::pk(w), word::chi_plus(w), word::chi_minus(w));
      if (lhs != rhs) return fail("mismatch at " + format_word(w));
      ++checked;
    } while (std::next_permutation(w.begin(), w.end()));
  }
  return {true, std::to_string(checked) + " permutations"};
}

Outcome canonical_table() {
  std::size_t specs = 0;
  std::size_t members = 0;
  std::size_t empty_specs = 0;
  for (int n = 2; n <= 8; ++n) {
    std::map<RunProfile, std::vector<Permutation>> by_profile;
    for (auto& p : all_permutations(static_cast<std::size_t>(n))) {
      auto profile = run_profile(p);
      by_profile[std::move(profile)].push_back(std::move(p));
    }
    for (int c = 1; c <= 4; ++c) {
      const auto id = class_from_int(c);
      for (int k = 0; k <= n; ++k) {
        for (int d = 0; d < n; ++d) {
          const auto verdict = canonical_spec(id, n, k, d);
          if (!verdict.feasible()) continue;
          ++specs;
          const auto it = by_profile.find(verdict.spec->profile);
          if (it == by_profile.end()) {
            ++empty_specs;
            continue;
          }
          const PositionSet shared = descent_stats(it->second.front()).des_set;
          for (const auto& p : it->second) {
            const auto s = stat_bundle(p);
            const int expected_udr = 2 * k + (c - 1);
            const auto cls = classify(p);
            if (s.udr != expected_udr || s.pk != k || s.des != d || s.des_set != shared ||
                cls.class_id != id || !cls.is_canonical) {
              return fail("class " + std::to_string(c) + " member " + to_string(p));
            }
            ++members;
          }
        }
      }
    }
  }
  std::ostringstream os;
  os << specs << " feasible specs (" << empty_specs << " without members), " << members
     << " members";
  return {true, os.str()};
}

Outcome figure_goldens() {
  const Permutation pi1{6, 3, 5, 1, 2, 7, 4};
  const Permutation pr1{6, 1, 4, 5, 2, 7, 3};
  const Permutation tau1{6, 3, 11, 8, 5, 9, 1, 2, 7, 10, 4};
  const Permutation img1{6, 1, 4, 11, 8, 5, 9, 2, 7, 10, 3};
  const Permutation pi2{7, 4, 2, 6, 3, 1, 5};
  const Permutation pr2{7, 4, 3, 2, 6, 1, 5};
  const Permutation tau2{11, 7, 4, 8, 2, 10, 6, 3, 9, 12, 1, 5};
  const Permutation img2{11, 7, 4, 8, 3, 10, 2, 9, 12, 6, 1, 5};
  if (phi_forward(tau1, pi1, pr1, 4) != img1) return fail("golden 1 forward");
  if (phi_forward(tau2, pi2, pr2, 3) != img2) return fail("golden 2 forward");
  if (phi_inverse(img1, pi1, pr1, 4) != tau1) return fail("golden 1 inverse");
  if (phi_inverse(img2, pi2, pr2, 3) != tau2) return fail("golden 2 inverse");
  return {true, "both examples, forward and inverse"};
}

Outcome phi_exhaustive() {
  std::size_t instances = 0;
  std::size_t shuffles = 0;
  std::map<DecompositionCase, std::size_t> identity_cases;
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& p : all_permutations(n)) {
      const auto profile = run_profile(p);
      for (int ell = 3; ell <= profile.biruns(); ++ell) {
        if (profile.lengths[ell - 1] < 3) continue;
        const auto q = omega_rep(p, ell);
        for (std::size_t m = 1; m <= 3; ++m) {
          for (const auto& sigma : all_permutations(m, static_cast<int>(n))) {
            const auto targets = enumerate_shuffles(q, sigma);
            const std::set<Permutation> target_set(targets.begin(), targets.end());
            std::set<Permutation> images;
            for (const auto& tau : enumerate_shuffles(p, sigma)) {
              const auto image = phi_forward(tau, p, q, ell);
              if (!target_set.count(image) || !same_triple(tau, image) ||
                  phi_inverse(image, p, q, ell) != tau) {
                return fail("tau " + to_string(tau) + " pi " + to_string(p));
              }
              const auto check = check_case_decomposition_identities(tau, p, ell);
              if (!check.holds) return fail("identity at tau " + to_string(tau));
              if (check.applicable) ++identity_cases[check.decomposition_case];
              images.insert(image);
              ++shuffles;
            }
            if (images.size() != target_set.size()) return fail("not onto");
            ++instances;
          }
        }
      }
    }
  }
  std::ostringstream os;
  os << instances << " (pi, ell, sigma) instances, " << shuffles << " shuffles, identities "
     << "(i)=" << identity_cases[DecompositionCase::i] << " (iv)=" << identity_cases[DecompositionCase::iv];
  return {true, os.str()};
}

Outcome canonicalization_exhaustive() {
  std::size_t pairs = 0;
  std::size_t max_steps = 0;
  for (std::size_t n = 2; n <= 5; ++n) {
    for (const auto& p : all_permutations(n)) {
      const int potential = reduction_potential(run_profile(p));
      for (std::size_t m = 1; m <= 3; ++m) {
        for (const auto& sigma : all_permutations(m, static_cast<int>(n))) {
          const auto result = canonicalize_with_bijection(p, sigma);
          const auto steps = result.trace.steps.size();
          if (2 * static_cast<int>(steps) > potential) return fail("step bound at " + to_string(p));
          if (!classify(result.trace.final).is_canonical) return fail("not canonical");
          const auto targets = enumerate_shuffles(result.trace.final, sigma);
          const std::set<Permutation> target_set(targets.begin(), targets.end());
          std::set<Permutation> images;
          for (const auto& [tau, image] : result.mapping) {
            if (!target_set.count(image) || !same_triple(tau, image)) {
              return fail("mapping at " + to_string(tau));
            }
            images.insert(image);
          }
          if (images.size() != target_set.size() ||
              result.mapping.size() != target_set.size()) {
            return fail("not a bijection for " + to_string(p));
          }
          max_steps = std::max(max_steps, steps);
          ++pairs;
        }
      }
    }
  }
  return {true, std::to_string(pairs) + " pairs, at most " + std::to_string(max_steps) +
                    " steps"};
}

Outcome verify_grid() {
  struct Run {
    const char* stat;
    bool memo;
    bool expect_pass;
  };
  const std::vector<Run> runs{{"udr_pk_des", true, true}, {"Des", false, true},
                              {"udr_pk", true, true},     {"maj", true, true},
                              {"maj_des", true, true},    {"bir", true, false}};
  const std::vector<std::pair<int, int>> sweeps{{4, 4}, {5, 3}};
  std::ostringstream os;
  for (const auto& r : runs) {
    const auto& st = find_statistic(r.stat);
    bool passed = true;
    std::optional<Counterexample> witness;
    for (const auto& [n, m] : sweeps) {
      VerifyOptions options;
      options.mode = VerifyMode::reduced;
      options.n_max = n;
      options.m_max = m;
      options.jobs = std::max(1u, std::thread::hardware_concurrency());
      options.memoize = r.memo;
      const auto report = verify_shuffle_compatibility(st, options);
      if (!report.passed) {
        passed = false;
        witness = report.counterexample;
        break;
      }
    }
    if (passed != r.expect_pass) return fail(std::string(r.stat) + " unexpected verdict");
    if (!passed) {
      if (!witness) return fail(std::string(r.stat) + " failed without a witness");
      os << r.stat << " fails at (" << to_string(witness->pi) << ", "
         << to_string(witness->pi_prime) << ", " << to_string(witness->sigma) << ")";
    } else {
      os << r.stat << " ok; ";
    }
  }
  return {true, os.str()};
}

Outcome stanley_exhaustive() {
  std::size_t pairs = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::size_t m = 1; n + m <= 7; ++m) {
      for (const auto& pi : all_permutations(n)) {
        for (const auto& sigma : all_permutations(m, static_cast<int>(n))) {
          const auto eq1 = stanley_maj_check(pi, sigma);
          if (!eq1.holds) return fail("eq 1 at " + to_string(pi) + " | " + to_string(sigma));
          QPolynomial summed;
          for (int k = 0; k < static_cast<int>(n + m); ++k) {
            const auto eq2 = stanley_maj_des_check(pi, sigma, k);
            if (!eq2.holds) return fail("eq 2 at k=" + std::to_string(k));
            summed += eq2.rhs;
          }
          if (summed != eq1.rhs) return fail("sum over k at " + to_string(pi));
          ++pairs;
        }
      }
    }
  }
  return {true, std::to_string(pairs) + " pairs"};
}

Outcome descent_round_trip() {
  std::size_t sets = 0;
  for (int n = 1; n <= 10; ++n) {
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
      PositionSet d;
      for (int i = 1; i < n; ++i) {
        if (mask & (1u << (i - 1))) d.push_back(i);
      }
      if (descent_stats(perm_with_descents(n, d)).des_set != d) {
        return fail("n=" + std::to_string(n) + " D=" + format_positions(d));
      }
      ++sets;
    }
  }
  return {true, std::to_string(sets) + " descent sets"};
}

std::string format_seconds(double s) {
  char buf[32];
  if (s < 1.0) {
    std::snprintf(buf, sizeof buf, "%.3f ms", s * 1e3);
  } else {
    std::snprintf(buf, sizeof buf, "%.2f s", s);
  }
  return buf;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "worked des example", 1e-3, worked_example},
      {2, "udr case formula, n <= 9", 10.0, udr_case_formula},
      {3, "canonical class table, n <= 8", 30.0, canonical_table},
      {4, "phi golden examples", 1e-3, figure_goldens},
      {5, "phi bijection, n <= 5, m <= 3", 300.0, phi_exhaustive},
      {6, "canonicalization bijection, n <= 5, m <= 3", std::nullopt,
       canonicalization_exhaustive},
      {7, "shuffle-compatibility sweeps", 600.0, verify_grid},
      {8, "maj and (maj, des) identities, n + m <= 7", 120.0, stanley_exhaustive},
      {9, "perm_with_descents round trip, n <= 10", 1.0, descent_round_trip},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome outcome;
    try {
      outcome = c.body();
    } catch (const std::exception& e) {
      outcome = fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    std::string timing = format_seconds(seconds);
    if (c.limit_seconds) {
      timing += " / limit " + format_seconds(*c.limit_seconds);
      if (seconds > *c.limit_seconds) {
        outcome.ok = false;
        outcome.detail += " [over time limit]";
      }
    }
    if (!outcome.ok) ++failures;
    std::printf("criterion %d %s  %s: %s (%s)\n", c.id, outcome.ok ? "PASS" : "FAIL",
                c.title.c_str(), outcome.detail.c_str(), timing.c_str());
    std::fflush(stdout);
  }
  std::printf("%s\n", failures == 0 ? "ALL PASS" : "SOME FAILED");
  return failures == 0 ? 0 : 1;
}
