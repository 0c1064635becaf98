#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include "shufcompat/canonical.hpp"
#include "shufcompat/distribution.hpp"
#include "shufcompat/error.hpp"
#include "shufcompat/phi.hpp"
#include "shufcompat/qpoly.hpp"
#include "shufcompat/shuffle.hpp"
#include "shufcompat/statistics.hpp"
#include "shufcompat/verify.hpp"

namespace shufcompat::cli {

namespace {

using nlohmann::ordered_json;

constexpr std::size_t kDefaultStreamLimit = 14;
constexpr std::size_t kForcedStreamLimit = 64;

struct Flags {
  bool json = false;
  bool force = false;
};

EnumerationLimits limits(const Flags& flags) {
  return {flags.force ? kForcedStreamLimit : kDefaultStreamLimit};
}

ordered_json positions_json(const PositionSet& s) { return ordered_json(s); }

ordered_json polynomial_json(const QPolynomial& p) {
  auto out = ordered_json::array();
  for (const auto& [d, c] : p.terms()) out.push_back({d, c});
  return out;
}

int cmd_stats(const Flags& flags, const std::string& text, std::ostream& out) {
  const auto p = parse_permutation(text);
  const auto s = stat_bundle(p);
  const auto profile = run_profile(p);
  if (flags.json) {
    ordered_json j;
    j["word"] = to_string(p);
    j["n"] = p.size();
    j["des_set"] = positions_json(s.des_set);
    j["des"] = s.des;
    j["maj"] = s.maj;
    j["pk_set"] = positions_json(s.pk_set);
    j["pk"] = s.pk;
    j["epk"] = s.epk;
    j["bir"] = s.bir;
    j["udr"] = s.udr;
    j["chi_plus"] = s.chi_plus;
    j["chi_minus"] = s.chi_minus;
    j["type"] = profile.lengths;
    j["profile"] = format_profile(profile);
    out << j.dump(2) << '\n';
    return kExitPass;
  }
  out << "word=" << to_string(p) << '\n'
      << "n=" << p.size() << '\n'
      << "des_set=" << format_positions(s.des_set) << '\n'
      << "des=" << s.des << '\n'
      << "maj=" << s.maj << '\n'
      << "pk_set=" << format_positions(s.pk_set) << '\n'
      << "pk=" << s.pk << '\n'
      << "epk=" << s.epk << '\n'
      << "bir=" << s.bir << '\n'
      << "udr=" << s.udr << '\n'
      << "chi_plus=" << s.chi_plus << '\n'
      << "chi_minus=" << s.chi_minus << '\n'
      << "type=" << format_value(ValueShape::tuple, profile.lengths) << '\n'
      << "profile=" << format_profile(profile) << '\n';
  return kExitPass;
}

int cmd_shuffles(const Flags& flags, const std::string& a, const std::string& b,
                 std::ostream& out) {
  const auto pi = parse_permutation(a);
  const auto sigma = parse_permutation(b);
  if (flags.json) {
    auto words = ordered_json::array();
    for_each_shuffle(
        pi, sigma, [&](std::span<const int> tau) { words.push_back(format_word(tau)); },
        limits(flags));
    ordered_json j;
    j["pi"] = to_string(pi);
    j["sigma"] = to_string(sigma);
    j["count"] = words.size();
    j["shuffles"] = std::move(words);
    out << j.dump(2) << '\n';
    return kExitPass;
  }
  for_each_shuffle(
      pi, sigma, [&](std::span<const int> tau) { out << format_word(tau) << '\n'; },
      limits(flags));
  return kExitPass;
}

int cmd_dist(const Flags& flags, const std::string& stat, const std::string& a,
             const std::string& b, std::ostream& out) {
  const auto& st = find_statistic(stat);
  const auto pi = parse_permutation(a);
  const auto sigma = parse_permutation(b);
  const auto d = distribution(st, pi, sigma, limits(flags));
  if (flags.json) {
    ordered_json j;
    j["statistic"] = st.name;
    j["pi"] = to_string(pi);
    j["sigma"] = to_string(sigma);
    j["total"] = d.total();
    auto entries = ordered_json::array();
    for (const auto& [value, count] : d.entries()) {
      entries.push_back({{"value", format_value(st.shape, value)}, {"multiplicity", count}});
    }
    j["entries"] = std::move(entries);
    j["digest"] = d.digest();
    out << j.dump(2) << '\n';
    return kExitPass;
  }
  out << d.to_string(st.shape) << '\n';
  return kExitPass;
}

int cmd_verify(const Flags& flags, const std::string& stat, const VerifyOptions& options,
               std::ostream& out) {
  const auto& st = find_statistic(stat);
  const auto report = verify_shuffle_compatibility(st, options);
  if (flags.json) {
    out << report_to_json(report, st.shape) << '\n';
  } else {
    out << format_report(report, st.shape);
  }
  return report.passed ? kExitPass : kExitVerificationFailed;
}

int cmd_canonicalize(const Flags& flags, const std::string& text,
                     const std::string& sigma_text, std::ostream& out) {
  const auto p = parse_permutation(text);
  CanonicalBijection result;
  const bool with_sigma = !sigma_text.empty();
  if (with_sigma) {
    const auto sigma = parse_permutation(sigma_text);
    require_disjoint(p, sigma);
    detail::check_shuffle_args(p, sigma, limits(flags));
    result = canonicalize_with_bijection(p, sigma);
  } else {
    result.trace = canonicalize(p);
  }
  const auto& trace = result.trace;
  const auto c = classify(trace.final);
  const auto spec = require_canonical_spec(c.class_id, static_cast<int>(p.size()), c.k, c.d);
  if (flags.json) {
    ordered_json j;
    j["pi"] = to_string(p);
    auto steps = ordered_json::array();
    for (const auto& step : trace.steps) {
      steps.push_back({{"ell", step.ell},
                       {"src", to_string(step.source)},
                       {"dst", to_string(step.target)}});
    }
    j["steps"] = std::move(steps);
    j["final"] = to_string(trace.final);
    j["class"] = format_class_spec(spec);
    j["profile"] = format_profile(spec.profile);
    if (with_sigma) {
      j["sigma"] = sigma_text;
      auto mapping = ordered_json::array();
      for (const auto& [tau, image] : result.mapping) {
        mapping.push_back({to_string(tau), to_string(image)});
      }
      j["mapping"] = std::move(mapping);
    }
    out << j.dump(2) << '\n';
    return kExitPass;
  }
  out << format_trace(trace);
  out << "final=" << to_string(trace.final) << '\n'
      << "class=" << format_class_spec(spec) << '\n'
      << "profile=" << format_profile(spec.profile) << '\n';
  for (const auto& [tau, image] : result.mapping) {
    out << to_string(tau) << " -> " << to_string(image) << '\n';
  }
  return kExitPass;
}

int cmd_phi(const Flags& flags, int ell, const std::string& pi_text,
            const std::string& pi_prime_text, const std::string& tau_text,
            bool inverse, std::ostream& out) {
  const auto pi = parse_permutation(pi_text);
  const auto pi_prime = parse_permutation(pi_prime_text);
  const auto tau = parse_permutation(tau_text);
  const auto result = inverse ? phi_inverse(tau, pi, pi_prime, ell)
                              : phi_forward(tau, pi, pi_prime, ell);
  if (flags.json) {
    ordered_json j;
    j["ell"] = ell;
    j["direction"] = inverse ? "inverse" : "forward";
    j["input"] = to_string(tau);
    j["output"] = to_string(result);
    out << j.dump(2) << '\n';
    return kExitPass;
  }
  out << to_string(result) << '\n';
  return kExitPass;
}

int cmd_stanley(const Flags& flags, int eq, std::optional<int> k, const std::string& a,
                const std::string& b, std::ostream& out) {
  const auto pi = parse_permutation(a);
  const auto sigma = parse_permutation(b);
  detail::check_shuffle_args(pi, sigma, limits(flags));
  if (eq != 1 && eq != 2) throw std::invalid_argument("--eq must be 1 or 2");
  std::vector<std::pair<std::optional<int>, IdentityCheck>> checks;
  if (eq == 1) {
    checks.emplace_back(std::nullopt, stanley_maj_check(pi, sigma));
  } else if (k) {
    checks.emplace_back(k, stanley_maj_des_check(pi, sigma, *k));
  } else {
    const int top = static_cast<int>(pi.size() + sigma.size());
    for (int kk = 0; kk < top; ++kk) {
      checks.emplace_back(kk, stanley_maj_des_check(pi, sigma, kk));
    }
  }
  bool all = true;
  for (const auto& c : checks) all = all && c.second.holds;
  if (flags.json) {
    ordered_json j;
    j["eq"] = eq;
    j["pi"] = to_string(pi);
    j["sigma"] = to_string(sigma);
    auto rows = ordered_json::array();
    for (const auto& [kk, c] : checks) {
      ordered_json row;
      if (kk) row["k"] = *kk;
      row["lhs"] = polynomial_json(c.lhs);
      row["rhs"] = polynomial_json(c.rhs);
      row["holds"] = c.holds;
      rows.push_back(std::move(row));
    }
    j["checks"] = std::move(rows);
    j["verdict"] = all ? "PASS" : "FAIL";
    out << j.dump(2) << '\n';
  } else {
    for (const auto& [kk, c] : checks) {
      if (kk) out << "k=" << *kk << ' ';
      out << "lhs=" << c.lhs.to_string() << '\n';
      if (kk) out << "k=" << *kk << ' ';
      out << "rhs=" << c.rhs.to_string() << '\n';
    }
    out << "verdict=" << (all ? "PASS" : "FAIL") << '\n';
  }
  return all ? kExitPass : kExitVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Permutation statistics and shuffle-compatibility checks", "shufcompat"};
  app.require_subcommand(1);
  Flags flags;
  app.add_flag("--json", flags.json, "Structured output");
  app.add_flag("--force", flags.force, "Lift the n+m <= 14 size guard");

  std::string word_a;
  std::string word_b;
  std::string stat;

  auto* stats = app.add_subcommand("stats", "Statistics and run profile of one permutation");
  stats->add_option("perm", word_a, "Permutation, e.g. \"6 5 3 4 7 9 2\"")->required();

  auto* shuffles = app.add_subcommand("shuffles", "List S(pi, sigma)");
  shuffles->add_option("pi", word_a)->required();
  shuffles->add_option("sigma", word_b)->required();

  auto* dist = app.add_subcommand("dist", "Distribution of a statistic over S(pi, sigma)");
  dist->add_option("--stat", stat)->required();
  dist->add_option("pi", word_a)->required();
  dist->add_option("sigma", word_b)->required();

  VerifyOptions options;
  std::string mode = "reduced";
  auto* verify = app.add_subcommand("verify", "Exhaustive shuffle-compatibility sweep");
  verify->add_option("--stat", stat)->required();
  verify->add_option("--n", options.n_max)->required()->check(CLI::Range(1, 12));
  verify->add_option("--m", options.m_max)->required()->check(CLI::Range(1, 12));
  verify->add_option("--mode", mode)->check(CLI::IsMember({"full", "reduced"}));
  verify->add_option("--jobs", options.jobs)->check(CLI::Range(1u, 256u));
  verify->add_flag("--memo", options.memoize, "Cache distributions by descent-set pair");

  std::string sigma_option;
  auto* canon = app.add_subcommand("canonicalize", "Reduce to a canonical permutation");
  canon->add_option("perm", word_a)->required();
  canon->add_option("--sigma", sigma_option, "Also dump the composed bijection on S(pi, sigma)");

  int ell = 0;
  std::string pi_prime;
  std::string tau;
  bool inverse = false;
  auto* phi = app.add_subcommand("phi", "Apply phi_ell or its inverse to one shuffle");
  phi->add_option("--ell", ell)->required();
  phi->add_option("--pi", word_a)->required();
  phi->add_option("--pi-prime", pi_prime)->required();
  phi->add_option("--tau", tau)->required();
  phi->add_flag("--inverse", inverse);

  int eq = 1;
  std::optional<int> k;
  auto* stanley = app.add_subcommand("stanley", "Check the maj and (maj, des) shuffle identities");
  stanley->add_option("--eq", eq)->required()->check(CLI::IsMember({1, 2}));
  stanley->add_option("--k", k);
  stanley->add_option("pi", word_a)->required();
  stanley->add_option("sigma", word_b)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*stats) return cmd_stats(flags, word_a, out);
    if (*shuffles) return cmd_shuffles(flags, word_a, word_b, out);
    if (*dist) return cmd_dist(flags, stat, word_a, word_b, out);
    if (*verify) {
      options.mode = parse_verify_mode(mode);
      return cmd_verify(flags, stat, options, out);
    }
    if (*canon) return cmd_canonicalize(flags, word_a, sigma_option, out);
    if (*phi) return cmd_phi(flags, ell, word_a, pi_prime, tau, inverse, out);
    if (*stanley) return cmd_stanley(flags, eq, k, word_a, word_b, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace shufcompat::cli
