#include "shufcompat/verify.hpp"

#include <algorithm>
#include <map>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "parallel.hpp"
#include "shufcompat/error.hpp"
#include "shufcompat/statistics.hpp"

namespace shufcompat {

DescentStatisticCheck is_descent_statistic(const StatisticDescriptor& st,
                                           int n_max) {
  DescentStatisticCheck out;
  for (int n = 1; n <= n_max; ++n) {
    std::map<PositionSet, std::pair<Permutation, StatValue>> seen;
    for (auto& p : all_permutations(static_cast<std::size_t>(n))) {
      auto value = st(p);
      auto descents = word::descent_set(p.word());
      auto [it, inserted] = seen.try_emplace(std::move(descents), p, value);
      if (!inserted && it->second.second != value) {
        out.holds = false;
        out.witness = std::make_pair(it->second.first, p);
        return out;
      }
    }
  }
  return out;
}

std::string to_string(VerifyMode mode) {
  return mode == VerifyMode::full ? "full" : "reduced";
}

VerifyMode parse_verify_mode(std::string_view text) {
  if (text == "full") return VerifyMode::full;
  if (text == "reduced") return VerifyMode::reduced;
  throw std::invalid_argument("mode must be full or reduced");
}

namespace {

class DistributionCache {
 public:
  std::optional<Distribution> find(const std::vector<int>& key) const {
    std::shared_lock lock(mutex_);
    auto it = cache_.find(key);
    if (it == cache_.end()) return std::nullopt;
    return it->second;
  }
  // Idempotent: a racing writer stores the same value for the same key.
  void insert(std::vector<int> key, const Distribution& value) {
    std::unique_lock lock(mutex_);
    cache_.try_emplace(std::move(key), value);
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<std::vector<int>, Distribution> cache_;
};

std::vector<int> cache_key(const Permutation& pi, const Permutation& sigma) {
  std::vector<int> key{static_cast<int>(pi.size()),
                       static_cast<int>(sigma.size())};
  for (int d : word::descent_set(pi.word())) key.push_back(d);
  key.push_back(0);
  for (int d : word::descent_set(sigma.word())) key.push_back(d);
  return key;
}

struct Block {
  int n = 0;
  int m = 0;
  std::vector<Permutation> pis;
  std::vector<Permutation> sigmas;
  std::vector<StatValue> pi_values;
  std::vector<StatValue> sigma_values;
  // dists[s][p]
  std::vector<std::vector<Distribution>> dists;
};

struct GroupState {
  std::size_t record = 0;
  std::size_t sigma_index = 0;
  std::size_t pi_index = 0;
};

}  // namespace

VerifyReport verify_shuffle_compatibility(const StatisticDescriptor& st,
                                          const VerifyOptions& options) {
  if (options.n_max < 1 || options.m_max < 1) {
    throw PreconditionError("n_max and m_max must be at least 1");
  }
  if (options.mode == VerifyMode::reduced) {
    if (!st.descent_statistic) {
      throw PreconditionError("reduced mode needs a descent statistic; \"" +
                              st.name + "\" is not declared as one");
    }
    const int check_to = std::min(options.n_max + options.m_max, 8);
    if (!is_descent_statistic(st, check_to).holds) {
      throw PreconditionError("\"" + st.name +
                              "\" fails the descent-statistic check");
    }
  }

  std::vector<Block> blocks;
  for (int n = 1; n <= options.n_max; ++n) {
    for (int m = 1; m <= options.m_max; ++m) {
      Block block;
      block.n = n;
      block.m = m;
      block.pis = all_permutations(static_cast<std::size_t>(n));
      block.sigmas = all_permutations(static_cast<std::size_t>(m), n);
      for (const auto& p : block.pis) block.pi_values.push_back(st(p));
      for (const auto& s : block.sigmas) block.sigma_values.push_back(st(s));
      block.dists.resize(block.sigmas.size());
      blocks.push_back(std::move(block));
    }
  }

  std::vector<std::pair<std::size_t, std::size_t>> items;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (std::size_t s = 0; s < blocks[b].sigmas.size(); ++s) items.emplace_back(b, s);
  }

  DistributionCache cache;
  detail::parallel_for(items.size(), options.jobs, [&](std::size_t k) {
    auto& block = blocks[items[k].first];
    const auto s = items[k].second;
    const auto& sigma = block.sigmas[s];
    auto& row = block.dists[s];
    row.reserve(block.pis.size());
    for (const auto& pi : block.pis) {
      if (options.memoize) {
        auto key = cache_key(pi, sigma);
        if (auto hit = cache.find(key)) {
          row.push_back(std::move(*hit));
          continue;
        }
        row.push_back(distribution(st, pi, sigma));
        cache.insert(std::move(key), row.back());
      } else {
        row.push_back(distribution(st, pi, sigma));
      }
    }
  });

  VerifyReport report;
  report.statistic = st.name;
  report.mode = options.mode;
  report.n_max = options.n_max;
  report.m_max = options.m_max;

  auto note_failure = [&](const Block& block, const GroupState& first,
                          std::size_t s, std::size_t p) {
    if (report.counterexample) return;
    Counterexample ce;
    ce.n = block.n;
    ce.m = block.m;
    ce.pi = block.pis[first.pi_index];
    ce.sigma = block.sigmas[first.sigma_index];
    ce.pi_prime = block.pis[p];
    ce.sigma_prime = block.sigmas[s];
    ce.first = block.dists[first.sigma_index][first.pi_index];
    ce.second = block.dists[s][p];
    report.counterexample = std::move(ce);
  };

  for (const auto& block : blocks) {
    const auto per_pair = shuffle_count(static_cast<std::size_t>(block.n),
                                        static_cast<std::size_t>(block.m));
    report.pairs_checked += block.pis.size() * block.sigmas.size();
    report.shuffles_evaluated += block.pis.size() * block.sigmas.size() * per_pair;

    using Key = std::pair<StatValue, StatValue>;
    std::map<Key, GroupState> groups;
    std::vector<GroupRecord> records;
    auto visit = [&](std::size_t s, std::size_t p, const Key& key) {
      auto it = groups.find(key);
      if (it == groups.end()) {
        GroupRecord record;
        record.n = block.n;
        record.m = block.m;
        record.key = key.first;
        if (options.mode == VerifyMode::reduced) {
          record.sigma = block.sigmas[s];
        } else {
          record.sigma_key = key.second;
        }
        record.size = 1;
        record.digest = block.dists[s][p].digest();
        groups.emplace(key, GroupState{records.size(), s, p});
        records.push_back(std::move(record));
        return;
      }
      ++records[it->second.record].size;
      const auto& first = it->second;
      if (block.dists[first.sigma_index][first.pi_index] != block.dists[s][p]) {
        report.passed = false;
        note_failure(block, first, s, p);
      }
    };

    for (std::size_t s = 0; s < block.sigmas.size(); ++s) {
      if (options.mode == VerifyMode::reduced) {
        groups.clear();
        std::vector<GroupRecord>().swap(records);
      }
      for (std::size_t p = 0; p < block.pis.size(); ++p) {
        const Key key = options.mode == VerifyMode::reduced
                            ? Key{block.pi_values[p], {}}
                            : Key{block.pi_values[p], block.sigma_values[s]};
        visit(s, p, key);
      }
      if (options.mode == VerifyMode::reduced) {
        for (const auto& [key, state] : groups) report.groups.push_back(records[state.record]);
      }
    }
    if (options.mode == VerifyMode::full) {
      for (const auto& [key, state] : groups) report.groups.push_back(records[state.record]);
    }
  }
  return report;
}

std::string format_report(const VerifyReport& report, ValueShape shape) {
  std::ostringstream out;
  out << "verify statistic=" << report.statistic
      << " mode=" << to_string(report.mode) << " n_max=" << report.n_max
      << " m_max=" << report.m_max << '\n';
  for (const auto& g : report.groups) {
    out << "group n=" << g.n << " m=" << g.m;
    if (g.sigma) out << " sigma=" << to_string(*g.sigma);
    out << " key=" << format_value(shape, g.key);
    if (g.sigma_key) out << " sigma_key=" << format_value(shape, *g.sigma_key);
    out << " size=" << g.size << " digest=" << g.digest << '\n';
  }
  out << "summary groups=" << report.groups.size()
      << " pairs=" << report.pairs_checked
      << " shuffles=" << report.shuffles_evaluated << '\n';
  if (const auto& ce = report.counterexample) {
    out << "counterexample n=" << ce->n << " m=" << ce->m << '\n';
    out << "pi=" << to_string(ce->pi) << '\n';
    out << "pi_prime=" << to_string(ce->pi_prime) << '\n';
    out << "sigma=" << to_string(ce->sigma) << '\n';
    if (ce->sigma_prime != ce->sigma) {
      out << "sigma_prime=" << to_string(ce->sigma_prime) << '\n';
    }
    out << "dist_pi=" << ce->first.to_string(shape) << '\n';
    out << "dist_pi_prime=" << ce->second.to_string(shape) << '\n';
  }
  out << (report.passed ? "PASS" : "FAIL") << '\n';
  return out.str();
}

namespace {

nlohmann::ordered_json distribution_json(const Distribution& d) {
  auto entries = nlohmann::ordered_json::array();
  for (const auto& [value, count] : d.entries()) {
    entries.push_back({{"value", value}, {"multiplicity", count}});
  }
  return entries;
}

}  // namespace

std::string report_to_json(const VerifyReport& report, ValueShape shape) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["statistic"] = report.statistic;
  j["mode"] = to_string(report.mode);
  j["n_max"] = report.n_max;
  j["m_max"] = report.m_max;
  j["passed"] = report.passed;
  j["pairs"] = report.pairs_checked;
  j["shuffles"] = report.shuffles_evaluated;
  auto groups = ordered_json::array();
  for (const auto& g : report.groups) {
    ordered_json record;
    record["n"] = g.n;
    record["m"] = g.m;
    if (g.sigma) record["sigma"] = to_string(*g.sigma);
    record["key"] = format_value(shape, g.key);
    if (g.sigma_key) record["sigma_key"] = format_value(shape, *g.sigma_key);
    record["size"] = g.size;
    record["digest"] = g.digest;
    groups.push_back(std::move(record));
  }
  j["groups"] = std::move(groups);
  if (const auto& ce = report.counterexample) {
    ordered_json c;
    c["n"] = ce->n;
    c["m"] = ce->m;
    c["pi"] = to_string(ce->pi);
    c["pi_prime"] = to_string(ce->pi_prime);
    c["sigma"] = to_string(ce->sigma);
    c["sigma_prime"] = to_string(ce->sigma_prime);
    c["dist_pi"] = distribution_json(ce->first);
    c["dist_pi_prime"] = distribution_json(ce->second);
    j["counterexample"] = std::move(c);
  } else {
    j["counterexample"] = nullptr;
  }
  return j.dump(2);
}

}  // namespace shufcompat
