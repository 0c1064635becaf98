#include "shufcompat/distribution.hpp"

#include <cstdio>
#include <stdexcept>

#include "shufcompat/statistics.hpp"

namespace shufcompat {

namespace {

StatValue scalar(int v) { return StatValue{v}; }

std::vector<StatisticDescriptor> build_registry() {
  std::vector<StatisticDescriptor> out;
  auto add = [&](std::string name, ValueShape shape, bool descent,
                 std::string summary,
                 std::function<StatValue(std::span<const int>)> f) {
    out.push_back({std::move(name), shape, std::move(f), descent,
                   std::move(summary)});
  };
  add("des", ValueShape::scalar, true, "number of descents",
      [](std::span<const int> w) { return scalar(word::des(w)); });
  add("maj", ValueShape::scalar, true, "major index",
      [](std::span<const int> w) { return scalar(word::maj(w)); });
  add("pk", ValueShape::scalar, true, "number of peaks",
      [](std::span<const int> w) { return scalar(word::pk(w)); });
  add("epk", ValueShape::scalar, true, "number of peaks of 0w0",
      [](std::span<const int> w) { return scalar(word::epk(w)); });
  add("udr", ValueShape::scalar, true, "number of up-down runs",
      [](std::span<const int> w) { return scalar(word::udr(w)); });
  add("bir", ValueShape::scalar, true,
      "number of biruns (not shuffle-compatible)",
      [](std::span<const int> w) { return scalar(word::bir(w)); });
  add("Des", ValueShape::set, true, "descent set",
      [](std::span<const int> w) { return word::descent_set(w); });
  add("maj_des", ValueShape::tuple, true, "(maj, des)",
      [](std::span<const int> w) {
        return StatValue{word::maj(w), word::des(w)};
      });
  add("udr_pk", ValueShape::tuple, true, "(udr, pk)",
      [](std::span<const int> w) {
        return StatValue{word::udr(w), word::pk(w)};
      });
  add("udr_pk_des", ValueShape::tuple, true, "(udr, pk, des)",
      [](std::span<const int> w) {
        return StatValue{word::udr(w), word::pk(w), word::des(w)};
      });
  add("first", ValueShape::scalar, false, "first entry value",
      [](std::span<const int> w) { return w.empty() ? StatValue{} : scalar(w[0]); });
  return out;
}

}  // namespace

const std::vector<StatisticDescriptor>& registered_statistics() {
  static const std::vector<StatisticDescriptor> registry = build_registry();
  return registry;
}

const StatisticDescriptor& find_statistic(std::string_view name) {
  for (const auto& st : registered_statistics()) {
    if (st.name == name) return st;
  }
  throw std::invalid_argument("unknown statistic \"" + std::string(name) + "\"");
}

std::string format_value(ValueShape shape, const StatValue& value) {
  std::string inner;
  for (std::size_t k = 0; k < value.size(); ++k) {
    if (k) inner += ',';
    inner += std::to_string(value[k]);
  }
  switch (shape) {
    case ValueShape::scalar:
      return inner;
    case ValueShape::tuple:
      return "(" + inner + ")";
    case ValueShape::set:
      return "{" + inner + "}";
  }
  return inner;
}

void Distribution::add(const StatValue& value, std::uint64_t multiplicity) {
  if (multiplicity == 0) return;
  entries_[value] += multiplicity;
}

void Distribution::merge(const Distribution& other) {
  for (const auto& [value, count] : other.entries_) entries_[value] += count;
}

std::uint64_t Distribution::total() const {
  std::uint64_t sum = 0;
  for (const auto& entry : entries_) sum += entry.second;
  return sum;
}

std::uint64_t Distribution::multiplicity(const StatValue& value) const {
  auto it = entries_.find(value);
  return it == entries_.end() ? 0 : it->second;
}

std::string Distribution::to_string(ValueShape shape) const {
  std::string out;
  for (const auto& [value, count] : entries_) {
    if (!out.empty()) out += ' ';
    out += format_value(shape, value) + ":" + std::to_string(count);
  }
  return out;
}

std::string Distribution::digest() const {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  auto mix = [&](std::uint64_t word) {
    for (int byte = 0; byte < 8; ++byte) {
      hash ^= (word >> (8 * byte)) & 0xffU;
      hash *= 0x100000001b3ULL;
    }
  };
  for (const auto& [value, count] : entries_) {
    mix(value.size());
    for (int v : value) mix(static_cast<std::uint64_t>(static_cast<std::int64_t>(v)));
    mix(count);
  }
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx",
                static_cast<unsigned long long>(hash));
  return buffer;
}

Distribution distribution(const StatisticDescriptor& st, const Permutation& pi,
                          const Permutation& sigma, EnumerationLimits limits) {
  Distribution out;
  for_each_shuffle(
      pi, sigma, [&](std::span<const int> tau) { out.add(st(tau)); }, limits);
  return out;
}

}  // namespace shufcompat
