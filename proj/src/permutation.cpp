#include "shufcompat/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <unordered_set>

#include "shufcompat/error.hpp"

namespace shufcompat {

namespace {

void validate(const std::vector<int>& values) {
  std::unordered_set<int> seen;
  seen.reserve(values.size());
  for (int v : values) {
    if (v < 1) {
      throw InvalidPermutation("non-positive value " + std::to_string(v));
    }
    if (!seen.insert(v).second) {
      throw InvalidPermutation("duplicate value " + std::to_string(v));
    }
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  validate(values_);
}

Permutation::Permutation(std::initializer_list<int> values)
    : Permutation(std::vector<int>(values)) {}

Permutation Permutation::trusted(std::vector<int> values) {
  Permutation p;
  p.values_ = std::move(values);
  return p;
}

int Permutation::at(std::size_t position) const {
  if (position < 1 || position > values_.size()) {
    throw PreconditionError("position " + std::to_string(position) +
                            " outside [1, " + std::to_string(values_.size()) +
                            "]");
  }
  return values_[position - 1];
}

bool Permutation::is_standard() const {
  const auto n = static_cast<int>(values_.size());
  return std::all_of(values_.begin(), values_.end(),
                     [n](int v) { return v >= 1 && v <= n; });
}

Permutation from_word(std::span<const int> values) {
  return Permutation(std::vector<int>(values.begin(), values.end()));
}

Permutation standardize(std::span<const int> values) {
  std::vector<int> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidPermutation("cannot standardize a word with duplicates");
  }
  std::vector<int> ranks;
  ranks.reserve(values.size());
  for (int v : values) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
    ranks.push_back(static_cast<int>(it - sorted.begin()) + 1);
  }
  return Permutation::trusted(std::move(ranks));
}

Permutation parse_permutation(std::string_view text) {
  std::vector<int> values;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() &&
           (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' ||
            text[pos] == '\r')) {
      ++pos;
    }
    if (pos == text.size()) break;
    int value = 0;
    const char* first = text.data() + pos;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first ||
        (ptr != last && *ptr != ' ' && *ptr != '\t' && *ptr != '\n' &&
         *ptr != '\r')) {
      throw InvalidPermutation("malformed permutation text: \"" +
                               std::string(text) + "\"");
    }
    values.push_back(value);
    pos = static_cast<std::size_t>(ptr - text.data());
  }
  return Permutation(std::move(values));
}

std::string format_word(std::span<const int> word) {
  std::string out;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) out += ' ';
    out += std::to_string(word[k]);
  }
  return out;
}

std::string to_string(const Permutation& p) { return format_word(p.word()); }

Permutation identity(std::size_t n) {
  std::vector<int> values(n);
  std::iota(values.begin(), values.end(), 1);
  return Permutation::trusted(std::move(values));
}

void require_disjoint(const Permutation& a, const Permutation& b) {
  std::unordered_set<int> ground(a.begin(), a.end());
  for (int v : b) {
    if (ground.count(v)) {
      throw InvalidPermutation("ground sets overlap at value " +
                               std::to_string(v));
    }
  }
}

std::vector<Permutation> all_permutations(std::size_t n, int offset) {
  std::vector<int> values(n);
  std::iota(values.begin(), values.end(), offset + 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::trusted(values));
  } while (std::next_permutation(values.begin(), values.end()));
  return out;
}

std::vector<Permutation> all_permutations(std::size_t n) {
  return all_permutations(n, 0);
}

}  // namespace shufcompat
