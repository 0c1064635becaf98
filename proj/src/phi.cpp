#include "shufcompat/phi.hpp"

#include <unordered_map>

#include "shufcompat/canonical.hpp"
#include "shufcompat/error.hpp"
#include "shufcompat/shuffle.hpp"
#include "shufcompat/statistics.hpp"

namespace shufcompat {

namespace {

struct Segments {
  std::vector<int> prefix;
  std::vector<std::vector<int>> blocks;
  std::vector<int> suffix;
};

// Splits tau around the anchors pi_i ... pi_{j+1}. Positions are 1-based.
Segments split_at_anchors(const Permutation& tau, const Permutation& pi, int i,
                          int j) {
  if (!is_subsequence(pi.word(), tau.word())) {
    throw InvalidPermutation("tau does not contain " + to_string(pi) +
                             " as a subsequence");
  }
  const int first = pi.at(static_cast<std::size_t>(i));
  const int last = pi.at(static_cast<std::size_t>(j + 1));
  std::unordered_map<int, int> index_in_pi;
  for (std::size_t k = 0; k < pi.size(); ++k) {
    index_in_pi[pi[k]] = static_cast<int>(k) + 1;
  }
  Segments out;
  std::size_t k = 0;
  for (; tau[k] != first; ++k) out.prefix.push_back(tau[k]);
  ++k;
  out.blocks.emplace_back();
  for (; tau[k] != last; ++k) {
    if (index_in_pi.count(tau[k])) {
      out.blocks.emplace_back();
    } else {
      out.blocks.back().push_back(tau[k]);
    }
  }
  for (++k; k < tau.size(); ++k) out.suffix.push_back(tau[k]);
  return out;
}

// Replaces each entry of `from` found in w by the entry of `to` at the
// same index.
std::vector<int> relabel(const std::vector<int>& w, const Permutation& from,
                         const Permutation& to) {
  std::unordered_map<int, int> map;
  for (std::size_t k = 0; k < from.size(); ++k) map[from[k]] = to[k];
  std::vector<int> out;
  out.reserve(w.size());
  for (int v : w) {
    auto it = map.find(v);
    out.push_back(it == map.end() ? v : it->second);
  }
  return out;
}

void require_omega(const Permutation& p, const Permutation& p_prime, int ell) {
  if (!in_omega(p, p_prime, ell)) {
    throw PreconditionError(to_string(p_prime) + " is not in Omega_" +
                            std::to_string(ell) + "(" + to_string(p) + ")");
  }
}

void append(std::vector<int>& out, const std::vector<int>& part) {
  out.insert(out.end(), part.begin(), part.end());
}

}  // namespace

Anchors anchors(const Permutation& p, int ell) {
  const auto profile = run_profile(p);
  omega_move(profile, ell);  // validates ell and t_ell
  Anchors a;
  a.increasing = profile.increasing(ell);
  if (a.increasing) {
    a.j = profile.start(ell);
    a.i = profile.start(ell - 2);
  } else {
    a.j = profile.end(ell) - 1;
    a.i = profile.end(ell - 2);
  }
  return a;
}

std::vector<int> ShuffleFactorization::reassemble(const Permutation& pi) const {
  std::vector<int> out = tau_a;
  for (int q = anchor_i; q <= anchor_j; ++q) {
    out.push_back(pi.at(static_cast<std::size_t>(q)));
    append(out, blocks[static_cast<std::size_t>(q - anchor_i)]);
  }
  out.push_back(pi.at(static_cast<std::size_t>(anchor_j + 1)));
  append(out, tau_c);
  return out;
}

ShuffleFactorization factorize(const Permutation& tau, const Permutation& p,
                               int ell) {
  const auto a = anchors(p, ell);
  auto segments = split_at_anchors(tau, p, a.i, a.j);
  ShuffleFactorization f;
  f.tau_a = std::move(segments.prefix);
  f.anchor_i = a.i;
  f.anchor_j = a.j;
  f.increasing = a.increasing;
  f.blocks = std::move(segments.blocks);
  f.tau_c = std::move(segments.suffix);
  for (std::size_t q = 0; q < f.blocks.size(); ++q) {
    if (!f.blocks[q].empty()) f.nonempty_indices.push_back(static_cast<int>(q) + 1);
  }
  return f;
}

Permutation phi_forward(const Permutation& tau, const Permutation& p,
                        const Permutation& p_prime, int ell) {
  require_omega(p, p_prime, ell);
  const auto f = factorize(tau, p, ell);
  const int i = f.anchor_i;
  const int j = f.anchor_j;
  const auto slots = static_cast<std::size_t>(j - i + 1);
  auto image = [&](int k) { return p_prime.at(static_cast<std::size_t>(k)); };

  std::vector<int> out = relabel(f.tau_a, p, p_prime);
  // inner[s-1] is what follows pi'_{i+s}, for s = 1 .. j-i.
  std::vector<std::vector<int>> inner(slots);
  std::vector<int> lead;
  if (f.last_block_empty()) {
    for (std::size_t s = 0; s + 1 < slots; ++s) inner[s] = f.blocks[s];
  } else {
    const auto& nonempty = f.nonempty_indices;
    lead = f.blocks[static_cast<std::size_t>(nonempty.front() - 1)];
    for (std::size_t q = 0; q + 1 < nonempty.size(); ++q) {
      inner[static_cast<std::size_t>(nonempty[q] - 1)] =
          f.blocks[static_cast<std::size_t>(nonempty[q + 1] - 1)];
    }
  }
  out.push_back(image(i));
  append(out, lead);
  for (int s = 1; s <= j - i; ++s) {
    out.push_back(image(i + s));
    append(out, inner[static_cast<std::size_t>(s - 1)]);
  }
  out.push_back(image(j + 1));
  append(out, relabel(f.tau_c, p, p_prime));
  return Permutation::trusted(std::move(out));
}

Permutation phi_inverse(const Permutation& tau_prime, const Permutation& p,
                        const Permutation& p_prime, int ell) {
  require_omega(p, p_prime, ell);
  const auto a = anchors(p, ell);
  const int i = a.i;
  const int j = a.j;
  auto segments = split_at_anchors(tau_prime, p_prime, i, j);
  const auto slots = static_cast<std::size_t>(j - i + 1);
  const auto& lead = segments.blocks.front();

  std::vector<std::vector<int>> blocks(slots);
  if (lead.empty()) {
    for (std::size_t s = 0; s + 1 < slots; ++s) blocks[s] = segments.blocks[s + 1];
  } else {
    // Nonempty inner slots sit at s_1 < ... < s_{p-1}; s_p is the last slot.
    std::vector<std::size_t> nonempty;
    for (std::size_t s = 1; s < slots; ++s) {
      if (!segments.blocks[s].empty()) nonempty.push_back(s);
    }
    nonempty.push_back(slots);
    blocks[nonempty.front() - 1] = lead;
    for (std::size_t q = 0; q + 1 < nonempty.size(); ++q) {
      blocks[nonempty[q + 1] - 1] = segments.blocks[nonempty[q]];
    }
  }

  std::vector<int> out = relabel(segments.prefix, p_prime, p);
  for (int q = i; q <= j; ++q) {
    out.push_back(p.at(static_cast<std::size_t>(q)));
    append(out, blocks[static_cast<std::size_t>(q - i)]);
  }
  out.push_back(p.at(static_cast<std::size_t>(j + 1)));
  append(out, relabel(segments.suffix, p_prime, p));
  return Permutation::trusted(std::move(out));
}

CanonicalizationTrace canonicalize(const Permutation& p) {
  if (p.size() < 2) throw PreconditionError("canonicalization needs n >= 2");
  CanonicalizationTrace trace;
  Permutation current = p;
  while (auto ell = next_reduction(current)) {
    auto target = omega_rep(current, *ell);
    trace.steps.push_back({*ell, current, target});
    current = std::move(target);
  }
  trace.final = std::move(current);
  return trace;
}

Permutation apply_trace(const CanonicalizationTrace& trace, const Permutation& tau) {
  Permutation current = tau;
  for (const auto& step : trace.steps) {
    current = phi_forward(current, step.source, step.target, step.ell);
  }
  return current;
}

CanonicalBijection canonicalize_with_bijection(const Permutation& p,
                                               const Permutation& sigma) {
  require_disjoint(p, sigma);
  CanonicalBijection out;
  out.trace = canonicalize(p);
  for (auto& tau : enumerate_shuffles(p, sigma)) {
    auto image = apply_trace(out.trace, tau);
    out.mapping.emplace_back(std::move(tau), std::move(image));
  }
  return out;
}

std::string format_trace(const CanonicalizationTrace& trace) {
  std::string out;
  for (const auto& step : trace.steps) {
    out += "ell=" + std::to_string(step.ell) + " src=" + to_string(step.source) +
           " dst=" + to_string(step.target) + "\n";
  }
  return out;
}

DecompositionCheck check_case_decomposition_identities(const Permutation& tau,
                                                       const Permutation& p,
                                                       int ell) {
  const auto f = factorize(tau, p, ell);
  const auto profile = run_profile(p);
  DecompositionCheck out;
  const bool last_empty = f.last_block_empty();
  if (f.increasing) {
    out.decomposition_case = last_empty ? DecompositionCase::i : DecompositionCase::ii;
  } else {
    out.decomposition_case = last_empty ? DecompositionCase::iii : DecompositionCase::iv;
  }
  out.applicable = out.decomposition_case == DecompositionCase::i || out.decomposition_case == DecompositionCase::iv;
  if (!out.applicable) return out;

  auto length = [&](int r) { return profile.lengths[static_cast<std::size_t>(r - 1)]; };
  auto block_size = [&](int s) { return f.blocks[static_cast<std::size_t>(s - 1)].size(); };

  std::vector<int> head = f.tau_a;
  head.push_back(p.at(static_cast<std::size_t>(f.anchor_i)));
  std::vector<int> tail{p.at(static_cast<std::size_t>(f.anchor_j + 1))};
  append(tail, f.tau_c);

  int block_des = 0;
  int block_epk = 0;
  for (const auto& block : f.blocks) {
    block_des += word::des(block);
    block_epk += word::epk(block);
  }
  // Case (i) counts through birun ell-1 and the increasing pairs of ell-2;
  // case (iv) through birun ell and the increasing pairs of ell-1.
  const int run_descents = out.decomposition_case == DecompositionCase::i ? length(ell - 1) - 1
                                                          : length(ell) - 1;
  const int rising = out.decomposition_case == DecompositionCase::i ? length(ell - 2) : length(ell - 1);
  int filled = 0;
  for (int s = 1; s <= rising - 1; ++s) filled += block_size(s) > 0;
  const int surviving_peak = block_size(rising - 1) == 0 && block_size(rising) == 0;

  out.des_lhs = word::des(tau.word());
  out.des_rhs = word::des(head) + word::des(tail) + run_descents + block_des + filled;
  out.pk_lhs = word::pk(tau.word());
  out.pk_rhs = word::pk(head) + word::pk(tail) + block_epk + surviving_peak;
  out.holds = out.des_lhs == out.des_rhs && out.pk_lhs == out.pk_rhs;
  return out;
}

}  // namespace shufcompat
