#pragma once

#include <string>
#include <utility>
#include <vector>

#include "shufcompat/permutation.hpp"

namespace shufcompat {

/// 1-based anchor positions in pi for the map phi_ell. If birun ell
/// increases, pi_j pi_{j+1} are its first two entries and pi_i starts birun
/// ell-2; if it decreases, they are its last two entries and pi_i ends
/// birun ell-2.
struct Anchors {
  int i = 0;
  int j = 0;
  bool increasing = true;
};

/// Requires 3 <= ell <= bir(p) and t_ell >= 3.
Anchors anchors(const Permutation& p, int ell);

/// tau = tau_a . pi_i s^(1) pi_{i+1} s^(2) ... pi_j s^(j-i+1) pi_{j+1} . tau_c
/// where each block s^(q) is a (possibly empty) run of sigma entries.
struct ShuffleFactorization {
  std::vector<int> tau_a;
  int anchor_i = 0;
  int anchor_j = 0;
  bool increasing = true;
  std::vector<std::vector<int>> blocks;
  std::vector<int> tau_c;
  /// 1-based indices q with blocks[q-1] nonempty, increasing.
  std::vector<int> nonempty_indices;

  bool last_block_empty() const { return blocks.back().empty(); }
  std::vector<int> reassemble(const Permutation& pi) const;
};

/// Throws InvalidPermutation unless p is a subsequence of tau.
ShuffleFactorization factorize(const Permutation& tau, const Permutation& p,
                               int ell);

/// phi_ell : S(p, sigma) -> S(p_prime, sigma). p_prime must lie in
/// Omega_ell(p); sigma is whatever tau holds besides p.
Permutation phi_forward(const Permutation& tau, const Permutation& p,
                        const Permutation& p_prime, int ell);

/// Inverse of phi_forward for the same (p, p_prime, ell).
Permutation phi_inverse(const Permutation& tau_prime, const Permutation& p,
                        const Permutation& p_prime, int ell);

struct TraceStep {
  int ell = 0;
  Permutation source;
  Permutation target;
};

struct CanonicalizationTrace {
  std::vector<TraceStep> steps;
  Permutation final;
};

/// Repeats next_reduction / omega_rep until p is canonical. n >= 2.
CanonicalizationTrace canonicalize(const Permutation& p);

/// Composes phi along the trace.
Permutation apply_trace(const CanonicalizationTrace& trace, const Permutation& tau);

struct CanonicalBijection {
  CanonicalizationTrace trace;
  /// (tau, image) for every tau in S(p, sigma), in enumeration order.
  std::vector<std::pair<Permutation, Permutation>> mapping;
};

CanonicalBijection canonicalize_with_bijection(const Permutation& p,
                                               const Permutation& sigma);

/// One record per step: "ell=<l> src=<word> dst=<word>".
std::string format_trace(const CanonicalizationTrace& trace);

enum class DecompositionCase { i = 1, ii = 2, iii = 3, iv = 4 };

/// Evaluation of the des/pk decompositions of tau along its factorization.
/// Only cases (i) and (iv) carry displayed identities; the other two report
/// applicable = false and holds = true.
struct DecompositionCheck {
  DecompositionCase decomposition_case = DecompositionCase::i;
  bool applicable = false;
  bool holds = true;
  int des_lhs = 0;
  int des_rhs = 0;
  int pk_lhs = 0;
  int pk_rhs = 0;
};

DecompositionCheck check_case_decomposition_identities(const Permutation& tau,
                                                       const Permutation& p,
                                                       int ell);

}  // namespace shufcompat
