#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "shufcompat/permutation.hpp"
#include "shufcompat/statistics.hpp"

namespace shufcompat {

/// The four canonical families, indexed by chi_plus and birun-count parity:
///   1: chi+ = 0, b = 2k     types (n-d-k+1, d-k+2, 2, ..., 2)
///   2: chi+ = 0, b = 2k+1   types (n-d-k,   d-k+2, 2, ..., 2)
///   3: chi+ = 1, b = 2k+1   types (d-k+1, n-d-k+1, 2, ..., 2)
///   4: chi+ = 1, b = 2k+2   types (d-k+1, n-d-k,   2, ..., 2)
/// When b = 1 the single length must be n.
enum class CanonicalClass : int { one = 1, two = 2, three = 3, four = 4 };

struct CanonicalClassSpec {
  CanonicalClass class_id = CanonicalClass::one;
  int n = 0;
  int k = 0;
  int d = 0;
  RunProfile profile;

  friend bool operator==(const CanonicalClassSpec&, const CanonicalClassSpec&) = default;
};

/// Either a spec or the reason the class is empty for (n, k, d).
struct ClassSpecVerdict {
  std::optional<CanonicalClassSpec> spec;
  std::string violation;

  bool feasible() const { return spec.has_value(); }
};

ClassSpecVerdict canonical_spec(CanonicalClass class_id, int n, int k, int d);
/// Construction context: throws PreconditionError when infeasible.
CanonicalClassSpec require_canonical_spec(CanonicalClass class_id, int n, int k,
                                          int d);

CanonicalClass class_from_int(int class_id);

/// "class:n:k:d"
std::string format_class_spec(const CanonicalClassSpec& spec);
/// Parses "class:n:k:d" and rebuilds the profile; throws if infeasible.
CanonicalClassSpec parse_class_spec(std::string_view text);

/// Throws PreconditionError unless the lengths form a valid birun type of
/// a length-n word.
void validate_profile(const RunProfile& profile, int n);

/// The descent set common to every permutation with this profile.
PositionSet profile_to_descents(const RunProfile& profile, int n);

/// Splits [n] into the composition induced by D; block i takes the c_i
/// largest unused values in increasing order. Des(result) == D.
Permutation perm_with_descents(int n, const PositionSet& descents);

struct Classification {
  CanonicalClass class_id = CanonicalClass::one;
  int k = 0;
  int d = 0;
  bool is_canonical = false;
};

/// n >= 2.
Classification classify(const Permutation& p);

/// Omega_ell move on a profile: one unit of length from birun ell to
/// birun ell - 2. Requires 3 <= ell <= b and t_ell >= 3.
struct OmegaMove {
  int ell = 0;
  RunProfile source;
  RunProfile target;
};

OmegaMove omega_move(const RunProfile& source, int ell);

/// The deterministic member of Omega_ell(p): perm_with_descents on the
/// target profile, relabeled onto p's ground set.
Permutation omega_rep(const Permutation& p, int ell);

/// True iff q is in Omega_ell(p): same ground set and chi_plus, type moved.
bool in_omega(const Permutation& p, const Permutation& q, int ell);

/// Largest ell > 2 with t_ell >= 3. nullopt iff p is canonical (for n >= 2).
std::optional<int> next_reduction(const Permutation& p);

/// sum over ell >= 3 of ell * t_ell; each Omega move lowers it by >= 2.
int reduction_potential(const RunProfile& profile);

}  // namespace shufcompat
