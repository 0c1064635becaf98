#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "shufcompat/permutation.hpp"

namespace shufcompat {

/// Polynomial in q with exact integer coefficients. Zero coefficients are
/// never stored; arithmetic throws std::overflow_error rather than wrap.
class QPolynomial {
 public:
  using Coefficient = std::int64_t;

  QPolynomial() = default;
  /// c q^degree
  static QPolynomial monomial(int degree, Coefficient c = 1);
  static QPolynomial constant(Coefficient c) { return monomial(0, c); }

  Coefficient coefficient(int degree) const;
  /// -1 for the zero polynomial.
  int degree() const;
  bool is_zero() const { return terms_.empty(); }
  Coefficient at_one() const;

  /// (degree, coefficient) pairs sorted by degree.
  std::vector<std::pair<int, Coefficient>> terms() const;

  QPolynomial& operator+=(const QPolynomial& rhs);
  /// Multiplication by q^shift.
  QPolynomial shifted(int shift) const;

  friend QPolynomial operator+(QPolynomial lhs, const QPolynomial& rhs) {
    return lhs += rhs;
  }
  friend QPolynomial operator*(const QPolynomial& lhs, const QPolynomial& rhs);
  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

  /// "1 + q + 2 q^2 + q^3 + q^4"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void add_term(int degree, Coefficient c);
  std::map<int, Coefficient> terms_;
};

/// [n]_q = 1 + q + ... + q^(n-1).
QPolynomial q_integer(int n);

/// Gaussian binomial via the q-Pascal recurrence
/// C(n,k)_q = C(n-1,k-1)_q + q^k C(n-1,k)_q. Throws unless 0 <= k <= n.
QPolynomial q_binomial(int n, int k);

/// As q_binomial, but zero when k < 0 or k > n.
QPolynomial q_binomial_or_zero(int n, int k);

struct IdentityCheck {
  bool holds = false;
  QPolynomial lhs;
  QPolynomial rhs;
};

/// sum over S(pi, sigma) of q^maj(tau) against
/// q^(maj pi + maj sigma) C(|pi|+|sigma|, |pi|)_q.
IdentityCheck stanley_maj_check(const Permutation& pi, const Permutation& sigma);

/// The refinement by des(tau) = k:
/// q^(maj pi + maj sigma + (k - des pi)(k - des sigma))
///   * C(|pi| - des pi + des sigma, k - des pi)_q
///   * C(|sigma| - des sigma + des pi, k - des sigma)_q.
IdentityCheck stanley_maj_des_check(const Permutation& pi,
                                    const Permutation& sigma, int k);

/// Right-hand sides only.
QPolynomial stanley_maj_rhs(const Permutation& pi, const Permutation& sigma);
QPolynomial stanley_maj_des_rhs(const Permutation& pi, const Permutation& sigma,
                                int k);

}  // namespace shufcompat
