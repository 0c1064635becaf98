#include "shufcompat/qpoly.hpp"

#include <stdexcept>

#include "shufcompat/error.hpp"
#include "shufcompat/shuffle.hpp"
#include "shufcompat/statistics.hpp"

namespace shufcompat {

QPolynomial QPolynomial::monomial(int degree, Coefficient c) {
  if (degree < 0) throw std::domain_error("negative degree");
  QPolynomial p;
  p.add_term(degree, c);
  return p;
}

void QPolynomial::add_term(int degree, Coefficient c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(degree, c);
  if (inserted) return;
  if (__builtin_add_overflow(it->second, c, &it->second)) {
    throw std::overflow_error("coefficient overflow");
  }
  if (it->second == 0) terms_.erase(it);
}

QPolynomial::Coefficient QPolynomial::coefficient(int degree) const {
  auto it = terms_.find(degree);
  return it == terms_.end() ? 0 : it->second;
}

int QPolynomial::degree() const {
  return terms_.empty() ? -1 : terms_.rbegin()->first;
}

QPolynomial::Coefficient QPolynomial::at_one() const {
  Coefficient sum = 0;
  for (const auto& [d, c] : terms_) {
    if (__builtin_add_overflow(sum, c, &sum)) {
      throw std::overflow_error("coefficient overflow");
    }
  }
  return sum;
}

std::vector<std::pair<int, QPolynomial::Coefficient>> QPolynomial::terms() const {
  return {terms_.begin(), terms_.end()};
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& rhs) {
  for (const auto& [d, c] : rhs.terms_) add_term(d, c);
  return *this;
}

QPolynomial QPolynomial::shifted(int shift) const {
  QPolynomial out;
  for (const auto& [d, c] : terms_) {
    if (d + shift < 0) throw std::domain_error("negative degree");
    out.terms_.emplace(d + shift, c);
  }
  return out;
}

QPolynomial operator*(const QPolynomial& lhs, const QPolynomial& rhs) {
  QPolynomial out;
  for (const auto& [da, ca] : lhs.terms_) {
    for (const auto& [db, cb] : rhs.terms_) {
      QPolynomial::Coefficient c = 0;
      if (__builtin_mul_overflow(ca, cb, &c)) {
        throw std::overflow_error("coefficient overflow");
      }
      out.add_term(da + db, c);
    }
  }
  return out;
}

std::string QPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [d, c] : terms_) {
    Coefficient magnitude = c < 0 ? -c : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (d == 0 || magnitude != 1) out += std::to_string(magnitude);
    if (d > 0) {
      if (magnitude != 1) out += ' ';
      out += d == 1 ? "q" : "q^" + std::to_string(d);
    }
  }
  return out;
}

QPolynomial q_integer(int n) {
  QPolynomial out;
  for (int d = 0; d < n; ++d) out += QPolynomial::monomial(d);
  return out;
}

QPolynomial q_binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) {
    throw PreconditionError("q_binomial needs 0 <= k <= n");
  }
  // row[k] holds C(r, k)_q for the current r.
  std::vector<QPolynomial> row{QPolynomial::constant(1)};
  for (int r = 1; r <= n; ++r) {
    std::vector<QPolynomial> next(static_cast<std::size_t>(r) + 1);
    next[0] = QPolynomial::constant(1);
    next[static_cast<std::size_t>(r)] = QPolynomial::constant(1);
    for (int c = 1; c < r; ++c) {
      next[static_cast<std::size_t>(c)] =
          row[static_cast<std::size_t>(c - 1)] +
          row[static_cast<std::size_t>(c)].shifted(c);
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

QPolynomial q_binomial_or_zero(int n, int k) {
  if (k < 0 || n < 0 || k > n) return {};
  return q_binomial(n, k);
}

QPolynomial stanley_maj_rhs(const Permutation& pi, const Permutation& sigma) {
  const int n = static_cast<int>(pi.size());
  const int m = static_cast<int>(sigma.size());
  return q_binomial(n + m, n).shifted(word::maj(pi.word()) + word::maj(sigma.word()));
}

QPolynomial stanley_maj_des_rhs(const Permutation& pi, const Permutation& sigma,
                                int k) {
  const int n = static_cast<int>(pi.size());
  const int m = static_cast<int>(sigma.size());
  const int des_pi = word::des(pi.word());
  const int des_sigma = word::des(sigma.word());
  auto product = q_binomial_or_zero(n - des_pi + des_sigma, k - des_pi) *
                 q_binomial_or_zero(m - des_sigma + des_pi, k - des_sigma);
  if (product.is_zero()) return product;
  return product.shifted(word::maj(pi.word()) + word::maj(sigma.word()) +
                         (k - des_pi) * (k - des_sigma));
}

IdentityCheck stanley_maj_check(const Permutation& pi, const Permutation& sigma) {
  IdentityCheck out;
  for_each_shuffle(pi, sigma, [&](std::span<const int> tau) {
    out.lhs += QPolynomial::monomial(word::maj(tau));
  });
  out.rhs = stanley_maj_rhs(pi, sigma);
  out.holds = out.lhs == out.rhs;
  return out;
}

IdentityCheck stanley_maj_des_check(const Permutation& pi,
                                    const Permutation& sigma, int k) {
  IdentityCheck out;
  for_each_shuffle(pi, sigma, [&](std::span<const int> tau) {
    if (word::des(tau) == k) out.lhs += QPolynomial::monomial(word::maj(tau));
  });
  out.rhs = stanley_maj_des_rhs(pi, sigma, k);
  out.holds = out.lhs == out.rhs;
  return out;
}

}  // namespace shufcompat
