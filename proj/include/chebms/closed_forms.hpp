#pragma once

#include <cstddef>
#include <vector>

#include "chebms/polynomial.hpp"
#include "chebms/rational.hpp"

namespace chebms {

/// Worpitzky number C_{i,n} = 1/(i+1) * sum_{j=0}^{i+1} (-1)^(i-j+1) C(i+1,j) j^(n+1).
/// Throws DomainError if i > n.
BigInt worpitzky(std::size_t i, std::size_t n);

/// Triangle C_{i,n}, 0 <= i <= n <= n_max, filled from the explicit sum.
class WorpitzkyTable {
 public:
  explicit WorpitzkyTable(std::size_t n_max);

  std::size_t n_max() const { return n_max_; }
  const BigInt& at(std::size_t i, std::size_t n) const;

  /// Checks C_{i,n+1} = (i+1)C_{i,n} + iC_{i-1,n}, C_{n+1,n+1} = (n+1)C_{n,n},
  /// C_{0,n} = 1 and C_{n,n} = n! across the whole table.
  bool satisfies_recurrences() const;

  /// Replaces one entry. Only meant for negative-control tests.
  void overwrite(std::size_t i, std::size_t n, BigInt value);

 private:
  std::size_t n_max_;
  std::vector<std::vector<BigInt>> rows_;
};

/// A(n,k) = sum_{i=1}^k (-1)^i C(2k,k-i) (2i)^n.
BigRational A_direct(std::size_t n, std::size_t k);

/// Exact value of a terminating 2F1(a,b;c;x). `b` must be a non-positive
/// integer (NonTerminating otherwise); PoleInC if c^(m) vanishes for some
/// m < -b.
BigRational hyp2f1_terminating(const BigRational& a, const BigRational& b, const BigRational& c,
                               const BigRational& x);

/// The same series as a polynomial in its argument z.
Polynomial hyp2f1_terminating_poly(const BigRational& a, const BigRational& b, const BigRational& c);

/// f(x) = sum_{i=1}^k C(2k,k-i) x^i.
Polynomial f_poly(std::size_t k);

/// g(n,k;x) = x^(n+1) 2F1(1+n, 1+n-k; 2+n+k; -x). Requires k >= n+1.
BigRational g_eval(std::size_t n, std::size_t k, const BigRational& x);
Polynomial g_poly(std::size_t n, std::size_t k);

/// g(i,k;-1) = (-1)^(i+1) (k+1)^(i+1) / (2k)_(i+1), valid for k > i/2.
BigRational g_at_minus_one(std::size_t i, std::size_t k);

/// theta = x d/dx.
Polynomial theta_apply(const Polynomial& p);

/// A(n,k) = 2^n [theta^n f](-1).
BigRational A_via_theta(std::size_t n, std::size_t k);

/// N(n,k) = sum_{i=0}^n (-1)^(i+1) C_{i,n} (k-1)_i (2k-i-1)_(n-i). Polynomial in k,
/// so any rational k is accepted.
BigRational N_closed(std::size_t n, const BigRational& k);
BigRational N_closed(std::size_t n, const BigRational& k, const WorpitzkyTable& table);

/// N(n, .) as an explicit polynomial in k.
Polynomial N_polynomial(std::size_t n);

/// A(n,k) = 2^n C(2k,k-1) (k+1) N(n,k) / (2k)_(n+1). DomainError unless k > n/2.
BigRational A_closed(std::size_t n, std::size_t k);
BigRational A_closed(std::size_t n, std::size_t k, const WorpitzkyTable& table);

/// N(n, n/2) for odd n. DomainError for even n.
BigRational N_at_half(std::size_t n);

/// (-1)^(n+1) n! prod_{j=1}^n (n/2 - j); the product form of N(n, n/2).
BigRational N_at_half_product(std::size_t n);

/// Checks, as exact polynomial identities in x,
///   theta g(n) = (n+1)(g(n) + (k-n-1)/(k+n+2) g(n+1))       for n < n_max
///   theta^n g(0) = sum_i (k-1)_i / (2+k)^(i) g(i) C_{i,n}    for n <= n_max.
/// NonTerminating unless k >= n_max + 2.
bool verify_theta_recursion(std::size_t n_max, std::size_t k);

}  // namespace chebms
