#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "chebms/polynomial.hpp"
#include "chebms/rational.hpp"

namespace chebms {

/// Finite expansion sum_k a_k T_k(x) over Chebyshev polynomials of the
/// first kind. Same trimming rule as Polynomial.
class ChebSeries {
 public:
  ChebSeries() = default;
  explicit ChebSeries(std::vector<BigRational> coefficients);

  std::optional<std::size_t> degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  BigRational coefficient(std::size_t k) const;
  std::span<const BigRational> coefficients() const { return coeffs_; }

  /// Value at x = 0 using T_k(0) only.
  BigRational value_at_zero() const;

  ChebSeries& operator+=(const ChebSeries& rhs);
  ChebSeries& operator*=(const BigRational& scalar);
  friend ChebSeries operator*(ChebSeries s, const BigRational& c) { return s *= c; }
  friend bool operator==(const ChebSeries&, const ChebSeries&) = default;

 private:
  void trim();

  std::vector<BigRational> coeffs_;
};

/// Prints "[a0, a1, ...]_T".
std::ostream& operator<<(std::ostream& os, const ChebSeries& s);

/// T_n by the three-term recurrence.
Polynomial cheb_T(std::size_t n);

/// T_n(0): 0 for odd n, (-1)^(n/2) for even n.
BigRational cheb_T_at_zero(std::size_t n);

/// x^n = 2^(1-n) * sum' C(n, (n-j)/2) T_j over j = n (mod 2), where the
/// j = 0 term carries an extra factor 1/2.
ChebSeries monomial_to_cheb(std::size_t n);

/// Linear combination of monomial_to_cheb over the coefficients of p.
ChebSeries std_to_cheb(const Polynomial& p);

Polynomial cheb_to_std(const ChebSeries& s);

/// Change of basis through the inverse recurrence x T_k = (T_{k+1} + T_{|k-1|}) / 2.
/// Independent of monomial_to_cheb; used as a cross-check.
ChebSeries std_to_cheb_recurrence(const Polynomial& p);

/// p(-x).
Polynomial reflect(const Polynomial& p);

}  // namespace chebms
