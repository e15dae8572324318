#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chebms/rational.hpp"

namespace chebms {

/// Polynomial in the standard monomial basis with exact rational
/// coefficients. Index i holds the coefficient of x^i. Trailing zeros are
/// trimmed so the zero polynomial is the empty list.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<BigRational> coefficients);

  static Polynomial constant(const BigRational& c);
  static Polynomial monomial(std::size_t power, const BigRational& coefficient = 1);
  /// The identity polynomial x.
  static Polynomial x();

  /// Empty for the zero polynomial (degree minus infinity).
  std::optional<std::size_t> degree() const;
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of x^i; zero beyond the degree.
  BigRational coefficient(std::size_t i) const;
  std::span<const BigRational> coefficients() const { return coeffs_; }
  /// Precondition: not the zero polynomial.
  const BigRational& leading() const { return coeffs_.back(); }

  BigRational evaluate(const BigRational& at) const;
  /// Sign of p(at) as -1, 0, +1.
  int sign_at(const BigRational& at) const { return evaluate(at).sign(); }

  Polynomial derivative() const;
  Polynomial monic() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const BigRational& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const BigRational& s) { return a *= s; }
  friend Polynomial operator*(const BigRational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Polynomial long division; throws DomainError for a zero divisor.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& dividend, const Polynomial& divisor);

  /// Human-readable form in the variable `var`, e.g. "2*x^2 - 1".
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();

  std::vector<BigRational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

Polynomial pow(const Polynomial& base, std::size_t exponent);

/// p(q(x)).
Polynomial compose(const Polynomial& p, const Polynomial& q);

/// Monic greatest common divisor; gcd(0, 0) = 0.
Polynomial gcd(Polynomial a, Polynomial b);

}  // namespace chebms
