#include "chebms/chebyshev.hpp"

#include "chebms/combinatorics.hpp"

#include <ostream>

namespace chebms {

ChebSeries::ChebSeries(std::vector<BigRational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

void ChebSeries::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::optional<std::size_t> ChebSeries::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

BigRational ChebSeries::coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigRational(); }

BigRational ChebSeries::value_at_zero() const {
  BigRational acc;
  for (std::size_t k = 0; k < coeffs_.size(); k += 2) acc += coeffs_[k] * cheb_T_at_zero(k);
  return acc;
}

ChebSeries& ChebSeries::operator+=(const ChebSeries& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

ChebSeries& ChebSeries::operator*=(const BigRational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

std::ostream& operator<<(std::ostream& os, const ChebSeries& s) {
  os << "[";
  const auto a = s.coefficients();
  for (std::size_t k = 0; k < a.size(); ++k) os << (k ? ", " : "") << a[k];
  return os << "]_T";
}

Polynomial cheb_T(std::size_t n) {
  Polynomial prev = Polynomial::constant(1);
  if (n == 0) return prev;
  Polynomial cur = Polynomial::x();
  const Polynomial two_x = Polynomial::monomial(1, 2);
  for (std::size_t k = 1; k < n; ++k) {
    Polynomial next = two_x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

BigRational cheb_T_at_zero(std::size_t n) {
  if (n % 2 == 1) return 0;
  return (n / 2) % 2 == 0 ? 1 : -1;
}

ChebSeries monomial_to_cheb(std::size_t n) {
  std::vector<BigRational> a(n + 1);
  const BigRational scale = power_of_two(1 - static_cast<std::int64_t>(n));
  for (std::size_t j = n % 2; j <= n; j += 2) {
    BigRational c = scale * BigRational(binomial(n, static_cast<std::int64_t>((n - j) / 2)));
    if (j == 0) c /= 2;
    a[j] = std::move(c);
  }
  return ChebSeries(std::move(a));
}

ChebSeries std_to_cheb(const Polynomial& p) {
  ChebSeries out;
  const auto c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].is_zero()) continue;
    out += monomial_to_cheb(i) * c[i];
  }
  return out;
}

Polynomial cheb_to_std(const ChebSeries& s) {
  Polynomial out;
  const auto a = s.coefficients();
  if (a.empty()) return out;
  Polynomial prev = Polynomial::constant(1);
  Polynomial cur = Polynomial::x();
  const Polynomial two_x = Polynomial::monomial(1, 2);
  out += prev * a[0];
  for (std::size_t k = 1; k < a.size(); ++k) {
    if (k > 1) {
      Polynomial next = two_x * cur - prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
    if (!a[k].is_zero()) out += cur * a[k];
  }
  return out;
}

ChebSeries std_to_cheb_recurrence(const Polynomial& p) {
  // Horner in the Chebyshev basis: acc <- x*acc + c_i.
  std::vector<BigRational> acc;
  const auto c = p.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) {
    std::vector<BigRational> next(acc.size() + 1);
    for (std::size_t k = 0; k < acc.size(); ++k) {
      if (acc[k].is_zero()) continue;
      if (k == 0) {
        next[1] += acc[0];
      } else {
        const BigRational half = acc[k] / 2;
        next[k + 1] += half;
        next[k - 1] += half;
      }
    }
    next[0] += c[i];
    acc = std::move(next);
  }
  return ChebSeries(std::move(acc));
}

Polynomial reflect(const Polynomial& p) {
  std::vector<BigRational> c(p.coefficients().begin(), p.coefficients().end());
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return Polynomial(std::move(c));
}

}  // namespace chebms
