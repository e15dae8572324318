#include "chebms/closed_forms.hpp"

#include <string>

#include "chebms/chebyshev.hpp"
#include "chebms/combinatorics.hpp"
#include "chebms/errors.hpp"

namespace chebms {

namespace {

BigInt int_pow(std::uint64_t base, std::uint64_t e) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, e);
  return out;
}

Polynomial falling_poly(const Polynomial& x, std::size_t n) {
  Polynomial out = Polynomial::constant(1);
  for (std::size_t j = 0; j < n; ++j) out = out * (x - Polynomial::constant(BigRational(j)));
  return out;
}

}  // namespace

BigInt worpitzky(std::size_t i, std::size_t n) {
  if (i > n) throw DomainError("worpitzky(i, n) needs i <= n");
  BigInt sum = 0;
  for (std::size_t j = 0; j <= i + 1; ++j) {
    BigInt term = binomial(i + 1, static_cast<std::int64_t>(j)) * int_pow(j, n + 1);
    if ((i + 1 - j) % 2 == 1) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  BigInt q, r;
  const BigInt d = static_cast<unsigned long>(i + 1);
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), sum.get_mpz_t(), d.get_mpz_t());
  if (r != 0) throw Error("worpitzky sum not divisible by i+1");
  return q;
}

WorpitzkyTable::WorpitzkyTable(std::size_t n_max) : n_max_(n_max), rows_(n_max + 1) {
  for (std::size_t n = 0; n <= n_max; ++n) {
    rows_[n].reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i) rows_[n].push_back(worpitzky(i, n));
  }
}

const BigInt& WorpitzkyTable::at(std::size_t i, std::size_t n) const {
  if (n > n_max_ || i > n) throw DomainError("worpitzky table lookup out of range");
  return rows_[n][i];
}

void WorpitzkyTable::overwrite(std::size_t i, std::size_t n, BigInt value) {
  if (n > n_max_ || i > n) throw DomainError("worpitzky table lookup out of range");
  rows_[n][i] = std::move(value);
}

bool WorpitzkyTable::satisfies_recurrences() const {
  for (std::size_t n = 0; n <= n_max_; ++n) {
    if (rows_[n][0] != 1) return false;
    if (rows_[n][n] != factorial(n)) return false;
  }
  for (std::size_t n = 0; n < n_max_; ++n) {
    for (std::size_t i = 0; i <= n; ++i) {
      BigInt expected = BigInt(static_cast<unsigned long>(i + 1)) * rows_[n][i];
      if (i > 0) expected += BigInt(static_cast<unsigned long>(i)) * rows_[n][i - 1];
      if (rows_[n + 1][i] != expected) return false;
    }
    if (rows_[n + 1][n + 1] != BigInt(static_cast<unsigned long>(n + 1)) * rows_[n][n]) return false;
  }
  return true;
}

BigRational A_direct(std::size_t n, std::size_t k) {
  BigInt sum = 0;
  const auto kk = static_cast<std::int64_t>(k);
  for (std::int64_t i = 1; i <= kk; ++i) {
    BigInt term = binomial(2 * k, kk - i) * int_pow(static_cast<std::uint64_t>(2 * i), n);
    if (i % 2 == 1) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return BigRational(sum);
}

Polynomial hyp2f1_terminating_poly(const BigRational& a, const BigRational& b, const BigRational& c) {
  if (!b.is_integer() || b.sign() > 0) {
    throw NonTerminating("2F1 numerator parameter b = " + b.to_string() + " is not a non-positive integer");
  }
  const auto terms = static_cast<std::size_t>(-b.numerator().get_si());
  std::vector<BigRational> coeffs(terms + 1);
  BigRational t = 1;
  coeffs[0] = t;
  for (std::size_t m = 0; m < terms; ++m) {
    const BigRational cm = c + BigRational(m);
    if (cm.is_zero()) throw PoleInC("2F1 denominator parameter c = " + c.to_string() + " hits a zero factor");
    t *= (a + BigRational(m)) * (b + BigRational(m));
    t /= cm * BigRational(m + 1);
    coeffs[m + 1] = t;
  }
  return Polynomial(std::move(coeffs));
}

BigRational hyp2f1_terminating(const BigRational& a, const BigRational& b, const BigRational& c,
                               const BigRational& x) {
  return hyp2f1_terminating_poly(a, b, c).evaluate(x);
}

Polynomial f_poly(std::size_t k) {
  std::vector<BigRational> c(k + 1);
  for (std::size_t i = 1; i <= k; ++i) {
    c[i] = BigRational(binomial(2 * k, static_cast<std::int64_t>(k) - static_cast<std::int64_t>(i)));
  }
  return Polynomial(std::move(c));
}

Polynomial g_poly(std::size_t n, std::size_t k) {
  if (k < n + 1) {
    throw NonTerminating("g(" + std::to_string(n) + "," + std::to_string(k) + ";x) needs k >= n+1");
  }
  const BigRational nn(n), kk(k);
  const Polynomial series = hyp2f1_terminating_poly(1 + nn, 1 + nn - kk, 2 + nn + kk);
  return Polynomial::monomial(n + 1) * reflect(series);
}

BigRational g_eval(std::size_t n, std::size_t k, const BigRational& x) {
  if (k < n + 1) {
    throw NonTerminating("g(" + std::to_string(n) + "," + std::to_string(k) + ";x) needs k >= n+1");
  }
  const BigRational nn(n), kk(k);
  return x.pow(static_cast<long>(n + 1)) * hyp2f1_terminating(1 + nn, 1 + nn - kk, 2 + nn + kk, -x);
}

BigRational g_at_minus_one(std::size_t i, std::size_t k) {
  if (2 * k <= i) throw DomainError("g(i,k;-1) closed form needs k > i/2");
  const BigRational value = rising(BigRational(k + 1), i + 1) / falling(BigRational(2 * k), i + 1);
  return i % 2 == 0 ? -value : value;
}

Polynomial theta_apply(const Polynomial& p) {
  std::vector<BigRational> c(p.coefficients().begin(), p.coefficients().end());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] *= BigRational(i);
  return Polynomial(std::move(c));
}

BigRational A_via_theta(std::size_t n, std::size_t k) {
  Polynomial p = f_poly(k);
  for (std::size_t step = 0; step < n; ++step) p = theta_apply(p);
  return power_of_two(static_cast<std::int64_t>(n)) * p.evaluate(-1);
}

BigRational N_closed(std::size_t n, const BigRational& k, const WorpitzkyTable& table) {
  BigRational sum;
  for (std::size_t i = 0; i <= n; ++i) {
    BigRational term = BigRational(table.at(i, n)) * falling(k - 1, i) *
                       falling(2 * k - BigRational(i) - 1, n - i);
    if (i % 2 == 0) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return sum;
}

BigRational N_closed(std::size_t n, const BigRational& k) { return N_closed(n, k, WorpitzkyTable(n)); }

Polynomial N_polynomial(std::size_t n) {
  const WorpitzkyTable table(n);
  const Polynomial k = Polynomial::x();
  const Polynomial two_k = k * BigRational(2);
  Polynomial sum;
  for (std::size_t i = 0; i <= n; ++i) {
    const BigRational sign = i % 2 == 0 ? -1 : 1;
    sum += falling_poly(k - Polynomial::constant(1), i) *
           falling_poly(two_k - Polynomial::constant(BigRational(i) + 1), n - i) *
           (sign * BigRational(table.at(i, n)));
  }
  return sum;
}

BigRational A_closed(std::size_t n, std::size_t k, const WorpitzkyTable& table) {
  if (2 * k <= n) throw DomainError("A(n,k) closed form needs k > n/2");
  const BigRational kk(k);
  return power_of_two(static_cast<std::int64_t>(n)) *
         BigRational(binomial(2 * k, static_cast<std::int64_t>(k) - 1)) * (kk + 1) *
         N_closed(n, kk, table) / falling(2 * kk, n + 1);
}

BigRational A_closed(std::size_t n, std::size_t k) { return A_closed(n, k, WorpitzkyTable(n)); }

BigRational N_at_half(std::size_t n) {
  if (n % 2 == 0) throw DomainError("N(n, n/2) is only a nonvanishing certificate for odd n");
  return N_closed(n, BigRational(BigInt(static_cast<unsigned long>(n)), BigInt(2)));
}

BigRational N_at_half_product(std::size_t n) {
  const BigRational half(BigInt(static_cast<unsigned long>(n)), BigInt(2));
  BigRational prod = BigRational(factorial(n));
  for (std::size_t j = 1; j <= n; ++j) prod *= half - BigRational(j);
  return n % 2 == 0 ? -prod : prod;
}

bool verify_theta_recursion(std::size_t n_max, std::size_t k) {
  if (k < n_max + 2) {
    throw NonTerminating("theta recursion check needs k >= n_max + 2");
  }
  const WorpitzkyTable table(n_max);
  const BigRational kk(k);
  std::vector<Polynomial> g;
  g.reserve(n_max + 1);
  for (std::size_t i = 0; i <= n_max; ++i) g.push_back(g_poly(i, k));

  for (std::size_t n = 0; n < n_max; ++n) {
    const BigRational nn(n);
    const BigRational ratio = (kk - nn - 1) / (kk + nn + 2);
    const Polynomial rhs = (g[n] + g[n + 1] * ratio) * (nn + 1);
    if (theta_apply(g[n]) != rhs) return false;
  }

  Polynomial lhs = g[0];
  for (std::size_t n = 0; n <= n_max; ++n) {
    if (n > 0) lhs = theta_apply(lhs);
    Polynomial rhs;
    for (std::size_t i = 0; i <= n; ++i) {
      const BigRational weight =
          falling(kk - 1, i) / rising(kk + 2, i) * BigRational(table.at(i, n));
      rhs += g[i] * weight;
    }
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace chebms
