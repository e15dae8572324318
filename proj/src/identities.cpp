#include "chebms/identities.hpp"

#include <algorithm>
#include <functional>

#include "chebms/chebyshev.hpp"
#include "chebms/combinatorics.hpp"
#include "chebms/diagonal_operator.hpp"
#include "chebms/sequence.hpp"

namespace chebms {

namespace {

std::string range(const std::string& var, std::size_t lo, std::size_t hi) {
  return std::to_string(lo) + "<=" + var + "<=" + std::to_string(hi);
}

BigRational binom_2k_km1(std::size_t k) { return BigRational(binomial(2 * k, static_cast<std::int64_t>(k) - 1)); }

// The three simplifications A(1,k), A(3,k), A(5,k) as rational functions of k.
BigRational displayed_A(std::size_t n, std::size_t k) {
  const BigRational kk(k);
  const BigRational c = binom_2k_km1(k);
  switch (n) {
    case 1:
      return -(kk + 1) / (2 * kk - 1) * c;
    case 3:
      return 4 * kk * (kk + 1) / ((2 * kk - 1) * (2 * kk - 3)) * c;
    case 5:
      return -16 * kk * (kk + 1) * (4 * kk - 1) / ((2 * kk - 1) * (2 * kk - 3) * (2 * kk - 5)) * c;
    default:
      return {};
  }
}

IdentityCheck run(std::string label, std::string checked, const std::function<bool()>& body) {
  return IdentityCheck{std::move(label), std::move(checked), body()};
}

}  // namespace

std::vector<IdentityCheck> verify_identities(const IdentityRanges& r, const WorpitzkyTable& table) {
  std::vector<IdentityCheck> out;

  out.push_back(run("worpitzky_recurrences", range("n", 0, table.n_max()) + ", 0<=i<=n",
                    [&] { return table.satisfies_recurrences(); }));

  out.push_back(run("A_three_way", range("n", 1, r.n_max) + ", floor(n/2)+1<=k<=" + std::to_string(r.k_max), [&] {
    for (std::size_t n = 1; n <= r.n_max; ++n) {
      for (std::size_t k = n / 2 + 1; k <= r.k_max; ++k) {
        const BigRational direct = A_direct(n, k);
        if (direct != A_via_theta(n, k) || direct != A_closed(n, k, table)) return false;
      }
    }
    return true;
  }));

  out.push_back(run("A_displayed_simplifications", "n in {1,3,5}, n/2<k<=" + std::to_string(r.displayed_k_max), [&] {
    for (std::size_t n : {1u, 3u, 5u}) {
      for (std::size_t k = n / 2 + 1; k <= r.displayed_k_max; ++k) {
        if (A_direct(n, k) != displayed_A(n, k)) return false;
      }
    }
    return true;
  }));

  out.push_back(run("N_degree_bound", range("n", 1, r.n_max), [&] {
    for (std::size_t n = 1; n <= r.n_max; ++n) {
      const Polynomial p = N_polynomial(n);
      if (n % 2 == 0 && !p.is_zero()) return false;
      if (n % 2 == 1 && (p.is_zero() || *p.degree() > n)) return false;
    }
    return true;
  }));

  out.push_back(run("N_even_vanishing", "even n<=" + std::to_string(r.n_max) + ", k in n/2+1..n/2+n+2", [&] {
    for (std::size_t n = 2; n <= r.n_max; n += 2) {
      for (std::size_t k = n / 2 + 1; k <= n / 2 + n + 2; ++k) {
        if (!N_closed(n, BigRational(k), table).is_zero()) return false;
      }
    }
    return true;
  }));

  out.push_back(run("N_at_half_nonzero", "odd n<=" + std::to_string(r.n_max), [&] {
    for (std::size_t n = 1; n <= r.n_max; n += 2) {
      const BigRational half(BigInt(static_cast<unsigned long>(n)), BigInt(2));
      const BigRational value = N_closed(n, half, table);
      if (value.is_zero() || value != N_at_half_product(n)) return false;
    }
    return true;
  }));

  out.push_back(run("lemsum_hypergeometric", range("k", 1, r.hyp_k_max), [&] {
    for (std::size_t k = 1; k <= r.hyp_k_max; ++k) {
      const BigRational kk(k);
      const Polynomial series = reflect(hyp2f1_terminating_poly(1, 1 - kk, 2 + kk));
      if (Polynomial::x() * series * binom_2k_km1(k) != f_poly(k)) return false;
    }
    return true;
  }));

  out.push_back(run("theta_recursion", range("n_max", 1, r.theta_n_max) + ", n_max+2<=k<=" +
                                           std::to_string(r.theta_k_max),
                    [&] {
                      for (std::size_t n = 1; n <= r.theta_n_max; ++n) {
                        for (std::size_t k = n + 2; k <= r.theta_k_max; ++k) {
                          if (!verify_theta_recursion(n, k)) return false;
                        }
                      }
                      return true;
                    }));

  out.push_back(run("g_at_minus_one", range("i", 0, r.g_i_max) + ", i+1<=k<=" +
                                          std::to_string(std::max(r.hyp_k_max, r.g_i_max + 1)),
                    [&] {
                      const std::size_t k_hi = std::max(r.hyp_k_max, r.g_i_max + 1);
                      for (std::size_t i = 0; i <= r.g_i_max; ++i) {
                        for (std::size_t k = i + 1; k <= k_hi; ++k) {
                          if (g_eval(i, k, -1) != g_at_minus_one(i, k)) return false;
                        }
                      }
                      return true;
                    }));

  out.push_back(run("Q_link", range("n", 1, r.q_link_n_max) + ", " + range("k", 1, r.q_link_k_max), [&] {
    for (std::size_t n = 1; n <= r.q_link_n_max; ++n) {
      std::vector<BigRational> coeffs(n + 1);
      coeffs[n] = 1;
      const SequenceSpec spec = SequenceSpec::polynomial(coeffs);
      for (std::size_t k = 1; k <= r.q_link_k_max; ++k) {
        const BigRational expected = power_of_two(1 - 2 * static_cast<std::int64_t>(k)) /
                                     BigRational(factorial(2 * k)) * A_direct(n, k);
        if (q2k_closed(spec, k) != expected) return false;
      }
    }
    return true;
  }));

  return out;
}

std::vector<IdentityCheck> verify_identities(const IdentityRanges& r) {
  return verify_identities(r, WorpitzkyTable(std::max(r.n_max, r.worpitzky_n_max)));
}

bool all_pass(const std::vector<IdentityCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.pass; });
}

}  // namespace chebms
