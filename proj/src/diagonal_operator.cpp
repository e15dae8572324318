#include "chebms/diagonal_operator.hpp"

#include "chebms/combinatorics.hpp"

namespace chebms {

ChebSeries apply_diagonal(const SequenceSpec& spec, const ChebSeries& s) {
  const auto a = s.coefficients();
  std::vector<BigRational> out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = spec.eval(k) * a[k];
  return ChebSeries(std::move(out));
}

Polynomial apply_diagonal(const SequenceSpec& spec, const Polynomial& p) {
  return cheb_to_std(apply_diagonal(spec, std_to_cheb(p)));
}

BigRational q_at_zero_direct(const SequenceSpec& spec, std::size_t n) {
  const ChebSeries image = apply_diagonal(spec, monomial_to_cheb(n));
  return image.value_at_zero() / BigRational(factorial(n));
}

BigRational q2k_closed(const SequenceSpec& spec, std::size_t k) {
  const std::uint64_t two_k = 2 * k;
  const auto kk = static_cast<std::int64_t>(k);
  BigRational bracket = BigRational(binomial(two_k, kk)) * spec.eval(0) / 2;
  for (std::int64_t i = 1; i <= kk; ++i) {
    BigRational term = BigRational(binomial(two_k, kk - i)) * spec.eval(static_cast<std::size_t>(2 * i));
    if (i % 2 == 1) {
      bracket -= term;
    } else {
      bracket += term;
    }
  }
  return power_of_two(1 - static_cast<std::int64_t>(two_k)) * bracket / BigRational(factorial(two_k));
}

SymbolPrefix symbol_prefix(const SequenceSpec& spec, std::size_t k_max) {
  SymbolPrefix out;
  out.k_max = k_max;
  out.coefficients.resize(2 * k_max + 1);
  for (std::size_t k = 0; k <= k_max; ++k) out.coefficients[2 * k] = q2k_closed(spec, k);
  return out;
}

Polynomial cheb_diffop_power(std::size_t j, const Polynomial& p) {
  const Polynomial x = Polynomial::x();
  const Polynomial x2_minus_1({-1, 0, 1});
  Polynomial out = p;
  for (std::size_t step = 0; step < j; ++step) {
    const Polynomial d1 = out.derivative();
    out = x * d1 + x2_minus_1 * d1.derivative();
  }
  return out;
}

}  // namespace chebms
