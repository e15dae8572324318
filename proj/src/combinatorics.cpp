#include "chebms/combinatorics.hpp"

namespace chebms {

BigInt binomial(std::uint64_t n, std::int64_t k) {
  if (k < 0 || static_cast<std::uint64_t>(k) > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, static_cast<unsigned long>(k));
  return out;
}

BigInt factorial(std::uint64_t n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

BigRational rising(const BigRational& x, std::uint64_t n) {
  BigRational out = 1;
  for (std::uint64_t j = 0; j < n; ++j) out *= x + BigRational(j);
  return out;
}

BigRational falling(const BigRational& x, std::uint64_t n) {
  BigRational out = 1;
  for (std::uint64_t j = 0; j < n; ++j) out *= x - BigRational(j);
  return out;
}

BigRational power_of_two(std::int64_t e) {
  BigInt p;
  const auto magnitude = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_ui_pow_ui(p.get_mpz_t(), 2, magnitude);
  return e < 0 ? BigRational(BigInt(1), p) : BigRational(p);
}

}  // namespace chebms
