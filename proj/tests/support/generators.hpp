#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "chebms/polynomial.hpp"
#include "chebms/rational.hpp"
#include "chebms/sequence.hpp"

namespace chebms::testing {

/// Small fixed-seed generators for property checks.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) {
    return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  BigRational rational(long range = 9, long max_den = 7) {
    const long den = integer(1, max_den);
    return BigRational(BigInt(integer(-range, range)), BigInt(den));
  }

  BigRational nonzero_rational(long range = 9, long max_den = 7) {
    BigRational q;
    do {
      q = rational(range, max_den);
    } while (q.is_zero());
    return q;
  }

  std::vector<BigRational> rationals(std::size_t count, long range = 9, long max_den = 7) {
    std::vector<BigRational> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(rational(range, max_den));
    return out;
  }

  /// Random polynomial of exact degree `degree`.
  Polynomial polynomial(std::size_t degree, long range = 9, long max_den = 7) {
    auto c = rationals(degree + 1, range, max_den);
    c[degree] = nonzero_rational(range, max_den);
    return Polynomial(std::move(c));
  }

  Polynomial polynomial_up_to(std::size_t max_degree) {
    return polynomial(static_cast<std::size_t>(integer(0, static_cast<long>(max_degree))));
  }

  SequenceSpec explicit_sequence(std::size_t length) { return SequenceSpec::explicit_values(rationals(length)); }

 private:
  std::mt19937_64 rng_;
};

/// gamma_k = k^n.
inline SequenceSpec power_sequence(std::size_t n) {
  std::vector<BigRational> c(n + 1);
  c[n] = 1;
  return SequenceSpec::polynomial(std::move(c));
}

inline BigRational Q(long p, long q = 1) { return BigRational(BigInt(p), BigInt(q)); }

}  // namespace chebms::testing
