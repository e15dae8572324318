#pragma once

#include <cstdint>

#include "chebms/rational.hpp"

namespace chebms {

/// C(n, k); zero when k < 0 or k > n.
BigInt binomial(std::uint64_t n, std::int64_t k);

BigInt factorial(std::uint64_t n);

/// x^(n) = x(x+1)...(x+n-1), with x^(0) = 1.
BigRational rising(const BigRational& x, std::uint64_t n);

/// (x)_n = x(x-1)...(x-n+1), with (x)_0 = 1.
BigRational falling(const BigRational& x, std::uint64_t n);

/// 2^e for any integer e.
BigRational power_of_two(std::int64_t e);

}  // namespace chebms
