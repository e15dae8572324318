#pragma once

#include <cstddef>
#include <vector>

#include "chebms/chebyshev.hpp"
#include "chebms/polynomial.hpp"
#include "chebms/sequence.hpp"

namespace chebms {

/// Coefficients of y^m in G_K(0, y), m = 0..2*k_max. Odd entries are zero.
struct SymbolPrefix {
  std::vector<BigRational> coefficients;
  std::size_t k_max = 0;
};

/// K[sum a_k T_k] = sum gamma_k a_k T_k.
ChebSeries apply_diagonal(const SequenceSpec& spec, const ChebSeries& s);

/// K applied to a standard-basis polynomial.
Polynomial apply_diagonal(const SequenceSpec& spec, const Polynomial& p);

/// Q_n(0) = [K x^n]_{x=0} / n!, evaluated through the Chebyshev expansion
/// of x^n and T_j(0).
BigRational q_at_zero_direct(const SequenceSpec& spec, std::size_t n);

/// Q_{2k}(0) = 2^(1-2k)/(2k)! * [ C(2k,k) gamma_0 / 2 + sum_{i=1}^k (-1)^i C(2k,k-i) gamma_{2i} ].
BigRational q2k_closed(const SequenceSpec& spec, std::size_t k);

SymbolPrefix symbol_prefix(const SequenceSpec& spec, std::size_t k_max);

/// (xD + (x^2-1)D^2)^j p. T_k is an eigenvector with eigenvalue k^(2j).
Polynomial cheb_diffop_power(std::size_t j, const Polynomial& p);

}  // namespace chebms
