#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "chebms/polynomial.hpp"
#include "chebms/sequence.hpp"

namespace chebms {

/// Signed remainder sequence of the square-free part of a polynomial.
struct SturmChain {
  std::vector<Polynomial> polynomials;

  /// Sign variations at x, zeros skipped.
  std::size_t variations_at(const BigRational& x) const;
  std::size_t variations_at_minus_infinity() const;
  std::size_t variations_at_plus_infinity() const;
};

/// p / gcd(p, p'), made monic. Zero stays zero.
Polynomial square_free_part(const Polynomial& p);

/// Precondition: p is not the zero polynomial (DomainError otherwise).
SturmChain sturm_chain(const Polynomial& p);

/// Number of distinct real roots of p.
std::size_t real_root_count(const Polynomial& p);

/// Number of distinct real roots in (lo, hi]. DegenerateInterval unless lo < hi.
std::size_t real_root_count(const Polynomial& p, const BigRational& lo, const BigRational& hi);

/// Only real zeros, or identically zero.
bool is_hyperbolic(const Polynomial& p);

struct Counterexample {
  Polynomial input;
  Polynomial image;
  std::size_t input_real_roots = 0;
  /// Degree of the image's square-free part minus its distinct real roots.
  std::size_t image_real_root_deficit = 0;
};

/// Deterministic random search for hyperbolic p with K[p] not hyperbolic.
/// Candidates are products of linear factors with small rational roots and
/// shifted powers (x + a)^d, d <= degree_max. Every returned counterexample
/// has been re-checked on both sides.
std::optional<Counterexample> falsify_ms(const SequenceSpec& spec, std::size_t degree_max, std::uint64_t seed,
                                         std::size_t trials);

}  // namespace chebms
