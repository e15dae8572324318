#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "chebms/polynomial.hpp"
#include "chebms/rational.hpp"
#include "chebms/sequence.hpp"

namespace chebms {

enum class VerdictStatus {
  RejectedWithWitness,
  RejectedNonReal,
  PassedNecessaryConditions,
  KnownMultiplierSequence,
};

std::string_view to_string(VerdictStatus status);
VerdictStatus verdict_status_from_string(std::string_view text);

/// Index n with Q_{2n}(0) * Q_{2n+2}(0) > 0.
struct SignWitness {
  std::size_t n = 0;
  BigRational q2n;
  BigRational q2n2;

  friend bool operator==(const SignWitness&, const SignWitness&) = default;
};

/// A hyperbolic input whose image under K has non-real zeros.
struct NonRealWitness {
  Polynomial counterexample;
  Polynomial image;
  BigRational delta;

  friend bool operator==(const NonRealWitness&, const NonRealWitness&) = default;
};

struct Verdict {
  VerdictStatus status = VerdictStatus::PassedNecessaryConditions;
  std::variant<std::monostate, SignWitness, NonRealWitness> witness;
  std::string notes;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// Smallest n in [k_start, k_max] whose consecutive Q-values have a strictly
/// positive product.
std::optional<SignWitness> find_sign_witness(const SequenceSpec& spec, std::size_t k_start, std::size_t k_max);

/// True when every odd-index coefficient is zero.
bool is_even_polynomial(const std::vector<BigRational>& coeffs);

/// Rejects gamma_k = p(k) with a sign-pair witness when p has an odd part.
/// Even p, or an exhausted scan, yields PassedNecessaryConditions.
Verdict classify_polynomial_sequence(const std::vector<BigRational>& coeffs, std::size_t k_max);

/// S(k) = sum over odd powers m with coefficient c_m of
///   2^m c_m (2k-n)^(n-m) N(m,k),
/// n the largest odd power present. For k > deg(p)/2, sign S(k) = sign Q_{2k}(0).
/// DomainError for even p.
Polynomial sign_polynomial(const std::vector<BigRational>& coeffs);

/// b^2c^2 - 4ac^3 - 4b^3d - 27a^2d^2 + 18abcd. DomainError if a = 0.
BigRational cubic_discriminant(const BigRational& a, const BigRational& b, const BigRational& c,
                               const BigRational& d);

/// {r^k} is a Chebyshev multiplier sequence iff r is -1, 0 or 1. Otherwise
/// K maps the hyperbolic cubic (x + r/3)^3 to a cubic with negative
/// discriminant.
Verdict geometric_ms_test(const BigRational& r);

}  // namespace chebms
