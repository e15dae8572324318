#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "chebms/rational.hpp"

namespace chebms {

/// gamma_k = sum_i coeffs[i] * k^i.
struct PolynomialSeq {
  std::vector<BigRational> coeffs;
};

/// gamma_k = ratio^k, with 0^0 = 1.
struct GeometricSeq {
  BigRational ratio;
};

/// gamma_k = values[k]; evaluation past the end throws IndexOutOfRange.
struct ExplicitSeq {
  std::vector<BigRational> values;
};

/// A real sequence {gamma_k} defining the diagonal operator on the
/// Chebyshev basis.
class SequenceSpec {
 public:
  using Variant = std::variant<PolynomialSeq, GeometricSeq, ExplicitSeq>;

  static SequenceSpec polynomial(std::vector<BigRational> coeffs);
  static SequenceSpec geometric(BigRational ratio);
  static SequenceSpec explicit_values(std::vector<BigRational> values);

  /// Parses `poly:b0,b1,...`, `geom:r` or `explicit:g0,g1,...`.
  static SequenceSpec parse(std::string_view text);

  BigRational eval(std::size_t k) const;

  /// Largest index that can be evaluated, or SIZE_MAX for unbounded kinds.
  std::size_t max_index() const;

  const Variant& variant() const { return value_; }

  /// Inverse of parse().
  std::string to_string() const;

  friend bool operator==(const SequenceSpec& a, const SequenceSpec& b);

 private:
  explicit SequenceSpec(Variant v) : value_(std::move(v)) {}

  Variant value_;
};

/// Splits "a,b,c" into rationals; an empty string yields an empty list.
std::vector<BigRational> parse_rational_list(std::string_view text);

}  // namespace chebms
