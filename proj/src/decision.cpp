#include "chebms/decision.hpp"

#include "chebms/closed_forms.hpp"
#include "chebms/combinatorics.hpp"
#include "chebms/diagonal_operator.hpp"
#include "chebms/errors.hpp"
#include "chebms/hyperbolicity.hpp"

namespace chebms {

namespace {

constexpr std::string_view kNecessaryOnly =
    "evenness is a necessary condition only; this verdict does not claim multiplier-sequence membership";

std::vector<BigRational> trimmed(std::vector<BigRational> c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
  return c;
}

}  // namespace

std::string_view to_string(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::RejectedWithWitness:
      return "RejectedWithWitness";
    case VerdictStatus::RejectedNonReal:
      return "RejectedNonReal";
    case VerdictStatus::PassedNecessaryConditions:
      return "PassedNecessaryConditions";
    case VerdictStatus::KnownMultiplierSequence:
      return "KnownMultiplierSequence";
  }
  return "?";
}

VerdictStatus verdict_status_from_string(std::string_view text) {
  for (auto s : {VerdictStatus::RejectedWithWitness, VerdictStatus::RejectedNonReal,
                 VerdictStatus::PassedNecessaryConditions, VerdictStatus::KnownMultiplierSequence}) {
    if (to_string(s) == text) return s;
  }
  throw ParseError("unknown verdict status '" + std::string(text) + "'");
}

std::optional<SignWitness> find_sign_witness(const SequenceSpec& spec, std::size_t k_start, std::size_t k_max) {
  if (k_start < 1 || k_max < k_start) throw DomainError("find_sign_witness needs 1 <= k_start <= k_max");
  BigRational current = q2k_closed(spec, k_start);
  for (std::size_t n = k_start; n <= k_max; ++n) {
    BigRational next = q2k_closed(spec, n + 1);
    if (current.sign() * next.sign() > 0) return SignWitness{n, std::move(current), std::move(next)};
    current = std::move(next);
  }
  return std::nullopt;
}

bool is_even_polynomial(const std::vector<BigRational>& coeffs) {
  for (std::size_t i = 1; i < coeffs.size(); i += 2) {
    if (!coeffs[i].is_zero()) return false;
  }
  return true;
}

Verdict classify_polynomial_sequence(const std::vector<BigRational>& coeffs_in, std::size_t k_max) {
  if (k_max < 1) throw DomainError("classify_polynomial_sequence needs k_max >= 1");
  const std::vector<BigRational> coeffs = trimmed(coeffs_in);
  Verdict verdict;
  if (is_even_polynomial(coeffs)) {
    verdict.status = VerdictStatus::PassedNecessaryConditions;
    verdict.notes = "interpolating polynomial is even; " + std::string(kNecessaryOnly);
    return verdict;
  }
  const std::size_t degree = coeffs.size() - 1;
  const std::size_t k_start = degree / 2 + 1;
  const SequenceSpec spec = SequenceSpec::polynomial(coeffs);
  if (k_max >= k_start) {
    if (auto w = find_sign_witness(spec, k_start, k_max)) {
      verdict.status = VerdictStatus::RejectedWithWitness;
      verdict.notes = "Q_" + std::to_string(2 * w->n) + "(0) and Q_" + std::to_string(2 * w->n + 2) +
                      "(0) have the same sign, so G_K(0,y) is not in the Laguerre-Polya class";
      verdict.witness = std::move(*w);
      return verdict;
    }
  }
  verdict.status = VerdictStatus::PassedNecessaryConditions;
  verdict.notes = "inconclusive: polynomial has an odd part, so a witness exists, but none was found for k in [" +
                  std::to_string(k_start) + ", " + std::to_string(k_max) + "]; increase k_max. " +
                  std::string(kNecessaryOnly);
  return verdict;
}

Polynomial sign_polynomial(const std::vector<BigRational>& coeffs_in) {
  const std::vector<BigRational> coeffs = trimmed(coeffs_in);
  if (is_even_polynomial(coeffs)) throw DomainError("sign polynomial is undefined for an even polynomial");
  std::size_t top = coeffs.size() - 1;
  if (top % 2 == 0) --top;
  while (coeffs[top].is_zero()) top -= 2;

  const Polynomial k = Polynomial::x();
  // 2k - n
  const Polynomial base = k * BigRational(2) - Polynomial::constant(BigRational(top));
  Polynomial out;
  for (std::size_t m = 1; m <= top; m += 2) {
    if (coeffs[m].is_zero()) continue;
    Polynomial shift = Polynomial::constant(1);
    for (std::size_t j = 0; j < top - m; ++j) shift = shift * (base + Polynomial::constant(BigRational(j)));
    out += shift * N_polynomial(m) * (coeffs[m] * power_of_two(static_cast<std::int64_t>(m)));
  }
  return out;
}

BigRational cubic_discriminant(const BigRational& a, const BigRational& b, const BigRational& c,
                               const BigRational& d) {
  if (a.is_zero()) throw DomainError("cubic discriminant needs a nonzero leading coefficient");
  return b * b * c * c - 4 * a * c * c * c - 4 * b * b * b * d - 27 * a * a * d * d + 18 * a * b * c * d;
}

Verdict geometric_ms_test(const BigRational& r) {
  Verdict verdict;
  if (r == BigRational(0) || r == BigRational(1)) {
    verdict.status = VerdictStatus::KnownMultiplierSequence;
    verdict.notes = "{" + r.to_string() + "^k} is a multiplier sequence for every basis";
    return verdict;
  }
  if (r == BigRational(-1)) {
    verdict.status = VerdictStatus::KnownMultiplierSequence;
    verdict.notes = "T_k(-x) = (-1)^k T_k(x), so K[p](x) = p(-x) preserves real-rootedness";
    return verdict;
  }
  const Polynomial input = pow(Polynomial({r / 3, 1}), 3);
  const Polynomial image = apply_diagonal(SequenceSpec::geometric(r), input);
  const BigRational delta =
      cubic_discriminant(image.coefficient(3), image.coefficient(2), image.coefficient(1), image.coefficient(0));
  if (delta.sign() >= 0 || !is_hyperbolic(input) || is_hyperbolic(image)) {
    throw Error("geometric counterexample failed verification for r = " + r.to_string());
  }
  verdict.status = VerdictStatus::RejectedNonReal;
  verdict.notes = "K maps (x + r/3)^3 to a cubic with negative discriminant";
  verdict.witness = NonRealWitness{input, image, delta};
  return verdict;
}

}  // namespace chebms
