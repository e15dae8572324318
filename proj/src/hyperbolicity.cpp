#include "chebms/hyperbolicity.hpp"

#include <algorithm>
#include <random>

#include "chebms/diagonal_operator.hpp"
#include "chebms/errors.hpp"

namespace chebms {

namespace {

std::size_t count_variations(const std::vector<int>& signs) {
  std::size_t count = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int sign_at_plus_infinity(const Polynomial& p) { return p.leading().sign(); }

int sign_at_minus_infinity(const Polynomial& p) {
  const int s = p.leading().sign();
  return (*p.degree() % 2 == 0) ? s : -s;
}

// Small rational in [-range, range] with denominator in 1..max_den.
BigRational small_rational(std::mt19937_64& rng, long range, long max_den) {
  const long den = 1 + static_cast<long>(rng() % static_cast<std::uint64_t>(max_den));
  const long span = 2 * range * den + 1;
  const long num = static_cast<long>(rng() % static_cast<std::uint64_t>(span)) - range * den;
  return BigRational(BigInt(num), BigInt(den));
}

}  // namespace

std::size_t SturmChain::variations_at(const BigRational& x) const {
  std::vector<int> signs;
  signs.reserve(polynomials.size());
  for (const auto& p : polynomials) signs.push_back(p.sign_at(x));
  return count_variations(signs);
}

std::size_t SturmChain::variations_at_minus_infinity() const {
  std::vector<int> signs;
  for (const auto& p : polynomials) signs.push_back(sign_at_minus_infinity(p));
  return count_variations(signs);
}

std::size_t SturmChain::variations_at_plus_infinity() const {
  std::vector<int> signs;
  for (const auto& p : polynomials) signs.push_back(sign_at_plus_infinity(p));
  return count_variations(signs);
}

Polynomial square_free_part(const Polynomial& p) {
  if (p.is_zero()) return {};
  const Polynomial g = gcd(p, p.derivative());
  return Polynomial::divmod(p, g).first.monic();
}

SturmChain sturm_chain(const Polynomial& p) {
  if (p.is_zero()) throw DomainError("Sturm chain of the zero polynomial");
  SturmChain chain;
  Polynomial a = square_free_part(p);
  Polynomial b = a.derivative();
  chain.polynomials.push_back(a);
  while (!b.is_zero()) {
    chain.polynomials.push_back(b);
    Polynomial r = -Polynomial::divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return chain;
}

std::size_t real_root_count(const Polynomial& p) {
  const SturmChain chain = sturm_chain(p);
  return chain.variations_at_minus_infinity() - chain.variations_at_plus_infinity();
}

std::size_t real_root_count(const Polynomial& p, const BigRational& lo, const BigRational& hi) {
  if (!(lo < hi)) throw DegenerateInterval("real_root_count needs lo < hi");
  // With a square-free chain a root sitting exactly at an endpoint is
  // counted at hi and not at lo, giving the half-open interval (lo, hi].
  const SturmChain chain = sturm_chain(p);
  return chain.variations_at(lo) - chain.variations_at(hi);
}

bool is_hyperbolic(const Polynomial& p) {
  if (p.is_zero()) return true;
  const Polynomial sf = square_free_part(p);
  return real_root_count(sf) == *sf.degree();
}

std::optional<Counterexample> falsify_ms(const SequenceSpec& spec, std::size_t degree_max, std::uint64_t seed,
                                         std::size_t trials) {
  if (degree_max == 0) throw DomainError("falsify_ms needs degree_max >= 1");
  degree_max = std::min(degree_max, spec.max_index());
  // Constants are mapped to constants.
  if (degree_max == 0) return std::nullopt;
  std::mt19937_64 rng(seed);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const std::size_t degree = 1 + static_cast<std::size_t>(rng() % degree_max);
    Polynomial candidate = Polynomial::constant(1);
    if (rng() % 2 == 0) {
      const BigRational shift = small_rational(rng, 3, 4);
      candidate = pow(Polynomial({shift, 1}), degree);
    } else {
      for (std::size_t f = 0; f < degree; ++f) {
        candidate = candidate * Polynomial({-small_rational(rng, 3, 4), 1});
      }
    }
    const Polynomial image = apply_diagonal(spec, candidate);
    if (is_hyperbolic(image)) continue;
    // Candidates are hyperbolic by construction; confirm before reporting.
    if (!is_hyperbolic(candidate)) continue;
    Counterexample out;
    out.input_real_roots = real_root_count(candidate);
    const Polynomial image_sf = square_free_part(image);
    out.image_real_root_deficit = *image_sf.degree() - real_root_count(image_sf);
    out.input = std::move(candidate);
    out.image = image;
    return out;
  }
  return std::nullopt;
}

}  // namespace chebms
