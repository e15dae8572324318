#include "chebms/sequence.hpp"

#include <limits>

#include "chebms/errors.hpp"

namespace chebms {

namespace {

void trim_trailing_zeros(std::vector<BigRational>& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

std::string join(const std::vector<BigRational>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += values[i].to_string();
  }
  return out;
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

std::vector<BigRational> parse_rational_list(std::string_view text) {
  std::vector<BigRational> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(BigRational::parse(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

SequenceSpec SequenceSpec::polynomial(std::vector<BigRational> coeffs) {
  trim_trailing_zeros(coeffs);
  return SequenceSpec(PolynomialSeq{std::move(coeffs)});
}

SequenceSpec SequenceSpec::geometric(BigRational ratio) { return SequenceSpec(GeometricSeq{std::move(ratio)}); }

SequenceSpec SequenceSpec::explicit_values(std::vector<BigRational> values) {
  return SequenceSpec(ExplicitSeq{std::move(values)});
}

SequenceSpec SequenceSpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError("sequence spec must look like poly:..., geom:r or explicit:...");
  }
  const std::string_view kind = text.substr(0, colon);
  const std::string_view body = text.substr(colon + 1);
  if (kind == "poly") return polynomial(parse_rational_list(body));
  if (kind == "geom") return geometric(BigRational::parse(body));
  if (kind == "explicit") {
    auto values = parse_rational_list(body);
    if (values.empty()) throw ParseError("explicit sequence needs at least one value");
    return explicit_values(std::move(values));
  }
  throw ParseError("unknown sequence kind '" + std::string(kind) + "'");
}

BigRational SequenceSpec::eval(std::size_t k) const {
  return std::visit(
      overloaded{
          [k](const PolynomialSeq& p) {
            BigRational acc;
            const BigRational kk(k);
            for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) acc = acc * kk + *it;
            return acc;
          },
          [k](const GeometricSeq& g) { return g.ratio.pow(static_cast<long>(k)); },
          [k](const ExplicitSeq& e) {
            if (k >= e.values.size()) {
              throw IndexOutOfRange("explicit sequence has " + std::to_string(e.values.size()) +
                                    " terms; gamma_" + std::to_string(k) + " requested");
            }
            return e.values[k];
          },
      },
      value_);
}

std::size_t SequenceSpec::max_index() const {
  if (const auto* e = std::get_if<ExplicitSeq>(&value_)) return e->values.size() - 1;
  return std::numeric_limits<std::size_t>::max();
}

std::string SequenceSpec::to_string() const {
  return std::visit(overloaded{
                        [](const PolynomialSeq& p) { return "poly:" + join(p.coeffs); },
                        [](const GeometricSeq& g) { return "geom:" + g.ratio.to_string(); },
                        [](const ExplicitSeq& e) { return "explicit:" + join(e.values); },
                    },
                    value_);
}

bool operator==(const SequenceSpec& a, const SequenceSpec& b) { return a.to_string() == b.to_string(); }

}  // namespace chebms
