#include "chebms/serialize.hpp"

#include "chebms/errors.hpp"

namespace chebms {

Json to_json(const BigRational& q) { return q.to_string(); }

BigRational rational_from_json(const Json& j) {
  if (!j.is_string()) throw ParseError("rational must be a \"p/q\" string");
  return BigRational::parse(j.get<std::string>());
}

Json to_json(const std::vector<BigRational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_json(v));
  return out;
}

std::vector<BigRational> rationals_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of rationals");
  std::vector<BigRational> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(rational_from_json(e));
  return out;
}

namespace {

Json basis_json(const char* basis, std::span<const BigRational> coeffs) {
  return Json{{"basis", basis}, {"coefficients", to_json(std::vector<BigRational>(coeffs.begin(), coeffs.end()))}};
}

std::vector<BigRational> basis_coefficients(const Json& j, const char* basis) {
  if (!j.is_object() || j.value("basis", "") != basis) {
    throw ParseError(std::string("expected a polynomial with basis \"") + basis + "\"");
  }
  return rationals_from_json(j.at("coefficients"));
}

}  // namespace

Json to_json(const Polynomial& p) { return basis_json("standard", p.coefficients()); }
Json to_json(const ChebSeries& s) { return basis_json("chebyshev", s.coefficients()); }

Polynomial polynomial_from_json(const Json& j) { return Polynomial(basis_coefficients(j, "standard")); }
ChebSeries cheb_series_from_json(const Json& j) { return ChebSeries(basis_coefficients(j, "chebyshev")); }

Json to_json(const SequenceSpec& spec, const SymbolPrefix& prefix) {
  return Json{{"spec", spec.to_string()}, {"k_max", prefix.k_max}, {"coefficients", to_json(prefix.coefficients)}};
}

Json to_json(const Verdict& v) {
  Json witness = nullptr;
  if (const auto* s = std::get_if<SignWitness>(&v.witness)) {
    witness = Json{{"n", s->n}, {"q2n", to_json(s->q2n)}, {"q2n2", to_json(s->q2n2)}};
  } else if (const auto* r = std::get_if<NonRealWitness>(&v.witness)) {
    witness = Json{{"counterexample", to_json(r->counterexample)}, {"image", to_json(r->image)}, {"delta", to_json(r->delta)}};
  }
  return Json{{"status", std::string(to_string(v.status))}, {"witness", witness}, {"notes", v.notes}};
}

Verdict verdict_from_json(const Json& j) {
  Verdict v;
  v.status = verdict_status_from_string(j.at("status").get<std::string>());
  v.notes = j.at("notes").get<std::string>();
  const Json& w = j.at("witness");
  if (w.is_object()) {
    if (w.contains("n")) {
      v.witness = SignWitness{w.at("n").get<std::size_t>(), rational_from_json(w.at("q2n")), rational_from_json(w.at("q2n2"))};
    } else {
      v.witness = NonRealWitness{polynomial_from_json(w.at("counterexample")), polynomial_from_json(w.at("image")),
                                 rational_from_json(w.at("delta"))};
    }
  }
  return v;
}

Json to_json(const Counterexample& c) {
  return Json{{"input_poly", to_json(c.input)},
              {"image_poly", to_json(c.image)},
              {"input_real_roots", c.input_real_roots},
              {"image_real_root_deficit", c.image_real_root_deficit}};
}

Json to_json(const std::vector<IdentityCheck>& checks) {
  Json out = Json::object();
  for (const auto& c : checks) out[c.label] = Json{{"checked_range", c.checked_range}, {"pass", c.pass}};
  return out;
}

}  // namespace chebms
