#pragma once

#include <vector>

#include "json.hpp"

#include "chebms/chebyshev.hpp"
#include "chebms/decision.hpp"
#include "chebms/diagonal_operator.hpp"
#include "chebms/hyperbolicity.hpp"
#include "chebms/identities.hpp"
#include "chebms/polynomial.hpp"
#include "chebms/rational.hpp"
#include "chebms/sequence.hpp"

namespace chebms {

using Json = nlohmann::ordered_json;

// Rationals are written as "p/q" strings ("p" when q == 1).
Json to_json(const BigRational& q);
BigRational rational_from_json(const Json& j);

Json to_json(const std::vector<BigRational>& values);
std::vector<BigRational> rationals_from_json(const Json& j);

// {"basis": "standard" | "chebyshev", "coefficients": [...]}
Json to_json(const Polynomial& p);
Json to_json(const ChebSeries& s);
Polynomial polynomial_from_json(const Json& j);
ChebSeries cheb_series_from_json(const Json& j);

// {"spec", "k_max", "coefficients"}
Json to_json(const SequenceSpec& spec, const SymbolPrefix& prefix);

// {"status", "witness": {"n","q2n","q2n2"} | {"counterexample","image","delta"} | null, "notes"}
Json to_json(const Verdict& v);
Verdict verdict_from_json(const Json& j);

// {"input_poly", "image_poly", "input_real_roots", "image_real_root_deficit"}
Json to_json(const Counterexample& c);

// {label: {"checked_range", "pass"}, ...}
Json to_json(const std::vector<IdentityCheck>& checks);

}  // namespace chebms
