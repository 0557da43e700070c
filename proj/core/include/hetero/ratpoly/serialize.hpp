#pragma once

// Canonical JSON forms. Rationals are strings ("p" or "p/q") so big integers
// survive any JSON reader; polynomials are coefficient arrays, low degree first.

#include "hetero/ratpoly/certificate.hpp"
#include "hetero/ratpoly/pade.hpp"

#include <json.hpp>

namespace hetero {

using json = nlohmann::ordered_json;

json to_json(const Rat& v);
json to_json(const PolyQ& p);
json to_json(const PolyQR& p);
json to_json(const Poly<Q6>& p);
json to_json(const RatFuncQR& f);
json to_json(const PositivityCertificate& c);

Rat rat_from_json(const json& j);
PolyQ polyq_from_json(const json& j);
PolyQR polyqr_from_json(const json& j);
Poly<Q6> polyq6_from_json(const json& j);
RatFuncQR ratfunc_from_json(const json& j);
PositivityCertificate certificate_from_json(const json& j);

}  // namespace hetero
