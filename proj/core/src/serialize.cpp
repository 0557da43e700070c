#include "hetero/ratpoly/serialize.hpp"

#include <stdexcept>

namespace hetero {

json to_json(const Rat& v) { return to_string(v); }

json to_json(const PolyQ& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_string(c));
  return a;
}

json to_json(const PolyQR& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_json(c));
  return a;
}

json to_json(const Poly<Q6>& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(json::array({to_string(c.a), to_string(c.b)}));
  return a;
}

json to_json(const RatFuncQR& f) { return {{"num", to_json(f.num)}, {"den", to_json(f.den)}}; }

json to_json(const PositivityCertificate& c) {
  json j;
  j["method"] = to_string(c.method);
  j["subject"] = c.subject;
  j["domain"] = c.domain;
  j["interval"] = {{"lo", to_string(c.interval.lo)}, {"hi", c.interval.hi ? json(to_string(*c.interval.hi)) : json("inf")}};
  switch (c.method) {
    case CertMethod::AllCoefficientsNonneg:
      j["checked"] = to_json(c.checked);
      break;
    case CertMethod::EndpointDiscriminantSturm:
      j["family"] = to_json(c.family);
      j["at_lo"] = to_json(c.at_lo);
      j["at_hi"] = to_json(c.at_hi);
      j["discriminant"] = to_json(c.discriminant);
      j["discriminant_degree"] = c.discriminant.degree();
      j["witness"] = to_string(c.witness);
      j["witness_roots"] = c.witness_roots;
      break;
    case CertMethod::DescartesAfterSubstitution:
      j["original"] = to_json(c.original);
      j["substitution"] = "r = z^2/(sqrt(6)(1+z^2))";
      j["substituted"] = to_json(c.substituted);
      break;
  }
  return j;
}

Rat rat_from_json(const json& j) {
  if (!j.is_string()) throw std::invalid_argument("rational must be encoded as a string");
  return parse_rat(j.get<std::string>());
}

PolyQ polyq_from_json(const json& j) {
  std::vector<Rat> v;
  for (const auto& c : j) v.push_back(rat_from_json(c));
  return PolyQ(std::move(v));
}

PolyQR polyqr_from_json(const json& j) {
  std::vector<PolyQ> v;
  for (const auto& c : j) v.push_back(polyq_from_json(c));
  return PolyQR(std::move(v));
}

Poly<Q6> polyq6_from_json(const json& j) {
  std::vector<Q6> v;
  for (const auto& c : j) v.emplace_back(rat_from_json(c.at(0)), rat_from_json(c.at(1)));
  return Poly<Q6>(std::move(v));
}

RatFuncQR ratfunc_from_json(const json& j) { return {polyqr_from_json(j.at("num")), polyqr_from_json(j.at("den"))}; }

PositivityCertificate certificate_from_json(const json& j) {
  PositivityCertificate c;
  c.method = parse_cert_method(j.at("method").get<std::string>());
  c.subject = j.value("subject", "");
  c.domain = j.value("domain", "");
  if (j.contains("interval")) {
    c.interval.lo = rat_from_json(j["interval"].at("lo"));
    const auto& hi = j["interval"].at("hi");
    if (hi != "inf") c.interval.hi = rat_from_json(hi);
  }
  switch (c.method) {
    case CertMethod::AllCoefficientsNonneg:
      c.checked = polyqr_from_json(j.at("checked"));
      break;
    case CertMethod::EndpointDiscriminantSturm:
      c.family = polyqr_from_json(j.at("family"));
      c.at_lo = polyq_from_json(j.at("at_lo"));
      c.at_hi = polyq_from_json(j.at("at_hi"));
      c.discriminant = polyq_from_json(j.at("discriminant"));
      c.witness = rat_from_json(j.at("witness"));
      c.witness_roots = j.at("witness_roots").get<int>();
      break;
    case CertMethod::DescartesAfterSubstitution:
      c.original = polyq_from_json(j.at("original"));
      c.substituted = polyq6_from_json(j.at("substituted"));
      break;
  }
  return c;
}

}  // namespace hetero
