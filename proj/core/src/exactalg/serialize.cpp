#include "rcflab/exactalg/serialize.hpp"

namespace rcf {

using nlohmann::json;

namespace {

BigInt parse_int(const json& j) {
  if (!j.is_string()) throw DomainError("integer coefficient must be a decimal string");
  BigInt z;
  if (z.set_str(j.get<std::string>(), 10) != 0) throw DomainError("bad integer: " + j.dump());
  return z;
}

}  // namespace

json to_json(const ZPoly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(c.get_str());
  return a;
}

json to_json(const QPoly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(c.get_str());
  return a;
}

json to_json(const QuadExt& x) { return json{{"a", x.a().get_str()}, {"b", x.b().get_str()}}; }

json to_json(const KPoly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_json(c));
  return a;
}

json to_json(const ZBiPoly& p) {
  json a = json::array();
  for (const auto& row : p.coeffs()) a.push_back(to_json(row));
  return a;
}

ZPoly zpoly_from_json(const json& j) {
  if (!j.is_array()) throw DomainError("polynomial must be a JSON array");
  std::vector<BigInt> c;
  for (const auto& e : j) c.push_back(parse_int(e));
  return ZPoly(std::move(c));
}

QPoly qpoly_from_json(const json& j) {
  if (!j.is_array()) throw DomainError("polynomial must be a JSON array");
  std::vector<BigRational> c;
  for (const auto& e : j) c.push_back(parse_rational(e.get<std::string>()));
  return QPoly(std::move(c));
}

QuadExt quadext_from_json(const json& j) {
  return QuadExt(parse_rational(j.at("a").get<std::string>()),
                 parse_rational(j.at("b").get<std::string>()));
}

KPoly kpoly_from_json(const json& j) {
  if (!j.is_array()) throw DomainError("polynomial must be a JSON array");
  std::vector<QuadExt> c;
  for (const auto& e : j) c.push_back(quadext_from_json(e));
  return KPoly(std::move(c));
}

ZBiPoly zbipoly_from_json(const json& j) {
  if (!j.is_array()) throw DomainError("bivariate polynomial must be a JSON array");
  std::vector<ZPoly> rows;
  for (const auto& e : j) rows.push_back(zpoly_from_json(e));
  return ZBiPoly(std::move(rows));
}

std::string canonical(const ZPoly& p) { return to_json(p).dump(); }

}  // namespace rcf
