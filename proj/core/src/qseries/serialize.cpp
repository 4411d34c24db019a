#include "rcflab/qseries/serialize.hpp"

#include "rcflab/errors.hpp"

namespace rcf {

using nlohmann::json;

namespace {

template <class C, class Enc>
json encode(const Puiseux<C>& s, Enc enc) {
  long D = series_detail::lcm(s.den(), series_detail::den_long(s.offset()));
  long stride = D / s.den();
  long min = series_detail::exact_long(s.offset() * D);
  json coeffs = json::array();
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0)
      for (long k = 1; k < stride; ++k) coeffs.push_back(enc(C(0)));
    coeffs.push_back(enc(s.coeffs()[i]));
  }
  json out{{"D", D}, {"min", min}, {"coeffs", coeffs}};
  out["order"] = s.order() ? json(s.order()->get_str()) : json(nullptr);
  return out;
}

template <class C, class Dec>
Puiseux<C> decode(const json& j, Dec dec) {
  if (!j.is_object() || !j.contains("D") || !j.contains("min") || !j.contains("coeffs"))
    throw DomainError("series JSON needs D, min and coeffs");
  long D = j.at("D").get<long>();
  long min = j.at("min").get<long>();
  std::vector<C> c;
  for (const auto& x : j.at("coeffs")) c.push_back(dec(x));
  std::optional<BigRational> order;
  if (j.contains("order") && !j.at("order").is_null())
    order = parse_rational(j.at("order").get<std::string>());
  return Puiseux<C>::from_coeffs(rat(min, D), D, std::move(c), order);
}

BigRational dec_q(const json& x) {
  if (!x.is_string()) throw DomainError("rational coefficient must be a string");
  return parse_rational(x.get<std::string>());
}

}  // namespace

json to_json(const Cyclo8& x) {
  if (x.is_rational()) return x[0].get_str();
  json a = json::array();
  for (int k = 0; k < 4; ++k) a.push_back(x[k].get_str());
  return a;
}

Cyclo8 cyclo8_from_json(const json& j) {
  if (j.is_string()) return Cyclo8(dec_q(j));
  if (!j.is_array() || j.size() != 4) throw DomainError("Q(zeta8) element needs four rationals");
  return Cyclo8(dec_q(j[0]), dec_q(j[1]), dec_q(j[2]), dec_q(j[3]));
}

json to_json(const QSeries& s) {
  return encode(s, [](const BigRational& x) { return json(x.get_str()); });
}

json to_json(const CSeries& s) {
  return encode(s, [](const Cyclo8& x) { return to_json(x); });
}

QSeries qseries_from_json(const json& j) { return decode<BigRational>(j, dec_q); }

CSeries cseries_from_json(const json& j) { return decode<Cyclo8>(j, cyclo8_from_json); }

namespace qs {

json to_json(const IdentityReport& r) {
  json out{{"id", r.id},
           {"status", r.passed ? "pass" : "fail"},
           {"order", r.order.get_str()},
           {"low_order", r.low_order}};
  if (r.first_bad_exponent) out["first_bad_exponent"] = r.first_bad_exponent->get_str();
  if (r.first_bad_coefficient) out["first_bad_coefficient"] = rcf::to_json(*r.first_bad_coefficient);
  return out;
}

}  // namespace qs

}  // namespace rcf
