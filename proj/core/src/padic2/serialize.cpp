#include "rcflab/padic2/serialize.hpp"

#include "rcflab/errors.hpp"

namespace rcf::padic {

nlohmann::json to_json(const Elem& x) {
  nlohmann::json c = nlohmann::json::array();
  for (const BigInt& v : x.to_bigints()) c.push_back(v.get_str());
  return {{"m", x.ctx()->m()}, {"P", x.ctx()->P()}, {"coeffs", c}};
}

Elem elem_from_json(const nlohmann::json& j, const ContextPtr& ctx) {
  if (j.at("m").get<int>() != ctx->m() || j.at("P").get<int>() != ctx->P())
    throw ConsistencyError("serialized element does not match the context");
  std::vector<BigInt> c;
  for (const auto& s : j.at("coeffs")) c.emplace_back(s.get<std::string>());
  return Elem::from_coeffs(ctx, c);
}

nlohmann::json to_json(const std::vector<Orbit>& orbits) {
  nlohmann::json out = nlohmann::json::array();
  for (const Orbit& o : orbits) {
    nlohmann::json arr = nlohmann::json::array();
    for (const PeriodicPoint& p : o) {
      nlohmann::json e = to_json(p.x);
      e["residue"] = p.residue;
      e["newton_valuations"] = p.newton_valuations;
      arr.push_back(e);
    }
    out.push_back(arr);
  }
  return out;
}

}  // namespace rcf::padic
