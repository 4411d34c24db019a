#pragma once

#include <nlohmann/json.hpp>

#include "rcflab/exactalg/poly.hpp"

namespace rcf {

nlohmann::json to_json(const ZPoly& p);
nlohmann::json to_json(const QPoly& p);
nlohmann::json to_json(const KPoly& p);
nlohmann::json to_json(const ZBiPoly& p);
nlohmann::json to_json(const QuadExt& x);

ZPoly zpoly_from_json(const nlohmann::json& j);
QPoly qpoly_from_json(const nlohmann::json& j);
KPoly kpoly_from_json(const nlohmann::json& j);
ZBiPoly zbipoly_from_json(const nlohmann::json& j);
QuadExt quadext_from_json(const nlohmann::json& j);

// Canonical text used for byte-level comparison: the compact JSON array of coefficients.
std::string canonical(const ZPoly& p);

}  // namespace rcf
