#pragma once

#include <nlohmann/json.hpp>

#include "rcflab/qseries/catalog.hpp"
#include "rcflab/qseries/series.hpp"

namespace rcf {

// {"D", "min", "order", "coeffs"}: coefficient i belongs to q^((min + i)/D);
// order is a rational string or null for an exact series. Coefficients are
// rational strings, or arrays of four in the basis 1, z, z^2, z^3 (z = zeta8).
nlohmann::json to_json(const QSeries& s);
nlohmann::json to_json(const CSeries& s);
nlohmann::json to_json(const Cyclo8& x);
QSeries qseries_from_json(const nlohmann::json& j);
CSeries cseries_from_json(const nlohmann::json& j);
Cyclo8 cyclo8_from_json(const nlohmann::json& j);

namespace qs {
nlohmann::json to_json(const IdentityReport& r);
}

}  // namespace rcf
