#pragma once

#include <nlohmann/json.hpp>

#include "rcflab/padic2/dynamics.hpp"

namespace rcf::padic {

nlohmann::json to_json(const Elem& x);
Elem elem_from_json(const nlohmann::json& j, const ContextPtr& ctx);
nlohmann::json to_json(const std::vector<Orbit>& orbits);

}  // namespace rcf::padic
