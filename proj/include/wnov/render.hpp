#pragma once

#include "json.hpp"

#include <string>

#include "wnov/magma.hpp"
#include "wnov/wlc_algebra.hpp"
#include "wnov/wn_algebra.hpp"

namespace wnov {

  std::string render(MagmaWord const& w);
  std::string render(WlcMonomial const& m);
  std::string render(WnBasisElement const& e);

  std::string render(MagmaPoly const& p);
  std::string render(WlcElement const& e);
  std::string render(WnElement const& e);

  // {"field": ..., "terms": [{"coefficient": "...", "element": "...", ...}]}
  nlohmann::json to_json(MagmaPoly const& p);
  nlohmann::json to_json(WlcElement const& e);
  nlohmann::json to_json(WnElement const& e);

}  // namespace wnov
