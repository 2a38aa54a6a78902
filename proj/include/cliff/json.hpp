#pragma once

#include <json.hpp>

#include "cliff/dirac.hpp"
#include "cliff/fischer.hpp"

namespace cliff {

using Json = nlohmann::ordered_json;

/// {"m", "k", "input", "infra", "quotient", "layers": [], "checks": {...}}
inline Json to_json(const DecompositionResult& d) {
  Json j;
  j["m"] = d.m;
  j["k"] = d.k;
  j["input"] = d.input.to_string();
  j["infra"] = d.infra.to_string();
  j["quotient"] = d.quotient.to_string();
  j["layers"] = Json::array();
  j["checks"] = {{"reconstruction", d.checks.reconstruction},
                 {"sandwich_zero", d.checks.sandwich_zero},
                 {"orthogonal", d.checks.orthogonal}};
  return j;
}

/// Same document as the one-step decomposition with the tower layers filled
/// in; `reconstruction` and `sandwich_zero` then cover every layer.
inline Json to_json(const DecompositionResult& first, const FischerTower& tower) {
  Json j = to_json(first);
  Json layers = Json::array();
  bool all_infra = true;
  for (const auto& layer : tower.layers) {
    layers.push_back({{"s", layer.s}, {"infra", layer.infra.to_string()}});
    all_infra = all_infra && is_inframonogenic(layer.infra);
  }
  j["layers"] = std::move(layers);
  j["checks"]["reconstruction"] = first.checks.reconstruction && tower.reconstruct() == first.input;
  j["checks"]["sandwich_zero"] = first.checks.sandwich_zero && all_infra;
  return j;
}

}  // namespace cliff
