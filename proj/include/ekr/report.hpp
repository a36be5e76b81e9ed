#pragma once

#include "json.hpp"

#include "ekr/extremal.hpp"
#include "ekr/set_family.hpp"
#include "ekr/theorems.hpp"

namespace ekr {

using nlohmann::json;

// {"universe": n, "r": r, "members": [[i, j, ...], ...]}
json family_to_json(const SetFamily& f);
SetFamily family_from_json(const json& j);

json stats_to_json(std::size_t size, const mis::SearchStats& s);
json verdict_to_json(const EkrVerdict& v);
json counterexample_to_json(const CounterexampleReport& r);

std::string count_to_string(const Count& c);

}  // namespace ekr
