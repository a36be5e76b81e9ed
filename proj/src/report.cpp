#include "ekr/report.hpp"

#include <cmath>

#include "ekr/error.hpp"

namespace ekr {

json family_to_json(const SetFamily& f) {
  json members = json::array();
  for (const auto& m : f) members.push_back(m.to_vector());
  return {{"universe", f.universe_size()}, {"r", f.r()}, {"members", members}};
}

SetFamily family_from_json(const json& j) {
  try {
    const auto universe = j.at("universe").get<std::size_t>();
    const auto r = j.at("r").get<std::size_t>();
    if (universe > kMaxVertices)
      throw Error(ErrorKind::UniverseTooLarge, "family universe exceeds the cap");
    std::vector<VertexSet> members;
    for (const auto& m : j.at("members")) {
      VertexSet s;
      for (const auto& v : m) {
        const auto x = v.get<std::size_t>();
        if (x >= universe)
          throw Error(ErrorKind::Parse, "member index outside the universe");
        if (s.contains(static_cast<Vertex>(x)))
          throw Error(ErrorKind::Parse, "repeated index inside a member");
        s.insert(static_cast<Vertex>(x));
      }
      members.push_back(s);
    }
    return SetFamily(universe, r, std::move(members));
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("malformed family JSON: ") + e.what());
  }
}

json stats_to_json(std::size_t size, const mis::SearchStats& s) {
  return {{"size", size},
          {"nodes", s.nodes},
          {"millis", std::round(s.millis * 1000.0) / 1000.0},
          {"certified", s.certified},
          {"mode", mis::to_string(s.mode)}};
}

json verdict_to_json(const EkrVerdict& v) {
  json j = {{"graph", v.graph_name},
            {"r", v.r},
            {"max", v.max_size},
            {"best_star", v.best_star_size},
            {"centers", v.best_star_centers},
            {"class", to_string(v.classification)},
            {"certified", v.certified},
            {"range_flag", v.range_flag}};
  if (v.witness) {
    json members = json::array();
    for (const auto& m : *v.witness) members.push_back(m.to_vector());
    j["witness"] = members;
  }
  if (v.maxima_found) {
    j["maxima_found"] = *v.maxima_found;
    j["non_star_maxima"] = *v.non_star_maxima;
    j["strict_cap_hit"] = v.strict_cap_hit;
  }
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

json counterexample_to_json(const CounterexampleReport& r) {
  return {{"n", r.n},
          {"k", r.k},
          {"r", r.r},
          {"construction", r.construction},
          {"family_size", r.family_size},
          {"p2_star", r.p2_star_size},
          {"best_star", r.best_star.size},
          {"centers", r.best_star.centers},
          {"constructed_size", r.constructed_size},
          {"intersecting", r.intersecting},
          {"beats_every_star", r.beats_every_star()},
          {"in_range", r.in_range}};
}

std::string count_to_string(const Count& c) { return c.str(); }

}  // namespace ekr
