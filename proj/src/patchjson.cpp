#include "peeltri/patchjson.hpp"

namespace peeltri::map {

nlohmann::json to_patch_json(const TriComplex& t) {
  switch (t.sentinel()) {
    case Sentinel::Vertex:
      return {{"sentinel", "T10"}};
    case Sentinel::Edge:
      return {{"sentinel", "T20"}};
    case Sentinel::VertexLoop:
      return {{"sentinel", "T110"}};
    case Sentinel::None:
      break;
  }
  nlohmann::json j;
  j["faces"] = t.face_count();
  nlohmann::json gl = nlohmann::json::array();
  for (SideId s = 0; s < 3 * t.face_count(); ++s) {
    SideId g = t.glued_to(s);
    if (g > s)
      gl.push_back({{face_of(s), index_of(s)}, {face_of(g), index_of(g)}});
  }
  j["gluings"] = std::move(gl);
  j["root"] = {t.root().face, t.root().side, t.root().forward};
  // Emit the hole cycles when they are not the derived ones.
  bool derived = true;
  {
    TriComplex plain = TriComplex::build(
        t.face_count(),
        [&] {
          std::vector<std::pair<SideId, SideId>> v;
          for (SideId s = 0; s < 3 * t.face_count(); ++s)
            if (t.glued_to(s) > s) v.emplace_back(s, t.glued_to(s));
          return v;
        }(),
        t.root());
    for (SideId s = 0; s < 3 * t.face_count() && derived; ++s)
      if (t.is_free(s) && t.hole_successor(s) != plain.hole_successor(s)) derived = false;
  }
  if (!derived) {
    nlohmann::json hs = nlohmann::json::array();
    for (const auto& cycle : t.holes()) {
      nlohmann::json c = nlohmann::json::array();
      for (SideId s : cycle) c.push_back({face_of(s), index_of(s)});
      hs.push_back(std::move(c));
    }
    j["holes"] = std::move(hs);
  }
  return j;
}

TriComplex from_patch_json(const nlohmann::json& j) {
  if (j.contains("sentinel")) {
    std::string s = j.at("sentinel").get<std::string>();
    if (s == "T10") return TriComplex::single_vertex();
    if (s == "T20") return TriComplex::single_edge();
    if (s == "T110") return TriComplex::vertex_loop();
    throw InvalidGluing("from_patch_json: unknown sentinel " + s);
  }
  int faces = j.at("faces").get<int>();
  std::vector<std::pair<SideId, SideId>> gluings;
  for (const auto& g : j.at("gluings")) {
    if (g.size() != 2 || g[0].size() != 2 || g[1].size() != 2)
      throw InvalidGluing("from_patch_json: bad gluing entry");
    gluings.emplace_back(side_id(g[0][0].get<int>(), g[0][1].get<int>()),
                         side_id(g[1][0].get<int>(), g[1][1].get<int>()));
  }
  const auto& r = j.at("root");
  Root root{r.at(0).get<int>(), r.at(1).get<int>(), r.size() > 2 ? r.at(2).get<bool>() : true};
  if (!j.contains("holes")) return TriComplex::build(faces, gluings, root);
  std::vector<std::vector<SideId>> holes;
  for (const auto& c : j.at("holes")) {
    std::vector<SideId> cycle;
    for (const auto& s : c) cycle.push_back(side_id(s.at(0).get<int>(), s.at(1).get<int>()));
    holes.push_back(std::move(cycle));
  }
  return TriComplex::build(faces, gluings, root, holes);
}

}  // namespace peeltri::map
