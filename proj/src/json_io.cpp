#include "kroman/json_io.hpp"

namespace kroman {

using nlohmann::json;

json to_json(const Labeling& lab) {
  return json{{"family", lab.spec().family() == Family::Torus ? "torus" : "cylinder"},
              {"m", lab.spec().m()},
              {"n", lab.spec().n()},
              {"k", lab.k()},
              {"values", lab.values()}};
}

Labeling labeling_from_json(const json& doc) {
  try {
    if (!doc.is_object()) throw InputError("labeling document must be a JSON object");
    for (const char* field : {"family", "m", "n", "k", "values"})
      if (!doc.contains(field)) throw InputError(std::string("missing field: ") + field);
    std::string family = doc.at("family").get<std::string>();
    if (family != "cylinder" && family != "torus")
      throw InputError("family must be \"cylinder\" or \"torus\", got \"" + family + "\"");
    int m = doc.at("m").get<int>();
    int n = doc.at("n").get<int>();
    int k = doc.at("k").get<int>();
    auto values = doc.at("values").get<std::vector<std::vector<int>>>();
    GridSpec spec = family == "torus" ? GridSpec::torus(m, n) : GridSpec::cylinder(m, n);
    return Labeling(spec, k, std::move(values));
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed labeling document: ") + e.what());
  }
}

json to_json(const std::vector<Vertex>& vertices) {
  json arr = json::array();
  for (Vertex v : vertices) arr.push_back(json::array({v.i, v.j}));
  return arr;
}

json to_json(const std::vector<Violation>& violations) {
  json arr = json::array();
  for (const Violation& v : violations) {
    arr.push_back(json{{"vertex", json::array({v.vertex.i, v.vertex.j})},
                       {"closed_sum", v.closed_sum},
                       {"active_neighbors", v.active_neighbors},
                       {"required", v.required}});
  }
  return arr;
}

}  // namespace kroman
