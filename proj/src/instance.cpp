#include "guarding/instance.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace guarding {

namespace {

using nlohmann::json;

Rat read_rat(const json& v, const std::string& field) {
  if (v.is_string()) {
    try {
      return parse_rat(v.get<std::string>());
    } catch (const parse_error& e) {
      throw InstanceError(field + ": " + e.what());
    }
  }
  if (v.is_number_integer()) return parse_rat(v.dump());
  if (v.is_number_float())
    throw InstanceError(field +
                        ": floating point numerics are rejected; write the "
                        "value as a decimal string");
  throw InstanceError(field + ": expected a number string");
}

Point2 read_point(const json& v, const std::string& field) {
  if (!v.is_array() || v.size() != 2)
    throw InstanceError(field + ": expected [x, y]");
  return {read_rat(v[0], field), read_rat(v[1], field)};
}

std::vector<Point2> read_points(const json& v, const std::string& field) {
  if (!v.is_array()) throw InstanceError(field + ": expected an array");
  std::vector<Point2> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(read_point(v[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

long read_int(const json& v, const std::string& field, long lo) {
  if (!v.is_number_integer())
    throw InstanceError(field + ": expected an integer");
  long x = v.get<long>();
  if (x < lo)
    throw InstanceError(field + ": must be at least " + std::to_string(lo));
  return x;
}

json point_json(const Point2& p) {
  return json::array({to_string(p.x), to_string(p.y)});
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

bool operator==(const Instance& a, const Instance& b) {
  return a.name == b.name && a.polygon == b.polygon &&
         a.guards_are_vertices == b.guards_are_vertices &&
         a.guard_points == b.guard_points &&
         a.whole_polygon == b.whole_polygon &&
         a.target_points == b.target_points && a.strategy == b.strategy &&
         a.epsilon == b.epsilon && a.cprime == b.cprime && a.seed == b.seed &&
         a.samples == b.samples;
}

const char* strategy_name(Strategy s) {
  switch (s) {
    case Strategy::Auto: return "auto";
    case Strategy::Quadratic: return "quadratic";
    case Strategy::Hierarchical: return "hierarchical";
    case Strategy::Random: return "random";
  }
  return "auto";
}

Strategy strategy_from_name(const std::string& s) {
  if (s == "auto") return Strategy::Auto;
  if (s == "quadratic") return Strategy::Quadratic;
  if (s == "hierarchical") return Strategy::Hierarchical;
  if (s == "random") return Strategy::Random;
  throw InstanceError("unknown strategy: " + s);
}

Instance parse_instance_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InstanceError(std::string("json: ") + e.what());
  }
  if (!doc.is_object()) throw InstanceError("instance must be a json object");

  static const char* known[] = {"name",     "polygon", "guards",
                                "target",   "strategy", "epsilon",
                                "cprime",   "seed",     "samples"};
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    bool ok = false;
    for (const char* k : known)
      if (it.key() == k) ok = true;
    if (!ok) throw InstanceError("unknown field: " + it.key());
  }

  Instance inst;
  if (doc.contains("name")) {
    if (!doc["name"].is_string())
      throw InstanceError("name: expected a string");
    inst.name = doc["name"].get<std::string>();
  }
  if (!doc.contains("polygon")) throw InstanceError("missing field: polygon");
  inst.polygon = read_points(doc["polygon"], "polygon");

  if (doc.contains("guards")) {
    const json& g = doc["guards"];
    if (g.is_string()) {
      if (g.get<std::string>() != "vertices")
        throw InstanceError("guards: expected \"vertices\" or a point list");
      inst.guards_are_vertices = true;
    } else {
      inst.guards_are_vertices = false;
      inst.guard_points = read_points(g, "guards");
    }
  }

  if (doc.contains("target")) {
    const json& t = doc["target"];
    if (t.is_string()) {
      if (t.get<std::string>() != "polygon")
        throw InstanceError("target: expected \"polygon\" or {\"points\": [...]}");
      inst.whole_polygon = true;
    } else if (t.is_object() && t.contains("points") && t.size() == 1) {
      inst.whole_polygon = false;
      inst.target_points = read_points(t["points"], "target.points");
    } else {
      throw InstanceError("target: expected \"polygon\" or {\"points\": [...]}");
    }
  }

  if (doc.contains("strategy")) {
    if (!doc["strategy"].is_string())
      throw InstanceError("strategy: expected a string");
    inst.strategy = strategy_from_name(doc["strategy"].get<std::string>());
  }
  if (doc.contains("epsilon")) {
    Rat eps = read_rat(doc["epsilon"], "epsilon");
    if (sgn(eps) <= 0 || eps > Rat(1))
      throw InstanceError("epsilon: must lie in (0, 1]");
    inst.epsilon = eps;
  }
  if (doc.contains("cprime"))
    inst.cprime = static_cast<int>(read_int(doc["cprime"], "cprime", 1));
  if (doc.contains("seed"))
    inst.seed = static_cast<unsigned long>(read_int(doc["seed"], "seed", 0));
  if (doc.contains("samples"))
    inst.samples = read_int(doc["samples"], "samples", 1);
  return inst;
}

Instance parse_instance(const std::string& path) {
  try {
    return parse_instance_text(read_file(path));
  } catch (const InstanceError& e) {
    throw InstanceError(path + ": " + e.what());
  }
}

std::string serialize_instance(const Instance& inst) {
  json doc;
  if (!inst.name.empty()) doc["name"] = inst.name;
  json poly = json::array();
  for (const Point2& p : inst.polygon) poly.push_back(point_json(p));
  doc["polygon"] = std::move(poly);
  if (inst.guards_are_vertices) {
    doc["guards"] = "vertices";
  } else {
    json g = json::array();
    for (const Point2& p : inst.guard_points) g.push_back(point_json(p));
    doc["guards"] = std::move(g);
  }
  if (inst.whole_polygon) {
    doc["target"] = "polygon";
  } else {
    json t = json::array();
    for (const Point2& p : inst.target_points) t.push_back(point_json(p));
    doc["target"] = json{{"points", std::move(t)}};
  }
  doc["strategy"] = strategy_name(inst.strategy);
  if (inst.epsilon) doc["epsilon"] = to_string(*inst.epsilon);
  doc["cprime"] = inst.cprime;
  doc["seed"] = inst.seed;
  doc["samples"] = inst.samples;
  return doc.dump(2) + "\n";
}

void write_instance(const Instance& inst, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write file: " + path);
  out << serialize_instance(inst);
  if (!out) throw IoError("write failed: " + path);
}

std::vector<Point2> parse_points_file(const std::string& path) {
  json doc;
  try {
    doc = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw InstanceError(path + ": json: " + e.what());
  }
  try {
    return read_points(doc, "points");
  } catch (const InstanceError& e) {
    throw InstanceError(path + ": " + e.what());
  }
}

SimplePolygon instance_polygon(const Instance& inst) {
  return SimplePolygon::make(inst.polygon);
}

SiteSet instance_sites(const Instance& inst, const SimplePolygon& p) {
  if (inst.guards_are_vertices) return SiteSet::vertices(p);
  return SiteSet::from_points(p, inst.guard_points);
}

}  // namespace guarding
