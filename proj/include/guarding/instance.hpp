#pragma once

#include <optional>
#include <string>

#include "guarding/sites.hpp"
#include "guarding/solver.hpp"

namespace guarding {

struct InstanceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One problem description as stored on disk.  All coordinates are exact:
// numeric fields accept decimal strings ("0.1", "3/7") or JSON integers,
// never floats.
struct Instance {
  std::string name;
  std::vector<Point2> polygon;
  bool guards_are_vertices = true;
  std::vector<Point2> guard_points;  // used when guards_are_vertices is false
  bool whole_polygon = true;
  std::vector<Point2> target_points;  // used when whole_polygon is false
  Strategy strategy = Strategy::Auto;
  std::optional<Rat> epsilon;  // net construction override
  int cprime = 1;
  unsigned long seed = 1;
  long samples = 1;  // discretization budget for finite-target baselines
};

bool operator==(const Instance& a, const Instance& b);

const char* strategy_name(Strategy s);
Strategy strategy_from_name(const std::string& s);

Instance parse_instance_text(const std::string& text);
Instance parse_instance(const std::string& path);
std::string serialize_instance(const Instance& inst);
void write_instance(const Instance& inst, const std::string& path);

// Point list file: a JSON array of [x, y] pairs under the same numeric rules.
std::vector<Point2> parse_points_file(const std::string& path);

// Materialized views (validate on construction).
SimplePolygon instance_polygon(const Instance& inst);
SiteSet instance_sites(const Instance& inst, const SimplePolygon& p);

}  // namespace guarding
