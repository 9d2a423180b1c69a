#pragma once

#include <optional>
#include <string>

#include "guarding/instance.hpp"

namespace guarding {

// Fixed-precision drawing of a scene: polygon outline, translucent visibility
// regions, guard markers, and an optional witness cross.  Output bytes are a
// pure function of the inputs.  Coordinates are rendered, never read back.
std::string render_svg(const SimplePolygon& p,
                       const std::vector<Point2>& guards,
                       const std::vector<std::vector<Point2>>& regions,
                       const std::optional<Point2>& witness);

void write_svg(const std::string& path, const SimplePolygon& p,
               const std::vector<Point2>& guards,
               const std::vector<std::vector<Point2>>& regions,
               const std::optional<Point2>& witness);

}  // namespace guarding
