#pragma once

#include <cstdint>

#include "guarding/nets.hpp"

namespace guarding {

// Data-parallel batch kernels.  Each has a serial reference twin; the two
// must produce identical results element for element, which the test suite
// checks and tools/bench_kernels times.

std::vector<VisibleBoundary> batch_sweeps_serial(const SimplePolygon& p,
                                                 const std::vector<Point2>& pts);
std::vector<VisibleBoundary> batch_sweeps_parallel(const SimplePolygon& p,
                                                   const std::vector<Point2>& pts);

// Row-major guards x targets closed-visibility matrix.
std::vector<std::uint8_t> sees_matrix_serial(const SimplePolygon& p,
                                             const std::vector<Point2>& guards,
                                             const std::vector<Point2>& targets);
std::vector<std::uint8_t> sees_matrix_parallel(const SimplePolygon& p,
                                               const std::vector<Point2>& guards,
                                               const std::vector<Point2>& targets);

}  // namespace guarding
