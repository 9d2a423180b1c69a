#include "guarding/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace guarding {

std::vector<VisibleBoundary> batch_sweeps_serial(const SimplePolygon& p,
                                                 const std::vector<Point2>& pts) {
  std::vector<VisibleBoundary> out;
  out.reserve(pts.size());
  for (const Point2& q : pts) out.push_back(visible_boundary(p, q));
  return out;
}

std::vector<VisibleBoundary> batch_sweeps_parallel(const SimplePolygon& p,
                                                   const std::vector<Point2>& pts) {
  std::vector<VisibleBoundary> out(pts.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < static_cast<long>(pts.size()); ++i)
    out[i] = visible_boundary(p, pts[i]);
  return out;
}

std::vector<std::uint8_t> sees_matrix_serial(const SimplePolygon& p,
                                             const std::vector<Point2>& guards,
                                             const std::vector<Point2>& targets) {
  std::vector<std::uint8_t> out(guards.size() * targets.size());
  for (std::size_t i = 0; i < guards.size(); ++i)
    for (std::size_t j = 0; j < targets.size(); ++j)
      out[i * targets.size() + j] = sees(p, guards[i], targets[j]) ? 1 : 0;
  return out;
}

std::vector<std::uint8_t> sees_matrix_parallel(const SimplePolygon& p,
                                               const std::vector<Point2>& guards,
                                               const std::vector<Point2>& targets) {
  std::vector<std::uint8_t> out(guards.size() * targets.size());
  long total = static_cast<long>(out.size());
  long cols = static_cast<long>(targets.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (long k = 0; k < total; ++k)
    out[k] = sees(p, guards[k / cols], targets[k % cols]) ? 1 : 0;
  return out;
}

}  // namespace guarding
