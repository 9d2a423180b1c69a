#pragma once

#include <optional>

#include "guarding/coverage.hpp"
#include "guarding/nets.hpp"

namespace guarding {

enum class Strategy { Auto, Quadratic, Hierarchical, Random };

struct SolveOptions {
  Strategy strategy = Strategy::Auto;
  int cprime0 = 1;          // initial guess for the optimum
  unsigned long seed = 1;   // used by the random strategy
  bool parallel = false;
  std::optional<std::vector<Point2>> targets;  // unset: guard the polygon
};

struct DoublingRecord {
  int cprime;
  Point2 witness;
  std::vector<int> seeing;  // sites whose weight doubled
};

struct PhaseLog {
  int cprime;
  long budget;
  long doublings = 0;
  long net_size = 0;  // size of the last net tried in this phase
  bool covered = false;
};

struct SolveResult {
  enum class Status { Covered, Infeasible };
  Status status;
  GuardSet cover;
  std::optional<Point2> infeasible_witness;
  std::vector<PhaseLog> phases;
  std::vector<DoublingRecord> transcript;
};

// Smallest integer budget >= 4*c' * log2(G/c'), computed exactly: least B
// with 2^B * c'^(4c') >= G^(4c'), clamped to at least 1 so every phase
// attempts a net.
long phase_budget(long cprime, long guard_count);

// All site ids whose guard sees x, via one angular sweep at x.
std::vector<int> sites_seeing(const SimplePolygon& p, const SiteSet& sites,
                              const Point2& x);

// Iterative reweighting with doubling guesses for the optimum.  Each guess
// c' runs one phase with epsilon = 1/(2c'): build a net against the current
// weights, ask the verifier for an uncovered witness, double every site
// seeing it, and give up on the guess after the phase budget.
SolveResult bg_solve(const SimplePolygon& p, const SiteSet& sites,
                     const SolveOptions& options);

struct GreedyResult {
  GuardSet cover;
  std::vector<int> pick_order;
  bool covered = false;
  std::optional<Point2> uncovered;
};

// Plain greedy set cover over finite targets; ties break to the lowest id.
GreedyResult greedy_cover(const SimplePolygon& p, const SiteSet& sites,
                          const std::vector<Point2>& targets,
                          bool parallel = false);

struct OptLimitExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OptResult {
  bool feasible = false;
  int opt = -1;
  GuardSet cover;  // lexicographically least optimum cover
  std::optional<Point2> uncovered;
};

// Exact optimum over finite targets by lexicographic subset enumeration.
// Refuses ground sets larger than site_limit.
OptResult brute_force_opt(const SimplePolygon& p, const SiteSet& sites,
                          const std::vector<Point2>& targets,
                          int site_limit = 24);

// Interior sample points: `density` sub-triangles per triangulation triangle,
// largest split first, centroids collected.  A plain sampling utility — it
// carries no covering guarantee.
std::vector<Point2> discretize_targets(const SimplePolygon& p, long density);

}  // namespace guarding
