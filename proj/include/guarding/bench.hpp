#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "guarding/instance.hpp"

namespace guarding {

// One report line: net built at the row's epsilon under uniform weights,
// plus the full solver run and, when the instance is small and finite, the
// exact optimum.  Wall time never reaches the CSV; reports must be
// byte-stable across runs.
struct BenchRow {
  std::string instance;
  int n = 0;
  long g = 0;
  std::string epsilon;
  std::string strategy;  // effective construction for the net columns
  long net_size = 0;
  Int bound;
  long cover_size = -1;  // -1: solver reported infeasible
  long opt = -1;         // -1: oracle unavailable
  std::string ratio;     // exact cover/opt, empty when no oracle
  std::vector<long> phase_iters;
  std::string status;  // "covered" | "infeasible"
  double wall_ms = 0;
};

struct BenchOptions {
  std::vector<Rat> epsilons;         // sweep; empty: instance value or 1/4
  std::optional<Strategy> strategy;  // overrides the instance field
  bool parallel = false;
  int opt_limit = 24;
};

// Rows ordered by (instance input order, epsilon order).  `timing`, when
// given, receives one wall-clock line per row.
std::vector<BenchRow> run_bench(
    const std::vector<std::pair<std::string, Instance>>& instances,
    const BenchOptions& options, std::ostream* timing);

std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace guarding
