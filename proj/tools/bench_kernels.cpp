// Times the OpenMP kernels against their serial reference twins and checks
// that both produce identical results.
#include <chrono>
#include <cstdio>
#include <vector>

#include "guarding/kernels.hpp"
#include "guarding/nets.hpp"
#include "guarding/solver.hpp"

using namespace guarding;

namespace {

SimplePolygon comb(int prongs) {
  std::vector<Point2> v;
  int k = prongs;
  v.push_back({Rat(0), Rat(0)});
  v.push_back({Rat(2 * k - 1), Rat(0)});
  for (int i = k - 1; i >= 0; --i) {
    v.push_back({Rat(2 * i + 1), Rat(3)});
    v.push_back({Rat(2 * i), Rat(3)});
    if (i > 0) {
      v.push_back({Rat(2 * i), Rat(1)});
      v.push_back({Rat(2 * i - 1), Rat(1)});
    }
  }
  return SimplePolygon::make(v);
}

double ms(std::chrono::steady_clock::time_point a,
          std::chrono::steady_clock::time_point b) {
  return std::chrono::duration<double, std::milli>(b - a).count();
}

void report(const char* name, double serial, double parallel, bool equal) {
  std::printf("%-22s %10.1f ms %10.1f ms %6.2fx  %s\n", name, serial, parallel,
              parallel > 0 ? serial / parallel : 0.0,
              equal ? "match" : "MISMATCH");
}

}  // namespace

int main() {
  SimplePolygon p = comb(8);
  SiteSet sites = SiteSet::vertices(p);
  std::vector<Point2> samples = discretize_targets(p, 8);
  std::vector<Point2> gpts;
  for (const GuardSite& g : sites.all()) gpts.push_back(g.pos);
  std::printf("polygon: comb n=%d, sites=%d, samples=%zu\n\n", p.size(),
              sites.size(), samples.size());
  std::printf("%-22s %13s %13s %7s\n", "kernel", "serial", "parallel",
              "speedup");

  using clock = std::chrono::steady_clock;
  {
    auto t0 = clock::now();
    auto a = batch_sweeps_serial(p, samples);
    auto t1 = clock::now();
    auto b = batch_sweeps_parallel(p, samples);
    auto t2 = clock::now();
    bool eq = a.size() == b.size();
    for (std::size_t i = 0; eq && i < a.size(); ++i)
      eq = a[i].region == b[i].region && a[i].items.size() == b[i].items.size();
    report("batch_sweeps", ms(t0, t1), ms(t1, t2), eq);
  }
  {
    auto t0 = clock::now();
    auto a = sees_matrix_serial(p, gpts, samples);
    auto t1 = clock::now();
    auto b = sees_matrix_parallel(p, gpts, samples);
    auto t2 = clock::now();
    report("sees_matrix", ms(t0, t1), ms(t1, t2), a == b);
  }
  std::vector<int> all(sites.size());
  for (int i = 0; i < sites.size(); ++i) all[i] = i;
  {
    VisCache ca(p, sites), cb(p, sites);
    auto t0 = clock::now();
    ca.warm(all, false);
    auto t1 = clock::now();
    cb.warm(all, true);
    auto t2 = clock::now();
    bool eq = true;
    for (int i = 0; i < sites.size(); ++i)
      eq = eq && ca.get(i).region == cb.get(i).region;
    report("cache_warm", ms(t0, t1), ms(t1, t2), eq);
  }
  {
    VisCache ca(p, sites), cb(p, sites);
    ca.warm(all, false);
    cb.warm(all, false);
    WeightState w(sites.size());
    Rat eps(1, 8);
    auto t0 = clock::now();
    QuadraticNet a = build_quadratic_net(ca, sites, w, eps, false);
    auto t1 = clock::now();
    QuadraticNet b = build_quadratic_net(cb, sites, w, eps, true);
    auto t2 = clock::now();
    report("quadratic_pairs", ms(t0, t1), ms(t1, t2), a.guards.ids == b.guards.ids);
  }
  return 0;
}
