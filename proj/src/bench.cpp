#include "guarding/bench.hpp"

#include <chrono>
#include <ostream>
#include <sstream>

namespace guarding {

namespace {

Strategy effective_strategy(Strategy s, const Rat& eps) {
  if (s != Strategy::Auto) return s;
  return net_params(eps).quadratic_fallback ? Strategy::Quadratic
                                            : Strategy::Hierarchical;
}

}  // namespace

std::vector<BenchRow> run_bench(
    const std::vector<std::pair<std::string, Instance>>& instances,
    const BenchOptions& options, std::ostream* timing) {
  std::vector<BenchRow> rows;
  for (const auto& [label, inst] : instances) {
    SimplePolygon p = instance_polygon(inst);
    SiteSet sites = instance_sites(inst, p);
    VisCache cache(p, sites);

    SolveOptions sopt;
    sopt.strategy = options.strategy.value_or(inst.strategy);
    sopt.cprime0 = inst.cprime;
    sopt.seed = inst.seed;
    sopt.parallel = options.parallel;
    if (!inst.whole_polygon) sopt.targets = inst.target_points;
    SolveResult solved = bg_solve(p, sites, sopt);

    long opt = -1;
    if (!inst.whole_polygon && sites.size() <= options.opt_limit) {
      OptResult o = brute_force_opt(p, sites, inst.target_points,
                                    options.opt_limit);
      if (o.feasible) opt = o.opt;
    }

    std::vector<Rat> epss = options.epsilons;
    if (epss.empty())
      epss.push_back(inst.epsilon ? *inst.epsilon : Rat(1, 4));

    for (const Rat& eps : epss) {
      auto t0 = std::chrono::steady_clock::now();
      BenchRow row;
      row.instance = inst.name.empty() ? label : inst.name;
      row.n = p.size();
      row.g = sites.size();
      row.epsilon = to_string(eps);

      Strategy strat =
          effective_strategy(options.strategy.value_or(inst.strategy), eps);
      row.strategy = strategy_name(strat);
      WeightState uniform(static_cast<int>(sites.size()));
      switch (strat) {
        case Strategy::Quadratic: {
          QuadraticNet net = build_quadratic_net(cache, sites, uniform, eps,
                                                 options.parallel);
          row.net_size = static_cast<long>(net.guards.ids.size());
          row.bound = net.bound;
          break;
        }
        case Strategy::Hierarchical: {
          HierarchicalNet net = build_hierarchical_net(
              cache, sites, uniform, net_params(eps), options.parallel);
          row.net_size = static_cast<long>(net.guards.ids.size());
          row.bound = net.bound;
          break;
        }
        case Strategy::Random: {
          GuardSet net = random_comparator_net(sites, uniform, eps, inst.seed);
          row.net_size = static_cast<long>(net.ids.size());
          // Draw budget, same formula as the sampler.
          Rat inv = Rat(1) / eps;
          Int ceil_inv;
          mpz_cdiv_q(ceil_inv.get_mpz_t(), inv.get_num_mpz_t(),
                     inv.get_den_mpz_t());
          long ee = std::max(1L, ceil_inv.get_si());
          long lg = std::max(1L, ceil_log2(Rat(ee)));
          row.bound = Int(8 * ee * lg);
          break;
        }
        case Strategy::Auto:
          break;  // unreachable: effective_strategy resolved it
      }

      if (solved.status == SolveResult::Status::Covered) {
        row.status = "covered";
        row.cover_size = static_cast<long>(solved.cover.ids.size());
        if (opt >= 1) {
          row.opt = opt;
          Rat r(row.cover_size, opt);
          r.canonicalize();
          row.ratio = to_string(r);
        }
      } else {
        row.status = "infeasible";
      }
      for (const PhaseLog& ph : solved.phases)
        row.phase_iters.push_back(ph.doublings);

      auto t1 = std::chrono::steady_clock::now();
      row.wall_ms =
          std::chrono::duration<double, std::milli>(t1 - t0).count();
      if (timing)
        *timing << "bench: " << row.instance << " eps=" << row.epsilon
                << " wall_ms=" << row.wall_ms << "\n";
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "instance,n,g,epsilon,strategy,net_size,bound,cover_size,opt,ratio,"
         "phase_iters,status\n";
  for (const BenchRow& r : rows) {
    out << r.instance << ',' << r.n << ',' << r.g << ',' << r.epsilon << ','
        << r.strategy << ',' << r.net_size << ',' << r.bound.get_str() << ',';
    if (r.cover_size >= 0) out << r.cover_size;
    out << ',';
    if (r.opt >= 0) out << r.opt;
    out << ',' << r.ratio << ',';
    for (std::size_t i = 0; i < r.phase_iters.size(); ++i) {
      if (i) out << ';';
      out << r.phase_iters[i];
    }
    out << ',' << r.status << '\n';
  }
  return out.str();
}

}  // namespace guarding
