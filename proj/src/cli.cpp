#include "guarding/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

#include "CLI11.hpp"
#include "guarding/bench.hpp"
#include "guarding/svg.hpp"

namespace guarding {

namespace {

struct Ctx {
  std::string path;
  std::vector<std::string> paths;
  std::string epsilon;
  std::vector<std::string> epsilons;
  std::string strategy;
  std::string target;
  std::vector<int> guards;
  int cprime = 0;      // 0: keep instance value
  long seed = -1;      // -1: keep instance value
  long samples = 0;    // 0: keep instance value
  int limit = 24;
  std::string out_path;
  bool parallel = false;
};

std::string pt(const Point2& q) {
  return "(" + to_string(q.x) + ", " + to_string(q.y) + ")";
}

struct Loaded {
  Instance inst;
  SimplePolygon p;
  SiteSet sites;
  std::optional<std::vector<Point2>> targets;  // unset: whole polygon
};

Loaded load(const Ctx& ctx) {
  Instance inst = parse_instance(ctx.path);
  if (!ctx.strategy.empty()) inst.strategy = strategy_from_name(ctx.strategy);
  if (!ctx.epsilon.empty()) {
    Rat eps = parse_rat(ctx.epsilon);
    if (sgn(eps) <= 0 || eps > Rat(1))
      throw InstanceError("--epsilon must lie in (0, 1]");
    inst.epsilon = eps;
  }
  if (ctx.cprime > 0) inst.cprime = ctx.cprime;
  if (ctx.seed >= 0) inst.seed = static_cast<unsigned long>(ctx.seed);
  if (ctx.samples > 0) inst.samples = ctx.samples;

  SimplePolygon p = instance_polygon(inst);
  SiteSet sites = instance_sites(inst, p);
  std::optional<std::vector<Point2>> targets;
  if (!ctx.target.empty()) {
    if (ctx.target == "polygon") {
      // whole polygon: leave unset
    } else if (ctx.target.rfind("points:", 0) == 0) {
      targets = parse_points_file(ctx.target.substr(7));
    } else {
      throw InstanceError("--target expects polygon or points:<file>");
    }
  } else if (!inst.whole_polygon) {
    targets = inst.target_points;
  }
  return {std::move(inst), std::move(p), std::move(sites), std::move(targets)};
}

std::vector<int> guard_ids(const Ctx& ctx, const SiteSet& sites) {
  if (ctx.guards.empty()) {
    std::vector<int> all(sites.size());
    for (int i = 0; i < sites.size(); ++i) all[i] = i;
    return all;
  }
  std::vector<int> ids = ctx.guards;
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  for (int id : ids)
    if (id < 0 || id >= sites.size())
      throw InstanceError("--guards id out of range: " + std::to_string(id));
  return ids;
}

// Finite targets for the baselines; discretizes a whole-polygon target.
std::vector<Point2> finite_targets(const Loaded& L, std::ostream& out) {
  if (L.targets) return *L.targets;
  std::vector<Point2> pts = discretize_targets(L.p, L.inst.samples);
  out << "targets: discretized count=" << pts.size()
      << " density=" << L.inst.samples << " (samples carry no guarantee)\n";
  return pts;
}

void print_ids(std::ostream& out, const char* label,
               const std::vector<int>& ids) {
  out << label << ":";
  for (int id : ids) out << ' ' << id;
  out << "\n";
}

int cmd_validate(const Ctx& ctx, std::ostream& out) {
  Loaded L = load(ctx);
  out << "polygon: valid\n";
  out << "vertices: " << L.p.size() << "\n";
  out << "area2: " << to_string(L.p.area2()) << "\n";
  out << "sites: " << L.sites.size() << "\n";
  if (L.targets) out << "targets: " << L.targets->size() << " points\n";
  return 0;
}

int cmd_net(const Ctx& ctx, std::ostream& out) {
  Loaded L = load(ctx);
  Rat eps = L.inst.epsilon ? *L.inst.epsilon : Rat(1, 4);
  Strategy strat = L.inst.strategy;
  if (strat == Strategy::Auto)
    strat = net_params(eps).quadratic_fallback ? Strategy::Quadratic
                                               : Strategy::Hierarchical;
  out << "epsilon: " << to_string(eps) << "\n";
  out << "strategy: " << strategy_name(strat) << "\n";
  VisCache cache(L.p, L.sites);
  WeightState uniform(L.sites.size());
  if (strat == Strategy::Quadratic) {
    QuadraticNet net =
        build_quadratic_net(cache, L.sites, uniform, eps, ctx.parallel);
    out << "m: " << net.m << "\n";
    out << "pair_guards: " << net.pair_guards << "\n";
    out << "endpoint_guards: " << net.endpoint_guards << "\n";
    out << "net_size: " << net.guards.ids.size() << "\n";
    out << "bound: " << net.bound.get_str() << "\n";
    print_ids(out, "guards", net.guards.ids);
  } else if (strat == Strategy::Hierarchical) {
    NetParams np = net_params(eps);
    HierarchicalNet net =
        build_hierarchical_net(cache, L.sites, uniform, np, ctx.parallel);
    out << "t: " << np.t << "\n";
    out << "alpha: " << to_string(np.alpha) << "\n";
    auto list = [&](const char* label, const auto& xs) {
      out << label << ": (";
      for (std::size_t i = 0; i < xs.size(); ++i)
        out << (i ? "," : "") << xs[i];
      out << ")\n";
    };
    list("b", np.b);
    list("f", np.f);
    out << "pair_guards: " << net.pair_guards << "\n";
    out << "endpoint_guards: " << net.endpoint_guards << "\n";
    out << "net_size: " << net.guards.ids.size() << "\n";
    out << "bound: " << net.bound.get_str() << "\n";
    print_ids(out, "guards", net.guards.ids);
  } else {
    GuardSet net = random_comparator_net(L.sites, uniform, eps, L.inst.seed);
    out << "net_size: " << net.ids.size() << "\n";
    print_ids(out, "guards", net.ids);
  }
  return 0;
}

int cmd_solve(const Ctx& ctx, std::ostream& out) {
  Loaded L = load(ctx);
  SolveOptions opt;
  opt.strategy = L.inst.strategy;
  opt.cprime0 = L.inst.cprime;
  opt.seed = L.inst.seed;
  opt.parallel = ctx.parallel;
  opt.targets = L.targets;
  SolveResult res = bg_solve(L.p, L.sites, opt);
  for (std::size_t i = 0; i < res.phases.size(); ++i) {
    const PhaseLog& ph = res.phases[i];
    out << "phase " << i + 1 << ": cprime=" << ph.cprime
        << " budget=" << ph.budget << " doublings=" << ph.doublings
        << " net_size=" << ph.net_size
        << " covered=" << (ph.covered ? "yes" : "no") << "\n";
  }
  if (res.status == SolveResult::Status::Covered) {
    out << "status: covered\n";
    out << "cover_size: " << res.cover.ids.size() << "\n";
    print_ids(out, "cover", res.cover.ids);
    return 0;
  }
  out << "status: infeasible\n";
  if (res.infeasible_witness)
    out << "witness: " << pt(*res.infeasible_witness) << "\n";
  return 1;
}

int cmd_verify(const Ctx& ctx, std::ostream& out) {
  Loaded L = load(ctx);
  std::vector<int> ids = guard_ids(ctx, L.sites);
  VisCache cache(L.p, L.sites);
  cache.warm(ids, ctx.parallel);
  std::vector<VisibleBoundary> regions;
  regions.reserve(ids.size());
  for (int id : ids) regions.push_back(cache.get(id));
  CoverageResult cov = L.targets
                           ? uncovered_witness(L.p, regions, *L.targets)
                           : uncovered_witness(L.p, regions);
  if (cov.covered) {
    out << "covered\n";
    return 0;
  }
  out << "uncovered\n";
  out << "witness: " << pt(*cov.witness) << "\n";
  return 1;
}

int cmd_opt(const Ctx& ctx, std::ostream& out) {
  Loaded L = load(ctx);
  std::vector<Point2> targets = finite_targets(L, out);
  OptResult res = brute_force_opt(L.p, L.sites, targets, ctx.limit);
  if (!res.feasible) {
    out << "infeasible\n";
    if (res.uncovered) out << "uncovered: " << pt(*res.uncovered) << "\n";
    return 1;
  }
  out << "opt: " << res.opt << "\n";
  print_ids(out, "cover", res.cover.ids);
  return 0;
}

int cmd_greedy(const Ctx& ctx, std::ostream& out) {
  Loaded L = load(ctx);
  std::vector<Point2> targets = finite_targets(L, out);
  GreedyResult res = greedy_cover(L.p, L.sites, targets, ctx.parallel);
  if (!res.covered) {
    out << "infeasible\n";
    if (res.uncovered) out << "uncovered: " << pt(*res.uncovered) << "\n";
    return 1;
  }
  out << "greedy_size: " << res.cover.ids.size() << "\n";
  print_ids(out, "picks", res.pick_order);
  print_ids(out, "cover", res.cover.ids);
  return 0;
}

int cmd_render(const Ctx& ctx, std::ostream& out) {
  Loaded L = load(ctx);
  std::vector<int> ids = guard_ids(ctx, L.sites);
  VisCache cache(L.p, L.sites);
  cache.warm(ids, ctx.parallel);
  std::vector<Point2> marks;
  std::vector<std::vector<Point2>> regions;
  for (int id : ids) {
    marks.push_back(L.sites.site(id).pos);
    regions.push_back(cache.get(id).region);
  }
  write_svg(ctx.out_path, L.p, marks, regions, std::nullopt);
  out << "wrote " << ctx.out_path << "\n";
  return 0;
}

int cmd_bench(const Ctx& ctx, std::ostream& out, std::ostream& err) {
  std::vector<std::pair<std::string, Instance>> instances;
  for (const std::string& path : ctx.paths)
    instances.push_back({path, parse_instance(path)});
  BenchOptions opt;
  for (const std::string& e : ctx.epsilons) {
    Rat eps = parse_rat(e);
    if (sgn(eps) <= 0 || eps > Rat(1))
      throw InstanceError("--epsilon must lie in (0, 1]");
    opt.epsilons.push_back(eps);
  }
  if (!ctx.strategy.empty()) opt.strategy = strategy_from_name(ctx.strategy);
  opt.parallel = ctx.parallel;
  opt.opt_limit = ctx.limit;
  std::vector<BenchRow> rows = run_bench(instances, opt, &err);
  std::string csv = bench_csv(rows);
  out << csv;
  if (!ctx.out_path.empty()) {
    std::ofstream f(ctx.out_path, std::ios::binary);
    if (!f) throw IoError("cannot write file: " + ctx.out_path);
    f << csv;
    if (!f) throw IoError("write failed: " + ctx.out_path);
  }
  return 0;
}

}  // namespace

int run_command(std::vector<std::string> args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"boundary guard cover tool"};
  app.require_subcommand(1);
  Ctx ctx;
  int which = 0;

  auto add_inst = [&](CLI::App* c) {
    c->add_option("instance", ctx.path, "instance json file")->required();
  };
  auto add_target = [&](CLI::App* c) {
    c->add_option("--target", ctx.target, "polygon | points:<file>");
  };

  CLI::App* c_validate = app.add_subcommand("validate", "check an instance");
  add_inst(c_validate);
  c_validate->callback([&] { which = 1; });

  CLI::App* c_net = app.add_subcommand("net", "build one net and report it");
  add_inst(c_net);
  c_net->add_option("--epsilon", ctx.epsilon, "net parameter, e.g. 1/16");
  c_net->add_option("--strategy", ctx.strategy,
                    "auto|quadratic|hierarchical|random");
  c_net->add_flag("--parallel", ctx.parallel, "use the parallel kernels");
  c_net->add_option("--seed", ctx.seed, "random strategy seed");
  c_net->callback([&] { which = 2; });

  CLI::App* c_solve = app.add_subcommand("solve", "run the doubling solver");
  add_inst(c_solve);
  c_solve->add_option("--strategy", ctx.strategy,
                      "auto|quadratic|hierarchical|random");
  c_solve->add_option("--cprime", ctx.cprime, "initial optimum guess");
  c_solve->add_option("--seed", ctx.seed, "random strategy seed");
  c_solve->add_flag("--parallel", ctx.parallel, "use the parallel kernels");
  add_target(c_solve);
  c_solve->callback([&] { which = 3; });

  CLI::App* c_verify = app.add_subcommand("verify", "check a guard set");
  add_inst(c_verify);
  c_verify->add_option("--guards", ctx.guards, "site ids (default: all)");
  c_verify->add_flag("--parallel", ctx.parallel, "use the parallel kernels");
  add_target(c_verify);
  c_verify->callback([&] { which = 4; });

  CLI::App* c_opt = app.add_subcommand("opt", "exact optimum (small inputs)");
  add_inst(c_opt);
  c_opt->add_option("--limit", ctx.limit, "max ground set size");
  c_opt->add_option("--samples", ctx.samples,
                    "discretization density for a polygon target");
  add_target(c_opt);
  c_opt->callback([&] { which = 5; });

  CLI::App* c_greedy = app.add_subcommand("greedy", "greedy cover baseline");
  add_inst(c_greedy);
  c_greedy->add_option("--samples", ctx.samples,
                       "discretization density for a polygon target");
  c_greedy->add_flag("--parallel", ctx.parallel, "use the parallel kernels");
  add_target(c_greedy);
  c_greedy->callback([&] { which = 6; });

  CLI::App* c_render = app.add_subcommand("render", "draw the instance as svg");
  add_inst(c_render);
  c_render->add_option("--out", ctx.out_path, "output svg path")->required();
  c_render->add_option("--guards", ctx.guards, "site ids (default: all)");
  c_render->add_flag("--parallel", ctx.parallel, "use the parallel kernels");
  c_render->callback([&] { which = 7; });

  CLI::App* c_bench = app.add_subcommand("bench", "csv report over instances");
  c_bench->add_option("instances", ctx.paths, "instance json files")
      ->required();
  c_bench->add_option("--epsilon", ctx.epsilons,
                      "net parameter sweep (repeatable)");
  c_bench->add_option("--strategy", ctx.strategy,
                      "auto|quadratic|hierarchical|random");
  c_bench->add_option("--limit", ctx.limit, "oracle ground set cap");
  c_bench->add_option("--out", ctx.out_path, "also write the csv here");
  c_bench->add_flag("--parallel", ctx.parallel, "use the parallel kernels");
  c_bench->callback([&] { which = 8; });

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    switch (which) {
      case 1: return cmd_validate(ctx, out);
      case 2: return cmd_net(ctx, out);
      case 3: return cmd_solve(ctx, out);
      case 4: return cmd_verify(ctx, out);
      case 5: return cmd_opt(ctx, out);
      case 6: return cmd_greedy(ctx, out);
      case 7: return cmd_render(ctx, out);
      case 8: return cmd_bench(ctx, out, err);
    }
  } catch (const parse_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InstanceError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const PolygonError& e) {
    err << "error: invalid polygon: " << e.what() << "\n";
    return 2;
  } catch (const SiteError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const NetParamError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const PointOutside& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const OptLimitExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace guarding
