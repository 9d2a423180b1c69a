#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "guarding/solver.hpp"

#include "fixtures.hpp"

using namespace guarding;

namespace {

SiteSet subdivided(const SimplePolygon& p, long per_edge) {
  std::vector<Point2> pts;
  for (int e = 0; e < p.size(); ++e) {
    Point2 a = p.vertex(e), d = p.vertex(e + 1) - a;
    for (long j = 0; j < per_edge; ++j) {
      Rat t = fixtures::frac(j, per_edge);
      pts.push_back({a.x + t * d.x, a.y + t * d.y});
    }
  }
  return SiteSet::from_points(p, pts);
}

// Targets covered when each is seen by some picked site; checked from scratch.
bool cover_hits_targets(const SimplePolygon& p, const SiteSet& sites,
                        const GuardSet& cover,
                        const std::vector<Point2>& targets) {
  for (const Point2& q : targets) {
    bool seen = false;
    for (int id : cover.ids)
      if (sees(p, sites.site(id).pos, q)) {
        seen = true;
        break;
      }
    if (!seen) return false;
  }
  return true;
}

// Whole-polygon verification through the coverage module with fresh sweeps.
bool cover_is_complete(const SimplePolygon& p, const SiteSet& sites,
                       const GuardSet& cover) {
  std::vector<VisibleBoundary> regions;
  for (int id : cover.ids)
    regions.push_back(visible_boundary(p, sites.site(id).pos));
  return uncovered_witness(p, regions).covered;
}

// Straight reimplementation of greedy set cover used as an oracle twin.
std::vector<int> reference_greedy(const SimplePolygon& p, const SiteSet& sites,
                                  const std::vector<Point2>& targets) {
  const std::size_t T = targets.size();
  std::vector<std::vector<char>> sees_row(sites.size(),
                                          std::vector<char>(T, 0));
  for (int i = 0; i < sites.size(); ++i)
    for (std::size_t j = 0; j < T; ++j)
      sees_row[i][j] = sees(p, sites.site(i).pos, targets[j]) ? 1 : 0;
  std::vector<char> done(T, 0);
  std::size_t left = T;
  std::vector<int> picks;
  while (left > 0) {
    int best = -1;
    std::size_t best_gain = 0;
    for (int i = 0; i < sites.size(); ++i) {
      std::size_t gain = 0;
      for (std::size_t j = 0; j < T; ++j)
        if (!done[j] && sees_row[i][j]) ++gain;
      if (gain > best_gain) {
        best_gain = gain;
        best = i;
      }
    }
    if (best < 0) break;
    picks.push_back(best);
    for (std::size_t j = 0; j < T; ++j)
      if (!done[j] && sees_row[best][j]) {
        done[j] = 1;
        --left;
      }
  }
  return picks;
}

bool same_solve(const SolveResult& a, const SolveResult& b) {
  if (a.status != b.status) return false;
  if (a.cover.ids != b.cover.ids) return false;
  if (a.phases.size() != b.phases.size()) return false;
  for (std::size_t i = 0; i < a.phases.size(); ++i) {
    const PhaseLog& x = a.phases[i];
    const PhaseLog& y = b.phases[i];
    if (x.cprime != y.cprime || x.budget != y.budget ||
        x.doublings != y.doublings || x.net_size != y.net_size ||
        x.covered != y.covered)
      return false;
  }
  if (a.transcript.size() != b.transcript.size()) return false;
  for (std::size_t i = 0; i < a.transcript.size(); ++i) {
    if (a.transcript[i].cprime != b.transcript[i].cprime) return false;
    if (!(a.transcript[i].witness == b.transcript[i].witness)) return false;
    if (a.transcript[i].seeing != b.transcript[i].seeing) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("phase budgets follow the exact ceiling formula") {
  CHECK(phase_budget(1, 16) == 16);
  CHECK(phase_budget(4, 4) == 1);
  CHECK(phase_budget(2, 64) == 40);
  CHECK(phase_budget(1, 12) == 15);
  CHECK(phase_budget(16, 24) == 38);
  CHECK(phase_budget(5, 5) == 1);
  CHECK(phase_budget(7, 3) == 1);

  // Minimality: B is the least exponent with 2^B * c^(4c) >= G^(4c).
  for (long c : {1L, 2L, 3L, 5L, 8L})
    for (long G : {2L, 7L, 12L, 64L, 193L}) {
      if (c >= G) continue;
      long B = phase_budget(c, G);
      unsigned long e = static_cast<unsigned long>(4 * c);
      Int lhs = ipow(Int(G), e);
      Int cp = ipow(Int(c), e);
      CHECK(pow2(static_cast<unsigned long>(B)) * cp >= lhs);
      if (B > 1) CHECK(pow2(static_cast<unsigned long>(B - 1)) * cp < lhs);
    }

  CHECK_THROWS_AS(phase_budget(0, 5), std::invalid_argument);
  CHECK_THROWS_AS(phase_budget(5, 0), std::invalid_argument);
  CHECK_THROWS_AS(phase_budget(-1, 2), std::invalid_argument);
}

TEST_CASE("sites seeing a point match pairwise sight checks") {
  SimplePolygon ell = fixtures::ell_small();
  SiteSet es = SiteSet::vertices(ell);
  CHECK(sites_seeing(ell, es, {Rat(2), Rat(1)}) ==
        std::vector<int>{0, 1, 2, 3});
  CHECK(sites_seeing(ell, es, {Rat(1, 2), Rat(1, 2)}) ==
        std::vector<int>{0, 1, 2, 3, 4, 5});

  std::mt19937_64 rng(2024);
  std::vector<SimplePolygon> polys;
  polys.push_back(fixtures::comb(3));
  polys.push_back(fixtures::staircase(4));
  for (const SimplePolygon& p : polys) {
    SiteSet s = SiteSet::vertices(p);
    for (int trial = 0; trial < 15; ++trial) {
      Point2 x = fixtures::random_in_point(p, rng, 16);
      std::vector<int> expect;
      for (int i = 0; i < s.size(); ++i)
        if (sees(p, s.site(i).pos, x)) expect.push_back(i);
      CHECK(sites_seeing(p, s, x) == expect);
    }
  }
}

TEST_CASE("the solver covers a convex polygon in its first phase") {
  SimplePolygon p = SimplePolygon::make(
      {{Rat(0), Rat(0)}, {Rat(2), Rat(0)}, {Rat(2), Rat(2)}, {Rat(0), Rat(2)}});
  SiteSet s = SiteSet::vertices(p);
  SolveOptions opt;
  opt.strategy = Strategy::Quadratic;
  SolveResult r = bg_solve(p, s, opt);
  CHECK((r.status == SolveResult::Status::Covered));
  REQUIRE(r.phases.size() == 1);
  CHECK(r.phases[0].cprime == 1);
  CHECK(r.phases[0].doublings == 0);
  CHECK(r.phases[0].covered);
  CHECK(r.phases[0].net_size == 4);
  CHECK(r.cover.ids == std::vector<int>{0, 1, 2, 3});
  CHECK(r.transcript.empty());
  CHECK(cover_is_complete(p, s, r.cover));
}

TEST_CASE("the solver covers combs and stays within phase budgets") {
  for (int k = 2; k <= 4; ++k) {
    SimplePolygon p = fixtures::comb(k);
    SiteSet s = SiteSet::vertices(p);
    SolveOptions opt;
    SolveResult r = bg_solve(p, s, opt);
    REQUIRE((r.status == SolveResult::Status::Covered));
    CHECK(cover_is_complete(p, s, r.cover));

    long expect_c = 1;
    for (std::size_t i = 0; i < r.phases.size(); ++i) {
      const PhaseLog& ph = r.phases[i];
      CHECK(ph.cprime == expect_c);
      CHECK(ph.budget == phase_budget(ph.cprime, s.size()));
      CHECK(ph.doublings <= ph.budget);
      CHECK(ph.covered == (i + 1 == r.phases.size()));
      expect_c = std::min(2 * expect_c, static_cast<long>(s.size()));
    }
    // Prong tips have pairwise-disjoint seeing sets, so the optimum is k
    // and the final guess stays within double of it.
    long final_c = r.phases.back().cprime;
    CHECK(final_c <= 2 * k);
    CHECK(r.cover.ids.size() >= static_cast<std::size_t>(k));
    // Quadratic-size ceiling at the terminating guess.
    long m = 8 * final_c;
    CHECK(Int(static_cast<long>(r.cover.ids.size())) <=
          Int(4) * (Int(m) * (m - 1) / 2) + m);
  }
}

TEST_CASE("a covering run is reproducible bit for bit") {
  SimplePolygon p = fixtures::comb(4);
  SiteSet s = SiteSet::vertices(p);
  SolveOptions opt;
  SolveResult a = bg_solve(p, s, opt);
  SolveResult b = bg_solve(p, s, opt);
  CHECK(same_solve(a, b));

  SolveOptions par = opt;
  par.parallel = true;
  SolveResult c = bg_solve(p, s, par);
  CHECK(same_solve(a, c));
}

TEST_CASE("random nets force reweighting and leave a replayable transcript") {
  SimplePolygon p = fixtures::comb(6);
  SiteSet s = subdivided(p, 8);
  REQUIRE(s.size() == 192);
  SolveOptions opt;
  opt.strategy = Strategy::Random;
  opt.seed = 1;
  SolveResult r = bg_solve(p, s, opt);
  REQUIRE((r.status == SolveResult::Status::Covered));
  CHECK(cover_is_complete(p, s, r.cover));
  CHECK(!r.transcript.empty());

  long total_doublings = 0;
  for (const PhaseLog& ph : r.phases) total_doublings += ph.doublings;
  CHECK(static_cast<long>(r.transcript.size()) == total_doublings);

  // Each doubled set must match an independent sweep at the witness, and the
  // replayed total weight must respect the per-phase growth bound
  // total^(4c') <= |G|^(4c') * 2^(3k).
  long G = s.size();
  WeightState w(static_cast<int>(G));
  long k = 0;
  int phase_c = r.transcript.empty() ? 1 : r.transcript.front().cprime;
  for (const DoublingRecord& rec : r.transcript) {
    CHECK(p.locate(rec.witness) != Location::Exterior);
    CHECK(rec.seeing == sites_seeing(p, s, rec.witness));
    CHECK(!rec.seeing.empty());
    if (rec.cprime != phase_c) {  // phase change resets the weights
      w = WeightState(static_cast<int>(G));
      k = 0;
      phase_c = rec.cprime;
    }
    w.double_at(rec.seeing);
    ++k;
    unsigned long e = static_cast<unsigned long>(4 * rec.cprime);
    CHECK(ipow(w.total(), e) <=
          ipow(Int(G), e) * pow2(static_cast<unsigned long>(3 * k)));
  }

  SolveResult again = bg_solve(p, s, opt);
  CHECK(same_solve(r, again));
}

TEST_CASE("finite-target solves cover exactly the requested points") {
  SimplePolygon p = fixtures::ell_small();
  SiteSet s = SiteSet::vertices(p);
  SolveOptions opt;
  opt.targets = std::vector<Point2>{
      {Rat(1, 2), Rat(1, 2)}, {Rat(3, 2), Rat(1, 2)}, {Rat(1, 2), Rat(3, 2)}};
  SolveResult r = bg_solve(p, s, opt);
  CHECK((r.status == SolveResult::Status::Covered));
  CHECK(!r.cover.ids.empty());
  CHECK(cover_hits_targets(p, s, r.cover, *opt.targets));

  SolveOptions bad;
  bad.targets = std::vector<Point2>{{Rat(5), Rat(5)}};
  CHECK_THROWS_AS(bg_solve(p, s, bad), PointOutside);
}

TEST_CASE("a forced hierarchical strategy honours the requested guess") {
  SimplePolygon p = fixtures::comb(6);
  SiteSet s = SiteSet::vertices(p);
  SolveOptions opt;
  opt.strategy = Strategy::Hierarchical;
  opt.cprime0 = 16;
  SolveResult r = bg_solve(p, s, opt);
  REQUIRE((r.status == SolveResult::Status::Covered));
  REQUIRE(r.phases.size() == 1);
  CHECK(r.phases[0].cprime == 16);
  CHECK(r.phases[0].budget == 38);
  CHECK(cover_is_complete(p, s, r.cover));
}

TEST_CASE("greedy set cover picks by gain with lowest-id ties") {
  SimplePolygon p = fixtures::comb(3);
  SiteSet s = SiteSet::vertices(p);
  std::vector<Point2> tips;
  for (int i = 0; i < 3; ++i) tips.push_back({Rat(4 * i + 1, 2), Rat(11, 4)});

  GreedyResult g = greedy_cover(p, s, tips);
  CHECK(g.covered);
  // Every site sees exactly one tip, so picks walk up the id order.
  CHECK(g.pick_order == std::vector<int>{0, 1, 5});
  CHECK(g.cover.ids == std::vector<int>{0, 1, 5});

  // A base-strip point gives sites 0 and 1 a gain of two; the tie goes to 0.
  std::vector<Point2> mixed = tips;
  mixed.push_back({Rat(5, 2), Rat(1, 2)});
  GreedyResult gm = greedy_cover(p, s, mixed);
  CHECK(gm.covered);
  CHECK(gm.pick_order == std::vector<int>{0, 1, 5});

  GreedyResult gp = greedy_cover(p, s, mixed, true);
  CHECK(gp.pick_order == gm.pick_order);

  SimplePolygon sq = SimplePolygon::make(
      {{Rat(0), Rat(0)}, {Rat(2), Rat(0)}, {Rat(2), Rat(2)}, {Rat(0), Rat(2)}});
  SiteSet ss = SiteSet::vertices(sq);
  GreedyResult one = greedy_cover(sq, ss, {{Rat(1), Rat(1)}});
  CHECK(one.covered);
  CHECK(one.pick_order == std::vector<int>{0});

  GreedyResult none = greedy_cover(sq, ss, {});
  CHECK(none.covered);
  CHECK(none.cover.ids.empty());
  CHECK(none.pick_order.empty());

  CHECK_THROWS_AS(greedy_cover(sq, ss, {{Rat(9), Rat(9)}}), PointOutside);
}

TEST_CASE("greedy agrees with a reference twin on random instances") {
  std::mt19937_64 rng(600);
  std::vector<SimplePolygon> polys;
  polys.push_back(fixtures::ell_small());
  polys.push_back(fixtures::comb(3));
  polys.push_back(fixtures::staircase(4));
  polys.push_back(fixtures::notched_square());
  for (const SimplePolygon& p : polys)
    for (int trial = 0; trial < 3; ++trial) {
      SiteSet s = SiteSet::vertices(p);
      std::vector<Point2> targets;
      int T = 5 + static_cast<int>(rng() % 4);
      for (int i = 0; i < T; ++i)
        targets.push_back(fixtures::random_in_point(p, rng, 16));
      GreedyResult g = greedy_cover(p, s, targets);
      CHECK(g.covered);
      CHECK(g.pick_order == reference_greedy(p, s, targets));
      CHECK(cover_hits_targets(p, s, g.cover, targets));
    }
}

TEST_CASE("greedy stays within the harmonic factor of optimum") {
  std::mt19937_64 rng(601);
  std::vector<SimplePolygon> polys;
  polys.push_back(fixtures::ell_small());
  polys.push_back(fixtures::comb(3));
  polys.push_back(fixtures::staircase(4));
  polys.push_back(fixtures::notched_square());
  for (const SimplePolygon& p : polys)
    for (int trial = 0; trial < 2; ++trial) {
      SiteSet s = SiteSet::vertices(p);
      std::vector<Point2> targets;
      int T = 4 + static_cast<int>(rng() % 5);
      for (int i = 0; i < T; ++i)
        targets.push_back(fixtures::random_in_point(p, rng, 8));
      GreedyResult g = greedy_cover(p, s, targets);
      OptResult o = brute_force_opt(p, s, targets);
      REQUIRE(g.covered);
      REQUIRE(o.feasible);
      CHECK(g.pick_order.size() >= static_cast<std::size_t>(o.opt));
      double harmonic = std::log(static_cast<double>(T)) + 1.0;
      CHECK(static_cast<double>(g.pick_order.size()) <=
            harmonic * o.opt + 1e-9);
    }
}

TEST_CASE("the exact optimizer returns lexicographically least covers") {
  SimplePolygon p = fixtures::comb(3);
  SiteSet s = SiteSet::vertices(p);
  std::vector<Point2> tips;
  for (int i = 0; i < 3; ++i) tips.push_back({Rat(4 * i + 1, 2), Rat(11, 4)});
  OptResult o = brute_force_opt(p, s, tips);
  REQUIRE(o.feasible);
  CHECK(o.opt == 3);
  CHECK(o.cover.ids == std::vector<int>{0, 1, 5});

  OptResult single = brute_force_opt(p, s, {tips[1]});
  CHECK(single.opt == 1);
  CHECK(single.cover.ids == std::vector<int>{5});

  SimplePolygon sq = SimplePolygon::make(
      {{Rat(0), Rat(0)}, {Rat(2), Rat(0)}, {Rat(2), Rat(2)}, {Rat(0), Rat(2)}});
  SiteSet ss = SiteSet::vertices(sq);
  std::mt19937_64 rng(55);
  std::vector<Point2> targets;
  for (int i = 0; i < 5; ++i)
    targets.push_back(fixtures::random_interior_point(sq, rng, 16));
  OptResult conv = brute_force_opt(sq, ss, targets);
  CHECK(conv.opt == 1);
  CHECK(conv.cover.ids == std::vector<int>{0});

  OptResult empty = brute_force_opt(sq, ss, {});
  CHECK(empty.feasible);
  CHECK(empty.opt == 0);
  CHECK(empty.cover.ids.empty());

  SimplePolygon big = fixtures::comb(5);
  CHECK_THROWS_AS(brute_force_opt(big, SiteSet::vertices(big), tips, 10),
                  OptLimitExceeded);
}

TEST_CASE("interior discretization is deterministic with exact centroids") {
  SimplePolygon tri = SimplePolygon::make(
      {{Rat(0), Rat(0)}, {Rat(3), Rat(0)}, {Rat(0), Rat(3)}});
  auto d1 = discretize_targets(tri, 1);
  REQUIRE(d1.size() == 1);
  CHECK((d1[0] == Point2{Rat(1), Rat(1)}));

  auto d2 = discretize_targets(tri, 2);
  REQUIRE(d2.size() == 2);
  CHECK((d2[0] == Point2{Rat(1, 2), Rat(3, 2)}));
  CHECK((d2[1] == Point2{Rat(3, 2), Rat(1, 2)}));

  SimplePolygon sq = SimplePolygon::make(
      {{Rat(0), Rat(0)}, {Rat(3), Rat(0)}, {Rat(3), Rat(3)}, {Rat(0), Rat(3)}});
  auto sd = discretize_targets(sq, 1);
  CHECK(sd.size() == 2);

  SimplePolygon ell = fixtures::ell_small();
  auto ld = discretize_targets(ell, 4);
  CHECK(ld.size() == 16);
  for (const Point2& q : ld) CHECK(ell.locate(q) != Location::Exterior);
  CHECK(discretize_targets(ell, 4) == ld);

  CHECK_THROWS_AS(discretize_targets(tri, 0), std::invalid_argument);
}
