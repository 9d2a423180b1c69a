#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "guarding/geometry.hpp"

using namespace guarding;

TEST_CASE("parse_rat reads decimal strings exactly") {
  CHECK(parse_rat("0.1") == Rat(1, 10));
  CHECK(parse_rat("0.1") != Rat(0.1));  // the binary float is not 1/10
  CHECK(parse_rat("3/7") == Rat(3, 7));
  CHECK(parse_rat("-2.5") == Rat(-5, 2));
  CHECK(parse_rat("+4/6") == Rat(2, 3));
  CHECK(parse_rat("1e3") == Rat(1000));
  CHECK(parse_rat("2.5e-2") == Rat(1, 40));
  CHECK(parse_rat(" 12.75 ") == Rat(51, 4));
  CHECK(parse_rat("000.250") == Rat(1, 4));
  CHECK(parse_rat("7") == Rat(7));
  CHECK(parse_rat("-0") == Rat(0));
}

TEST_CASE("parse_rat rejects junk") {
  CHECK_THROWS_AS(parse_rat(""), parse_error);
  CHECK_THROWS_AS(parse_rat("1/0"), parse_error);
  CHECK_THROWS_AS(parse_rat("abc"), parse_error);
  CHECK_THROWS_AS(parse_rat("1.2.3"), parse_error);
  CHECK_THROWS_AS(parse_rat("1e"), parse_error);
  CHECK_THROWS_AS(parse_rat("1e12345678"), parse_error);
  CHECK_THROWS_AS(parse_rat("1/-2"), parse_error);
  CHECK_THROWS_AS(parse_rat("0x10"), parse_error);
}

TEST_CASE("to_string emits canonical fractions") {
  CHECK(to_string(parse_rat("4/6")) == "2/3");
  CHECK(to_string(Rat(-8, 4)) == "-2");
  CHECK(to_string(Rat(0)) == "0");
  // round trip
  for (const char* s : {"2/3", "-7/5", "41", "0"})
    CHECK(to_string(parse_rat(s)) == s);
}

TEST_CASE("integer helpers") {
  CHECK(pow2(0) == 1);
  CHECK(pow2(10) == 1024);
  CHECK(ceil_log2(Rat(1)) == 0);
  CHECK(ceil_log2(Rat(2)) == 1);
  CHECK(ceil_log2(Rat(1024)) == 10);
  CHECK(ceil_log2(Rat(1025)) == 11);
  CHECK(ceil_log2(Rat(3, 2)) == 1);
  CHECK(ceil_log2(Rat(65536)) == 16);
  CHECK_THROWS_AS(ceil_log2(Rat(0)), std::invalid_argument);
  CHECK(is_pow2(Int(64)));
  CHECK(!is_pow2(Int(65)));
  CHECK(!is_pow2(Int(0)));
  CHECK(ipow(Int(3), 5) == 243);
  CHECK(ipow(Int(10), 0) == 1);
}

TEST_CASE("orientation predicates") {
  Point2 a{Rat(0), Rat(0)}, b{Rat(2), Rat(0)}, c{Rat(1), Rat(1)};
  CHECK((orient(a, b, c) == Turn::Left));
  CHECK((orient(b, a, c) == Turn::Right));
  CHECK((orient(a, b, Point2{Rat(5), Rat(0)}) == Turn::Straight));
  CHECK(orient_sign(a, b, c) == 1);
  CHECK(orient_sign(b, a, c) == -1);
  CHECK(orient_sign(a, b, Point2{Rat(5), Rat(0)}) == 0);

  SUBCASE("antisymmetric under swapping any two points") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
      auto rnd = [&] { return Point2{Rat(long(rng() % 21) - 10), Rat(long(rng() % 21) - 10)}; };
      Point2 p = rnd(), q = rnd(), r = rnd();
      CHECK(int(orient_sign(p, q, r)) == -int(orient_sign(q, p, r)));
      CHECK(int(orient_sign(p, q, r)) == -int(orient_sign(p, r, q)));
      CHECK(int(orient_sign(p, q, r)) == int(orient_sign(q, r, p)));
    }
  }
}

TEST_CASE("on_segment includes endpoints and excludes points off the line") {
  Point2 a{Rat(0), Rat(0)}, b{Rat(4), Rat(2)};
  CHECK(on_segment(a, a, b));
  CHECK(on_segment(b, a, b));
  CHECK(on_segment(Point2{Rat(2), Rat(1)}, a, b));
  CHECK(!on_segment(Point2{Rat(6), Rat(3)}, a, b));   // past the end
  CHECK(!on_segment(Point2{Rat(2), Rat(2)}, a, b));   // off the line
  CHECK(!on_segment(Point2{Rat(-2), Rat(-1)}, a, b));
}

TEST_CASE("segment intersection distinguishes crossing from touching") {
  Point2 a{Rat(0), Rat(0)}, b{Rat(4), Rat(0)};
  Point2 c{Rat(2), Rat(-1)}, d{Rat(2), Rat(1)};
  CHECK(segments_cross(a, b, c, d));
  CHECK(segments_intersect(a, b, c, d));

  Point2 e{Rat(4), Rat(0)}, f{Rat(6), Rat(2)};
  CHECK(!segments_cross(a, b, e, f));  // endpoint touch only
  CHECK(segments_intersect(a, b, e, f));

  Point2 g{Rat(0), Rat(1)}, h{Rat(4), Rat(1)};
  CHECK(!segments_cross(a, b, g, h));
  CHECK(!segments_intersect(a, b, g, h));

  // collinear overlap
  Point2 i{Rat(2), Rat(0)}, j{Rat(6), Rat(0)};
  CHECK(!segments_cross(a, b, i, j));
  CHECK(segments_intersect(a, b, i, j));
}

TEST_CASE("angle_cmp sorts directions counterclockwise from east") {
  std::vector<Point2> dirs = {
      {Rat(1), Rat(0)},  {Rat(2), Rat(1)},  {Rat(0), Rat(1)},
      {Rat(-1), Rat(1)}, {Rat(-1), Rat(0)}, {Rat(-1), Rat(-1)},
      {Rat(0), Rat(-1)}, {Rat(1), Rat(-1)}};
  for (std::size_t i = 0; i < dirs.size(); ++i)
    for (std::size_t j = 0; j < dirs.size(); ++j) {
      int c = angle_cmp(dirs[i], dirs[j]);
      if (i == j) CHECK(c == 0);
      if (i < j) CHECK(c < 0);
      if (i > j) CHECK(c > 0);
    }

  SUBCASE("magnitude never matters") {
    CHECK(angle_cmp({Rat(1), Rat(0)}, {Rat(500), Rat(0)}) == 0);
    CHECK(angle_cmp({Rat(2), Rat(6)}, {Rat(1), Rat(3)}) == 0);
    CHECK(angle_cmp({Rat(-2), Rat(-6)}, {Rat(-1), Rat(-3)}) == 0);
    CHECK(angle_cmp({Rat(2), Rat(6)}, {Rat(-1), Rat(-3)}) != 0);
  }

  SUBCASE("trichotomy and transitivity on random directions") {
    std::mt19937_64 rng(11);
    std::vector<Point2> sample;
    while (sample.size() < 40) {
      Point2 d{Rat(long(rng() % 13) - 6), Rat(long(rng() % 13) - 6)};
      if (sgn(d.x) != 0 || sgn(d.y) != 0) sample.push_back(d);
    }
    std::sort(sample.begin(), sample.end(),
              [](const Point2& a, const Point2& b) { return angle_cmp(a, b) < 0; });
    for (std::size_t i = 0; i + 1 < sample.size(); ++i)
      CHECK(angle_cmp(sample[i], sample[i + 1]) <= 0);
  }
}

TEST_CASE("ccw_gap_below_pi measures the gap strictly") {
  CHECK(ccw_gap_below_pi({Rat(1), Rat(0)}, {Rat(0), Rat(1)}));
  CHECK(ccw_gap_below_pi({Rat(1), Rat(0)}, {Rat(-1), Rat(1)}));
  CHECK(!ccw_gap_below_pi({Rat(1), Rat(0)}, {Rat(-1), Rat(0)}));   // exactly pi
  CHECK(!ccw_gap_below_pi({Rat(1), Rat(0)}, {Rat(-1), Rat(-1)}));  // past pi
  CHECK(!ccw_gap_below_pi({Rat(1), Rat(0)}, {Rat(1), Rat(0)}));    // zero gap
  CHECK(!ccw_gap_below_pi({Rat(0), Rat(1)}, {Rat(1), Rat(0)}));
}
