#include <doctest.h>

#include <set>

#include "lattice_stairs/staircase.hpp"

using namespace lattice_stairs;

namespace {

// Oracle: membership straight from the distance definitions. The vertical
// deviation of (x, y) from y = (b/a) x + p/q is d/(aq) with
// d = bxq + ap - ayq, and the horizontal one is d/(bq).
struct Oracle {
  Int a, b, p, q;
  int sigma;

  Int dev(Int x, Int y) const { return sigma * (b * x * q + a * p - a * y * q); }
  bool vertical(Int x, Int y) const { return dev(x, y) >= 0 && dev(x, y) < a * q; }
  bool horizontal(Int x, Int y) const { return dev(x, y) >= 0 && dev(x, y) < b * q; }
  bool staircase(Int x, Int y) const { return vertical(x, y) || horizontal(x, y); }
  bool corner(Int x, Int y) const { return vertical(x, y) && horizontal(x, y); }

  std::vector<Vec2> points(Int x0, Int x1, bool corners) const {
    std::vector<Vec2> out;
    for (Int x = x0; x <= x1; ++x) {
      for (Int y = -2 * b * (std::abs(x) + 2) - 10; y <= 2 * b * (std::abs(x) + 2) + 10; ++y) {
        if (corners ? corner(x, y) : staircase(x, y)) out.push_back({x, y});
      }
    }
    return out;
  }
};

Oracle oracle(Int a, Int b, Int p = 0, Int q = 1, int sigma = 1) { return {a, b, p, q, sigma}; }

}  // namespace

TEST_CASE("rationals") {
  CHECK(Rational::make(3, 6) == Rational{1, 2});
  CHECK(Rational::make(2, -4) == Rational{-1, 2});
  CHECK(parse_rational("-2") == Rational{-2, 1});
  CHECK(parse_rational("6/4") == Rational{3, 2});
  CHECK(to_string(Rational{-1, 3}) == "-1/3");
  CHECK(to_string(Rational{4, 1}) == "4");
  CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
  CHECK_THROWS_AS(parse_rational("x"), DomainError);
  CHECK_THROWS_AS(parse_rational("1/2/3"), DomainError);
  CHECK_THROWS_AS(LineSpec(SlopePair{2, 4}), DomainError);
  CHECK_THROWS_AS(LineSpec(SlopePair{2, 3}, {}, 0), DomainError);
}

TEST_CASE("frozen membership examples") {
  LineSpec s52(SlopePair{5, 2});
  CHECK_FALSE(in_halfplane(s52, {1, 1}));
  CHECK(pipe_membership(s52, {2, 0}) == PipeMembership{true, false});
  CHECK(pipe_membership(LineSpec(SlopePair{3, 8}), {1, 0}) == PipeMembership{false, false});
  CHECK(pipe_membership(LineSpec(SlopePair{3, 8}), {1, 1}) == PipeMembership{false, true});

  std::vector<Vec2> tops;
  for (Int n = 0; n <= 4; ++n) tops.push_back({n, floor_div(2 * n, 5)});
  CHECK(staircase_window(s52, 0, 4, Which::kStaircase).points == tops);
  CHECK(staircase_window(LineSpec(SlopePair{3, 8}), 0, 2, Which::kCorners).points ==
        std::vector<Vec2>{{0, 0}, {1, 2}, {2, 5}});
  CHECK(column_counts(LineSpec(SlopePair{3, 8}), 1, 3, Which::kStaircase) == std::vector<Int>{2, 3, 3});
  CHECK(column_counts(s52, 1, 5, Which::kCorners) == std::vector<Int>{0, 0, 1, 0, 1});
}

TEST_CASE("windows agree with the membership oracle") {
  for (Int a = 1; a <= 12; ++a) {
    for (Int b = 1; b <= 12; ++b) {
      if (gcd(a, b) != 1) continue;
      for (int sigma : {1, -1}) {
        for (auto [p, q] : std::vector<std::pair<Int, Int>>{{0, 1}, {2, 7}, {-1, 3}, {5, 2}, {1, a}}) {
          LineSpec ls(SlopePair{a, b}, Rational::make(p, q), sigma);
          Rational r = ls.r;
          Oracle o = oracle(a, b, r.num, r.den, sigma);
          INFO("a=", a, " b=", b, " sigma=", sigma, " r=", to_string(r));
          CHECK(staircase_window(ls, -8, 8, Which::kStaircase).points == o.points(-8, 8, false));
          CHECK(staircase_window(ls, -8, 8, Which::kCorners).points == o.points(-8, 8, true));
          for (Int x = -3; x <= 3; ++x) {
            for (Int y = -40; y <= 40; ++y) {
              PipeMembership m = pipe_membership(ls, {x, y});
              CHECK(m.in_v == o.vertical(x, y));
              CHECK(m.in_h == o.horizontal(x, y));
              CHECK(in_halfplane(ls, {x, y}) == (o.dev(x, y) >= 0));
            }
          }
          std::vector<Int> counts;
          for (Int x = -4; x <= 4; ++x) {
            Int n = 0;
            for (Vec2 v : o.points(x, x, false)) n += v.x == x;
            counts.push_back(n);
          }
          CHECK(column_counts(ls, -4, 4, Which::kStaircase) == counts);
        }
      }
    }
  }
}

TEST_CASE("staircase recursion matches brute windows") {
  for (Int a = 1; a <= 20; ++a) {
    for (Int b = 1; b <= 20; ++b) {
      if (gcd(a, b) != 1) continue;
      Oracle o = oracle(a, b);
      StaircaseWindows w = staircase_by_recursion({a, b}, -a - 2, 2 * a + 3);
      CHECK(w.staircase.points == o.points(-a - 2, 2 * a + 3, false));
      CHECK(w.corners.points == o.points(-a - 2, 2 * a + 3, true));
    }
  }
  auto w = staircase_by_recursion({5, 13}, 0, 5);
  CHECK(w.staircase == staircase_window(LineSpec(SlopePair{5, 13}), 0, 5, Which::kStaircase));
  CHECK(w.corners == staircase_window(LineSpec(SlopePair{5, 13}), 0, 5, Which::kCorners));
}

TEST_CASE("reflections of S_{3,8}") {
  LineSpec s38(SlopePair{3, 8});
  for (Which which : {Which::kStaircase, Which::kCorners}) {
    // Rows of S_{3,8} with |y| <= 20 lie inside the columns [-10, 10].
    PointWindow image = reflect(staircase_window(s38, -10, 10, which), Reflection::kDiagonal);
    PointWindow direct = staircase_window(LineSpec(SlopePair{8, 3}, {}, -1), -20, 20, which);
    CHECK(restrict_columns(image, -20, 20) == direct);

    PointWindow flipped = reflect(staircase_window(s38, -5, 5, which), Reflection::kOrigin);
    CHECK(flipped == staircase_window(LineSpec(SlopePair{3, 8}, {}, -1), -5, 5, which));
  }
}

TEST_CASE("lattice points on lines") {
  auto p = line_lattice_point(LineSpec(SlopePair{5, 2}, Rational::make(1, 5)));
  REQUIRE(p.has_value());
  CHECK(2 * p->x - 5 * p->y == -1);
  CHECK(*p == Vec2{2, 1});
  CHECK_FALSE(line_lattice_point(LineSpec(SlopePair{5, 2}, Rational::make(1, 3))).has_value());
  for (Int k = -7; k <= 7; ++k) {
    LineSpec ls(SlopePair{7, 3}, Rational::make(k, 7));
    auto v = line_lattice_point(ls);
    REQUIRE(v.has_value());
    CHECK(7 * v->y == 3 * v->x + k);
    CHECK(v->x >= 0);
    CHECK(v->x < 7);
  }
}

TEST_CASE("point windows") {
  PointWindow w = PointWindow::from_points({{2, 1}, {0, 0}, {2, 0}, {0, 0}}, 0, 3);
  CHECK(w.points == std::vector<Vec2>{{0, 0}, {2, 0}, {2, 1}});
  CHECK(w.column_size(2) == 2);
  CHECK(w.column_size(1) == 0);
  CHECK(w.contains({2, 1}));
  CHECK(restrict_columns(w, 1, 3).points == std::vector<Vec2>{{2, 0}, {2, 1}});
  CHECK(aligned({{3, 4}, {5, 1}}) == std::vector<Vec2>{{0, 0}, {2, -3}});
  CHECK_THROWS_AS(PointWindow::from_points({{5, 0}}, 0, 3), DomainError);
  CHECK(PointWindow::spanning({{4, 1}, {-1, 2}}).x0 == -1);
}

TEST_CASE("render draws corners, staircase points and gaps") {
  LineSpec ls(SlopePair{3, 2});
  std::string got = render(ls, -1, 4);
  Oracle o = oracle(3, 2);
  std::string want = "S_{3,2} window [-1,4]\n";
  for (Int y = 2; y >= -1; --y) {
    for (Int x = -1; x <= 4; ++x) want += o.corner(x, y) ? 'O' : o.staircase(x, y) ? '#' : '.';
    want += '\n';
  }
  CHECK(got == want);
  CHECK(render(LineSpec(SlopePair{3, 2}, Rational::make(1, 2), -1), 0, 1).rfind("S^-_{3,2,1/2} window [0,1]\n", 0) == 0);
}
