#include <doctest.h>

#include <algorithm>
#include <chrono>
#include <cmath>

#include "lattice_stairs/barvinok.hpp"
#include "lattice_stairs/carlitz.hpp"

using namespace lattice_stairs;

namespace {

using Coeffs = std::map<Vec2, Int>;

// Oracle: sum_{k=1}^{a-1} x^(k-1) y^floor(bk/a).
Coeffs oracle_carlitz(Int a, Int b) {
  Coeffs out;
  for (Int k = 1; k < a; ++k) out[{k - 1, (b * k) / a}] += 1;
  return out;
}

// Oracle: lattice points s v1 + t v2 with 0 < s, t < 1, by scanning the
// bounding box and testing with rational coordinates.
std::vector<Vec2> oracle_open_parallelepiped(Vec2 v1, Vec2 v2) {
  Int det = v1.x * v2.y - v1.y * v2.x;
  std::vector<Vec2> out;
  Int xs[] = {0, v1.x, v2.x, v1.x + v2.x}, ys[] = {0, v1.y, v2.y, v1.y + v2.y};
  for (Int x = *std::min_element(xs, xs + 4); x <= *std::max_element(xs, xs + 4); ++x) {
    for (Int y = *std::min_element(ys, ys + 4); y <= *std::max_element(ys, ys + 4); ++y) {
      Int s = x * v2.y - y * v2.x, t = v1.x * y - v1.y * x;
      if (det < 0) {
        s = -s;
        t = -t;
      }
      Int d = det < 0 ? -det : det;
      if (s > 0 && s < d && t > 0 && t < d) out.push_back({x, y});
    }
  }
  return out;
}

}  // namespace

TEST_CASE("frozen carlitz examples") {
  CHECK(carlitz_naive({3, 2}).coefficients() == Coeffs{{{0, 0}, 1}, {{1, 1}, 1}});
  CHECK(carlitz_short({3, 2}).coefficients() == Coeffs{{{0, 0}, 1}, {{1, 1}, 1}});
  CHECK(polynomial_string(carlitz_short({3, 2}).coefficients()) == "1 + x*y");
  CHECK(carlitz_naive({1, 5}).coefficients().empty());
  CHECK(carlitz_short({1, 5}).coefficients().empty());
  CHECK_THROWS_AS(carlitz_short({6, 4}), DomainError);
}

TEST_CASE("short forms equal the naive sum") {
  for (Int a = 1; a <= 40; ++a) {
    for (Int b = 1; b <= 40; ++b) {
      if (gcd(a, b) != 1) continue;
      INFO("a=", a, " b=", b);
      Coeffs want = oracle_carlitz(a, b);
      CHECK(carlitz_naive({a, b}).coefficients() == want);
      CarlitzPolynomial c = carlitz_short({a, b});
      CHECK_FALSE(c.is_naive());
      CHECK(c.coefficients() == want);
      Int len = static_cast<Int>(euclid_chain(a, b).size());
      CHECK(static_cast<Int>(c.term_count()) <= 4 * len + 8);
      CHECK(carlitz_short({a, b}, CarlitzMethod::kPartition).coefficients() == want);
    }
  }
}

TEST_CASE("parallelepipeds") {
  // b = 1: the down parallelepiped holds (1,0), ..., (a-1,0); the right one is empty.
  for (Int a = 1; a <= 6; ++a) {
    std::vector<Vec2> row;
    for (Int k = 1; k < a; ++k) row.push_back({k, 0});
    CHECK(parallelepiped_by_recursion({{a, 1}, Axis::kDown, true}).points == row);
    CHECK(parallelepiped_by_recursion({{a, 1}, Axis::kRight, true}).points.empty());
  }
  // Half-open with the down axis has one point per column 0..a-1.
  auto closed = parallelepiped_points_brute({{5, 3}, Axis::kDown, false}).points;
  CHECK(closed.size() == 5);
  for (Int x = 0; x < 5; ++x) CHECK(std::count_if(closed.begin(), closed.end(), [&](Vec2 p) { return p.x == x; }) == 1);

  for (Int a = 1; a <= 30; ++a) {
    for (Int b = 1; b <= 30; ++b) {
      if (gcd(a, b) != 1) continue;
      INFO("a=", a, " b=", b);
      auto down = oracle_open_parallelepiped({0, -1}, {a, b});
      auto right = oracle_open_parallelepiped({1, 0}, {a, b});
      CHECK(parallelepiped_points_brute({{a, b}, Axis::kDown, true}).points == down);
      CHECK(parallelepiped_points_brute({{a, b}, Axis::kRight, true}).points == right);
      CHECK(parallelepiped_by_recursion({{a, b}, Axis::kDown, true}).points == down);
      CHECK(parallelepiped_by_recursion({{a, b}, Axis::kRight, true}).points == right);
    }
  }
  for (Axis axis : {Axis::kDown, Axis::kRight}) {
    ParallelepipedSpec ps{{5, 13}, axis, true};
    CHECK(parallelepiped_by_recursion(ps) == parallelepiped_points_brute(ps));
    ParallelepipedSpec ps38{{3, 8}, axis, true};
    CHECK(parallelepiped_by_recursion(ps38) == parallelepiped_points_brute(ps38));
  }
  CHECK_THROWS_AS(parallelepiped_by_recursion({{3, 8}, Axis::kDown, false}), DomainError);
}

TEST_CASE("partition terms are disjoint indicators") {
  for (Int a = 1; a <= 25; ++a) {
    for (Int b = 1; b <= 25; ++b) {
      if (gcd(a, b) != 1) continue;
      ParallelepipedGFs g = parallelepiped_gfs({a, b});
      ExpWindow w{-1, a + 1, -1, b + 1};
      for (int which = 0; which < 2; ++which) {
        const auto& terms = which == 0 ? g.down : g.right;
        Vec2 v1 = which == 0 ? Vec2{0, -1} : Vec2{1, 0};
        LaurentWindow total(w);
        for (const auto& t : terms) {
          RationalGF one{{t}};
          LaurentWindow lw = gf_expand(one, w, expansion_direction(one, {a, b}));
          CHECK(lw.is_01());
          for (auto [e, c] : lw.nonzero()) total.add_to(e, c);
        }
        Coeffs want;
        for (Vec2 p : oracle_open_parallelepiped(v1, {a, b})) want[p] = 1;
        CHECK(total.nonzero() == want);
      }
    }
  }
}

TEST_CASE("large parameters build quickly") {
  auto start = std::chrono::steady_clock::now();
  CarlitzPolynomial c = carlitz_short({956722026041, 1548008755920});
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  CHECK(ms < 100);
  Int len = static_cast<Int>(euclid_chain(956722026041, 1548008755920).size());
  CHECK(static_cast<Int>(c.term_count()) <= 4 * len + 8);
  CHECK_THROWS_AS(parallelepiped_gfs({956722026041, 1548008755920}, 1000), DomainError);
}

TEST_CASE("positive program equals the naive sum") {
  for (Int a = 1; a <= 40; ++a) {
    for (Int b = 1; b <= 40; ++b) {
      if (gcd(a, b) != 1) continue;
      INFO("a=", a, " b=", b);
      PositiveProgram p = carlitz_positive({a, b});
      CHECK(p.coefficients() == oracle_carlitz(a, b));
      double l = std::log2(static_cast<double>(std::max(a, b))) + 1;
      CHECK(static_cast<double>(p.size()) <= 2 * l * l);
      for (std::size_t i = 0; i < p.nodes.size(); ++i) {
        for (const auto& t : p.nodes[i].terms) {
          if (t.child) CHECK(*t.child < i);
        }
      }
    }
  }
  // (1,40): one run of 39 points, split into blocks of 32, 4, 2 and 1.
  PositiveProgram run = carlitz_positive({40, 1});
  CHECK(run.nodes.front().terms.size() == 4);
  CHECK(run.nodes.front().terms.front().binomials.size() == 5);
  CHECK(to_text(carlitz_positive({3, 2})).find("c = x^(-1,0) * n") != std::string::npos);
  CHECK(to_json(carlitz_positive({3, 2}))["term_count"] == carlitz_positive({3, 2}).term_count());
  CHECK(carlitz_positive({1, 5}).coefficients().empty());
}

TEST_CASE("positive program stays small at 1e12") {
  for (auto [a, b] : std::vector<std::pair<Int, Int>>{{956722026041, 1548008755920}, {999999999989, 1000000000000}}) {
    PositiveProgram p = carlitz_positive({a, b});
    double l = std::log2(static_cast<double>(std::max(a, b))) + 1;
    CHECK(static_cast<double>(p.size()) <= 2 * l * l);
    CHECK_THROWS_AS(p.coefficients(1000), DomainError);
  }
}
