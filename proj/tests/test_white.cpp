#include <doctest.h>

#include "lattice_stairs/white.hpp"

using namespace lattice_stairs;

namespace {

// Oracle: p = s e1 + t e2 + u (a,b,n) with s, t, u >= 0 and s + t + u <= 1.
// Scaled by n: u n = z, s n = n x - a z, t n = n y - b z.
std::vector<Vec3> oracle_points(Int a, Int b, Int n) {
  std::vector<Vec3> out;
  Int lo_x = std::min<Int>(0, a), hi_x = std::max<Int>(1, a);
  Int lo_y = std::min<Int>(0, b), hi_y = std::max<Int>(1, b);
  for (Int x = lo_x; x <= hi_x; ++x) {
    for (Int y = lo_y; y <= hi_y; ++y) {
      for (Int z = 0; z <= n; ++z) {
        Int s = n * x - a * z, t = n * y - b * z, u = z;
        if (s >= 0 && t >= 0 && s + t + u <= n) out.push_back({x, y, z});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool oracle_clean(Int a, Int b, Int n) {
  for (Vec3 p : oracle_points(a, b, n)) {
    bool vertex = p == Vec3{0, 0, 0} || p == Vec3{1, 0, 0} || p == Vec3{0, 1, 0} || p == Vec3{a, b, n};
    if (vertex) continue;
    Int s = n * p.x - a * p.z, t = n * p.y - b * p.z, u = p.z;
    if (s == 0 || t == 0 || u == 0 || s + t + u == n) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("frozen emptiness examples") {
  CHECK(is_empty({0, 0, 1}));
  CHECK(is_empty({1, 1, 2}));
  CHECK_FALSE(is_empty({3, 3, 7}));
  CHECK(is_clean({0, 0, 1}));
  CHECK_FALSE(is_clean({2, 2, 4}));
  CHECK(reeve_criterion({1, 1, 2}));
  CHECK(reeve_criterion({3, 3, 7}));
  CHECK_FALSE(reeve_criterion({2, 2, 4}));
  for (Int n = 2; n <= 30; ++n) {
    for (Int d = 1; d < n; ++d) {
      if (gcd(d, n) == 1) CHECK(is_empty({1, d, n}));
    }
  }
}

TEST_CASE("points and cleanness agree with the oracle") {
  for (Int n = 1; n <= 12; ++n) {
    for (Int a = 0; a < n; ++a) {
      for (Int b = 0; b < n; ++b) {
        INFO("T(", a, ",", b, ",", n, ")");
        CHECK(tetra_points_brute({a, b, n}) == oracle_points(a, b, n));
        CHECK(is_clean({a, b, n}) == oracle_clean(a, b, n));
        CHECK(is_clean({a, b, n}) == reeve_criterion({a, b, n}));
      }
    }
  }
}

TEST_CASE("f and g sums") {
  TetraSpec t{1, 2, 5};  // c = 3
  for (Int k = 2; k <= 4; ++k) {
    Int f = 0, g = 0;
    for (Int m : {1, 2, 3}) {
      f += floor_div(m * k, 5) - floor_div(m * (k - 1), 5);
      g += ceil_div(m * k, 5);
    }
    CHECK(f_function(t, k) == f);
    CHECK(g_function(t, k) == g);
    CHECK(f_function(t, k) == 1);
  }
  CHECK_THROWS_AS(f_function({0, 2, 5}, 2), DomainError);
  CHECK_THROWS_AS(g_function({3, 3, 4}, 2), DomainError);
}

TEST_CASE("classification verdicts") {
  WhiteVerdict v = classify({1, 2, 5});
  CHECK(v.empty);
  CHECK(v.clean);
  CHECK(v.f_all_one == std::optional<bool>(true));
  CHECK(v.abc_has_one);
  CHECK(v.white_form == std::optional<std::array<Int, 3>>({1, 2, 5}));

  WhiteVerdict w = classify({3, 3, 7});
  CHECK_FALSE(w.empty);
  CHECK_FALSE(w.abc_has_one);
  CHECK_FALSE(w.white_form.has_value());

  WhiteVerdict z = classify({0, 0, 1});
  CHECK(z.empty);
  CHECK_FALSE(z.f_all_one.has_value());
  CHECK(z.white_form == std::optional<std::array<Int, 3>>({0, 0, 1}));

  // a and b are read modulo n.
  CHECK(classify({6, 7, 5}).empty == classify({1, 2, 5}).empty);
  CHECK(TetraSpec{6, -3, 5}.normalized().b == 2);
  CHECK_THROWS_AS(classify({1, 1, 0}), DomainError);

  nlohmann::json j = to_json(v);
  CHECK(j["empty"] == true);
  CHECK(j["clean"] == true);
  CHECK(j["f_all_one"] == true);
  CHECK(j["abc_has_one"] == true);
  CHECK(to_json(z)["f_all_one"] == "n/a");
}

TEST_CASE("empty tetrahedra have 1 among a, b, c") {
  for (Int n = 1; n <= 20; ++n) {
    for (Int a = 0; a < n; ++a) {
      for (Int b = 0; b < n; ++b) {
        WhiteVerdict v = classify({a, b, n});
        if (!v.empty) continue;
        INFO("T(", a, ",", b, ",", n, ")");
        CHECK(v.clean);
        CHECK((n == 1 || v.abc_has_one));
        if (v.f_all_one) CHECK(*v.f_all_one);
      }
    }
  }
}
