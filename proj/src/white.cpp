#include "lattice_stairs/white.hpp"

#include <algorithm>

#include "lattice_stairs/sequences.hpp"

namespace lattice_stairs {

TetraSpec TetraSpec::normalized() const {
  if (n < 1) throw DomainError("tetrahedron needs n >= 1");
  return {floor_mod(a, n), floor_mod(b, n), n};
}

namespace {

// Barycentric coordinates of p, scaled by n.
std::array<Int, 4> scaled_barycentric(const TetraSpec& t, Vec3 p) {
  Int a4 = p.z;
  Int a2 = sub(mul(t.n, p.x), mul(t.a, p.z));
  Int a3 = sub(mul(t.n, p.y), mul(t.b, p.z));
  Int a1 = sub(sub(sub(t.n, a2), a3), a4);
  return {a1, a2, a3, a4};
}

bool is_vertex(const TetraSpec& t, Vec3 p) {
  return p == Vec3{} || p == Vec3{1, 0, 0} || p == Vec3{0, 1, 0} || p == Vec3{t.a, t.b, t.n};
}

}  // namespace

std::vector<Vec3> tetra_points_brute(const TetraSpec& t) {
  if (t.n < 1) throw DomainError("tetrahedron needs n >= 1");
  std::vector<Vec3> pts;
  for (Int z = 0; z <= t.n; ++z) {
    // n x - a z in [0, n - z] and likewise for y.
    Int x_lo = ceil_div(mul(t.a, z), t.n), x_hi = floor_div(add(mul(t.a, z), sub(t.n, z)), t.n);
    Int y_lo = ceil_div(mul(t.b, z), t.n), y_hi = floor_div(add(mul(t.b, z), sub(t.n, z)), t.n);
    for (Int x = x_lo; x <= x_hi; ++x) {
      for (Int y = y_lo; y <= y_hi; ++y) {
        auto al = scaled_barycentric(t, {x, y, z});
        if (al[0] >= 0 && al[1] >= 0 && al[2] >= 0 && al[3] >= 0) pts.push_back({x, y, z});
      }
    }
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

bool is_empty(const TetraSpec& t) { return tetra_points_brute(t).size() == 4; }

bool is_clean(const TetraSpec& t) {
  for (Vec3 p : tetra_points_brute(t)) {
    if (is_vertex(t, p)) continue;
    auto al = scaled_barycentric(t, p);
    if (al[0] == 0 || al[1] == 0 || al[2] == 0 || al[3] == 0) return false;
  }
  return true;
}

bool reeve_criterion(const TetraSpec& t) {
  if (t.a == 0 && t.b == 0 && t.n == 1) return true;
  if (t.n < 2) return false;
  if (t.a < 0 || t.a > t.n - 1 || t.b < 0 || t.b > t.n - 1) return false;
  return gcd(t.a, t.n) == 1 && gcd(t.b, t.n) == 1 && gcd(sub(sub(1, t.a), t.b), t.n) == 1;
}

namespace {

void require_positive_abc(const TetraSpec& t) {
  if (t.n < 1 || t.a < 1 || t.b < 1 || t.c() < 1) {
    throw DomainError("f and g need a, b, c >= 1 (c = n - a - b + 1)");
  }
}

}  // namespace

Int f_function(const TetraSpec& t, Int k) {
  require_positive_abc(t);
  return add(add(beatty(SlopePair::unchecked(t.n, t.a), k), beatty(SlopePair::unchecked(t.n, t.b), k)),
             beatty(SlopePair::unchecked(t.n, t.c()), k));
}

Int g_function(const TetraSpec& t, Int k) {
  require_positive_abc(t);
  return add(add(ceil_div(mul(t.a, k), t.n), ceil_div(mul(t.b, k), t.n)), ceil_div(mul(t.c(), k), t.n));
}

WhiteVerdict classify(const TetraSpec& t) {
  TetraSpec u = t.normalized();
  WhiteVerdict v;
  v.empty = is_empty(u);
  v.clean = is_clean(u);
  const Int c = u.c();
  if (u.a >= 1 && u.b >= 1 && c >= 1) {
    bool all_one = true;
    for (Int k = 2; k <= u.n - 1 && all_one; ++k) all_one = f_function(u, k) == 1;
    v.f_all_one = all_one;
  }
  v.abc_has_one = u.a == 1 || u.b == 1 || c == 1;
  if (u.n == 1) {
    v.white_form = std::array<Int, 3>{0, 0, 1};
  } else if (v.abc_has_one) {
    // T_{1,d,n} has parameters (1, d, n - d); pick d so the multisets match.
    Int d = u.a == 1 ? u.b : u.a;
    v.white_form = std::array<Int, 3>{1, d, u.n};
  }
  return v;
}

nlohmann::json to_json(const WhiteVerdict& v) {
  nlohmann::json j{{"empty", v.empty}, {"clean", v.clean}, {"abc_has_one", v.abc_has_one}};
  j["f_all_one"] = v.f_all_one ? nlohmann::json(*v.f_all_one) : nlohmann::json("n/a");
  j["white_form"] = v.white_form ? nlohmann::json(*v.white_form) : nlohmann::json(nullptr);
  return j;
}

}  // namespace lattice_stairs
