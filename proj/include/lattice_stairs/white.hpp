// Lattice tetrahedra T_{a,b,n} = conv{0, e1, e2, (a,b,n)}: brute-force
// emptiness and cleanness, Reeve's gcd criterion and the f/g sums.
#pragma once

#include <array>
#include <optional>
#include <vector>

#include <json.hpp>

#include "lattice_stairs/numeric.hpp"

namespace lattice_stairs {

struct Vec3 {
  Int x = 0, y = 0, z = 0;
  auto operator<=>(const Vec3&) const = default;
};

struct TetraSpec {
  Int a = 0;
  Int b = 0;
  Int n = 1;

  /// c = n - a - b + 1, so that a + b + c = n + 1.
  Int c() const { return add(sub(sub(n, a), b), 1); }
  /// a and b reduced mod n; the shear (x,y,z) -> (x - qz, y - q'z, z)
  /// maps T_{a,b,n} to this tetrahedron.
  TetraSpec normalized() const;
};

/// All lattice points of the closed tetrahedron, in lexicographic order.
std::vector<Vec3> tetra_points_brute(const TetraSpec& t);
bool is_empty(const TetraSpec& t);
/// No lattice point other than the vertices on the boundary.
bool is_clean(const TetraSpec& t);
bool reeve_criterion(const TetraSpec& t);

/// B_{n,a}(k) + B_{n,b}(k) + B_{n,c}(k); requires a, b, c >= 1.
Int f_function(const TetraSpec& t, Int k);
/// ceil(ak/n) + ceil(bk/n) + ceil(ck/n); requires a, b, c >= 1.
Int g_function(const TetraSpec& t, Int k);

struct WhiteVerdict {
  bool empty = false;
  bool clean = false;
  /// f(k) = 1 for k = 2..n-1; absent when some of a, b, c is below 1.
  std::optional<bool> f_all_one;
  bool abc_has_one = false;
  /// (1, d, n) when 1 is among a, b, c; (0, 0, 1) for n = 1.
  std::optional<std::array<Int, 3>> white_form;
};

WhiteVerdict classify(const TetraSpec& t);
nlohmann::json to_json(const WhiteVerdict& v);

}  // namespace lattice_stairs
