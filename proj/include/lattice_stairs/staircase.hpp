// Half-planes, pipes, staircases and corners of rational lines, together
// with the recursive construction of staircases along the Euclid chain.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lattice_stairs/numeric.hpp"

namespace lattice_stairs {

/// Exact rational num/den with den > 0 and gcd(num, den) = 1.
struct Rational {
  Int num = 0;
  Int den = 1;

  static Rational make(Int num, Int den);
  bool operator==(const Rational&) const = default;
};

std::string to_string(const Rational& r);
/// Parses "p" or "p/q".
Rational parse_rational(const std::string& s);

/// The line y = (b/a) x + r with orientation sigma in {+1, -1}.
struct LineSpec {
  SlopePair slope;
  Rational r{};
  int sigma = 1;

  LineSpec() = default;
  LineSpec(SlopePair sp, Rational off = {}, int sgn = 1);
};

/// Sorted, duplicate-free point set tagged with a column range.
struct PointWindow {
  std::vector<Vec2> points;
  Int x0 = 0;
  Int x1 = -1;

  static PointWindow from_points(std::vector<Vec2> pts, Int x0, Int x1);
  /// Window is the x-extent of the points (empty window if no points).
  static PointWindow spanning(std::vector<Vec2> pts);

  bool contains(Vec2 p) const;
  Int column_size(Int x) const;
  bool operator==(const PointWindow&) const = default;
};

/// Keeps the points with x0 <= x <= x1.
PointWindow restrict_columns(const PointWindow& pw, Int x0, Int x1);
/// Translates the set so that its lexicographically smallest point is 0.
std::vector<Vec2> aligned(const std::vector<Vec2>& pts);

enum class Which { kStaircase, kCorners };

struct PipeMembership {
  bool in_v = false;
  bool in_h = false;
  bool operator==(const PipeMembership&) const = default;
};

bool in_halfplane(const LineSpec& ls, Vec2 p);
PipeMembership pipe_membership(const LineSpec& ls, Vec2 p);

PointWindow staircase_window(const LineSpec& ls, Int x0, Int x1, Which which);
std::vector<Int> column_counts(const LineSpec& ls, Int x0, Int x1, Which which);

enum class Reflection { kDiagonal, kOrigin };
PointWindow reflect(const PointWindow& pw, Reflection which);

struct StaircaseWindows {
  PointWindow staircase;
  PointWindow corners;
};

/// S_{a,b} and C_{a,b} (r = 0, sigma = +) on columns [x0, x1], built from
/// the shear reduction, the parameter swap and the b = 1 base case only.
StaircaseWindows staircase_by_recursion(const SlopePair& sp, Int x0, Int x1);

/// A lattice point on y = (b/a) x + r if one exists (iff r = k/a).
std::optional<Vec2> line_lattice_point(const LineSpec& ls);

/// Rows top to bottom; '#' staircase point, 'O' corner, '.' empty.
std::string render(const LineSpec& ls, Int x0, Int x1);

}  // namespace lattice_stairs
