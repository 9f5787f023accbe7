#include "lattice_stairs/staircase.hpp"

#include <algorithm>
#include <charconv>
#include <string_view>

namespace lattice_stairs {

Rational Rational::make(Int num, Int den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  if (den < 0) {
    num = neg(num);
    den = neg(den);
  }
  Int g = gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {num, den};
}

std::string to_string(const Rational& r) {
  if (r.den == 1) return std::to_string(r.num);
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

Rational parse_rational(const std::string& s) {
  auto parse_int = [&](std::string_view part) {
    Int v = 0;
    auto [end, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc() || end != part.data() + part.size()) {
      throw DomainError("cannot parse rational '" + s + "'");
    }
    return v;
  };
  std::string_view view(s);
  auto slash = view.find('/');
  if (slash == std::string_view::npos) return Rational::make(parse_int(view), 1);
  return Rational::make(parse_int(view.substr(0, slash)), parse_int(view.substr(slash + 1)));
}

LineSpec::LineSpec(SlopePair sp, Rational off, int sgn) : slope(sp), r(off), sigma(sgn) {
  if (!slope.is_coprime()) throw DomainError("line slope must be coprime");
  if (sigma != 1 && sigma != -1) throw DomainError("orientation must be +1 or -1");
}

PointWindow PointWindow::from_points(std::vector<Vec2> pts, Int x0, Int x1) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  for (Vec2 p : pts) {
    if (p.x < x0 || p.x > x1) throw DomainError("point outside its window");
  }
  return {std::move(pts), x0, x1};
}

PointWindow PointWindow::spanning(std::vector<Vec2> pts) {
  if (pts.empty()) return {};
  auto [lo, hi] = std::minmax_element(pts.begin(), pts.end(),
                                      [](Vec2 u, Vec2 v) { return u.x < v.x; });
  Int x0 = lo->x, x1 = hi->x;
  return from_points(std::move(pts), x0, x1);
}

bool PointWindow::contains(Vec2 p) const {
  return std::binary_search(points.begin(), points.end(), p);
}

Int PointWindow::column_size(Int x) const {
  auto lo = std::lower_bound(points.begin(), points.end(), Vec2{x, INT64_MIN});
  auto hi = std::lower_bound(points.begin(), points.end(), Vec2{add(x, 1), INT64_MIN});
  return hi - lo;
}

PointWindow restrict_columns(const PointWindow& pw, Int x0, Int x1) {
  std::vector<Vec2> pts;
  for (Vec2 p : pw.points) {
    if (p.x >= x0 && p.x <= x1) pts.push_back(p);
  }
  return {std::move(pts), x0, x1};
}

std::vector<Vec2> aligned(const std::vector<Vec2>& pts) {
  if (pts.empty()) return {};
  Vec2 base = *std::min_element(pts.begin(), pts.end());
  std::vector<Vec2> out;
  out.reserve(pts.size());
  for (Vec2 p : pts) out.push_back(p - base);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// sigma * (b/a x - y + r), scaled by a * r.den > 0.
Int scaled_value(const LineSpec& ls, Vec2 p) {
  const Int a = ls.slope.a, b = ls.slope.b, q = ls.r.den;
  Int v = add(sub(mul(mul(b, p.x), q), mul(mul(a, p.y), q)), mul(a, ls.r.num));
  return ls.sigma == 1 ? v : neg(v);
}

}  // namespace

bool in_halfplane(const LineSpec& ls, Vec2 p) { return scaled_value(ls, p) >= 0; }

PipeMembership pipe_membership(const LineSpec& ls, Vec2 p) {
  Int v = scaled_value(ls, p);
  Int q = ls.r.den;
  // 1 and b/a scaled by a*q.
  return {v >= 0 && v < mul(ls.slope.a, q), v >= 0 && v < mul(ls.slope.b, q)};
}

namespace {

bool member(const LineSpec& ls, Vec2 p, Which which) {
  PipeMembership m = pipe_membership(ls, p);
  return which == Which::kStaircase ? (m.in_v || m.in_h) : (m.in_v && m.in_h);
}

// Candidate rows for column x: every member lies within max(1, b/a) of the
// line height (b x + a r) / a.
std::pair<Int, Int> column_candidates(const LineSpec& ls, Int x) {
  const Int a = ls.slope.a, b = ls.slope.b;
  Int height = floor_div(add(mul(mul(b, x), ls.r.den), mul(a, ls.r.num)), mul(a, ls.r.den));
  Int reach = add(ceil_div(b, a), 1);
  return {sub(height, reach), add(height, reach)};
}

}  // namespace

PointWindow staircase_window(const LineSpec& ls, Int x0, Int x1, Which which) {
  if (x0 > x1) throw DomainError("staircase_window needs x0 <= x1");
  std::vector<Vec2> pts;
  for (Int x = x0; x <= x1; ++x) {
    auto [lo, hi] = column_candidates(ls, x);
    for (Int y = lo; y <= hi; ++y) {
      if (member(ls, {x, y}, which)) pts.push_back({x, y});
    }
  }
  return PointWindow::from_points(std::move(pts), x0, x1);
}

std::vector<Int> column_counts(const LineSpec& ls, Int x0, Int x1, Which which) {
  PointWindow pw = staircase_window(ls, x0, x1, which);
  std::vector<Int> out;
  for (Int x = x0; x <= x1; ++x) out.push_back(pw.column_size(x));
  return out;
}

PointWindow reflect(const PointWindow& pw, Reflection which) {
  std::vector<Vec2> pts;
  pts.reserve(pw.points.size());
  for (Vec2 p : pw.points) {
    pts.push_back(which == Reflection::kDiagonal ? Vec2{p.y, p.x} : -p);
  }
  if (which == Reflection::kOrigin) return PointWindow::from_points(std::move(pts), neg(pw.x1), neg(pw.x0));
  return PointWindow::spanning(std::move(pts));
}

namespace {

struct Box {
  Int x0, x1, y0, y1;
  bool contains(Vec2 p) const { return p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1; }
};

struct PointSets {
  std::vector<Vec2> s;
  std::vector<Vec2> c;
};

// S_{a,b} and C_{a,b} intersected with the box.
PointSets recurse(Int a, Int b, const Box& box) {
  PointSets out;
  if (b == 1) {
    // C = {(ka, k)}, S = C + {(0,0), ..., (a-1,0)}.
    Int k_lo = std::max(box.y0, floor_div(sub(box.x0, a - 1), a));
    Int k_hi = std::min(box.y1, floor_div(box.x1, a));
    for (Int k = k_lo; k <= k_hi; ++k) {
      Vec2 corner{mul(k, a), k};
      if (box.contains(corner)) out.c.push_back(corner);
      for (Int i = 0; i < a; ++i) {
        Vec2 p{add(corner.x, i), k};
        if (box.contains(p)) out.s.push_back(p);
      }
    }
    return out;
  }
  if (a > b || a == 1) {
    // S_{a,b} and C_{a,b} are the images of S_{b,a}, C_{b,a} under
    // (x, y) -> (-y, -x).
    Box inner{neg(box.y1), neg(box.y0), neg(box.x1), neg(box.x0)};
    PointSets sub_sets = recurse(b, a, inner);
    for (Vec2 p : sub_sets.s) out.s.push_back({neg(p.y), neg(p.x)});
    for (Vec2 p : sub_sets.c) out.c.push_back({neg(p.y), neg(p.x)});
    return out;
  }
  // 1 < a < b: shear by A = (1 0; q 1) from S_{a,r}, C_{a,r}.
  DivMod qr = floor_div_mod(b, a);
  Int q = qr.q, r = qr.r;
  Int lo_shift = std::min(mul(q, box.x0), mul(q, box.x1));
  Int hi_shift = std::max(mul(q, box.x0), mul(q, box.x1));
  Box inner{box.x0, box.x1, sub(box.y0, hi_shift), add(sub(box.y1, lo_shift), q)};
  PointSets sub_sets = recurse(a, r, inner);
  AffineLatticeMap shear = AffineLatticeMap::shear(q);
  for (Vec2 p : sub_sets.s) {
    Vec2 ap = shear(p);
    if (box.contains(ap)) out.c.push_back(ap);
    for (Int t = 0; t < q; ++t) {
      Vec2 v{ap.x, sub(ap.y, t)};
      if (box.contains(v)) out.s.push_back(v);
    }
  }
  for (Vec2 p : sub_sets.c) {
    Vec2 v = shear(p) + Vec2{0, neg(q)};
    if (box.contains(v)) out.s.push_back(v);
  }
  return out;
}

}  // namespace

StaircaseWindows staircase_by_recursion(const SlopePair& sp, Int x0, Int x1) {
  SlopePair c = SlopePair::coprime(sp.a, sp.b);
  if (x0 > x1) throw DomainError("staircase_by_recursion needs x0 <= x1");
  // Row range of the window: the staircase stays within max(1, b/a) below
  // the line y = (b/a) x.
  Box box{x0, x1, sub(floor_div(mul(c.b, x0), c.a), add(ceil_div(c.b, c.a), 1)),
          add(floor_div(mul(c.b, x1), c.a), 1)};
  PointSets sets = recurse(c.a, c.b, box);
  return {PointWindow::from_points(std::move(sets.s), x0, x1),
          PointWindow::from_points(std::move(sets.c), x0, x1)};
}

std::optional<Vec2> line_lattice_point(const LineSpec& ls) {
  const Int a = ls.slope.a, b = ls.slope.b;
  // (x, y) on the line iff b x - a y = -a r; needs a r = m integral.
  Int ar_num = mul(a, ls.r.num);
  if (ar_num % ls.r.den != 0) return std::nullopt;
  Int m = ar_num / ls.r.den;
  ExtGcd e = ext_gcd(b, a);  // s b + t a = 1
  Int x = floor_mod(mul(neg(m), floor_mod(e.s, a)), a);
  Int y = add(mul(b, x), m);
  return Vec2{x, y / a};
}

std::string render(const LineSpec& ls, Int x0, Int x1) {
  PointWindow s = staircase_window(ls, x0, x1, Which::kStaircase);
  PointWindow c = staircase_window(ls, x0, x1, Which::kCorners);
  std::string header;
  if (ls.r == Rational{} && ls.sigma == 1) {
    header = "S_{" + std::to_string(ls.slope.a) + "," + std::to_string(ls.slope.b) + "}";
  } else {
    header = std::string("S^") + (ls.sigma == 1 ? "+" : "-") + "_{" + std::to_string(ls.slope.a) +
             "," + std::to_string(ls.slope.b) + "," + to_string(ls.r) + "}";
  }
  std::string out = header + " window [" + std::to_string(x0) + "," + std::to_string(x1) + "]\n";
  if (s.points.empty()) return out;
  Int y_lo = s.points.front().y, y_hi = s.points.front().y;
  for (Vec2 p : s.points) {
    y_lo = std::min(y_lo, p.y);
    y_hi = std::max(y_hi, p.y);
  }
  for (Int y = y_hi; y >= y_lo; --y) {
    for (Int x = x0; x <= x1; ++x) {
      char ch = '.';
      if (c.contains({x, y})) {
        ch = 'O';
      } else if (s.contains({x, y})) {
        ch = '#';
      }
      out += ch;
    }
    out += '\n';
  }
  return out;
}

}  // namespace lattice_stairs
