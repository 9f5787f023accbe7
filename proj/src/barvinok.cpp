#include "lattice_stairs/barvinok.hpp"

namespace lattice_stairs {

PointWindow triangle_points_brute(const TriangleSpec& t) {
  const Int a = t.slope.a, b = t.slope.b;
  if (a < 1 || b < 1) throw DomainError("triangle needs a, b >= 1");
  std::vector<Vec2> pts;
  for (Int x = 0; x <= a; ++x) {
    for (Int y = 0; y <= b; ++y) {
      Int lhs = mul(a, y), rhs = mul(b, x);
      if (lhs > rhs) continue;
      if (t.half_open && lhs == rhs) continue;
      pts.push_back({x, y});
    }
  }
  return PointWindow::from_points(std::move(pts), 0, a);
}

bool in_cone(const ConeSpec& c, Vec2 p) {
  return p.y >= 0 && mul(c.slope.a, p.y) <= mul(c.slope.b, p.x);
}

namespace {

// (x, y) -> (-y, -x) on exponents.
constexpr Mat2 kSwap{0, -1, -1, 0};

GFTerm mapped(GFTerm t, const Mat2& m, Vec2 shift) {
  t.monomial = m * t.monomial + shift;
  for (auto& w : t.numer) w = m * w;
  for (auto& u : t.denom) u = m * u;
  return t;
}

// T'_{a, q a} = {(l, y): 1 <= l <= a, 0 <= y < q l}, written as
// 1/(1-x2) * ((1 - x1^{a+1})/(1 - x1) - (1 - x1^{a+1} x2^{q(a+1)})/(1 - x1 x2^q)).
RationalGF integral_slope_triangle(Int a, Int q) {
  Int a1 = add(a, 1);
  return RationalGF{{GFTerm{1, {}, {{a1, 0}}, {{0, 1}, {1, 0}}},
                     GFTerm{-1, {}, {{a1, mul(q, a1)}}, {{0, 1}, {1, q}}}}};
}

}  // namespace

std::vector<RationalGF> triangle_pieces(const TriangleSpec& t) {
  SlopePair sp = SlopePair::coprime(t.slope.a, t.slope.b);
  Int a = sp.a, b = sp.b;
  // Pieces are emitted as x^shift * g(M e).
  Mat2 m = Mat2::identity();
  Vec2 shift{};
  std::vector<RationalGF> pieces;
  auto emit = [&](const RationalGF& g) {
    RationalGF out;
    for (const auto& term : g.terms) out.terms.push_back(mapped(term, m, shift));
    pieces.push_back(std::move(out));
  };
  for (;;) {
    if (a == 1) {
      // T'_{1,b} = {(1,0), ..., (1,b-1)}; T_{1,b} adds (0,0) and (1,b).
      if (t.half_open) {
        emit(RationalGF{{GFTerm{1, {1, 0}, {{0, b}}, {{0, 1}}}}});
      } else {
        emit(gf_monomial({0, 0}));
        emit(RationalGF{{GFTerm{1, {1, 0}, {{0, add(b, 1)}}, {{0, 1}}}}});
      }
      return pieces;
    }
    if (a > b) {
      // T_{a,b} = (x,y) -> (-y,-x) applied to T_{b,a}, plus (a,b); same for T'.
      shift = shift + m * Vec2{a, b};
      m = m * kSwap;
      std::swap(a, b);
      continue;
    }
    // 1 < a < b: T_{a,b} = A T_{a, b mod a} disjoint union T'_{a, q a}.
    DivMod qr = floor_div_mod(b, a);
    emit(integral_slope_triangle(a, qr.q));
    m = m * Mat2{1, 0, qr.q, 1};
    b = qr.r;
  }
}

namespace {

RationalGF sum_of(const std::vector<RationalGF>& pieces) {
  RationalGF out;
  for (const auto& p : pieces) out = gf_add(out, p);
  return out;
}

}  // namespace

RationalGF gf_half_open_triangle(const SlopePair& sp) {
  return sum_of(triangle_pieces({sp, true}));
}

RationalGF gf_closed_triangle(const SlopePair& sp) {
  return sum_of(triangle_pieces({sp, false}));
}

std::vector<RationalGF> cone_slab_pieces(const ConeSpec& c) {
  SlopePair sp = SlopePair::coprime(c.slope.a, c.slope.b);
  std::vector<RationalGF> pieces{gf_monomial({0, 0})};
  for (auto& p : triangle_pieces({sp, true})) pieces.push_back(std::move(p));
  // Column x = a lies in T'_{a,b}; the tail starts at x = a + 1.
  pieces.push_back(RationalGF{{GFTerm{1, {add(sp.a, 1), 0}, {{0, sp.b}}, {{1, 0}, {0, 1}}}}});
  return pieces;
}

RationalGF gf_cone(const ConeSpec& c) {
  RationalGF slab = sum_of(cone_slab_pieces(c));
  RationalGF out;
  for (auto t : slab.terms) {
    t.denom.push_back({c.slope.a, c.slope.b});
    out.terms.push_back(std::move(t));
  }
  return out;
}

Vec2 expansion_direction(const RationalGF& f, const SlopePair& sp) {
  Vec2 d{add(mul(2, sp.b), 1), 1};
  for (;;) {
    bool ok = true;
    for (const auto& t : f.terms) {
      for (Vec2 u : t.denom) ok = ok && dot(d, u) != 0;
    }
    if (ok) return d;
    d.y = add(d.y, 1);
  }
}

}  // namespace lattice_stairs
