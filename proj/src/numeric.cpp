#include "lattice_stairs/numeric.hpp"

#include <cstdlib>

namespace lattice_stairs {

DivMod floor_div_mod(Int b, Int a) {
  if (a <= 0) throw DomainError("floor_div_mod: divisor must be positive");
  Int q = b / a;
  Int r = b % a;
  if (r < 0) {
    r += a;
    q -= 1;
  }
  return {q, r};
}

Int ceil_div(Int b, Int a) {
  DivMod d = floor_div_mod(b, a);
  return d.r == 0 ? d.q : add(d.q, 1);
}

Int gcd(Int x, Int y) {
  if (x == INT64_MIN || y == INT64_MIN) throw OverflowError("gcd: INT64_MIN");
  x = std::llabs(x);
  y = std::llabs(y);
  while (y != 0) {
    Int t = x % y;
    x = y;
    y = t;
  }
  return x;
}

ExtGcd ext_gcd(Int x, Int y) {
  // Invariant: r0 = s0*x + t0*y, r1 = s1*x + t1*y.
  Int r0 = x, r1 = y, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    Int q = r0 / r1;
    Int r2 = sub(r0, mul(q, r1));
    Int s2 = sub(s0, mul(q, s1));
    Int t2 = sub(t0, mul(q, t1));
    r0 = r1, r1 = r2, s0 = s1, s1 = s2, t0 = t1, t1 = t2;
  }
  if (r0 < 0) return {neg(r0), neg(s0), neg(t0)};
  return {r0, s0, t0};
}

SlopePair SlopePair::unchecked(Int a, Int b) {
  if (a < 1 || b < 1) throw DomainError("slope pair needs a >= 1 and b >= 1");
  return SlopePair{a, b};
}

SlopePair SlopePair::coprime(Int a, Int b) {
  SlopePair sp = unchecked(a, b);
  if (!sp.is_coprime()) {
    throw DomainError("slope pair (" + std::to_string(a) + ", " + std::to_string(b) +
                      ") is not coprime");
  }
  return sp;
}

EuclidChain euclid_chain(Int a, Int b) {
  if (a < 1 || b < 1) throw DomainError("euclid_chain needs a >= 1 and b >= 1");
  EuclidChain c;
  c.entries = {b, a};
  while (c.entries.back() != 0) {
    std::size_t n = c.entries.size();
    c.entries.push_back(c.entries[n - 2] % c.entries[n - 1]);
  }
  return c;
}

Mat2 operator*(const Mat2& l, const Mat2& r) {
  return Mat2{add(mul(l.m00, r.m00), mul(l.m01, r.m10)), add(mul(l.m00, r.m01), mul(l.m01, r.m11)),
              add(mul(l.m10, r.m00), mul(l.m11, r.m10)), add(mul(l.m10, r.m01), mul(l.m11, r.m11))};
}

Mat2 unimodular_inverse(const Mat2& m) {
  Int d = m.det();
  if (d != 1 && d != -1) throw DomainError("matrix is not unimodular");
  // inverse = adj / det, and 1/det = det for det = +-1.
  return Mat2{mul(d, m.m11), mul(d, neg(m.m01)), mul(d, neg(m.m10)), mul(d, m.m00)};
}

AffineLatticeMap::AffineLatticeMap(Mat2 matrix, Vec2 translation) : m_(matrix), t_(translation) {
  Int d = m_.det();
  if (d != 1 && d != -1) throw DomainError("affine lattice map needs |det| = 1");
}

Vec2 apply_map(const AffineLatticeMap& m, Vec2 p) { return m(p); }

AffineLatticeMap compose(const AffineLatticeMap& f, const AffineLatticeMap& g) {
  // f(g(p)) = Mf (Mg p + tg) + tf
  return {f.matrix() * g.matrix(), f.matrix() * g.translation_part() + f.translation_part()};
}

AffineLatticeMap inverse(const AffineLatticeMap& m) {
  Mat2 inv = unimodular_inverse(m.matrix());
  return {inv, -(inv * m.translation_part())};
}

std::string to_string(Vec2 v) {
  return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
}

}  // namespace lattice_stairs
