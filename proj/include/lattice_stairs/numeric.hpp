// Exact integer helpers shared by the rest of the library: checked 64-bit
// arithmetic, floor division, Euclid chains and 2x2 unimodular affine maps.
#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lattice_stairs {

using Int = std::int64_t;

/// Raised when an operation's mathematical precondition does not hold.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a checked 64-bit operation would wrap.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

inline Int add(Int x, Int y) {
  Int r;
  if (__builtin_add_overflow(x, y, &r)) throw OverflowError("integer overflow in add");
  return r;
}

inline Int sub(Int x, Int y) {
  Int r;
  if (__builtin_sub_overflow(x, y, &r)) throw OverflowError("integer overflow in sub");
  return r;
}

inline Int mul(Int x, Int y) {
  Int r;
  if (__builtin_mul_overflow(x, y, &r)) throw OverflowError("integer overflow in mul");
  return r;
}

inline Int neg(Int x) { return sub(0, x); }

struct DivMod {
  Int q;
  Int r;
  bool operator==(const DivMod&) const = default;
};

/// q = floor(b / a), r = b - q*a with 0 <= r < a. Requires a >= 1.
DivMod floor_div_mod(Int b, Int a);

inline Int floor_div(Int b, Int a) { return floor_div_mod(b, a).q; }
inline Int floor_mod(Int b, Int a) { return floor_div_mod(b, a).r; }
Int ceil_div(Int b, Int a);

Int gcd(Int x, Int y);

/// Bezout coefficients: g = gcd(x, y) = s*x + t*y, g >= 0.
struct ExtGcd {
  Int g;
  Int s;
  Int t;
};
ExtGcd ext_gcd(Int x, Int y);

/// Slope b/a with a, b >= 1.
struct SlopePair {
  Int a = 1;
  Int b = 1;

  /// Rejects non-positive entries and non-coprime pairs.
  static SlopePair coprime(Int a, Int b);
  /// Rejects non-positive entries only.
  static SlopePair unchecked(Int a, Int b);

  bool is_coprime() const { return gcd(a, b) == 1; }
  bool operator==(const SlopePair&) const = default;
};

/// c1 = b, c2 = a, c_{i+2} = c_i mod c_{i+1}, up to and including the first 0.
struct EuclidChain {
  std::vector<Int> entries;
  std::size_t size() const { return entries.size(); }
};

EuclidChain euclid_chain(Int a, Int b);

struct Vec2 {
  Int x = 0;
  Int y = 0;
  auto operator<=>(const Vec2&) const = default;
};

inline Vec2 operator+(Vec2 u, Vec2 v) { return {add(u.x, v.x), add(u.y, v.y)}; }
inline Vec2 operator-(Vec2 u, Vec2 v) { return {sub(u.x, v.x), sub(u.y, v.y)}; }
inline Vec2 operator-(Vec2 u) { return {neg(u.x), neg(u.y)}; }
inline Vec2 operator*(Int k, Vec2 u) { return {mul(k, u.x), mul(k, u.y)}; }
inline Int dot(Vec2 u, Vec2 v) { return add(mul(u.x, v.x), mul(u.y, v.y)); }

/// Row-major 2x2 integer matrix (m00 m01; m10 m11).
struct Mat2 {
  Int m00 = 1, m01 = 0, m10 = 0, m11 = 1;

  static Mat2 identity() { return {}; }
  Int det() const { return sub(mul(m00, m11), mul(m01, m10)); }
  bool operator==(const Mat2&) const = default;
};

inline Vec2 operator*(const Mat2& m, Vec2 v) {
  return {add(mul(m.m00, v.x), mul(m.m01, v.y)), add(mul(m.m10, v.x), mul(m.m11, v.y))};
}
Mat2 operator*(const Mat2& l, const Mat2& r);

/// Inverse of a unimodular matrix; DomainError if |det| != 1.
Mat2 unimodular_inverse(const Mat2& m);

/// p -> matrix * p + translation, with |det(matrix)| = 1.
class AffineLatticeMap {
 public:
  AffineLatticeMap() = default;
  AffineLatticeMap(Mat2 matrix, Vec2 translation);

  static AffineLatticeMap identity() { return {}; }
  static AffineLatticeMap translation(Vec2 t) { return {Mat2::identity(), t}; }
  /// A = (1 0; q 1).
  static AffineLatticeMap shear(Int q) { return {Mat2{1, 0, q, 1}, {}}; }
  /// (x, y) -> (y, x).
  static AffineLatticeMap diagonal_swap() { return {Mat2{0, 1, 1, 0}, {}}; }
  /// (x, y) -> (-x, -y).
  static AffineLatticeMap origin_reflection() { return {Mat2{-1, 0, 0, -1}, {}}; }

  const Mat2& matrix() const { return m_; }
  Vec2 translation_part() const { return t_; }

  Vec2 operator()(Vec2 p) const { return m_ * p + t_; }
  bool operator==(const AffineLatticeMap&) const = default;

 private:
  Mat2 m_;
  Vec2 t_;
};

Vec2 apply_map(const AffineLatticeMap& m, Vec2 p);
/// compose(f, g)(p) = f(g(p)).
AffineLatticeMap compose(const AffineLatticeMap& f, const AffineLatticeMap& g);
AffineLatticeMap inverse(const AffineLatticeMap& m);

std::string to_string(Vec2 v);

}  // namespace lattice_stairs
