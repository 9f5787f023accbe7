// Short rational generating functions in two variables and their exact
// windowed Laurent expansion.
#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "lattice_stairs/numeric.hpp"

namespace lattice_stairs {

/// coeff * x^monomial * prod(1 - x^w) / prod(1 - x^u).
struct GFTerm {
  Int coeff = 1;
  Vec2 monomial{};
  std::vector<Vec2> numer;
  std::vector<Vec2> denom;

  std::size_t size() const { return 1 + numer.size() + denom.size(); }
  bool operator==(const GFTerm&) const = default;
};

struct RationalGF {
  std::vector<GFTerm> terms;

  std::size_t term_count() const { return terms.size(); }
  std::size_t size() const;
  bool operator==(const RationalGF&) const = default;
};

/// Inclusive exponent rectangle.
struct ExpWindow {
  Int x0 = 0, x1 = 0, y0 = 0, y1 = 0;
  bool contains(Vec2 e) const { return e.x >= x0 && e.x <= x1 && e.y >= y0 && e.y <= y1; }
};

/// Dense integer coefficients on an exponent rectangle.
class LaurentWindow {
 public:
  explicit LaurentWindow(ExpWindow w);

  const ExpWindow& window() const { return w_; }
  Int at(Vec2 e) const;
  void add_to(Vec2 e, Int c);
  /// Nonzero coefficients in exponent order.
  std::map<Vec2, Int> nonzero() const;
  bool is_01() const;
  bool operator==(const LaurentWindow&) const = default;

 private:
  std::size_t index(Vec2 e) const;
  ExpWindow w_;
  std::vector<Int> data_;
};

/// {0, v, ..., k v} as (1 - x^{(k+1) v}) / (1 - x^v).
RationalGF gf_interval(Vec2 v, Int k);
RationalGF gf_monomial(Vec2 m, Int coeff = 1);
RationalGF gf_add(const RationalGF& f, const RationalGF& g);
RationalGF gf_mul(const RationalGF& f, const RationalGF& g);
/// c * x^m * f.
RationalGF gf_scale(const RationalGF& f, Int c, Vec2 m);
/// Replaces every exponent e by M e. Requires det(M) != 0.
RationalGF gf_substitute(const RationalGF& f, const Mat2& m);

/// Expands each 1/(1 - x^u) along the side where <direction, u> > 0 and
/// returns the exact coefficients inside the window.
LaurentWindow gf_expand(const RationalGF& f, const ExpWindow& window, Vec2 direction);

/// One line per term: c * x^(p,q) * (1 - x^(w)) ... / (1 - x^(u)) ...
std::string to_text(const RationalGF& f);
RationalGF gf_from_text(const std::string& text);

nlohmann::json to_json(const GFTerm& t);
nlohmann::json to_json(const RationalGF& f);
RationalGF gf_from_json(const nlohmann::json& j);

/// Polynomial in x, y, e.g. "1 + x*y - x^2*y^-1"; "0" when empty.
std::string polynomial_string(const std::map<Vec2, Int>& coeffs);

}  // namespace lattice_stairs
