#include "lattice_stairs/genfun.hpp"

#include <algorithm>
#include <optional>
#include <cctype>
#include <unordered_map>

namespace lattice_stairs {

std::size_t RationalGF::size() const {
  std::size_t s = 0;
  for (const auto& t : terms) s += t.size();
  return s;
}

LaurentWindow::LaurentWindow(ExpWindow w) : w_(w) {
  if (w.x0 > w.x1 || w.y0 > w.y1) throw DomainError("empty expansion window");
  Int cols = add(sub(w.x1, w.x0), 1), rows = add(sub(w.y1, w.y0), 1);
  Int cells = mul(cols, rows);
  if (cells > 200'000'000) throw DomainError("expansion window too large");
  data_.assign(static_cast<std::size_t>(cells), 0);
}

std::size_t LaurentWindow::index(Vec2 e) const {
  return static_cast<std::size_t>((e.x - w_.x0) * (w_.y1 - w_.y0 + 1) + (e.y - w_.y0));
}

Int LaurentWindow::at(Vec2 e) const { return w_.contains(e) ? data_[index(e)] : 0; }

void LaurentWindow::add_to(Vec2 e, Int c) {
  if (!w_.contains(e)) throw DomainError("exponent outside window");
  Int& slot = data_[index(e)];
  slot = add(slot, c);
}

std::map<Vec2, Int> LaurentWindow::nonzero() const {
  std::map<Vec2, Int> out;
  for (Int x = w_.x0; x <= w_.x1; ++x) {
    for (Int y = w_.y0; y <= w_.y1; ++y) {
      Int c = data_[index({x, y})];
      if (c != 0) out.emplace(Vec2{x, y}, c);
    }
  }
  return out;
}

bool LaurentWindow::is_01() const {
  return std::all_of(data_.begin(), data_.end(), [](Int c) { return c == 0 || c == 1; });
}

RationalGF gf_interval(Vec2 v, Int k) {
  if (v == Vec2{}) throw DomainError("gf_interval: zero step vector");
  if (k < 1) throw DomainError("gf_interval: k must be positive");
  return RationalGF{{GFTerm{1, {}, {add(k, 1) * v}, {v}}}};
}

RationalGF gf_monomial(Vec2 m, Int coeff) { return RationalGF{{GFTerm{coeff, m, {}, {}}}}; }

RationalGF gf_add(const RationalGF& f, const RationalGF& g) {
  RationalGF out = f;
  out.terms.insert(out.terms.end(), g.terms.begin(), g.terms.end());
  return out;
}

RationalGF gf_mul(const RationalGF& f, const RationalGF& g) {
  RationalGF out;
  out.terms.reserve(f.terms.size() * g.terms.size());
  for (const auto& s : f.terms) {
    for (const auto& t : g.terms) {
      GFTerm p{mul(s.coeff, t.coeff), s.monomial + t.monomial, s.numer, s.denom};
      p.numer.insert(p.numer.end(), t.numer.begin(), t.numer.end());
      p.denom.insert(p.denom.end(), t.denom.begin(), t.denom.end());
      out.terms.push_back(std::move(p));
    }
  }
  return out;
}

RationalGF gf_scale(const RationalGF& f, Int c, Vec2 m) {
  RationalGF out = f;
  for (auto& t : out.terms) {
    t.coeff = mul(t.coeff, c);
    t.monomial = t.monomial + m;
  }
  return out;
}

RationalGF gf_substitute(const RationalGF& f, const Mat2& m) {
  if (m.det() == 0) throw DomainError("gf_substitute: singular matrix");
  RationalGF out = f;
  for (auto& t : out.terms) {
    t.monomial = m * t.monomial;
    for (auto& w : t.numer) w = m * w;
    for (auto& u : t.denom) u = m * u;
  }
  return out;
}

namespace {

struct Vec2Hash {
  std::size_t operator()(Vec2 v) const noexcept {
    return std::hash<Int>()(v.x) * 0x9E3779B97F4A7C15ULL ^ std::hash<Int>()(v.y);
  }
};

using Poly = std::unordered_map<Vec2, Int, Vec2Hash>;

constexpr std::size_t kMaxPolySize = 50'000'000;

void accumulate(Poly& p, Vec2 e, Int c) {
  if (c == 0) return;
  Int& slot = p[e];
  slot = add(slot, c);
  if (slot == 0) p.erase(e);
  if (p.size() > kMaxPolySize) throw DomainError("gf_expand: intermediate expansion too large");
}

// Multiplies by sum_{t in [t0, t1]} sign * x^{t u}.
Poly times_run(const Poly& p, Vec2 u, Int t0, Int t1, Int sign) {
  Poly out;
  for (const auto& [e, c] : p) {
    for (Int t = t0; t <= t1; ++t) accumulate(out, e + t * u, mul(sign, c));
  }
  return out;
}

// Integer k with w = k u, if any.
std::optional<Int> multiple_of(Vec2 w, Vec2 u) {
  if (sub(mul(w.x, u.y), mul(w.y, u.x)) != 0) return std::nullopt;
  if (u.x != 0) {
    if (w.x % u.x != 0) return std::nullopt;
    return w.x / u.x;
  }
  if (w.y % u.y != 0) return std::nullopt;
  return w.y / u.y;
}

// Position of e on its line e0 + Z u: e = rep + t u with rep canonical.
std::pair<Vec2, Int> line_coordinate(Vec2 e, Vec2 u) {
  Int t;
  if (u.x != 0) {
    t = u.x > 0 ? floor_div(e.x, u.x) : neg(floor_div(e.x, neg(u.x)));
  } else {
    t = u.y > 0 ? floor_div(e.y, u.y) : neg(floor_div(e.y, neg(u.y)));
  }
  return {e - t * u, t};
}

// p / (1 - x^u) if it is a polynomial.
std::optional<Poly> divide_exact(const Poly& p, Vec2 u) {
  std::map<Vec2, std::vector<std::pair<Int, Int>>> lines;
  for (const auto& [e, c] : p) {
    auto [rep, t] = line_coordinate(e, u);
    lines[rep].emplace_back(t, c);
  }
  Poly out;
  for (auto& [rep, entries] : lines) {
    std::sort(entries.begin(), entries.end());
    Int total = 0;
    for (auto [t, c] : entries) total = add(total, c);
    if (total != 0) return std::nullopt;
    // g(t) = sum of p over t' <= t, supported on [t_min, t_max - 1].
    Int running = 0;
    for (std::size_t i = 0; i + 1 < entries.size(); ++i) {
      running = add(running, entries[i].second);
      for (Int t = entries[i].first; t < entries[i + 1].first; ++t) accumulate(out, rep + t * u, running);
    }
  }
  return out;
}

Int window_reach(const ExpWindow& w, Vec2 d) {
  return std::max({dot(d, {w.x0, w.y0}), dot(d, {w.x0, w.y1}), dot(d, {w.x1, w.y0}), dot(d, {w.x1, w.y1})});
}

}  // namespace

LaurentWindow gf_expand(const RationalGF& f, const ExpWindow& window, Vec2 direction) {
  LaurentWindow result(window);
  std::map<std::vector<Vec2>, Poly> groups;

  for (const auto& term : f.terms) {
    for (Vec2 u : term.denom) {
      if (u == Vec2{}) throw DomainError("gf_expand: zero denominator vector");
      if (dot(direction, u) == 0) {
        throw DomainError("gf_expand: denominator " + to_string(u) + " is orthogonal to direction " +
                          to_string(direction));
      }
    }
    if (term.coeff == 0) continue;
    if (std::any_of(term.numer.begin(), term.numer.end(), [](Vec2 w) { return w == Vec2{}; })) continue;

    Poly p;
    p[term.monomial] = term.coeff;
    std::vector<Vec2> numer = term.numer;
    std::vector<Vec2> rest;
    // (1 - x^{k u}) / (1 - x^u) is a finite run along u.
    for (Vec2 u : term.denom) {
      bool paired = false;
      for (std::size_t i = 0; i < numer.size() && !paired; ++i) {
        auto k = multiple_of(numer[i], u);
        if (!k) continue;
        p = *k > 0 ? times_run(p, u, 0, *k - 1, 1) : times_run(p, u, *k, -1, -1);
        numer.erase(numer.begin() + static_cast<std::ptrdiff_t>(i));
        paired = true;
      }
      if (!paired) rest.push_back(u);
    }
    for (Vec2 w : numer) {
      Poly q = p;
      for (const auto& [e, c] : p) accumulate(q, e + w, neg(c));
      p = std::move(q);
    }
    // 1/(1 - x^u) = -x^{-u} / (1 - x^{-u}) when u points against direction.
    for (Vec2& u : rest) {
      if (dot(direction, u) < 0) {
        Poly q;
        for (const auto& [e, c] : p) accumulate(q, e - u, neg(c));
        p = std::move(q);
        u = -u;
      }
    }
    std::sort(rest.begin(), rest.end());
    Poly& g = groups[rest];
    for (const auto& [e, c] : p) accumulate(g, e, c);
  }

  const Int reach = window_reach(window, direction);
  for (auto& [denoms, p] : groups) {
    std::vector<Vec2> series;
    Poly cur = std::move(p);
    for (Vec2 u : denoms) {
      if (auto q = divide_exact(cur, u)) {
        cur = std::move(*q);
      } else {
        series.push_back(u);
      }
    }
    for (Vec2 u : series) {
      Int du = dot(direction, u);
      Poly next;
      for (const auto& [e, c] : cur) {
        Vec2 x = e;
        for (Int de = dot(direction, e); de <= reach; de = add(de, du)) {
          accumulate(next, x, c);
          x = x + u;
        }
      }
      cur = std::move(next);
    }
    for (const auto& [e, c] : cur) {
      if (window.contains(e)) result.add_to(e, c);
    }
  }
  return result;
}

namespace {

std::string vec_text(Vec2 v) { return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")"; }

class Cursor {
 public:
  explicit Cursor(const std::string& s) : s_(s) {}

  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool done() {
    skip_ws();
    return i_ >= s_.size();
  }
  bool try_eat(const std::string& tok) {
    skip_ws();
    if (s_.compare(i_, tok.size(), tok) == 0) {
      i_ += tok.size();
      return true;
    }
    return false;
  }
  void eat(const std::string& tok) {
    if (!try_eat(tok)) fail("expected '" + tok + "'");
  }
  Int integer() {
    skip_ws();
    std::size_t start = i_;
    if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) ++i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_ || !std::isdigit(static_cast<unsigned char>(s_[i_ - 1]))) fail("expected integer");
    try {
      return std::stoll(s_.substr(start, i_ - start));
    } catch (const std::out_of_range&) {
      fail("integer out of range");
    }
  }
  Vec2 vec() {
    eat("(");
    Int x = integer();
    eat(",");
    Int y = integer();
    eat(")");
    return {x, y};
  }
  Vec2 factor() {
    eat("(");
    eat("1");
    eat("-");
    eat("x^");
    Vec2 v = vec();
    eat(")");
    return v;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw DomainError("gf parse error at column " + std::to_string(i_) + ": " + what);
  }

 private:
  const std::string& s_;
  std::size_t i_ = 0;
};

}  // namespace

std::string to_text(const RationalGF& f) {
  if (f.terms.empty()) return "0\n";
  std::string out;
  for (const auto& t : f.terms) {
    out += std::to_string(t.coeff) + " * x^" + vec_text(t.monomial);
    for (Vec2 w : t.numer) out += " * (1 - x^" + vec_text(w) + ")";
    for (Vec2 u : t.denom) out += " / (1 - x^" + vec_text(u) + ")";
    out += '\n';
  }
  return out;
}

RationalGF gf_from_text(const std::string& text) {
  RationalGF f;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string line = text.substr(pos, nl == std::string::npos ? std::string::npos : nl - pos);
    pos = nl == std::string::npos ? text.size() + 1 : nl + 1;
    Cursor c(line);
    if (c.done()) continue;
    if (c.try_eat("0") && c.done()) continue;
    Cursor p(line);
    GFTerm t;
    t.coeff = p.integer();
    p.eat("*");
    p.eat("x^");
    t.monomial = p.vec();
    while (!p.done()) {
      if (p.try_eat("*")) {
        t.numer.push_back(p.factor());
      } else if (p.try_eat("/")) {
        Vec2 u = p.factor();
        if (u == Vec2{}) p.fail("zero denominator vector");
        t.denom.push_back(u);
      } else {
        p.fail("expected '*' or '/'");
      }
    }
    f.terms.push_back(std::move(t));
  }
  return f;
}

nlohmann::json to_json(const GFTerm& t) {
  auto pairs = [](const std::vector<Vec2>& vs) {
    nlohmann::json a = nlohmann::json::array();
    for (Vec2 v : vs) a.push_back({v.x, v.y});
    return a;
  };
  return {{"coeff", t.coeff},
          {"monomial", {t.monomial.x, t.monomial.y}},
          {"numer", pairs(t.numer)},
          {"denom", pairs(t.denom)}};
}

nlohmann::json to_json(const RationalGF& f) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& t : f.terms) a.push_back(to_json(t));
  return a;
}

RationalGF gf_from_json(const nlohmann::json& j) {
  auto vec = [](const nlohmann::json& p) {
    if (!p.is_array() || p.size() != 2) throw DomainError("gf json: expected an integer pair");
    return Vec2{p.at(0).get<Int>(), p.at(1).get<Int>()};
  };
  if (!j.is_array()) throw DomainError("gf json: expected an array of terms");
  RationalGF f;
  try {
    for (const auto& jt : j) {
      GFTerm t;
      t.coeff = jt.at("coeff").get<Int>();
      t.monomial = vec(jt.at("monomial"));
      for (const auto& w : jt.at("numer")) t.numer.push_back(vec(w));
      for (const auto& u : jt.at("denom")) {
        Vec2 v = vec(u);
        if (v == Vec2{}) throw DomainError("gf json: zero denominator vector");
        t.denom.push_back(v);
      }
      f.terms.push_back(std::move(t));
    }
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("gf json: ") + e.what());
  }
  return f;
}

std::string polynomial_string(const std::map<Vec2, Int>& coeffs) {
  std::string out;
  for (const auto& [e, c] : coeffs) {
    if (c == 0) continue;
    std::string mono;
    auto var = [&mono](const char* name, Int k) {
      if (k == 0) return;
      if (!mono.empty()) mono += '*';
      mono += name;
      if (k != 1) mono += "^" + std::to_string(k);
    };
    var("x", e.x);
    var("y", e.y);
    Int mag = c < 0 ? neg(c) : c;
    std::string body;
    if (mono.empty()) {
      body = std::to_string(mag);
    } else {
      body = mag == 1 ? mono : std::to_string(mag) + "*" + mono;
    }
    if (out.empty()) {
      out = (c < 0 ? "-" : "") + body;
    } else {
      out += (c < 0 ? " - " : " + ") + body;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace lattice_stairs
