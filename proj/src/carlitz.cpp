#include "lattice_stairs/carlitz.hpp"

#include <algorithm>
#include <sstream>

#include "lattice_stairs/barvinok.hpp"

namespace lattice_stairs {

PointWindow parallelepiped_points_brute(const ParallelepipedSpec& ps) {
  const Int a = ps.slope.a, b = ps.slope.b;
  if (a < 1 || b < 1) throw DomainError("parallelepiped needs a, b >= 1");
  const Vec2 v1 = ps.axis == Axis::kDown ? Vec2{0, -1} : Vec2{1, 0};
  const Vec2 v2{a, b};
  const Int det = sub(mul(v1.x, v2.y), mul(v1.y, v2.x));  // a for kDown, b for kRight
  Int x_lo = std::min<Int>(0, v1.x), x_hi = add(std::max<Int>(0, v1.x), a);
  Int y_lo = std::min<Int>(0, v1.y), y_hi = add(std::max<Int>(0, v1.y), b);
  std::vector<Vec2> pts;
  for (Int x = x_lo; x <= x_hi; ++x) {
    for (Int y = y_lo; y <= y_hi; ++y) {
      // alpha_i = n_i / det by Cramer's rule, det > 0.
      Int n1 = sub(mul(x, v2.y), mul(y, v2.x));
      Int n2 = sub(mul(v1.x, y), mul(v1.y, x));
      bool ok = ps.open ? (n1 > 0 && n1 < det && n2 > 0 && n2 < det)
                        : (n1 >= 0 && n1 < det && n2 >= 0 && n2 < det);
      if (ok) pts.push_back({x, y});
    }
  }
  return PointWindow::spanning(std::move(pts));
}

namespace {

struct ParSets {
  std::vector<Vec2> down;   // Pi°_{down,a,b}
  std::vector<Vec2> right;  // Pi°_{right,a,b}
};

ParSets par_recurse(Int a, Int b) {
  ParSets out;
  if (b == 1) {
    for (Int k = 1; k < a; ++k) out.down.push_back({k, 0});
    return out;
  }
  if (a > b || a == 1) {
    // Pi°_{right,a,b} = (x,y)->(-y,-x) of Pi°_{down,b,a}, plus (a,b); and
    // the same with the axes exchanged.
    ParSets in = par_recurse(b, a);
    for (Vec2 p : in.right) out.down.push_back({sub(a, p.y), sub(b, p.x)});
    for (Vec2 p : in.down) out.right.push_back({sub(a, p.y), sub(b, p.x)});
    return out;
  }
  DivMod qr = floor_div_mod(b, a);
  ParSets in = par_recurse(a, qr.r);
  AffineLatticeMap shear = AffineLatticeMap::shear(qr.q);
  for (Vec2 p : in.down) {
    Vec2 ap = shear(p);
    out.down.push_back(ap);
    for (Int t = 0; t < qr.q; ++t) out.right.push_back({ap.x, sub(ap.y, t)});
  }
  for (Vec2 p : in.right) out.right.push_back(shear(p) + Vec2{0, neg(qr.q)});
  for (Int t = 1; t <= qr.q; ++t) out.right.push_back({a, sub(b, t)});
  return out;
}

}  // namespace

PointWindow parallelepiped_by_recursion(const ParallelepipedSpec& ps) {
  SlopePair sp = SlopePair::coprime(ps.slope.a, ps.slope.b);
  if (!ps.open) throw DomainError("parallelepiped_by_recursion builds open parallelepipeds only");
  ParSets sets = par_recurse(sp.a, sp.b);
  return PointWindow::spanning(ps.axis == Axis::kDown ? std::move(sets.down) : std::move(sets.right));
}

namespace {

constexpr Mat2 kSwap{0, -1, -1, 0};

GFTerm mapped(GFTerm t, const Mat2& m, Vec2 shift) {
  t.monomial = m * t.monomial + shift;
  for (auto& w : t.numer) w = m * w;
  for (auto& u : t.denom) u = m * u;
  return t;
}

// Appends the interval 1 + y^-1 + ... + y^-(q-1).
GFTerm times_down_run(GFTerm t, Int q) {
  if (q > 1) {
    t.numer.push_back({0, neg(q)});
    t.denom.push_back({0, -1});
  }
  return t;
}

void check_size(const ParallelepipedGFs& g, std::size_t max_terms) {
  if (g.down.size() + g.right.size() > max_terms) {
    throw DomainError("partition recursion exceeds " + std::to_string(max_terms) + " terms");
  }
}

ParallelepipedGFs gfs_recurse(Int a, Int b, std::size_t max_terms) {
  ParallelepipedGFs out;
  if (b == 1) {
    // gD_{a,1} = (x - x^a)/(1 - x), gR_{a,1} = 0.
    if (a > 1) out.down.push_back(GFTerm{1, {1, 0}, {{sub(a, 1), 0}}, {{1, 0}}});
    return out;
  }
  if (a > b || a == 1) {
    // gD_{a,b} = x^a y^b gR_{b,a} and gR_{a,b} = x^a y^b gD_{b,a}, both
    // under the exponent map (x,y) -> (-y,-x).
    ParallelepipedGFs in = gfs_recurse(b, a, max_terms);
    for (const auto& t : in.right) out.down.push_back(mapped(t, kSwap, {a, b}));
    for (const auto& t : in.down) out.right.push_back(mapped(t, kSwap, {a, b}));
    return out;
  }
  DivMod qr = floor_div_mod(b, a);
  const Int q = qr.q;
  ParallelepipedGFs in = gfs_recurse(a, qr.r, max_terms);
  const Mat2 shear{1, 0, q, 1};
  for (const auto& t : in.down) {
    GFTerm st = mapped(t, shear, {});
    out.right.push_back(times_down_run(st, q));
    out.down.push_back(std::move(st));
  }
  for (const auto& t : in.right) out.right.push_back(mapped(t, shear, {0, neg(q)}));
  // The column x = a holds q points (a, b-1), ..., (a, b-q).
  out.right.push_back(times_down_run(GFTerm{1, {a, sub(b, 1)}, {}, {}}, q));
  check_size(out, max_terms);
  return out;
}

}  // namespace

ParallelepipedGFs parallelepiped_gfs(const SlopePair& sp, std::size_t max_terms) {
  SlopePair c = SlopePair::coprime(sp.a, sp.b);
  return gfs_recurse(c.a, c.b, max_terms);
}

CarlitzPolynomial carlitz_naive(const SlopePair& sp) {
  SlopePair c = SlopePair::coprime(sp.a, sp.b);
  std::vector<Vec2> monos;
  for (Int k = 1; k < c.a; ++k) monos.push_back({k - 1, floor_div(mul(c.b, k), c.a)});
  return {c, std::move(monos)};
}

CarlitzPolynomial carlitz_short(const SlopePair& sp, CarlitzMethod method) {
  SlopePair c = SlopePair::coprime(sp.a, sp.b);
  RationalGF gf;
  if (method == CarlitzMethod::kPartition) {
    for (const auto& t : parallelepiped_gfs(c).down) gf.terms.push_back(mapped(t, Mat2::identity(), {-1, 0}));
    return {c, std::move(gf)};
  }
  // c_{a,b} = x^-1 gD = x^-1 y^-1 (x(1-x^a)/(1-x) - x^a y^b - (1-y) f_{T'_{a,b}}).
  gf.terms.push_back(GFTerm{1, {0, -1}, {{c.a, 0}}, {{1, 0}}});
  gf.terms.push_back(GFTerm{-1, {sub(c.a, 1), sub(c.b, 1)}, {}, {}});
  for (auto t : gf_half_open_triangle(c).terms) {
    t.coeff = neg(t.coeff);
    t.monomial = t.monomial + Vec2{-1, -1};
    t.numer.push_back({0, 1});
    gf.terms.push_back(std::move(t));
  }
  return {c, std::move(gf)};
}

std::map<Vec2, Int> CarlitzPolynomial::coefficients() const {
  std::map<Vec2, Int> out;
  if (const auto* monos = std::get_if<std::vector<Vec2>>(&form)) {
    for (Vec2 m : *monos) out[m] += 1;
    return out;
  }
  const RationalGF& gf = std::get<RationalGF>(form);
  ExpWindow w{-1, slope.a, -1, slope.b};
  return gf_expand(gf, w, expansion_direction(gf, slope)).nonzero();
}

std::size_t CarlitzPolynomial::term_count() const {
  if (const auto* monos = std::get_if<std::vector<Vec2>>(&form)) return monos->size();
  return std::get<RationalGF>(form).term_count();
}

namespace {

using NodeIndex = std::size_t;

// Appends x^offset * {0, u, ..., (n-1) u} * child as one term per set bit of
// n: a block of 2^i consecutive points is prod_{t<i} (1 + x^{2^t u}).
void append_run(PositiveNode& node, Vec2 offset, Vec2 u, Int n, std::optional<NodeIndex> child, const Mat2& map) {
  Int done = 0;
  for (int i = 62; i >= 0; --i) {
    const Int block = Int{1} << i;
    if ((n & block) == 0) continue;
    PositiveTerm t{offset + done * u, {}, child, map};
    for (int k = 0; k < i; ++k) t.binomials.push_back((Int{1} << k) * u);
    node.terms.push_back(std::move(t));
    done = add(done, block);
  }
}

struct NodePair {
  NodeIndex down;
  NodeIndex right;
};

NodeIndex push(PositiveProgram& prog, PositiveNode node) {
  prog.nodes.push_back(std::move(node));
  return prog.nodes.size() - 1;
}

NodePair positive_recurse(PositiveProgram& prog, Int a, Int b) {
  if (b == 1) {
    PositiveNode down;
    if (a > 1) append_run(down, {1, 0}, {1, 0}, sub(a, 1), std::nullopt, Mat2::identity());
    NodeIndex d = push(prog, std::move(down));
    return {d, push(prog, {})};
  }
  if (a > b || a == 1) {
    NodePair in = positive_recurse(prog, b, a);
    NodeIndex d = push(prog, {{PositiveTerm{{a, b}, {}, in.right, kSwap}}});
    return {d, push(prog, {{PositiveTerm{{a, b}, {}, in.down, kSwap}}})};
  }
  DivMod qr = floor_div_mod(b, a);
  const Int q = qr.q;
  NodePair in = positive_recurse(prog, a, qr.r);
  const Mat2 shear{1, 0, q, 1};
  NodeIndex d = push(prog, {{PositiveTerm{{}, {}, in.down, shear}}});
  PositiveNode right;
  append_run(right, {0, sub(1, q)}, {0, 1}, q, in.down, shear);
  right.terms.push_back(PositiveTerm{{0, neg(q)}, {}, in.right, shear});
  append_run(right, {a, sub(b, q)}, {0, 1}, q, std::nullopt, Mat2::identity());
  return {d, push(prog, std::move(right))};
}

std::string map_string(const Mat2& m) {
  return "(" + std::to_string(m.m00) + " " + std::to_string(m.m01) + "; " + std::to_string(m.m10) + " " +
         std::to_string(m.m11) + ")";
}

}  // namespace

PositiveProgram carlitz_positive(const SlopePair& sp) {
  PositiveProgram prog;
  prog.slope = SlopePair::coprime(sp.a, sp.b);
  NodePair top = positive_recurse(prog, prog.slope.a, prog.slope.b);
  // c_{a,b} = x^-1 gD_{a,b}.
  push(prog, {{PositiveTerm{{-1, 0}, {}, top.down, Mat2::identity()}}});
  return prog;
}

std::size_t PositiveProgram::term_count() const {
  std::size_t n = 0;
  for (const auto& node : nodes) n += node.terms.size();
  return n;
}

std::size_t PositiveProgram::size() const {
  std::size_t n = 0;
  for (const auto& node : nodes) {
    for (const auto& t : node.terms) n += 1 + t.binomials.size();
  }
  return n;
}

std::map<Vec2, Int> PositiveProgram::coefficients(std::size_t max_points) const {
  std::vector<std::vector<Vec2>> expanded(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    std::vector<Vec2>& cur = expanded[i];
    for (const auto& t : nodes[i].terms) {
      if (t.child && *t.child >= i) throw DomainError("positive program node refers forward");
      std::vector<Vec2> pts;
      if (t.child) {
        for (Vec2 p : expanded[*t.child]) pts.push_back(t.map * p + t.monomial);
      } else {
        pts.push_back(t.monomial);
      }
      for (Vec2 v : t.binomials) {
        if (pts.size() > max_points / 2) throw DomainError("positive program expansion too large");
        const std::size_t n = pts.size();
        for (std::size_t k = 0; k < n; ++k) pts.push_back(pts[k] + v);
      }
      cur.insert(cur.end(), pts.begin(), pts.end());
      if (cur.size() > max_points) throw DomainError("positive program expansion too large");
    }
  }
  std::map<Vec2, Int> out;
  if (!expanded.empty()) {
    for (Vec2 p : expanded.back()) out[p] += 1;
  }
  return out;
}

std::string to_text(const PositiveProgram& p) {
  std::ostringstream os;
  for (std::size_t i = 0; i < p.nodes.size(); ++i) {
    os << (i + 1 == p.nodes.size() ? std::string("c") : "n" + std::to_string(i)) << " =";
    if (p.nodes[i].terms.empty()) os << " 0";
    bool first = true;
    for (const auto& t : p.nodes[i].terms) {
      os << (first ? " " : " + ") << "x^" << to_string(t.monomial);
      for (Vec2 v : t.binomials) os << " * (1 + x^" << to_string(v) << ")";
      if (t.child) {
        os << " * n" << *t.child;
        if (!(t.map == Mat2::identity())) os << "|" << map_string(t.map);
      }
      first = false;
    }
    os << '\n';
  }
  return os.str();
}

nlohmann::json to_json(const PositiveProgram& p) {
  auto vec = [](Vec2 v) { return nlohmann::json::array({v.x, v.y}); };
  nlohmann::json nodes = nlohmann::json::array();
  for (const auto& node : p.nodes) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : node.terms) {
      nlohmann::json bins = nlohmann::json::array();
      for (Vec2 v : t.binomials) bins.push_back(vec(v));
      terms.push_back({{"monomial", vec(t.monomial)},
                       {"binomials", bins},
                       {"child", t.child ? nlohmann::json(*t.child) : nlohmann::json(nullptr)},
                       {"map", {t.map.m00, t.map.m01, t.map.m10, t.map.m11}}});
    }
    nodes.push_back({{"terms", terms}});
  }
  return {{"a", p.slope.a}, {"b", p.slope.b}, {"nodes", nodes}, {"term_count", p.term_count()}, {"size", p.size()}};
}

}  // namespace lattice_stairs
