#include "lattice_stairs/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <map>
#include <random>
#include <set>
#include <thread>

#include "lattice_stairs/barvinok.hpp"
#include "lattice_stairs/carlitz.hpp"
#include "lattice_stairs/genfun.hpp"
#include "lattice_stairs/sequences.hpp"
#include "lattice_stairs/staircase.hpp"
#include "lattice_stairs/white.hpp"

namespace lattice_stairs {

nlohmann::json to_json(const CheckResult& r) {
  return {{"id", r.id},           {"title", r.title},
          {"passed", r.passed},   {"cases", r.cases},
          {"failures", r.failure_count}, {"examples", r.failures},
          {"seconds", r.seconds}, {"stats", r.stats}};
}

unsigned worker_count(unsigned requested) {
  unsigned n = requested;
  if (n == 0) {
    n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("LATTICE_STAIRS_THREADS")) {
      long cap = std::strtol(env, nullptr, 10);
      if (cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
    }
  }
  return n;
}

namespace {

constexpr std::size_t kKeptFailures = 8;

struct Partial {
  std::uint64_t cases = 0;
  std::uint64_t failure_count = 0;
  std::vector<std::string> failures;

  template <class Msg>
  void expect(bool ok, Msg&& msg) {
    ++cases;
    if (!ok) {
      ++failure_count;
      if (failures.size() < kKeptFailures) failures.push_back(msg());
    }
  }
};

// Runs fn(item, partial) over all items and merges the partial results in
// item order, so the report does not depend on scheduling.
template <class T, class Fn>
void sweep(CheckResult& res, const std::vector<T>& items, const VerifyOptions& opt, Fn fn) {
  std::vector<Partial> parts(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      try {
        fn(items[i], parts[i]);
      } catch (const std::exception& e) {
        parts[i].expect(false, [&] { return std::string("exception: ") + e.what(); });
      }
    }
  };
  unsigned n = std::min<std::size_t>(worker_count(opt.threads), std::max<std::size_t>(items.size(), 1));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (auto& p : parts) {
    res.cases += p.cases;
    res.failure_count += p.failure_count;
    for (auto& f : p.failures) {
      if (res.failures.size() < kKeptFailures) res.failures.push_back(std::move(f));
    }
  }
  if (res.failure_count > 0) res.passed = false;
}

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

Int bound(const VerifyOptions& opt, Int fallback) { return opt.max > 0 ? opt.max : fallback; }

std::vector<SlopePair> coprime_pairs(Int max) {
  std::vector<SlopePair> out;
  for (Int a = 1; a <= max; ++a) {
    for (Int b = 1; b <= max; ++b) {
      if (gcd(a, b) == 1) out.push_back({a, b});
    }
  }
  return out;
}

std::string pair_str(const SlopePair& sp) {
  return "(" + std::to_string(sp.a) + "," + std::to_string(sp.b) + ")";
}

CheckResult start(const char* id, const char* title) {
  CheckResult r;
  r.id = id;
  r.title = title;
  return r;
}

}  // namespace

CheckResult check_sturmian_equivalence(const VerifyOptions& opt) {
  Timer timer;
  CheckResult res = start("C1", "four Sturmian characterizations agree on all 0,1 periods");
  const Int max_len = bound(opt, 14);
  // Every period, not only one per rotation class: the predicates must also
  // be invariant under rotation.
  std::set<std::vector<Int>> classes;
  std::vector<PeriodicIntSeq> patterns;
  for (Int len = 1; len <= max_len; ++len) {
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << len); ++mask) {
      std::vector<Int> v(static_cast<std::size_t>(len));
      for (Int i = 0; i < len; ++i) v[static_cast<std::size_t>(i)] = (mask >> i) & 1;
      PeriodicIntSeq s(std::move(v));
      classes.insert(s.canonical().period());
      patterns.push_back(std::move(s));
    }
  }
  std::atomic<std::uint64_t> sturmian{0};
  sweep(res, patterns, opt, [&](const PeriodicIntSeq& s, Partial& p) {
    bool st = is_sturmian(s);
    bool rb = is_recursively_balanced(s);
    bool ed = is_evenly_distributed(s);
    bool ss = is_swap_symmetric(s);
    if (st) ++sturmian;
    p.expect(st == rb && rb == ed && ed == ss, [&] {
      return "s=" + to_string(s) + " sturmian=" + std::to_string(st) + " rec_balanced=" + std::to_string(rb) +
             " even=" + std::to_string(ed) + " swap_symmetric=" + std::to_string(ss);
    });
  });
  res.stats = {{"max_length", max_len},
               {"patterns", patterns.size()},
               {"classes", classes.size()},
               {"sturmian", sturmian.load()}};
  res.seconds = timer.seconds();
  return res;
}

CheckResult check_sequence_laws(const VerifyOptions& opt) {
  Timer timer;
  CheckResult res = start("sequences", "Beatty balance, sums, reduction, block sequences, reversal");
  const Int max = bound(opt, 200);
  const Int max_small = std::min<Int>(max, 150);
  std::uint64_t seed = opt.seed;
  sweep(res, coprime_pairs(max), opt, [&](const SlopePair& sp, Partial& p) {
    const Int a = sp.a, b = sp.b;
    PeriodicIntSeq s = beatty_period(sp);
    auto k = is_balanced(s);
    p.expect(k && *k == b / a, [&] { return "Beatty not balanced at b div a for " + pair_str(sp); });
    p.expect(s.sum() == b && static_cast<Int>(s.minimal_period()) == a,
             [&] { return "period sum or minimal period wrong for " + pair_str(sp); });
    if (b % a != 0) {
      p.expect(reduce(s) == beatty_period({a, b % a}), [&] { return "reduction law fails for " + pair_str(sp); });
    }
    p.expect(s.plus_constant(3) == beatty_period({a, add(b, 3 * a)}),
             [&] { return "adding a constant fails for " + pair_str(sp); });
    if (a <= max_small && b <= max_small) {
      if (a < b) {
        p.expect(shift_equivalent(block_sequence(beatty_period({b, a})), s),
                 [&] { return "block sequence law fails for " + pair_str(sp); });
      }
      p.expect(shift_equivalent(s, s.reversed()), [&] { return "reversal law fails for " + pair_str(sp); });
    }
    // ones(B on [x0, x1]) - (b/a) len = {(b/a)(x0-1)} - {(b/a) x1}, times a.
    std::mt19937_64 rng(seed ^ static_cast<std::uint64_t>(a * 1000003 + b));
    std::uniform_int_distribution<Int> start_dist(-3 * a, 3 * a), len_dist(1, 3 * a);
    for (int i = 0; i < 4; ++i) {
      Int x0 = start_dist(rng), x1 = x0 + len_dist(rng) - 1;
      Int sum = 0;
      for (Int n = x0; n <= x1; ++n) sum += beatty(sp, n);
      Int lhs = a * sum - b * (x1 - x0 + 1);
      Int rhs = floor_mod(b * (x0 - 1), a) - floor_mod(b * x1, a);
      // The stored period starts at B(1), so entry n is B(n + 1).
      p.expect(lhs == rhs && sum == s.window_sum(x0 - 1, x1 - 1),
               [&] { return "interval identity fails for " + pair_str(sp) + " on [" + std::to_string(x0) + "," +
                            std::to_string(x1) + "]"; });
    }
  });
  res.stats = {{"max", max}};
  res.seconds = timer.seconds();
  return res;
}

CheckResult check_staircase_recursion(const VerifyOptions& opt) {
  Timer timer;
  CheckResult res = start("C2", "staircase recursion equals brute membership; shear and swap reductions");
  const Int max = bound(opt, 80);
  sweep(res, coprime_pairs(max), opt, [&](const SlopePair& sp, Partial& p) {
    const Int a = sp.a, b = sp.b;
    const Int x0 = -a, x1 = 2 * a;
    LineSpec ls(sp);
    PointWindow s = staircase_window(ls, x0, x1, Which::kStaircase);
    PointWindow c = staircase_window(ls, x0, x1, Which::kCorners);
    StaircaseWindows rec = staircase_by_recursion(sp, x0, x1);
    p.expect(rec.staircase == s, [&] { return "recursive staircase differs for " + pair_str(sp); });
    p.expect(rec.corners == c, [&] { return "recursive corners differ for " + pair_str(sp); });
    // Topmost point of column n is (n, floor(bn/a)).
    bool top_ok = true;
    for (Int x = x0; x <= x1; ++x) {
      Int top = INT64_MIN;
      for (Vec2 q : s.points) {
        if (q.x == x) top = std::max(top, q.y);
      }
      top_ok = top_ok && top == floor_div(b * x, a);
    }
    p.expect(top_ok, [&] { return "topmost points wrong for " + pair_str(sp); });
    if (a > 1 && a < b) {
      // A maps S_{a, b mod a} onto C_{a,b}; C_{a, b mod a} marks the long columns.
      SlopePair red{a, b % a};
      AffineLatticeMap A = AffineLatticeMap::shear(b / a);
      PointWindow small_s = staircase_window(LineSpec(red), x0, x1, Which::kStaircase);
      PointWindow small_c = staircase_window(LineSpec(red), x0, x1, Which::kCorners);
      std::vector<Vec2> image;
      for (Vec2 q : small_s.points) image.push_back(A(q));
      p.expect(PointWindow::from_points(image, x0, x1) == c,
               [&] { return "shear bijection onto corners fails for " + pair_str(sp); });
      bool long_ok = true;
      for (Int x = x0; x <= x1; ++x) {
        bool is_long = s.column_size(x) == b / a + 1;
        long_ok = long_ok && (small_c.column_size(x) == 1) == is_long;
      }
      p.expect(long_ok, [&] { return "long columns do not match reduced corners for " + pair_str(sp); });
    }
  });
  res.stats = {{"max", max}};
  res.seconds = timer.seconds();
  return res;
}

namespace {

std::vector<Vec2> shifted(const std::vector<Vec2>& pts, Vec2 v) {
  std::vector<Vec2> out;
  out.reserve(pts.size());
  for (Vec2 q : pts) out.push_back(q + v);
  return out;
}

// Translation vectors v with part = whole + v on columns [0, len], where
// `whole` covers columns [-a, len + 2a]. Period a means 0 <= v.x < a suffices.
std::vector<Vec2> translations(const PointWindow& part, const PointWindow& whole, Int a, Int len) {
  std::vector<Vec2> out;
  if (part.points.empty()) return out;
  Vec2 p0 = part.points.front();
  for (Int vx = 0; vx < a; ++vx) {
    Int col = p0.x + vx;
    auto it = std::lower_bound(whole.points.begin(), whole.points.end(), Vec2{col, INT64_MIN});
    if (it == whole.points.end() || it->x != col) continue;
    Vec2 v = *it - p0;
    if (shifted(part.points, v) == restrict_columns(whole, vx, vx + len).points) out.push_back(v);
  }
  return out;
}

// Compares the diagonal image of a column window with a direct window,
// column by column, wherever the direct column maps back inside the window.
bool diagonal_matches(const PointWindow& original, const PointWindow& direct, Int& compared) {
  PointWindow image = reflect(original, Reflection::kDiagonal);
  compared = 0;
  for (Int x = direct.x0; x <= direct.x1; ++x) {
    std::vector<Vec2> d, i;
    bool inside = true;
    for (Vec2 q : direct.points) {
      if (q.x != x) continue;
      d.push_back(q);
      inside = inside && q.y >= original.x0 && q.y <= original.x1;
    }
    if (!inside) continue;
    for (Vec2 q : image.points) {
      if (q.x == x) i.push_back(q);
    }
    if (d != i) return false;
    ++compared;
  }
  return true;
}

}  // namespace

CheckResult check_staircase_symmetries(const VerifyOptions& opt) {
  Timer timer;
  CheckResult res = start("C3", "translation and reflection laws of staircases");
  const Int max = bound(opt, 60);
  struct Item {
    SlopePair sp;
    int sigma;
    Rational r;
  };
  std::vector<Item> items;
  for (const auto& sp : coprime_pairs(max)) {
    for (int sigma : {1, -1}) {
      for (Rational r : {Rational{}, Rational::make(1, sp.a), Rational::make(-1, sp.a), Rational::make(1, 3 * sp.a)}) {
        items.push_back({sp, sigma, r});
      }
    }
  }
  std::atomic<std::uint64_t> separate_translations{0};
  sweep(res, items, opt, [&](const Item& it, Partial& p) {
    const Int a = it.sp.a, b = it.sp.b;
    auto label = [&] {
      return pair_str(it.sp) + " sigma=" + std::to_string(it.sigma) + " r=" + to_string(it.r);
    };
    LineSpec ls(it.sp, it.r, it.sigma);
    // Translation to S_{a,b}.
    const Int len = 3 * a;
    PointWindow part_s = staircase_window(ls, 0, len, Which::kStaircase);
    PointWindow part_c = staircase_window(ls, 0, len, Which::kCorners);
    PointWindow whole_s = staircase_window(LineSpec(it.sp), -a, len + 2 * a, Which::kStaircase);
    PointWindow whole_c = staircase_window(LineSpec(it.sp), -a, len + 2 * a, Which::kCorners);
    // Each set is a translate of its unshifted counterpart. Above the line
    // (sigma = -1) the two vectors differ in general: with w = bx - ay the
    // staircase takes max(a,b) consecutive values of w and the corners
    // min(a,b), both ending at 0, so they shift by different amounts.
    std::vector<Vec2> vs = translations(part_s, whole_s, a, len);
    std::vector<Vec2> vc = translations(part_c, whole_c, a, len);
    p.expect(!vs.empty(), [&] { return "staircase is not a translate of S_{a,b}: " + label(); });
    p.expect(!vc.empty(), [&] { return "corners are not a translate of C_{a,b}: " + label(); });
    bool common = std::any_of(vs.begin(), vs.end(),
                              [&](Vec2 v) { return std::find(vc.begin(), vc.end(), v) != vc.end(); });
    if (it.sigma == 1) {
      p.expect(common, [&] { return "no common translation for staircase and corners: " + label(); });
    } else if (!common) {
      ++separate_translations;
    }
    // Reflections.
    const Int x0 = -2 * a, x1 = 2 * a;
    for (Which w : {Which::kStaircase, Which::kCorners}) {
      PointWindow orig = staircase_window(ls, x0, x1, w);
      LineSpec origin_ls(it.sp, Rational::make(neg(it.r.num), it.r.den), -it.sigma);
      p.expect(reflect(orig, Reflection::kOrigin) == staircase_window(origin_ls, x0, x1, w),
               [&] { return "origin reflection law fails: " + label(); });
      // (x,y) -> (y,x) maps the line of slope b/a and offset r to slope a/b, offset -a r / b.
      LineSpec diag_ls(SlopePair{b, a}, Rational::make(neg(mul(a, it.r.num)), mul(b, it.r.den)), -it.sigma);
      PointWindow image = reflect(orig, Reflection::kDiagonal);
      PointWindow direct = staircase_window(diag_ls, image.x0, image.x1, w);
      Int compared = 0;
      bool ok = diagonal_matches(orig, direct, compared);
      p.expect(ok && compared > 0, [&] { return "diagonal reflection law fails: " + label(); });
    }
    // Column sequences read backwards agree up to shift.
    for (Which w : {Which::kStaircase, Which::kCorners}) {
      PeriodicIntSeq cols(column_counts(ls, 0, a - 1, w));
      p.expect(shift_equivalent(cols, cols.reversed()), [&] { return "column reversal fails: " + label(); });
    }
  });
  res.stats = {{"max", max}, {"sigma_minus_without_common_translation", separate_translations.load()}};
  res.seconds = timer.seconds();
  return res;
}

CheckResult check_pipe_facts(const VerifyOptions& opt) {
  Timer timer;
  CheckResult res = start("pipes", "flat/steep equivalences of pipes, columns and rows");
  const Int max = bound(opt, 60);
  std::vector<std::pair<SlopePair, int>> items;
  for (const auto& sp : coprime_pairs(max)) {
    for (int sigma : {1, -1}) items.push_back({sp, sigma});
  }
  sweep(res, items, opt, [&](const std::pair<SlopePair, int>& it, Partial& p) {
    const auto& [sp, sigma] = it;
    const Int a = sp.a, b = sp.b, x0 = -2 * a, x1 = 2 * a;
    LineSpec ls(sp, {}, sigma);
    bool h_in_v = true, v_in_h = true;
    for (Int x = x0; x <= x1; ++x) {
      Int mid = floor_div(b * x, a);
      for (Int y = mid - b / a - 3; y <= mid + b / a + 3; ++y) {
        PipeMembership m = pipe_membership(ls, {x, y});
        if (m.in_h && !m.in_v) h_in_v = false;
        if (m.in_v && !m.in_h) v_in_h = false;
      }
    }
    PointWindow s = staircase_window(ls, x0, x1, Which::kStaircase);
    PointWindow c = staircase_window(ls, x0, x1, Which::kCorners);
    auto all_columns_single = [&](const PointWindow& pw) {
      for (Int x = x0; x <= x1; ++x) {
        if (pw.column_size(x) != 1) return false;
      }
      return true;
    };
    auto inner_rows_single = [&](const PointWindow& pw) {
      // Only rows strictly between the first and last nonempty column are complete.
      if (pw.points.empty()) return false;
      std::map<Int, Int> rows;
      const Int first = pw.points.front().x, last = pw.points.back().x;
      Int lo = INT64_MIN, hi = INT64_MAX;
      for (Vec2 q : pw.points) {
        rows[q.y] += 1;
        if (q.x == first) lo = std::max(lo, q.y);
        if (q.x == last) hi = std::min(hi, q.y);
      }
      for (Int y = lo + 1; y < hi; ++y) {
        auto f = rows.find(y);
        if (f == rows.end() || f->second != 1) return false;
      }
      return true;
    };
    bool flat = a >= b, steep = a <= b;
    bool s_cols = all_columns_single(s), c_rows = inner_rows_single(c);
    bool s_rows = inner_rows_single(s), c_cols = all_columns_single(c);
    p.expect(flat == h_in_v && flat == s_cols && flat == c_rows, [&] {
      return "flat equivalences fail for " + pair_str(sp) + " sigma=" + std::to_string(sigma);
    });
    p.expect(steep == v_in_h && steep == s_rows && steep == c_cols, [&] {
      return "steep equivalences fail for " + pair_str(sp) + " sigma=" + std::to_string(sigma);
    });
  });
  res.stats = {{"max", max}};
  res.seconds = timer.seconds();
  return res;
}

CheckResult check_cone_gf(const VerifyOptions& opt) {
  Timer timer;
  CheckResult res = start("C4", "cone generating function exact on [0,3a]x[0,3b]; O(len) terms");
  const Int max = bound(opt, 120);
  constexpr Int kC1 = 4, kC2 = 8;
  std::atomic<std::size_t> worst_terms{0};
  sweep(res, coprime_pairs(max), opt, [&](const SlopePair& sp, Partial& p) {
    ConeSpec cone{sp};
    RationalGF g = gf_cone(cone);
    Int len = static_cast<Int>(euclid_chain(sp.a, sp.b).size());
    std::size_t tc = g.term_count();
    for (std::size_t w = worst_terms.load(); tc > w && !worst_terms.compare_exchange_weak(w, tc);) {
    }
    p.expect(static_cast<Int>(tc) <= kC1 * len + kC2, [&] {
      return "term count " + std::to_string(tc) + " exceeds bound for " + pair_str(sp);
    });
    ExpWindow w{0, 3 * sp.a, 0, 3 * sp.b};
    LaurentWindow lw = gf_expand(g, w, expansion_direction(g, sp));
    bool ok = true;
    for (Int x = w.x0; x <= w.x1 && ok; ++x) {
      for (Int y = w.y0; y <= w.y1 && ok; ++y) ok = lw.at({x, y}) == (in_cone(cone, {x, y}) ? 1 : 0);
    }
    p.expect(ok, [&] { return "cone expansion differs from brute indicator for " + pair_str(sp); });
  });
  res.stats = {{"max", max}, {"C1", kC1}, {"C2", kC2}, {"max_term_count", worst_terms.load()}};
  res.seconds = timer.seconds();
  return res;
}

CheckResult check_triangle_gfs(const VerifyOptions& opt) {
  Timer timer;
  CheckResult res = start("triangles", "closed and half-open triangle generating functions");
  const Int max = bound(opt, 120);
  sweep(res, coprime_pairs(max), opt, [&](const SlopePair& sp, Partial& p) {
    ExpWindow w{-1, sp.a + 1, -1, sp.b + 1};
    for (bool half_open : {true, false}) {
      RationalGF g = half_open ? gf_half_open_triangle(sp) : gf_closed_triangle(sp);
      LaurentWindow lw = gf_expand(g, w, expansion_direction(g, sp));
      std::map<Vec2, Int> want;
      for (Vec2 q : triangle_points_brute({sp, half_open}).points) want[q] = 1;
      Int steps = static_cast<Int>(euclid_chain(sp.a, sp.b).size());
      p.expect(lw.nonzero() == want, [&] {
        return std::string(half_open ? "half-open" : "closed") + " triangle differs for " + pair_str(sp);
      });
      p.expect(static_cast<Int>(g.term_count()) <= 2 * steps + 3,
               [&] { return "triangle term count too large for " + pair_str(sp); });
    }
  });
  res.stats = {{"max", max}};
  res.seconds = timer.seconds();
  return res;
}

CheckResult check_carlitz(const VerifyOptions& opt) {
  Timer timer;
  CheckResult res = start("C5", "Dedekind-Carlitz short form equals naive sum; O(len) terms; fast at 1e12");
  const Int max = bound(opt, 250);
  constexpr Int kC1 = 4, kC2 = 8;
  std::atomic<std::size_t> worst_terms{0};
  sweep(res, coprime_pairs(max), opt, [&](const SlopePair& sp, Partial& p) {
    CarlitzPolynomial naive = carlitz_naive(sp);
    auto want = naive.coefficients();
    CarlitzPolynomial compact = carlitz_short(sp);
    std::size_t tc = compact.term_count();
    for (std::size_t w = worst_terms.load(); tc > w && !worst_terms.compare_exchange_weak(w, tc);) {
    }
    Int len = static_cast<Int>(euclid_chain(sp.a, sp.b).size());
    p.expect(static_cast<Int>(tc) <= kC1 * len + kC2,
             [&] { return "term count " + std::to_string(tc) + " exceeds bound for " + pair_str(sp); });
    p.expect(compact.coefficients() == want, [&] { return "short form differs from naive for " + pair_str(sp); });
    p.expect(carlitz_short(sp, CarlitzMethod::kPartition).coefficients() == want,
             [&] { return "partition form differs from naive for " + pair_str(sp); });
  });
  // Construction only, at 1e12 scale.
  std::vector<SlopePair> big{{956722026041, 1548008755920}, {1548008755920, 956722026041},
                             {999999999989, 1000000000000}, {1000000000000, 999999999997}};
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<Int> dist(500'000'000'000, 1'500'000'000'000);
  while (big.size() < 12) {
    Int a = dist(rng), b = dist(rng);
    if (gcd(a, b) == 1) big.push_back({a, b});
  }
  double worst_ms = 0;
  Partial big_part;
  for (const auto& sp : big) {
    try {
      Timer t;
      CarlitzPolynomial c = carlitz_short(sp);
      double ms = t.seconds() * 1000;
      worst_ms = std::max(worst_ms, ms);
      Int len = static_cast<Int>(euclid_chain(sp.a, sp.b).size());
      big_part.expect(ms < 100, [&] { return "construction took " + std::to_string(ms) + " ms for " + pair_str(sp); });
      big_part.expect(static_cast<Int>(c.term_count()) <= kC1 * len + kC2,
                      [&] { return "term count exceeds bound for " + pair_str(sp); });
    } catch (const std::exception& e) {
      big_part.expect(false, [&] { return "construction failed for " + pair_str(sp) + ": " + e.what(); });
    }
  }
  res.cases += big_part.cases;
  res.failure_count += big_part.failure_count;
  for (auto& f : big_part.failures) res.failures.push_back(f);
  if (big_part.failure_count) res.passed = false;
  res.stats = {{"max", max},
               {"C1", kC1},
               {"C2", kC2},
               {"max_term_count", worst_terms.load()},
               {"large_pairs", big.size()},
               {"large_worst_ms", worst_ms}};
  res.seconds = timer.seconds();
  return res;
}

CheckResult check_parallelepipeds(const VerifyOptions& opt) {
  Timer timer;
  CheckResult res = start("parallelepipeds", "parallelepiped recursion equals brute enumeration; positive program equals naive");
  const Int max = bound(opt, 100);
  sweep(res, coprime_pairs(max), opt, [&](const SlopePair& sp, Partial& p) {
    for (Axis axis : {Axis::kDown, Axis::kRight}) {
      ParallelepipedSpec ps{sp, axis, true};
      p.expect(parallelepiped_by_recursion(ps).points == parallelepiped_points_brute(ps).points, [&] {
        return std::string("recursion differs on ") + (axis == Axis::kDown ? "down" : "right") + " axis for " +
               pair_str(sp);
      });
    }
    PositiveProgram pos = carlitz_positive(sp);
    double l = std::log2(static_cast<double>(std::max(sp.a, sp.b))) + 1;
    p.expect(static_cast<double>(pos.size()) <= 2 * l * l,
             [&] { return "positive program too large for " + pair_str(sp); });
    p.expect(pos.coefficients() == carlitz_naive(sp).coefficients(),
             [&] { return "positive program differs from naive for " + pair_str(sp); });
    std::vector<Vec2> shifted_down;
    for (Vec2 q : parallelepiped_points_brute({sp, Axis::kDown, true}).points) shifted_down.push_back(q - Vec2{1, 0});
    auto monos = std::get<std::vector<Vec2>>(carlitz_naive(sp).form);
    std::sort(monos.begin(), monos.end());
    p.expect(monos == shifted_down, [&] { return "naive monomials are not the shifted parallelepiped for " + pair_str(sp); });
  });
  res.stats = {{"max", max}};
  res.seconds = timer.seconds();
  return res;
}

CheckResult check_white(const VerifyOptions& opt) {
  Timer timer;
  CheckResult res = start("C6", "tetrahedra: Reeve criterion, f = 1 and 1 in {a,b,c} for empty ones");
  const Int max_n = bound(opt, 30);
  const Int max_n_family = opt.max > 0 ? 2 * opt.max : 60;
  std::vector<TetraSpec> items;
  for (Int n = 1; n <= max_n; ++n) {
    for (Int a = 0; a < n; ++a) {
      for (Int b = 0; b < n; ++b) items.push_back({a, b, n});
    }
  }
  std::atomic<std::uint64_t> empties{0};
  sweep(res, items, opt, [&](const TetraSpec& t, Partial& p) {
    auto label = [&] {
      return "T(" + std::to_string(t.a) + "," + std::to_string(t.b) + "," + std::to_string(t.n) + ")";
    };
    bool empty = is_empty(t), clean = is_clean(t);
    if (empty) ++empties;
    p.expect(clean == reeve_criterion(t), [&] { return "clean != Reeve for " + label(); });
    Int c = t.c();
    bool abc_one = t.a == 1 || t.b == 1 || c == 1;
    if (empty) {
      p.expect(t.n == 1 || c >= 1, [&] { return "empty with c < 1: " + label(); });
    }
    if (clean && t.a >= 1 && t.b >= 1 && c >= 1) {
      bool f_one = true;
      for (Int k = 2; k <= t.n - 1; ++k) f_one = f_one && f_function(t, k) == 1;
      if (empty) p.expect(f_one, [&] { return "empty but f != 1 for " + label(); });
      if (f_one) p.expect(abc_one, [&] { return "f = 1 but 1 not in {a,b,c} for " + label(); });
    }
    if (empty && clean) p.expect(t.n == 1 || abc_one, [&] { return "empty, clean, 1 not in {a,b,c}: " + label(); });
    p.expect(empty == (t.n == 1 || (clean && abc_one)), [&] { return "emptiness classification fails for " + label(); });
  });
  std::vector<TetraSpec> family;
  for (Int n = 2; n <= max_n_family; ++n) {
    for (Int d = 1; d < n; ++d) {
      if (gcd(d, n) == 1) family.push_back({1, d, n});
    }
  }
  sweep(res, family, opt, [&](const TetraSpec& t, Partial& p) {
    p.expect(is_empty(t), [&] {
      return "T(1," + std::to_string(t.b) + "," + std::to_string(t.n) + ") is not empty";
    });
  });
  res.stats = {{"max_n", max_n}, {"max_n_family", max_n_family}, {"empty", empties.load()}};
  res.seconds = timer.seconds();
  return res;
}

CheckResult check_positivity(const VerifyOptions& opt) {
  Timer timer;
  CheckResult res = start("C7", "recursion summands are disjoint 0/1 indicators");
  const Int max = bound(opt, 120);
  std::vector<SlopePair> items{{1, 1}, {2, 3}, {3, 8}, {5, 13}, {13, 5}};
  if (max >= 89) {
    items.push_back({55, 89});
    items.push_back({89, 55});
  }
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<Int> dist(1, max);
  while (items.size() < 300) {
    Int a = dist(rng), b = dist(rng);
    if (gcd(a, b) == 1) items.push_back({a, b});
  }
  sweep(res, items, opt, [&](const SlopePair& sp, Partial& p) {
    ExpWindow w{-1, sp.a + 1, -1, sp.b + 1};
    auto check_pieces = [&](const std::vector<RationalGF>& pieces, const std::vector<Vec2>& target,
                            const char* what) {
      LaurentWindow total(w);
      bool zero_one = true;
      for (const auto& piece : pieces) {
        LaurentWindow lw = gf_expand(piece, w, expansion_direction(piece, sp));
        zero_one = zero_one && lw.is_01();
        for (const auto& [e, c] : lw.nonzero()) total.add_to(e, c);
      }
      std::map<Vec2, Int> want;
      for (Vec2 q : target) want[q] = 1;
      p.expect(zero_one, [&] { return std::string(what) + ": a summand is not 0/1 for " + pair_str(sp); });
      p.expect(total.is_01() && total.nonzero() == want,
               [&] { return std::string(what) + ": summands overlap or miss points for " + pair_str(sp); });
    };
    check_pieces(triangle_pieces({sp, true}), triangle_points_brute({sp, true}).points, "half-open triangle");
    check_pieces(triangle_pieces({sp, false}), triangle_points_brute({sp, false}).points, "closed triangle");
    {
      ConeSpec cone{sp};
      ExpWindow cw{0, 3 * sp.a, 0, 3 * sp.b};
      LaurentWindow total(cw);
      bool zero_one = true;
      for (auto piece : cone_slab_pieces(cone)) {
        for (auto& t : piece.terms) t.denom.push_back({sp.a, sp.b});
        LaurentWindow lw = gf_expand(piece, cw, expansion_direction(piece, sp));
        zero_one = zero_one && lw.is_01();
        for (const auto& [e, c] : lw.nonzero()) total.add_to(e, c);
      }
      bool ok = total.is_01();
      for (Int x = cw.x0; x <= cw.x1 && ok; ++x) {
        for (Int y = cw.y0; y <= cw.y1 && ok; ++y) ok = total.at({x, y}) == (in_cone(cone, {x, y}) ? 1 : 0);
      }
      p.expect(zero_one && ok, [&] { return "cone slabs are not a partition for " + pair_str(sp); });
    }
    ParallelepipedGFs gfs = parallelepiped_gfs(sp);
    std::vector<RationalGF> down, right;
    for (const auto& t : gfs.down) down.push_back(RationalGF{{t}});
    for (const auto& t : gfs.right) right.push_back(RationalGF{{t}});
    check_pieces(down, parallelepiped_points_brute({sp, Axis::kDown, true}).points, "down parallelepiped");
    check_pieces(right, parallelepiped_points_brute({sp, Axis::kRight, true}).points, "right parallelepiped");
  });
  res.stats = {{"max", max}, {"pairs", items.size()}};
  res.seconds = timer.seconds();
  return res;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"sequences", "staircase", "barvinok", "carlitz", "white", "all"};
  return names;
}

std::vector<CheckFn> suite_checks(const std::string& suite) {
  std::map<std::string, std::vector<CheckFn>> suites{
      {"sequences", {check_sturmian_equivalence, check_sequence_laws}},
      {"staircase", {check_staircase_recursion, check_staircase_symmetries, check_pipe_facts}},
      {"barvinok", {check_cone_gf, check_triangle_gfs, check_positivity}},
      {"carlitz", {check_carlitz, check_parallelepipeds}},
      {"white", {check_white}},
  };
  if (suite == "all") {
    std::vector<CheckFn> out;
    for (const char* s : {"sequences", "staircase", "barvinok", "carlitz", "white"}) {
      for (auto& f : suites[s]) out.push_back(f);
    }
    return out;
  }
  auto it = suites.find(suite);
  if (it == suites.end()) throw DomainError("unknown verify suite '" + suite + "'");
  return it->second;
}

}  // namespace lattice_stairs
