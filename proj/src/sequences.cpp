#include "lattice_stairs/sequences.hpp"

#include <algorithm>

namespace lattice_stairs {

PeriodicIntSeq::PeriodicIntSeq(std::vector<Int> period) : period_(std::move(period)) {
  if (period_.empty()) throw DomainError("periodic sequence needs a non-empty period");
}

Int PeriodicIntSeq::at(Int n) const {
  return period_[static_cast<std::size_t>(floor_mod(n, static_cast<Int>(size())))];
}

Int PeriodicIntSeq::sum() const {
  Int s = 0;
  for (Int v : period_) s = add(s, v);
  return s;
}

bool PeriodicIntSeq::is_01() const {
  return std::all_of(period_.begin(), period_.end(), [](Int v) { return v == 0 || v == 1; });
}

std::size_t PeriodicIntSeq::minimal_period() const {
  std::size_t n = size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (std::size_t i = p; i < n && ok; ++i) ok = period_[i] == period_[i - p];
    if (ok) return p;
  }
  return n;
}

PeriodicIntSeq PeriodicIntSeq::minimal() const {
  std::size_t p = minimal_period();
  return PeriodicIntSeq({period_.begin(), period_.begin() + static_cast<std::ptrdiff_t>(p)});
}

PeriodicIntSeq PeriodicIntSeq::canonical() const {
  PeriodicIntSeq m = minimal();
  std::size_t n = m.size();
  std::size_t best = 0;
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      Int x = m.period_[(k + i) % n];
      Int y = m.period_[(best + i) % n];
      if (x != y) {
        if (x < y) best = k;
        break;
      }
    }
  }
  return m.rotated(best);
}

PeriodicIntSeq PeriodicIntSeq::rotated(std::size_t k) const {
  std::vector<Int> v(period_);
  std::rotate(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k % size()), v.end());
  return PeriodicIntSeq(std::move(v));
}

PeriodicIntSeq PeriodicIntSeq::reversed() const {
  return PeriodicIntSeq({period_.rbegin(), period_.rend()});
}

PeriodicIntSeq PeriodicIntSeq::plus_constant(Int k) const {
  std::vector<Int> v(period_);
  for (Int& x : v) x = add(x, k);
  return PeriodicIntSeq(std::move(v));
}

Int PeriodicIntSeq::window_sum(Int x0, Int x1) const {
  Int s = 0;
  for (Int n = x0; n <= x1; ++n) s = add(s, at(n));
  return s;
}

std::string to_string(const PeriodicIntSeq& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(s.period()[i]);
  }
  return out;
}

Int beatty(const SlopePair& sp, Int n) {
  return sub(floor_div(mul(sp.b, n), sp.a), floor_div(mul(sp.b, sub(n, 1)), sp.a));
}

PeriodicIntSeq beatty_period(const SlopePair& sp) {
  SlopePair c = SlopePair::coprime(sp.a, sp.b);
  std::vector<Int> v;
  v.reserve(static_cast<std::size_t>(c.a));
  for (Int n = 1; n <= c.a; ++n) v.push_back(beatty(c, n));
  return PeriodicIntSeq(std::move(v));
}

std::optional<Int> is_balanced(const PeriodicIntSeq& s) {
  auto [lo, hi] = std::minmax_element(s.period().begin(), s.period().end());
  if (*hi - *lo > 1) return std::nullopt;
  return *lo;
}

PeriodicIntSeq reduce(const PeriodicIntSeq& s) {
  auto k = is_balanced(s);
  if (!k) throw DomainError("reduce: sequence is not balanced");
  return s.plus_constant(neg(*k));
}

namespace {

void require_01_with_one(const PeriodicIntSeq& s, const char* what) {
  if (!s.is_01()) throw DomainError(std::string(what) + ": expected a 0,1-sequence");
  if (s.sum() == 0) throw DomainError(std::string(what) + ": sequence has no 1");
}

}  // namespace

PeriodicIntSeq block_sequence(const PeriodicIntSeq& s) {
  require_01_with_one(s, "block_sequence");
  const auto& p = s.period();
  std::size_t n = p.size();
  std::size_t start = static_cast<std::size_t>(std::find(p.begin(), p.end(), 1) - p.begin());
  std::vector<Int> blocks;
  Int len = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (p[(start + i) % n] == 1 && i > 0) {
      blocks.push_back(len);
      len = 0;
    }
    ++len;
  }
  blocks.push_back(len);
  return PeriodicIntSeq(std::move(blocks));
}

bool shift_equivalent(const PeriodicIntSeq& s, const PeriodicIntSeq& t) {
  return s.canonical() == t.canonical();
}

bool is_sturmian(const PeriodicIntSeq& s) {
  require_01_with_one(s, "is_sturmian");
  PeriodicIntSeq m = s.minimal();
  Int p = static_cast<Int>(m.size());
  Int ones = m.sum();
  // B_{p,ones} with ones <= p is already a 0,1-sequence, i.e. its own
  // reduction; it only exists with minimal period p when gcd(p, ones) = 1.
  if (gcd(p, ones) != 1) return false;
  return shift_equivalent(m, beatty_period(SlopePair{p, ones}));
}

bool is_recursively_balanced(const PeriodicIntSeq& s) {
  require_01_with_one(s, "is_recursively_balanced");
  PeriodicIntSeq cur = s.minimal();
  // On a minimal period with at least two 1s the block sequence is not
  // constant, so its reduction has fewer but at least one 1.
  while (cur.sum() > 1) {
    PeriodicIntSeq m = block_sequence(cur);
    if (!is_balanced(m)) return false;
    cur = reduce(m).minimal();
  }
  return true;
}

bool is_evenly_distributed(const PeriodicIntSeq& s) {
  require_01_with_one(s, "is_evenly_distributed");
  PeriodicIntSeq m = s.minimal();
  Int p = static_cast<Int>(m.size());
  Int ones = m.sum();
  // An interval of length q*p + l holds q*ones from full periods, so the
  // inequality for it is the one for length l; lengths 1..p-1 suffice.
  std::vector<Int> prefix(2 * static_cast<std::size_t>(p) + 1, 0);
  for (Int i = 0; i < 2 * p; ++i) prefix[static_cast<std::size_t>(i + 1)] = prefix[static_cast<std::size_t>(i)] + m.at(i);
  for (Int l = 1; l < p; ++l) {
    for (Int x0 = 0; x0 < p; ++x0) {
      Int c = prefix[static_cast<std::size_t>(x0 + l)] - prefix[static_cast<std::size_t>(x0)];
      Int expected = mul(ones, l);  // (ones / p) * l, scaled by p
      if (!(mul(c - 1, p) < expected && expected < mul(c + 1, p))) return false;
    }
  }
  return true;
}

PeriodicIntSeq swap(const PeriodicIntSeq& s, Int i) {
  std::vector<Int> v(s.period());
  Int n = static_cast<Int>(v.size());
  auto& lo = v[static_cast<std::size_t>(floor_mod(i, n))];
  lo = sub(lo, 1);
  auto& hi = v[static_cast<std::size_t>(floor_mod(add(i, 1), n))];
  hi = add(hi, 1);
  return PeriodicIntSeq(std::move(v));
}

bool is_swap_symmetric(const PeriodicIntSeq& s) {
  PeriodicIntSeq m = s.minimal();
  PeriodicIntSeq target = m.canonical();
  for (Int i = 0; i < static_cast<Int>(m.size()); ++i) {
    if (swap(m, i).canonical() == target) return true;
  }
  return false;
}

}  // namespace lattice_stairs
