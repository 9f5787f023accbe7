#include <doctest.h>

#include <optional>

#include "lattice_stairs/sequences.hpp"

using namespace lattice_stairs;

namespace {

using Seq = std::vector<Int>;

Seq bits(std::uint32_t mask, int len) {
  Seq v(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) v[static_cast<std::size_t>(i)] = (mask >> i) & 1;
  return v;
}

Int at(const Seq& s, Int n) {
  Int p = static_cast<Int>(s.size());
  return s[static_cast<std::size_t>(((n % p) + p) % p)];
}

bool rotation_of(const Seq& s, const Seq& t) {
  if (s.size() != t.size()) return false;
  for (std::size_t k = 0; k < s.size(); ++k) {
    bool ok = true;
    for (std::size_t i = 0; i < s.size() && ok; ++i) ok = s[(i + k) % s.size()] == t[i];
    if (ok) return true;
  }
  return false;
}

Seq minimal_period(const Seq& s) {
  for (std::size_t p = 1; p <= s.size(); ++p) {
    if (s.size() % p) continue;
    bool ok = true;
    for (std::size_t i = p; i < s.size() && ok; ++i) ok = s[i] == s[i - p];
    if (ok) return Seq(s.begin(), s.begin() + static_cast<long>(p));
  }
  return s;
}

Int ones(const Seq& s) {
  Int n = 0;
  for (Int v : s) n += v;
  return n;
}

// Sturmian: a rotation of n -> floor(O n / P) - floor(O (n-1) / P) with
// P, O the minimal period length and its number of ones.
bool oracle_sturmian(const Seq& s0) {
  Seq s = minimal_period(s0);
  Int p = static_cast<Int>(s.size()), o = ones(s);
  Seq w;
  for (Int n = 1; n <= p; ++n) w.push_back((o * n) / p - (o * (n - 1)) / p);
  return rotation_of(s, w);
}

// |ones(I) - (O/P) length(I)| < 1 for every interval I.
bool oracle_even(const Seq& s) {
  Int p = static_cast<Int>(s.size()), o = ones(s);
  for (Int x0 = 0; x0 < p; ++x0) {
    Int count = 0;
    for (Int len = 1; len <= 2 * p; ++len) {
      count += at(s, x0 + len - 1);
      Int diff = count * p - o * len;
      if (diff <= -p || diff >= p) return false;
    }
  }
  return true;
}

Seq oracle_blocks(const Seq& s) {
  std::size_t start = 0;
  while (s[start] != 1) ++start;
  Seq out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[(start + i) % s.size()] == 1) out.push_back(0);
    out.back() += 1;
  }
  return out;
}

std::optional<Int> oracle_balanced(const Seq& s) {
  Int lo = s[0], hi = s[0];
  for (Int v : s) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (hi - lo > 1) return std::nullopt;
  return lo;
}

bool oracle_recursively_balanced(const Seq& s0) {
  Seq s = minimal_period(s0);
  if (ones(s) == 1) return true;
  Seq m = oracle_blocks(s);
  auto k = oracle_balanced(m);
  if (!k) return false;
  Seq r;
  for (Int v : m) r.push_back(v - *k);
  if (ones(r) == 0) return false;
  return oracle_recursively_balanced(r);
}

// Replace some "1 0" by "0 1" in every period; the result must be a shift.
bool oracle_swap_symmetric(const Seq& s0) {
  Seq s = minimal_period(s0);
  // With period 1 both swapped positions coincide: the swap is the identity.
  if (s.size() == 1) return true;
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::size_t j = (i + 1) % s.size();
    if (s[i] != 1 || s[j] != 0) continue;
    Seq t = s;
    t[i] = 0;
    t[j] = 1;
    if (rotation_of(t, s)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("beatty values") {
  SlopePair sp{5, 3};
  CHECK(beatty_period(sp).period() == Seq{0, 1, 0, 1, 1});
  CHECK(beatty_period(sp).sum() == 3);
  CHECK(beatty_period({2, 5}).period() == Seq{2, 3});
  for (Int n = -4; n <= 0; ++n) CHECK(beatty(sp, n) == beatty(sp, n + 5));
  for (Int a = 1; a <= 15; ++a) {
    for (Int b = 1; b <= 15; ++b) {
      if (gcd(a, b) != 1) continue;
      for (Int n = -20; n <= 20; ++n) {
        Int fl = floor_div(b * n, a) - floor_div(b * (n - 1), a);
        CHECK(beatty({a, b}, n) == fl);
      }
      CHECK(beatty_period({a, b}).sum() == b);
    }
  }
  CHECK_THROWS_AS(beatty_period({4, 6}), DomainError);
}

TEST_CASE("reduce and balance") {
  CHECK(reduce(PeriodicIntSeq({2, 3, 2, 3, 3})).period() == Seq{0, 1, 0, 1, 1});
  CHECK(reduce(beatty_period({5, 13})) == beatty_period({5, 3}));
  CHECK(is_balanced(PeriodicIntSeq({2, 3, 3})) == std::optional<Int>(2));
  CHECK(is_balanced(PeriodicIntSeq({4, 4})) == std::optional<Int>(4));
  CHECK_FALSE(is_balanced(PeriodicIntSeq({1, 3})).has_value());
  CHECK_THROWS_AS(reduce(PeriodicIntSeq({1, 3})), DomainError);
}

TEST_CASE("block sequences") {
  CHECK(block_sequence(PeriodicIntSeq({1, 0, 0, 1, 0})).period() == Seq{3, 2});
  CHECK(block_sequence(PeriodicIntSeq({0, 1, 0, 0, 1})).period() == Seq{3, 2});
  CHECK(block_sequence(PeriodicIntSeq({1, 1, 1})).period() == Seq{1, 1, 1});
  CHECK(shift_equivalent(block_sequence(beatty_period({5, 2})), beatty_period({2, 5})));
  CHECK_THROWS_AS(block_sequence(PeriodicIntSeq({0, 0})), DomainError);
  for (int len = 1; len <= 10; ++len) {
    for (std::uint32_t mask = 1; mask < (1u << len); ++mask) {
      Seq s = bits(mask, len);
      CHECK(block_sequence(PeriodicIntSeq(s)).period() == oracle_blocks(s));
    }
  }
}

TEST_CASE("shift equivalence and canonical forms") {
  CHECK(shift_equivalent(PeriodicIntSeq({1, 0, 1, 0, 1}), PeriodicIntSeq({0, 1, 0, 1, 1})));
  CHECK_FALSE(shift_equivalent(PeriodicIntSeq({1, 1, 0, 0}), PeriodicIntSeq({1, 0, 1, 0})));
  // Different stored lengths of the same sequence.
  CHECK(shift_equivalent(PeriodicIntSeq({1, 0}), PeriodicIntSeq({0, 1, 0, 1})));
  for (int len = 1; len <= 8; ++len) {
    for (std::uint32_t m1 = 0; m1 < (1u << len); ++m1) {
      for (std::uint32_t m2 = 0; m2 < (1u << len); m2 += 3) {
        Seq s = bits(m1, len), t = bits(m2, len);
        CHECK(shift_equivalent(PeriodicIntSeq(s), PeriodicIntSeq(t)) == rotation_of(s, t));
      }
    }
  }
}

TEST_CASE("frozen predicate examples") {
  PeriodicIntSeq a({1, 0, 1, 0, 1});
  CHECK(is_sturmian(a));
  CHECK(is_recursively_balanced(a));
  CHECK(is_evenly_distributed(beatty_period({5, 2})));
  CHECK(is_swap_symmetric(beatty_period({5, 3})));
  PeriodicIntSeq b({1, 1, 0, 0});
  CHECK_FALSE(is_sturmian(b));
  CHECK_FALSE(is_evenly_distributed(b));
  CHECK_FALSE(is_swap_symmetric(b));
  CHECK_FALSE(is_recursively_balanced(PeriodicIntSeq({1, 0, 0, 0, 1, 0})));
}

TEST_CASE("predicates agree with brute-force oracles") {
  for (int len = 1; len <= 11; ++len) {
    for (std::uint32_t mask = 1; mask < (1u << len); ++mask) {
      Seq s = bits(mask, len);
      PeriodicIntSeq p(s);
      INFO("s = ", to_string(p));
      bool st = oracle_sturmian(s);
      CHECK(is_sturmian(p) == st);
      CHECK(is_evenly_distributed(p) == oracle_even(s));
      CHECK(is_recursively_balanced(p) == oracle_recursively_balanced(s));
      CHECK(is_swap_symmetric(p) == oracle_swap_symmetric(s));
      CHECK(oracle_even(s) == st);
    }
  }
}

TEST_CASE("sequence helpers") {
  PeriodicIntSeq s({0, 1, 1});
  CHECK(s.at(-1) == 1);
  CHECK(s.at(3) == 0);
  CHECK(s.window_sum(-1, 4) == 4);
  CHECK(s.reversed().period() == Seq{1, 1, 0});
  CHECK(s.rotated(1).period() == Seq{1, 1, 0});
  CHECK(s.plus_constant(2).period() == Seq{2, 3, 3});
  CHECK(PeriodicIntSeq({1, 0, 1, 0}).minimal_period() == 2);
  CHECK(PeriodicIntSeq({1, 0, 1, 0}).minimal().period() == Seq{1, 0});
  CHECK(PeriodicIntSeq({1, 0, 0, 1, 0, 0}).canonical().period() == Seq{0, 0, 1});
  CHECK(swap(PeriodicIntSeq({1, 0, 1}), 0).period() == Seq{0, 1, 1});
  CHECK(to_string(s) == "0 1 1");
  CHECK_THROWS_AS(PeriodicIntSeq({}), DomainError);
}
