// Periodic integer sequences, Beatty sequences and the four decision
// procedures for Sturmian 0,1-sequences.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lattice_stairs/numeric.hpp"

namespace lattice_stairs {

/// A bi-infinite periodic sequence stored as one period; entry n of the
/// sequence is period[n mod size].
class PeriodicIntSeq {
 public:
  explicit PeriodicIntSeq(std::vector<Int> period);

  const std::vector<Int>& period() const { return period_; }
  std::size_t size() const { return period_.size(); }
  Int at(Int n) const;

  Int sum() const;
  bool is_01() const;

  /// Smallest p dividing size() with period[i] = period[i + p].
  std::size_t minimal_period() const;
  /// The first minimal_period() entries.
  PeriodicIntSeq minimal() const;
  /// Lexicographically smallest rotation of the minimal period. Two
  /// sequences agree up to shift iff their canonical forms are equal.
  PeriodicIntSeq canonical() const;

  PeriodicIntSeq rotated(std::size_t k) const;
  PeriodicIntSeq reversed() const;
  PeriodicIntSeq plus_constant(Int k) const;

  /// Sum of entries x0..x1 (inclusive) of the extension.
  Int window_sum(Int x0, Int x1) const;

  bool operator==(const PeriodicIntSeq&) const = default;

 private:
  std::vector<Int> period_;
};

std::string to_string(const PeriodicIntSeq& s);

/// floor(b n / a) - floor(b (n-1) / a).
Int beatty(const SlopePair& sp, Int n);

/// B_{a,b}(1), ..., B_{a,b}(a). Requires gcd(a, b) = 1.
PeriodicIntSeq beatty_period(const SlopePair& sp);

/// The k with all entries in {k, k+1}; a constant sequence c gives k = c.
std::optional<Int> is_balanced(const PeriodicIntSeq& s);

/// Subtracts the balance level. Throws DomainError if s is not balanced.
PeriodicIntSeq reduce(const PeriodicIntSeq& s);

/// Lengths of the blocks "1 0...0", read from the first 1 of the stored
/// period. Requires a 0,1-sequence with at least one 1.
PeriodicIntSeq block_sequence(const PeriodicIntSeq& s);

bool shift_equivalent(const PeriodicIntSeq& s, const PeriodicIntSeq& t);

bool is_sturmian(const PeriodicIntSeq& s);
bool is_recursively_balanced(const PeriodicIntSeq& s);
bool is_evenly_distributed(const PeriodicIntSeq& s);

/// Decrements entries at positions = i and increments those at i + 1,
/// modulo the stored period length.
PeriodicIntSeq swap(const PeriodicIntSeq& s, Int i);
bool is_swap_symmetric(const PeriodicIntSeq& s);

}  // namespace lattice_stairs
