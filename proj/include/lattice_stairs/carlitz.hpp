// Dedekind-Carlitz polynomials c_{a,b}(x,y) = sum_{k=1}^{a-1} x^{k-1} y^{floor(bk/a)}
// and the open fundamental parallelepipeds they enumerate.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lattice_stairs/genfun.hpp"
#include "lattice_stairs/staircase.hpp"

namespace lattice_stairs {

enum class Axis {
  kDown,   // generators (0,-1) and (a,b); lattice points (k, floor(bk/a))
  kRight,  // generators (1,0) and (a,b); lattice points (ceil(ak/b), k)
};

struct ParallelepipedSpec {
  SlopePair slope;
  Axis axis = Axis::kDown;
  bool open = true;
};

/// Lattice points sum alpha_i v_i with 0 < alpha_i < 1 (open) or
/// 0 <= alpha_i < 1 (half-open), found by exact Cramer's rule.
PointWindow parallelepiped_points_brute(const ParallelepipedSpec& ps);

/// Open parallelepipeds from the shear reduction, the parameter swap and the
/// b = 1 base case.
PointWindow parallelepiped_by_recursion(const ParallelepipedSpec& ps);

enum class CarlitzMethod {
  /// O(len(chain)) terms: gD recovered from the half-open triangle T'_{a,b}
  /// via (1-y) f_{T'} = x(1-x^a)/(1-x) - y gD - x^a y^b.
  kCompact,
  /// The gD/gR parallelepiped recursion. Every term is a product of
  /// intervals and the terms partition the point set, but the number of
  /// terms grows like a Fibonacci number in the chain length.
  kPartition,
};

struct CarlitzPolynomial {
  SlopePair slope;
  /// Naive form: exponent list, one per k = 1..a-1. Short form: a RationalGF.
  std::variant<std::vector<Vec2>, RationalGF> form;

  bool is_naive() const { return std::holds_alternative<std::vector<Vec2>>(form); }
  /// Exact coefficients (expanding the short form on its bounding window).
  std::map<Vec2, Int> coefficients() const;
  std::size_t term_count() const;
};

CarlitzPolynomial carlitz_naive(const SlopePair& sp);
CarlitzPolynomial carlitz_short(const SlopePair& sp, CarlitzMethod method = CarlitzMethod::kCompact);

/// gD_{a,b} and gR_{a,b} as term lists of the partition recursion; each term
/// is one block of the partition. Throws DomainError past max_terms.
struct ParallelepipedGFs {
  std::vector<GFTerm> down;
  std::vector<GFTerm> right;
};
ParallelepipedGFs parallelepiped_gfs(const SlopePair& sp, std::size_t max_terms = 1'000'000);

/// One summand x^m * prod_i (1 + x^{v_i}) * child(x^{M e}); coefficient +1.
struct PositiveTerm {
  Vec2 monomial;
  std::vector<Vec2> binomials;
  std::optional<std::size_t> child;  // node index; absent means the factor 1
  Mat2 map;                          // exponent map applied to the child
  bool operator==(const PositiveTerm&) const = default;
};

struct PositiveNode {
  std::vector<PositiveTerm> terms;
};

/// c_{a,b} as a straight-line program without rational functions or
/// subtraction. Nodes reference only earlier nodes; the last node is c_{a,b}.
/// Each interval of the partition recursion is split into binary blocks, so
/// the program has O(log^2) binomial factors overall.
struct PositiveProgram {
  SlopePair slope;
  std::vector<PositiveNode> nodes;

  std::size_t term_count() const;
  /// Summands plus binomial factors.
  std::size_t size() const;
  /// Expands every node; throws DomainError past max_points monomials.
  std::map<Vec2, Int> coefficients(std::size_t max_points = 10'000'000) const;
};

PositiveProgram carlitz_positive(const SlopePair& sp);
std::string to_text(const PositiveProgram& p);
nlohmann::json to_json(const PositiveProgram& p);

}  // namespace lattice_stairs
