// Short generating functions for lattice triangles and the 2-D cone
// cone((1,0), (a,b)), built along the Euclid chain.
#pragma once

#include <vector>

#include "lattice_stairs/genfun.hpp"
#include "lattice_stairs/staircase.hpp"

namespace lattice_stairs {

/// T_{a,b} = Z^2 cap conv{0, (a,0), (a,b)}; the half-open T'_{a,b} drops the
/// lattice points of the segment from 0 to (a,b).
struct TriangleSpec {
  SlopePair slope;
  bool half_open = false;
};

struct ConeSpec {
  SlopePair slope;
};

PointWindow triangle_points_brute(const TriangleSpec& t);
bool in_cone(const ConeSpec& c, Vec2 p);

/// Disjoint pieces whose sum is f_{T'_{a,b}} (or f_{T_{a,b}}): one triangle
/// of integral slope per division step plus the base case.
std::vector<RationalGF> triangle_pieces(const TriangleSpec& t);

RationalGF gf_half_open_triangle(const SlopePair& sp);
RationalGF gf_closed_triangle(const SlopePair& sp);

/// f_K = (1 + f_{T'_{a,b}} + x1^{a+1}/(1-x1) * (1-x2^b)/(1-x2)) / (1 - x1^a x2^b).
RationalGF gf_cone(const ConeSpec& c);

/// Pieces of the slab {0 <= y < b} of the cone: {0}, the triangle pieces and
/// the tail x >= a+1.
std::vector<RationalGF> cone_slab_pieces(const ConeSpec& c);

/// (2b+1, 1), perturbed in the second coordinate until no denominator of f
/// is orthogonal to it.
Vec2 expansion_direction(const RationalGF& f, const SlopePair& sp);

}  // namespace lattice_stairs
