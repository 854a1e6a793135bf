#pragma once

// Lattice polytopes in root coordinates: canonicalized convex hulls, path
// polytopes via the lowering closure, Minkowski sums, goodness tests, and
// string polytopes of interval type.

#include <set>
#include <vector>

#include "skmv/paths.hpp"
#include "skmv/weights.hpp"

namespace skmv {

/// A lattice polytope of rank n given by its vertex set in simple-root
/// coordinates, canonicalized so its componentwise-minimal vertex sits at the
/// origin and vertices are sorted lexicographically.
struct LatticePolytope {
  int n = 0;
  std::vector<IntVec> vertices;

  friend bool operator==(const LatticePolytope&, const LatticePolytope&) = default;
  friend auto operator<=>(const LatticePolytope&, const LatticePolytope&) = default;
};

/// Convex hull of a finite point set: keeps exactly the extreme points
/// (decided by exact rational feasibility, no floating point), then
/// translates so the componentwise minimum vector sits at the origin.
/// Throws AmbiguousMinimum when no input point attains the componentwise
/// minimum in every coordinate, BoundsError on an empty set or a point of
/// the wrong dimension.
[[nodiscard]] LatticePolytope hull(int n, const std::vector<IntVec>& points);

/// Endpoint weights reachable from a concatenation by lowering moves,
/// expressed in root coordinates relative to the starting weight.
[[nodiscard]] std::vector<IntVec> lowering_closure_points(const SkeletonPath& p);

/// Path polytope: convex hull of the lowering closure of the concatenation.
[[nodiscard]] LatticePolytope pol(const SkeletonPath& p);

/// Minkowski sum, computed as the hull of all pairwise vertex sums.
[[nodiscard]] LatticePolytope minkowski(const LatticePolytope& P, const LatticePolytope& Q);

/// Downward closure of a single fundamental path inside its chain.
[[nodiscard]] Chain subchain(const FundamentalPath& p);

/// Convex hull of a finite set of weights whose pairwise differences lie in
/// the root lattice, expressed relative to the first weight.  Throws
/// NotInRootLattice when a difference leaves the root lattice.
[[nodiscard]] LatticePolytope hull_of_vertexset(int n, const std::vector<Weight>& weights);

/// Orbit points of a chain: its vertex weights relative to the final (sink)
/// weight of the chain's source orbit, in root coordinates shifted so the
/// chain's lowest vertex maps to the componentwise pattern used by `pol`.
/// Concretely: root coordinates of (vertex - minimum vertex of the chain).
[[nodiscard]] std::vector<IntVec> chain_orbit_points(const Chain& c);

/// A polytope is good when every vertex is an orbit point.
[[nodiscard]] bool is_good(const LatticePolytope& P, const std::vector<IntVec>& orbit_points);

/// All maximal lowering color sequences of a fundamental path: each sequence
/// lists the colors along one maximal descending walk in its subchain.
[[nodiscard]] std::set<std::vector<int>> lowering_color_sequences(const FundamentalPath& p);

/// String polytope of an interval [a, b] inside [1, n]: the hull of the
/// origin together with all suffix sums a_k + a_{k+1} + ... + a_b for
/// a <= k <= b.  Throws BoundsError unless 1 <= a <= b <= n.
[[nodiscard]] LatticePolytope hn_string(int n, int a, int b);

/// Polytope consisting of a single point at the origin.
[[nodiscard]] LatticePolytope point_polytope(int n);

/// Segment from the origin to the i-th simple root.
[[nodiscard]] LatticePolytope segment_polytope(int n, int i);

}  // namespace skmv
