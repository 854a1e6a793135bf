#pragma once

// One-skeleton paths: endpoints of one-step paths on fundamental chains
// ("fundamental paths"), their raising/lowering moves, the colored chain
// graphs they generate, concatenations, and the textual path grammar.

#include <optional>
#include <string>
#include <vector>

#include "skmv/weights.hpp"

namespace skmv {

// ---------------------------------------------------------------------------
// Fundamental paths
// ---------------------------------------------------------------------------

/// A fundamental path, identified with its endpoint weight: an extremal
/// weight of the j-th fundamental representation.  `level` records j.
struct FundamentalPath {
  Weight weight;
  int level = 0;

  friend bool operator==(const FundamentalPath&, const FundamentalPath&) = default;
  friend auto operator<=>(const FundamentalPath&, const FundamentalPath&) = default;
};

/// If v is an extremal weight of some fundamental representation, return its
/// level j; otherwise nullopt.  The criterion: v has a 0/1 indicator vector
/// chi of length n+1 with chi(i) - chi(i+1) = coords[i-1], and the number of
/// ones is strictly between 0 and n+1 (that count is j).
[[nodiscard]] std::optional<int> fundamental_level(const Weight& v);

/// Wrap a weight as a fundamental path; throws NotFundamental otherwise.
[[nodiscard]] FundamentalPath fundamental_path(const Weight& v);

/// Lowering move in color i: defined exactly when <weight, a_i^vee> = 1, in
/// which case the result is the path with endpoint weight - a_i.
[[nodiscard]] std::optional<FundamentalPath> lower(const FundamentalPath& p, int i);

/// Raising move in color i: defined exactly when <weight, a_i^vee> = -1.
[[nodiscard]] std::optional<FundamentalPath> raise(const FundamentalPath& p, int i);

// ---------------------------------------------------------------------------
// Chains
// ---------------------------------------------------------------------------

/// A colored arrow between chain vertices, by vertex index and color.
struct ChainArrow {
  int from = 0;
  int color = 0;
  int to = 0;

  friend bool operator==(const ChainArrow&, const ChainArrow&) = default;
  friend auto operator<=>(const ChainArrow&, const ChainArrow&) = default;
};

/// A colored graph on a set of fundamental-path endpoints, closed under
/// lowering moves.  Vertices are listed in canonical order: increasing height
/// below the source (total number of simple-root steps down from the top
/// vertex), ties broken lexicographically by fundamental-weight coordinates.
/// Arrows are sorted by (from, color).
struct Chain {
  int n = 0;
  int level = 0;
  std::vector<Weight> vertices;
  std::vector<ChainArrow> arrows;

  friend bool operator==(const Chain&, const Chain&) = default;
};

/// The full j-th fundamental chain: all extremal weights of level j with all
/// lowering arrows.  Throws BoundsError unless 1 <= j <= n.
[[nodiscard]] Chain chain(int n, int j);

/// The downward closure of a single fundamental path: the subgraph of its
/// chain reachable from it by lowering moves.
[[nodiscard]] Chain chain_below(const FundamentalPath& p);

// ---------------------------------------------------------------------------
// Concatenations
// ---------------------------------------------------------------------------

/// A concatenation of fundamental paths (possibly empty: the trivial path).
struct SkeletonPath {
  int n = 0;
  std::vector<FundamentalPath> factors;

  friend bool operator==(const SkeletonPath&, const SkeletonPath&) = default;
};

/// Trivial (length-zero) path of rank n.
[[nodiscard]] SkeletonPath trivial_path(int n);

/// Build a concatenation from endpoint weights; throws NotFundamental when a
/// factor is not a fundamental path, RankMismatch on mixed ranks.
[[nodiscard]] SkeletonPath make_path(int n, const std::vector<Weight>& factors);

/// Concatenate two paths of the same rank.
[[nodiscard]] SkeletonPath concat(const SkeletonPath& p, const SkeletonPath& q);

/// Endpoint weight of the concatenation: the sum of factor weights.
[[nodiscard]] Weight weight_of(const SkeletonPath& p);

/// Lowering move in color i on a concatenation: acts on the first factor
/// (in listed order) whose pairing with a_i^vee is positive; undefined
/// (nullopt) when every factor pairs non-positively.
[[nodiscard]] std::optional<SkeletonPath> lower_path(const SkeletonPath& p, int i);

// ---------------------------------------------------------------------------
// Text grammar
// ---------------------------------------------------------------------------

/// Parse a comma-separated list of factors, each factor a signed combination
/// of `w<i>` tokens (e.g. "w1, w2-w1").  Whitespace is ignored.  An empty or
/// blank string denotes the trivial path.  Throws std::invalid_argument on a
/// syntax error, NotFundamental when a well-formed factor is not a
/// fundamental path, BoundsError when a token index exceeds the rank.
[[nodiscard]] SkeletonPath parse_path(int n, const std::string& text);

/// Render a path in the grammar accepted by `parse_path`.
[[nodiscard]] std::string path_to_string(const SkeletonPath& p);

}  // namespace skmv
