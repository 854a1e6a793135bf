#pragma once

// Initial cluster seed combinatorics: the doubled word, exchangeable index
// detection, the bijection from seed indices onto oriented alcove edges, the
// seed quiver with its restriction, and the exchange matrix computed two
// independent ways.

#include <map>
#include <utility>
#include <vector>

#include "skmv/polytopes.hpp"
#include "skmv/weights.hpp"

namespace skmv {

/// One position of the doubled word: n negative placeholder letters followed
/// by the standard reduced word (1..n, 1..n-1, ..., 1) of the longest
/// element.  Positions k run through [-n,-1] and [1, n(n+1)/2].
struct SeedIndex {
  int k = 0;             ///< position
  int letter = 0;        ///< |i_k|
  int kplus = 0;         ///< next position with the same letter; N+1 when none
  bool exchangeable = false;

  friend bool operator==(const SeedIndex&, const SeedIndex&) = default;
};

/// An oriented edge of the fundamental alcove: frozen edges are the
/// fundamental weights (stored as j == 0, k == i for ω_i); mutable edges are
/// differences ω_j − ω_k with 1 <= j < k <= n.  The default ordering (frozen
/// first by index, then mutable lexicographically) is the canonical row and
/// column order of the exchange matrix.
struct EdgeLabel {
  int j = 0;
  int k = 0;

  [[nodiscard]] bool frozen() const { return j == 0; }
  [[nodiscard]] Weight weight(int n) const;

  friend bool operator==(const EdgeLabel&, const EdgeLabel&) = default;
  friend auto operator<=>(const EdgeLabel&, const EdgeLabel&) = default;
};

/// The standard reduced word (1..n, 1..n-1, ..., 1) of the longest element.
[[nodiscard]] std::vector<int> standard_word(int n);

/// Decorated positions of the doubled word, ordered -n..-1, 1..N.
/// Requires n >= 2.
[[nodiscard]] std::vector<SeedIndex> seed_indices(int n);

/// Exchangeable positive positions, ascending.
[[nodiscard]] std::vector<int> exchangeable_positions(int n);

/// The edge set E in canonical order: n frozen labels, then the mutable ones.
[[nodiscard]] std::vector<EdgeLabel> edge_set(int n);

/// The edge attached to a frozen or exchangeable position: ω_{n+1-i} for
/// k = -i, and ω_{i_{t(k)} - i_k} − ω_{i_{t(k)}} for exchangeable k, where
/// t(k) is the first non-exchangeable position after k.  Throws BoundsError
/// for k = 0, out-of-range k, or a non-exchangeable positive k.
[[nodiscard]] EdgeLabel beta(int n, int k);

/// The seed quiver on positions: forward arrows k -> k+ and backward arrows
/// l -> k (for k < l < k+ < l+ with adjacent letters), each touching at
/// least one exchangeable position.  `restricted` drops the
/// non-exchangeable positive positions together with their arrows.
struct SeedQuiver {
  std::vector<std::pair<int, int>> forward;
  std::vector<std::pair<int, int>> backward;
};
[[nodiscard]] SeedQuiver seed_quiver(int n, bool restricted);

/// Exchange matrix over E x E in canonical order, from the direct
/// adjacency rule: b(ω_i, ω_i−ω_n) = 1 for i < n, b(ω_j−ω_k, ω_j−ω_{k-1}) = 1
/// and b(ω_j−ω_k, ω_{j+1}−ω_k) = -1 for j < k-1, extended skew-symmetrically,
/// 0 elsewhere.  Requires n >= 2.
[[nodiscard]] std::vector<IntVec> exchange_matrix(int n);

/// The same matrix built independently: construct the seed quiver, restrict
/// it, transport positions through beta, and emit +/-1 per backward arrow.
/// Requires n >= 2.
[[nodiscard]] std::vector<IntVec> exchange_matrix_from_quiver(int n);

/// Path polytope of every edge label.  Requires n >= 2.
[[nodiscard]] std::map<EdgeLabel, LatticePolytope> seed_polytopes(int n);

}  // namespace skmv
