#pragma once

// Subword-complex quadruples and folded galleries: maximal-face checks, root
// functions, encoding/decoding between quadruples and signed-root step
// sequences, flats with projections, simple-root transports, and character
// quivers.

#include <set>
#include <vector>

#include "skmv/weights.hpp"

namespace skmv {

/// A maximal face of a subword complex: an ambient rank (the Weyl group is
/// the symmetric group of degree n+1), a word in simple-reflection indices,
/// a target permutation, and the set of deleted positions.
struct Quadruple {
  int n = 0;
  std::vector<int> word;  ///< letters in 1..n
  Permutation pi;         ///< degree n+1
  std::set<int> face;     ///< 1-based positions into `word`

  friend bool operator==(const Quadruple&, const Quadruple&) = default;
};

/// True iff deleting the positions in `face` leaves a reduced word for pi:
/// the remaining letters multiply to pi and their count equals length(pi).
[[nodiscard]] bool is_maximal_face(int n, const std::vector<int>& word,
                                   const Permutation& pi, const std::set<int>& face);

/// Root function r(l) for l = 1..n_X: the product of the traversing simple
/// reflections before position l (in increasing order) applied to the
/// letter's simple root.
[[nodiscard]] std::vector<RootVector> root_function(const Quadruple& X);

/// One step of a folded gallery: the emitted root already carries the sign
/// (-1)^{folded}.
struct GalleryStep {
  RootVector root;
  bool folded = false;

  friend bool operator==(const GalleryStep&, const GalleryStep&) = default;
};

/// A folded gallery as its signed-root step sequence.
struct FoldedGallery {
  int n = 0;
  std::vector<GalleryStep> steps;

  friend bool operator==(const FoldedGallery&, const FoldedGallery&) = default;
};

/// Encode a quadruple: step l carries (-1)^{[l in face]} r(l) with the folded
/// flag set on face positions.
[[nodiscard]] FoldedGallery encode_gallery(const Quadruple& X);

/// Decode a gallery back to its quadruple.  Throws MalformedGallery when a
/// step's unsigned root does not pull back to a simple root under the
/// accumulated traversal, or when the traversing steps do not form a reduced
/// word for the resulting permutation.
[[nodiscard]] Quadruple decode_gallery(const FoldedGallery& g);

/// The flat spanned by positions J: all positions whose root lies in the
/// rational span of {r(j) : j in J}.  Positions must lie in 1..n_X.
[[nodiscard]] std::set<int> flat_of(const Quadruple& X, const std::set<int>& J);

/// Project a gallery to a flat of its decoded quadruple: the subsequence of
/// steps at positions in F.  Throws NotAFlat when F is not span-closed.
[[nodiscard]] FoldedGallery project(const FoldedGallery& g, const std::set<int>& F);

/// Transported simple roots of the flat's own root system, one per position
/// of F in increasing order (full sequence, possibly with repeats).
[[nodiscard]] std::vector<RootVector> beta_sequence(const Quadruple& X,
                                                    const std::set<int>& F);

/// The distinct transported simple roots in order of first appearance.
/// Throws NotAFlat when F is not span-closed.
[[nodiscard]] std::vector<RootVector> beta_simple_roots(const Quadruple& X,
                                                        const std::set<int>& F);

/// Character quiver: vertices are the face positions, with an arrow i -> j
/// exactly when (i - j) * <r(i), r(j)^vee> > 0.
struct CharacterQuiver {
  std::vector<int> vertices;
  std::vector<std::pair<int, int>> arrows;  ///< sorted (from, to) pairs

  friend bool operator==(const CharacterQuiver&, const CharacterQuiver&) = default;
};

/// Build the character quiver.  Throws NotInClassA unless the face roots are
/// linearly independent, the face size equals the number of distinct word
/// letters, and pi is the longest element of the parabolic subgroup those
/// letters generate.
[[nodiscard]] CharacterQuiver character_quiver(const Quadruple& X);

}  // namespace skmv
