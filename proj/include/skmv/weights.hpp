#pragma once

// Weight/root arithmetic for the type A_n root system, together with the
// symmetric-group machinery used throughout: Cartan matrix, bilinear pairing,
// simple reflections, basis conversions between the fundamental-weight basis
// and the simple-root basis, and permutations acting on roots.

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "skmv/errors.hpp"

namespace skmv {

using IntVec = std::vector<long long>;

// ---------------------------------------------------------------------------
// Weights and root vectors
// ---------------------------------------------------------------------------

/// An integral weight of type A_n, stored in the fundamental-weight basis:
/// `coords[i-1]` is the coefficient of the i-th fundamental weight.
struct Weight {
  int n = 0;      ///< rank
  IntVec coords;  ///< length n

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

/// An element of the root lattice of type A_n, stored in the simple-root
/// basis: `coords[i-1]` is the coefficient of the i-th simple root.
struct RootVector {
  int n = 0;      ///< rank
  IntVec coords;  ///< length n

  friend bool operator==(const RootVector&, const RootVector&) = default;
  friend auto operator<=>(const RootVector&, const RootVector&) = default;
};

/// Cartan matrix of type A_n as an n x n integer matrix: 2 on the diagonal,
/// -1 on the first off-diagonals, 0 elsewhere.
[[nodiscard]] std::vector<IntVec> cartan(int n);

/// Zero weight of rank n.
[[nodiscard]] Weight zero_weight(int n);

/// i-th fundamental weight (1 <= i <= n).
[[nodiscard]] Weight fundamental_weight(int n, int i);

/// i-th simple root expressed in the fundamental-weight basis, i.e. the i-th
/// column of the Cartan matrix.
[[nodiscard]] Weight simple_root_weight(int n, int i);

/// Pairing of a weight with the i-th simple coroot; in the fundamental-weight
/// basis this is just the i-th coordinate.  Throws BoundsError when i is out
/// of range.
[[nodiscard]] long long pairing(const Weight& v, int i);

/// Simple reflection s_i applied to a weight: v - <v, a_i^vee> a_i.
[[nodiscard]] Weight simple_reflection(const Weight& v, int i);

/// Express a weight in the simple-root basis.  Throws NotInRootLattice when
/// the weight does not lie in the root lattice.
[[nodiscard]] RootVector to_root_coords(const Weight& v);

/// Express a root-lattice element in the fundamental-weight basis (always
/// defined: multiply by the Cartan matrix).
[[nodiscard]] Weight from_root_coords(const RootVector& r);

Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);
Weight operator-(const Weight& a);
RootVector operator+(const RootVector& a, const RootVector& b);
RootVector operator-(const RootVector& a, const RootVector& b);

/// Root-lattice element with a single simple root: a_i.
[[nodiscard]] RootVector simple_root(int n, int i);

/// Zero element of the root lattice of rank n.
[[nodiscard]] RootVector zero_root(int n);

/// Index i such that r == a_i, if the vector is a simple root.
[[nodiscard]] std::optional<int> simple_root_index(const RootVector& r);

/// Coordinates of a root-lattice element in the standard epsilon basis of
/// length n+1 (entries sum to zero): a_i maps to e_i - e_{i+1}.
[[nodiscard]] IntVec to_epsilon_coords(const RootVector& r);

/// Inverse of `to_epsilon_coords`; the input must have length n+1 and zero
/// coordinate sum (checked).
[[nodiscard]] RootVector from_epsilon_coords(const IntVec& eps);

/// Pairing <a, b^vee> of two root-lattice elements; in type A this is the dot
/// product of their epsilon coordinate vectors.
[[nodiscard]] long long root_pairing(const RootVector& a, const RootVector& b);

// ---------------------------------------------------------------------------
// Permutations (the Weyl group of type A_n is the symmetric group S_{n+1})
// ---------------------------------------------------------------------------

/// A permutation of {1, ..., m}, stored by its images.  Products compose as
/// functions: (a * b)(x) = a(b(x)).
class Permutation {
public:
  Permutation() = default;

  /// Identity permutation on {1, ..., m}.
  explicit Permutation(int m);

  /// Build from a 1-based image list (`images[x-1]` is the image of x).
  /// Throws BoundsError unless the list is a bijection of {1, ..., m}.
  static Permutation from_images(std::vector<int> images);

  /// Adjacent transposition swapping i and i+1 inside {1, ..., m}.
  static Permutation transposition(int m, int i);

  [[nodiscard]] int degree() const { return static_cast<int>(img_.size()); }
  [[nodiscard]] int image(int x) const;  ///< 1-based
  [[nodiscard]] const std::vector<int>& images() const { return img_; }

  [[nodiscard]] Permutation compose(const Permutation& rhs) const;
  [[nodiscard]] Permutation inverse() const;

  /// Coxeter length: the number of inversions.
  [[nodiscard]] long long length() const;

  [[nodiscard]] bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> img_;  ///< img_[x-1] = image of x, values 1..m
};

/// Simple reflection s_i as a permutation of {1, ..., n+1}.
[[nodiscard]] Permutation simple_permutation(int n, int i);

/// Product s_{word[0]} s_{word[1]} ... as a permutation of {1, ..., n+1}.
[[nodiscard]] Permutation product_of_simples(int n, const std::vector<int>& word);

/// Longest element of S_{n+1} (the order-reversing permutation).
[[nodiscard]] Permutation longest_element(int n);

/// Longest element of the parabolic subgroup of S_{n+1} generated by the
/// simple reflections with indices in `letters` (each in 1..n): every maximal
/// run of consecutive indices [a, b] contributes the reversal of the block
/// {a, ..., b+1}.
[[nodiscard]] Permutation longest_parabolic(int n, const std::set<int>& letters);

/// Action of a permutation of {1, ..., n+1} on the root lattice, via
/// permutation of epsilon coordinates.
[[nodiscard]] RootVector act_on_root(const Permutation& w, const RootVector& r);

/// Render a weight as a signed combination of `w<i>` tokens, e.g.
/// "w1-w2+w3"; the zero weight renders as "0".
[[nodiscard]] std::string weight_to_string(const Weight& v);

}  // namespace skmv
