#pragma once

// The Hall algebra of interval quivers over the standard quadruple: objects
// are multisets of intervals, subobjects are suffixes (quotients are
// prefixes), multiplication counts admissible assignments, and the dual
// comultiplication of an indecomposable maps onto the string coalgebra.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skmv/coalgebra.hpp"
#include "skmv/galleries.hpp"

namespace skmv {

/// A closed integer interval [a, b].
using Interval = std::pair<int, int>;

/// A disjoint union of interval-labeled indecomposables inside [1, n]; parts
/// form a multiset (repeats allowed) and are stored sorted.  The empty object
/// is the unit.
struct HallObject {
  int n = 0;
  std::vector<Interval> parts;

  friend bool operator==(const HallObject&, const HallObject&) = default;
  friend auto operator<=>(const HallObject&, const HallObject&) = default;
};

/// Build an object; throws BoundsError when a part is not an interval inside
/// [1, n].
[[nodiscard]] HallObject hall_object(int n, std::vector<Interval> parts);

/// An integer combination of objects, zero-free.
using HallElement = std::map<HallObject, long long>;

/// For H a subinterval of J: true iff H is a suffix of J (the admissible
/// subobject side); the complementary prefix is the admissible quotient.
/// Throws BoundsError when H is not contained in J.
[[nodiscard]] bool admissible_sub(const Interval& H, const Interval& J);

/// Hall product [A]*[B] = sum_C g [C], where g counts assignments choosing a
/// (possibly empty or full) suffix of every part of C whose suffix multiset
/// is exactly parts(A) and whose complementary prefix multiset is exactly
/// parts(B); identical parts of C count as distinguishable positions.
[[nodiscard]] HallElement hall_product(const HallObject& A, const HallObject& B);

/// Linear-algebra helpers on Hall elements.
[[nodiscard]] HallElement hall_add(const HallElement& x, const HallElement& y);
[[nodiscard]] HallElement hall_scale(long long c, const HallElement& x);
[[nodiscard]] HallElement hall_mul(const HallElement& x, const HallElement& y);

/// The class of the single-vertex object {[i,i]}.
[[nodiscard]] HallElement hall_generator(int n, int i);

/// Serre relations E_i²E_j - 2 E_iE_jE_i + E_jE_i² = 0 for adjacent i, j and
/// commutation [E_i, E_j] = 0 for distant pairs.  Requires n >= 2.
[[nodiscard]] bool serre_check(int n);

/// One term of the dual comultiplication: prefix tensor suffix, with absent
/// sides denoting the unit.
struct DualDeltaTerm {
  std::optional<Interval> left;
  std::optional<Interval> right;

  friend bool operator==(const DualDeltaTerm&, const DualDeltaTerm&) = default;
};

/// Dual comultiplication of the indecomposable [h,j]*: the sum over
/// k = h-1..j of [h,k]* tensor [k+1,j]*, in that order, all coefficients 1.
/// Throws BoundsError when [h,j] is not inside [1,n].
[[nodiscard]] std::vector<DualDeltaTerm> dual_delta(int n, const Interval& c);

/// Image of dual_delta under the dictionary [a,b]* -> x_{a,b+1}: a tensor
/// polynomial in the string coalgebra, equal to delta_gen of the matching
/// generator.
[[nodiscard]] TensorPoly dual_delta_as_comult(int n, const Interval& c);

/// The standard quadruple: word (1..n)(1..n)(1..n-1)...(1), face = the first
/// n positions, pi = the longest element.
[[nodiscard]] Quadruple standard_quadruple(int n);

/// Parse an object literal: a JSON-style list of two-element interval lists,
/// e.g. "[[1,1],[2,3]]"; "[]" is the unit object.  Throws
/// std::invalid_argument on syntax errors, BoundsError on invalid intervals.
[[nodiscard]] HallObject parse_hall_object(int n, const std::string& text);

/// Render an object in the grammar accepted by `parse_hall_object`.
[[nodiscard]] std::string hall_object_to_string(const HallObject& o);

}  // namespace skmv
