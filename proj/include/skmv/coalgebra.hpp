#pragma once

// The string-generator coalgebra: generators labeled by Dynkin intervals
// [a,b] (coordinate functions x_{a,b+1}), commutative monomials in them, and
// the comultiplication extended multiplicatively with integer coefficients.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "skmv/paths.hpp"
#include "skmv/weights.hpp"

namespace skmv {

/// A string generator: support interval [a,b] inside [1,n], corresponding to
/// the coordinate function x_{a,b+1} and to the fundamental path
/// ω_a − ω_{a−1} − ω_{b+1} (with ω_0 = ω_{n+1} = 0).
struct StringGen {
  int n = 0;
  int a = 0;
  int b = 0;

  friend bool operator==(const StringGen&, const StringGen&) = default;
  friend auto operator<=>(const StringGen&, const StringGen&) = default;
};

/// Build a generator; throws BoundsError unless 1 <= a <= b <= n.
[[nodiscard]] StringGen string_gen(int n, int a, int b);

/// The fundamental path realizing a generator.
[[nodiscard]] FundamentalPath string_path(const StringGen& g);

/// Matrix label (i, j) of a generator: i = a, j = b + 1.
[[nodiscard]] std::pair<int, int> gen_label(const StringGen& g);

/// A commutative monomial in string generators: a sorted multiset of support
/// intervals.  The empty monomial is the unit 1.
struct Monomial {
  int n = 0;
  std::vector<std::pair<int, int>> gens;  ///< sorted support intervals (a,b)

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Build a monomial from support intervals (validated and sorted).
[[nodiscard]] Monomial monomial(int n, std::vector<std::pair<int, int>> supports);

/// Unit monomial of rank n.
[[nodiscard]] Monomial unit_monomial(int n);

/// Product of two monomials (multiset union).
[[nodiscard]] Monomial mul(const Monomial& x, const Monomial& y);

/// Total weight: the sum of the generator path weights.
[[nodiscard]] Weight weight_of(const Monomial& m);

/// An integer combination of elementary tensors of monomials; no zero
/// coefficients are stored.
struct TensorPoly {
  int n = 0;
  std::map<std::pair<Monomial, Monomial>, long long> terms;

  friend bool operator==(const TensorPoly&, const TensorPoly&) = default;
};

/// Tensor with a single term.
[[nodiscard]] TensorPoly tensor_term(const Monomial& left, const Monomial& right,
                                     long long coeff);

/// Sum and product of tensor polynomials (componentwise monomial product,
/// coefficients collected, zeros erased).
[[nodiscard]] TensorPoly tp_add(const TensorPoly& x, const TensorPoly& y);
[[nodiscard]] TensorPoly tp_mul(const TensorPoly& x, const TensorPoly& y);

/// Comultiplication of a generator with label (i, j):
/// sum over k = i..j of x_{i,k} ⊗ x_{k,j}, where x_{t,t} = 1.
[[nodiscard]] TensorPoly delta_gen(const StringGen& g);

/// Comultiplication of a monomial: the product of its generators' images;
/// delta(1) = 1 ⊗ 1.
[[nodiscard]] TensorPoly delta(const Monomial& m);

/// Parse a monomial literal: either "1" or `x[i,j]` tokens joined by '*'
/// (whitespace ignored), with 1 <= i < j <= n+1.  Throws
/// std::invalid_argument on syntax errors, BoundsError on out-of-range
/// labels.
[[nodiscard]] Monomial parse_monomial(int n, const std::string& text);

/// Render a monomial in the grammar accepted by `parse_monomial`.
[[nodiscard]] std::string monomial_to_string(const Monomial& m);

}  // namespace skmv
