#include "skmv/galleries.hpp"

#include <algorithm>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace skmv {

namespace {

using Rational = boost::multiprecision::cpp_rational;

void check_positions(size_t word_length, const std::set<int>& positions, const char* what) {
  for (int p : positions) {
    if (p < 1 || p > static_cast<int>(word_length)) {
      throw BoundsError(std::string(what) + " position " + std::to_string(p) +
                        " outside 1.." + std::to_string(word_length));
    }
  }
}

RootVector negate(const RootVector& r) {
  RootVector out = r;
  for (auto& c : out.coords) c = -c;
  return out;
}

/// Incremental exact row-echelon form for rational span membership.
class RationalSpan {
public:
  explicit RationalSpan(int dim) : dim_(dim) {}

  /// Reduce v against the echelon; returns the remainder.
  [[nodiscard]] std::vector<Rational> reduce(const IntVec& v) const {
    std::vector<Rational> x(v.begin(), v.end());
    for (const auto& row : rows_) {
      const int lead = leading(row);
      if (x[lead] != 0) {
        const Rational f = x[lead] / row[lead];
        for (int c = 0; c < dim_; ++c) x[c] -= f * row[c];
      }
    }
    return x;
  }

  [[nodiscard]] bool contains(const IntVec& v) const {
    const auto rem = reduce(v);
    return std::all_of(rem.begin(), rem.end(), [](const Rational& x) { return x == 0; });
  }

  /// Insert v's remainder when nonzero; returns whether the rank grew.
  bool add(const IntVec& v) {
    auto rem = reduce(v);
    for (int c = 0; c < dim_; ++c) {
      if (rem[c] != 0) {
        rows_.push_back(std::move(rem));
        return true;
      }
    }
    return false;
  }

  [[nodiscard]] int rank() const { return static_cast<int>(rows_.size()); }

private:
  [[nodiscard]] int leading(const std::vector<Rational>& row) const {
    for (int c = 0; c < dim_; ++c) {
      if (row[c] != 0) return c;
    }
    return dim_;  // unreachable for stored rows
  }

  int dim_;
  std::vector<std::vector<Rational>> rows_;
};

}  // namespace

bool is_maximal_face(int n, const std::vector<int>& word, const Permutation& pi,
                     const std::set<int>& face) {
  if (pi.degree() != n + 1) {
    throw RankMismatch("permutation degree " + std::to_string(pi.degree()) +
                       " does not match rank " + std::to_string(n));
  }
  check_positions(word.size(), face, "face");
  std::vector<int> remaining;
  for (int l = 1; l <= static_cast<int>(word.size()); ++l) {
    if (!face.count(l)) remaining.push_back(word[l - 1]);
  }
  if (product_of_simples(n, remaining) != pi) return false;
  return static_cast<long long>(remaining.size()) == pi.length();
}

std::vector<RootVector> root_function(const Quadruple& X) {
  std::vector<RootVector> out;
  out.reserve(X.word.size());
  Permutation w(X.n + 1);
  for (int l = 1; l <= static_cast<int>(X.word.size()); ++l) {
    const int letter = X.word[l - 1];
    out.push_back(act_on_root(w, simple_root(X.n, letter)));
    if (!X.face.count(l)) w = w.compose(simple_permutation(X.n, letter));
  }
  return out;
}

FoldedGallery encode_gallery(const Quadruple& X) {
  const std::vector<RootVector> roots = root_function(X);
  FoldedGallery g;
  g.n = X.n;
  g.steps.reserve(roots.size());
  for (int l = 1; l <= static_cast<int>(roots.size()); ++l) {
    const bool folded = X.face.count(l) > 0;
    g.steps.push_back(GalleryStep{folded ? negate(roots[l - 1]) : roots[l - 1], folded});
  }
  return g;
}

Quadruple decode_gallery(const FoldedGallery& g) {
  if (g.n < 1) throw BoundsError("gallery rank must be at least 1");
  Quadruple X;
  X.n = g.n;
  X.pi = Permutation(g.n + 1);
  Permutation w(g.n + 1);
  int traversing = 0;
  for (int l = 1; l <= static_cast<int>(g.steps.size()); ++l) {
    const GalleryStep& step = g.steps[l - 1];
    if (step.root.n != g.n) {
      throw MalformedGallery("step " + std::to_string(l) + " has rank " +
                             std::to_string(step.root.n) + ", expected " +
                             std::to_string(g.n));
    }
    const RootVector unsigned_root = step.folded ? negate(step.root) : step.root;
    const RootVector pulled = act_on_root(w.inverse(), unsigned_root);
    const auto letter = simple_root_index(pulled);
    if (!letter) {
      throw MalformedGallery("step " + std::to_string(l) +
                             " does not pull back to a simple root");
    }
    X.word.push_back(*letter);
    if (step.folded) {
      X.face.insert(l);
    } else {
      w = w.compose(simple_permutation(g.n, *letter));
      ++traversing;
    }
  }
  X.pi = w;
  if (X.pi.length() != traversing) {
    throw MalformedGallery("traversing steps do not form a reduced word");
  }
  return X;
}

std::set<int> flat_of(const Quadruple& X, const std::set<int>& J) {
  check_positions(X.word.size(), J, "span generator");
  const std::vector<RootVector> roots = root_function(X);
  RationalSpan span(X.n);
  for (int j : J) span.add(roots[j - 1].coords);
  std::set<int> flat;
  for (int l = 1; l <= static_cast<int>(roots.size()); ++l) {
    if (span.contains(roots[l - 1].coords)) flat.insert(l);
  }
  return flat;
}

FoldedGallery project(const FoldedGallery& g, const std::set<int>& F) {
  const Quadruple X = decode_gallery(g);
  check_positions(X.word.size(), F, "flat");
  if (flat_of(X, F) != F) {
    throw NotAFlat("position set is not closed under the span of its roots");
  }
  FoldedGallery out;
  out.n = g.n;
  for (int l : F) out.steps.push_back(g.steps[l - 1]);
  return out;
}

std::vector<RootVector> beta_sequence(const Quadruple& X, const std::set<int>& F) {
  check_positions(X.word.size(), F, "flat");
  std::vector<RootVector> out;
  Permutation w(X.n + 1);
  for (int l = 1; l <= static_cast<int>(X.word.size()); ++l) {
    const int letter = X.word[l - 1];
    if (F.count(l)) {
      out.push_back(act_on_root(w, simple_root(X.n, letter)));
    } else if (!X.face.count(l)) {
      w = w.compose(simple_permutation(X.n, letter));
    }
  }
  return out;
}

std::vector<RootVector> beta_simple_roots(const Quadruple& X, const std::set<int>& F) {
  if (flat_of(X, F) != F) {
    throw NotAFlat("position set is not closed under the span of its roots");
  }
  std::vector<RootVector> out;
  for (const RootVector& r : beta_sequence(X, F)) {
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
  }
  return out;
}

CharacterQuiver character_quiver(const Quadruple& X) {
  const std::vector<RootVector> roots = root_function(X);
  std::set<int> letters(X.word.begin(), X.word.end());

  RationalSpan span(X.n);
  int independent = 0;
  for (int i : X.face) {
    if (span.add(roots[i - 1].coords)) ++independent;
  }
  if (independent != static_cast<int>(X.face.size())) {
    throw NotInClassA("face roots are linearly dependent");
  }
  if (X.face.size() != letters.size()) {
    throw NotInClassA("face size " + std::to_string(X.face.size()) +
                      " differs from letter count " + std::to_string(letters.size()));
  }
  if (X.pi != longest_parabolic(X.n, letters)) {
    throw NotInClassA("pi is not the longest element of the letter parabolic");
  }

  CharacterQuiver q;
  q.vertices.assign(X.face.begin(), X.face.end());
  for (int i : X.face) {
    for (int j : X.face) {
      if (i == j) continue;
      const long long pair = root_pairing(roots[i - 1], roots[j - 1]);
      if (static_cast<long long>(i - j) * pair > 0) q.arrows.emplace_back(i, j);
    }
  }
  std::sort(q.arrows.begin(), q.arrows.end());
  return q;
}

}  // namespace skmv
