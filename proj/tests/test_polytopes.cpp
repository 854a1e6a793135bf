#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "skmv/errors.hpp"
#include "skmv/paths.hpp"
#include "skmv/polytopes.hpp"
#include "skmv/weights.hpp"

using namespace skmv;

namespace {

Weight wt(int n, IntVec c) { return Weight{n, std::move(c)}; }

LatticePolytope make_poly(int n, std::vector<IntVec> verts) {
  std::sort(verts.begin(), verts.end());
  return LatticePolytope{n, std::move(verts)};
}

long long cross(const IntVec& o, const IntVec& a, const IntVec& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

/// Independent 2-D oracle: monotone-chain convex hull keeping only strict
/// turns, so exactly the extreme points survive.
std::vector<IntVec> hull2d_oracle(std::vector<IntVec> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const size_t m = pts.size();
  if (m <= 2) return pts;
  std::vector<IntVec> h(2 * m);
  size_t k = 0;
  for (size_t i = 0; i < m; ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (size_t i = m - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  std::sort(h.begin(), h.end());
  return h;
}

}  // namespace

TEST_CASE("hull drops interior and collinear points") {
  CHECK(hull(2, {{0, 0}, {2, 0}, {1, 0}}) == make_poly(2, {{0, 0}, {2, 0}}));
  CHECK(hull(2, {{0, 0}}) == point_polytope(2));
  CHECK(hull(2, {{0, 0}, {0, 1}, {1, 1}, {1, 0}, {2, 1}}) ==
        make_poly(2, {{0, 0}, {1, 0}, {2, 1}, {0, 1}}));
  // Translation to the minimum and duplicate removal.
  CHECK(hull(2, {{3, 4}, {3, 4}, {5, 4}}) == make_poly(2, {{0, 0}, {2, 0}}));
  CHECK_THROWS_AS((void)hull(2, {{0, 1}, {1, 0}}), AmbiguousMinimum);
  CHECK_THROWS_AS((void)hull(2, {}), BoundsError);
  CHECK_THROWS_AS((void)hull(2, {{0, 0, 0}}), BoundsError);
}

TEST_CASE("hull agrees with a planar oracle on random clouds") {
  std::mt19937 rng(2026);
  std::uniform_int_distribution<long long> coord(0, 6);
  std::uniform_int_distribution<size_t> count(3, 12);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<IntVec> pts;
    const size_t m = count(rng);
    for (size_t i = 0; i < m; ++i) pts.push_back({coord(rng), coord(rng)});
    const std::vector<IntVec> expected = hull2d_oracle(pts);
    // Translate the oracle output the same way hull does.
    IntVec lo = expected.front();
    for (const auto& p : expected) {
      lo[0] = std::min(lo[0], p[0]);
      lo[1] = std::min(lo[1], p[1]);
    }
    const bool attained =
        std::find(expected.begin(), expected.end(), lo) != expected.end();
    if (!attained) {
      CHECK_THROWS_AS((void)hull(2, pts), AmbiguousMinimum);
      continue;
    }
    std::vector<IntVec> shifted;
    for (const auto& p : expected) shifted.push_back({p[0] - lo[0], p[1] - lo[1]});
    std::sort(shifted.begin(), shifted.end());
    CHECK(hull(2, pts) == LatticePolytope{2, shifted});
  }
}

TEST_CASE("path polytopes of rank two") {
  CHECK(pol(parse_path(2, "w1")) == make_poly(2, {{0, 0}, {0, 1}, {1, 1}}));
  CHECK(pol(parse_path(2, "w2")) == make_poly(2, {{0, 0}, {1, 0}, {1, 1}}));
  CHECK(pol(make_path(2, {wt(2, {0, -1})})) == point_polytope(2));
  CHECK(pol(parse_path(2, "w1, w1-w2")) == make_poly(2, {{0, 0}, {1, 0}, {2, 1}, {0, 1}}));
  CHECK(pol(trivial_path(2)) == point_polytope(2));
}

TEST_CASE("vertex containment in the reachable weight set") {
  for (int n = 2; n <= 4; ++n) {
    for (int j = 1; j <= n; ++j) {
      for (const Weight& v : chain(n, j).vertices) {
        const SkeletonPath p = make_path(n, {v});
        const std::vector<IntVec> reached = lowering_closure_points(p);
        const std::set<IntVec> reached_set(reached.begin(), reached.end());
        const LatticePolytope P = pol(p);
        for (const IntVec& vert : P.vertices) {
          CHECK(reached_set.count(vert) == 1);
        }
      }
    }
  }
}

TEST_CASE("minkowski sums") {
  const LatticePolytope P = pol(parse_path(2, "w1"));
  CHECK(minkowski(P, point_polytope(2)) == P);
  CHECK(minkowski(P, pol(parse_path(2, "w1-w2"))) == pol(parse_path(2, "w1, w1-w2")));
  CHECK(minkowski(segment_polytope(4, 2), segment_polytope(4, 4)) ==
        make_poly(4, {{0, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 1, 0, 1}}));
  CHECK_THROWS_AS((void)minkowski(P, point_polytope(3)), RankMismatch);
}

TEST_CASE("subchains") {
  const Chain tail = subchain(fundamental_path(wt(2, {-1, 1})));
  CHECK(tail.vertices == std::vector<Weight>{wt(2, {-1, 1}), wt(2, {0, -1})});
  CHECK(tail.arrows == std::vector<ChainArrow>{{0, 2, 1}});

  for (int n = 2; n <= 4; ++n) {
    for (int j = 1; j <= n; ++j) {
      const Chain full = chain(n, j);
      CHECK(subchain(fundamental_path(fundamental_weight(n, j))) == full);
      const Chain sink = subchain(fundamental_path(-fundamental_weight(n, n + 1 - j)));
      CHECK(sink.vertices.size() == 1);
      CHECK(sink.arrows.empty());
    }
  }
}

TEST_CASE("hulls of explicit vertex sets") {
  CHECK(hull_of_vertexset(3, {fundamental_weight(3, 2)}) == point_polytope(3));
  for (int n = 2; n <= 4; ++n) {
    for (int j = 1; j <= n; ++j) {
      CHECK(hull_of_vertexset(n, chain(n, j).vertices) ==
            pol(make_path(n, {fundamental_weight(n, j)})));
    }
  }
  CHECK_THROWS_AS(
      (void)hull_of_vertexset(2, {zero_weight(2), fundamental_weight(2, 1)}),
      NotInRootLattice);
}

TEST_CASE("chain and closure agree for fundamental paths") {
  for (int n = 2; n <= 4; ++n) {
    for (int j = 1; j <= n; ++j) {
      for (const Weight& v : chain(n, j).vertices) {
        const FundamentalPath p = fundamental_path(v);
        CHECK(hull_of_vertexset(n, subchain(p).vertices) == pol(make_path(n, {v})));
      }
    }
  }
}

TEST_CASE("goodness") {
  // The two-factor counterexample: its orbit misses the vertex alpha_1.
  const LatticePolytope bad = pol(parse_path(2, "w1, w1-w2"));
  const std::vector<IntVec> orbit{{0, 0}, {0, 1}, {1, 1}, {2, 1}};
  CHECK_FALSE(is_good(bad, orbit));
  CHECK(is_good(point_polytope(2), {{0, 0}}));

  // Fundamental paths are good against their subchain orbits.
  for (int n = 2; n <= 3; ++n) {
    for (int j = 1; j <= n; ++j) {
      for (const Weight& v : chain(n, j).vertices) {
        const FundamentalPath p = fundamental_path(v);
        CHECK(is_good(pol(make_path(n, {v})), chain_orbit_points(subchain(p))));
      }
    }
  }
}

TEST_CASE("distinct nonpoint polytope counts for small rank") {
  for (const auto& [n, expected] : std::vector<std::pair<int, size_t>>{{2, 4}, {3, 11}}) {
    std::set<LatticePolytope> seen;
    for (int j = 1; j <= n; ++j) {
      for (const Weight& v : chain(n, j).vertices) {
        const LatticePolytope P = pol(make_path(n, {v}));
        if (P.vertices.size() > 1) seen.insert(P);
      }
    }
    CHECK(seen.size() == expected);
  }
}

TEST_CASE("lowering color sequences") {
  const auto seqs1 = lowering_color_sequences(fundamental_path(fundamental_weight(2, 1)));
  CHECK(seqs1 == std::set<std::vector<int>>{{1, 2}});

  const auto seqs2 = lowering_color_sequences(fundamental_path(fundamental_weight(3, 2)));
  CHECK(seqs2.count({2, 1, 3, 2}) == 1);
  CHECK(seqs2.count({2, 3, 1, 2}) == 1);

  const auto sink = lowering_color_sequences(fundamental_path(wt(2, {0, -1})));
  CHECK(sink == std::set<std::vector<int>>{{}});

  // All sequences from one starting path share their length and color counts,
  // and those counts are the coordinate drop from top to bottom.
  for (int n = 2; n <= 4; ++n) {
    for (int j = 1; j <= n; ++j) {
      for (const Weight& v : chain(n, j).vertices) {
        const FundamentalPath p = fundamental_path(v);
        const RootVector drop =
            to_root_coords(v - (-fundamental_weight(n, n + 1 - j)));
        std::map<int, long long> expected_counts;
        long long total = 0;
        for (int i = 1; i <= n; ++i) {
          const long long c = drop.coords[static_cast<size_t>(i - 1)];
          if (c > 0) expected_counts[i] = c;
          total += c;
        }
        for (const std::vector<int>& s : lowering_color_sequences(p)) {
          CHECK(static_cast<long long>(s.size()) == total);
          std::map<int, long long> counts;
          for (int color : s) ++counts[color];
          CHECK(counts == expected_counts);
        }
      }
    }
  }
}

TEST_CASE("string polytopes") {
  CHECK(hn_string(2, 1, 2) == make_poly(2, {{0, 0}, {0, 1}, {1, 1}}));
  for (int n = 1; n <= 4; ++n) {
    for (int a = 1; a <= n; ++a) CHECK(hn_string(n, a, a) == segment_polytope(n, a));
  }
  CHECK_THROWS_AS((void)hn_string(3, 2, 1), BoundsError);
  CHECK_THROWS_AS((void)hn_string(3, 0, 2), BoundsError);
  CHECK_THROWS_AS((void)hn_string(3, 1, 4), BoundsError);
}

TEST_CASE("random concatenation props in rank two") {
  // Small pre-check of the Minkowski property ahead of the full sweep.
  std::mt19937 rng(5);
  std::vector<Weight> pool;
  for (int j = 1; j <= 2; ++j) {
    for (const Weight& v : chain(2, j).vertices) pool.push_back(v);
  }
  std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
  for (int trial = 0; trial < 40; ++trial) {
    const SkeletonPath p = make_path(2, {pool[pick(rng)], pool[pick(rng)]});
    const SkeletonPath q = make_path(2, {pool[pick(rng)]});
    CHECK(pol(concat(p, q)) == minkowski(pol(p), pol(q)));
    CHECK(pol(concat(p, q)) == pol(concat(q, p)));
  }
}
