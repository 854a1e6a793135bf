#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "skmv/errors.hpp"
#include "skmv/paths.hpp"
#include "skmv/weights.hpp"

using namespace skmv;

namespace {

Weight wt(int n, IntVec c) { return Weight{n, std::move(c)}; }

long long binomial(int m, int k) {
  long long r = 1;
  for (int t = 1; t <= k; ++t) r = r * (m - k + t) / t;
  return r;
}

}  // namespace

TEST_CASE("fundamental level detection") {
  CHECK(fundamental_level(fundamental_weight(3, 2)) == 2);
  CHECK(fundamental_level(wt(3, {1, -1, 1})) == 2);  // w1+w3-w2
  CHECK_FALSE(fundamental_level(zero_weight(3)).has_value());
  CHECK_FALSE(fundamental_level(wt(2, {1, 1})).has_value());
  CHECK_FALSE(fundamental_level(wt(2, {2, 0})).has_value());
  CHECK_THROWS_AS((void)fundamental_path(zero_weight(2)), NotFundamental);
}

TEST_CASE("lower and raise moves") {
  const FundamentalPath w1 = fundamental_path(fundamental_weight(2, 1));
  const auto down1 = lower(w1, 1);
  REQUIRE(down1.has_value());
  CHECK(down1->weight == wt(2, {-1, 1}));  // w2-w1
  CHECK(down1->level == 1);

  const auto down2 = lower(*down1, 2);
  REQUIRE(down2.has_value());
  CHECK(down2->weight == wt(2, {0, -1}));  // -w2

  CHECK_FALSE(lower(fundamental_path(fundamental_weight(2, 2)), 1).has_value());

  const auto up = raise(*down2, 2);
  REQUIRE(up.has_value());
  CHECK(up->weight == wt(2, {-1, 1}));
  CHECK_FALSE(raise(w1, 1).has_value());

  // raise is the two-sided inverse of lower wherever defined (exhaustive, n <= 5).
  for (int n = 1; n <= 5; ++n) {
    for (int j = 1; j <= n; ++j) {
      for (const Weight& v : chain(n, j).vertices) {
        const FundamentalPath p = fundamental_path(v);
        for (int i = 1; i <= n; ++i) {
          const long long a = pairing(v, i);
          CHECK(lower(p, i).has_value() == (a == 1));
          CHECK(raise(p, i).has_value() == (a == -1));
          if (const auto q = lower(p, i)) CHECK(raise(*q, i) == p);
          if (const auto q = raise(p, i)) CHECK(lower(*q, i) == p);
        }
      }
    }
  }
}

TEST_CASE("chain fixtures of small rank") {
  const Chain q1 = chain(2, 1);
  REQUIRE(q1.vertices.size() == 3);
  CHECK(q1.vertices == std::vector<Weight>{wt(2, {1, 0}), wt(2, {-1, 1}), wt(2, {0, -1})});
  CHECK(q1.arrows == std::vector<ChainArrow>{{0, 1, 1}, {1, 2, 2}});

  const Chain q2 = chain(2, 2);
  CHECK(q2.vertices == std::vector<Weight>{wt(2, {0, 1}), wt(2, {1, -1}), wt(2, {-1, 0})});
  CHECK(q2.arrows == std::vector<ChainArrow>{{0, 2, 1}, {1, 1, 2}});

  // Rank-3 middle chain: the diamond through w3-w1 and w1-w3.
  const Chain d = chain(3, 2);
  CHECK(d.vertices == std::vector<Weight>{
                          wt(3, {0, 1, 0}),    // w2
                          wt(3, {1, -1, 1}),   // w1+w3-w2
                          wt(3, {-1, 0, 1}),   // w3-w1
                          wt(3, {1, 0, -1}),   // w1-w3
                          wt(3, {-1, 1, -1}),  // w2-w1-w3
                          wt(3, {0, -1, 0}),   // -w2
                      });
  CHECK(d.arrows == std::vector<ChainArrow>{
                        {0, 2, 1}, {1, 1, 2}, {1, 3, 3}, {2, 3, 4}, {3, 1, 4}, {4, 2, 5}});

  // Rank-4 outer chain: a 5-vertex path colored 1,2,3,4.
  const Chain p1 = chain(4, 1);
  REQUIRE(p1.vertices.size() == 5);
  CHECK(p1.arrows == std::vector<ChainArrow>{{0, 1, 1}, {1, 2, 2}, {2, 3, 3}, {3, 4, 4}});
  CHECK(p1.vertices.front() == fundamental_weight(4, 1));
  CHECK(p1.vertices.back() == -fundamental_weight(4, 4));
}

TEST_CASE("chain sizes, sources, sinks, maximal path lengths") {
  for (int n = 1; n <= 6; ++n) {
    for (int j = 1; j <= n; ++j) {
      const Chain c = chain(n, j);
      CHECK(static_cast<long long>(c.vertices.size()) == binomial(n + 1, j));
    }
  }

  for (int n = 1; n <= 4; ++n) {
    for (int j = 1; j <= n; ++j) {
      const Chain c = chain(n, j);
      std::vector<int> indeg(c.vertices.size(), 0);
      std::vector<int> outdeg(c.vertices.size(), 0);
      std::map<int, std::vector<int>> next;
      for (const ChainArrow& a : c.arrows) {
        ++outdeg[static_cast<size_t>(a.from)];
        ++indeg[static_cast<size_t>(a.to)];
        next[a.from].push_back(a.to);
      }
      int sources = 0;
      int sinks = 0;
      for (size_t v = 0; v < c.vertices.size(); ++v) {
        if (indeg[v] == 0) {
          ++sources;
          CHECK(c.vertices[v] == fundamental_weight(n, j));
        }
        if (outdeg[v] == 0) {
          ++sinks;
          CHECK(c.vertices[v] == -fundamental_weight(n, n + 1 - j));
        }
      }
      CHECK(sources == 1);
      CHECK(sinks == 1);

      // Every maximal directed path from the source has length j*(n+1-j).
      const int want = j * (n + 1 - j);
      std::function<void(int, int)> dfs = [&](int v, int depth) {
        auto it = next.find(v);
        if (it == next.end()) {
          CHECK(depth == want);
          return;
        }
        for (int u : it->second) dfs(u, depth + 1);
      };
      dfs(0, 0);
    }
  }
}

TEST_CASE("the edge weights and their negatives are fundamental") {
  for (int n = 1; n <= 5; ++n) {
    std::vector<Weight> edge_weights;
    for (int i = 1; i <= n; ++i) edge_weights.push_back(fundamental_weight(n, i));
    for (int j = 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) {
        edge_weights.push_back(fundamental_weight(n, j) - fundamental_weight(n, k));
      }
    }
    for (const Weight& v : edge_weights) {
      CHECK(fundamental_level(v).has_value());
      CHECK(fundamental_level(-v).has_value());
    }
  }
}

TEST_CASE("concatenations and their lowering operator") {
  const SkeletonPath p = make_path(2, {wt(2, {1, 0}), wt(2, {1, -1})});
  CHECK(weight_of(p) == wt(2, {2, -1}));
  CHECK(weight_of(trivial_path(2)) == zero_weight(2));

  const auto low1 = lower_path(p, 1);
  REQUIRE(low1.has_value());
  CHECK(low1->factors[0].weight == wt(2, {-1, 1}));
  CHECK(low1->factors[1].weight == wt(2, {1, -1}));
  CHECK(weight_of(*low1) == weight_of(p) - simple_root_weight(2, 1));

  CHECK_FALSE(lower_path(p, 2).has_value());
  CHECK_FALSE(lower_path(trivial_path(2), 1).has_value());

  const SkeletonPath a = make_path(2, {wt(2, {1, 0})});
  const SkeletonPath b = make_path(2, {wt(2, {0, 1})});
  CHECK(concat(a, b).factors.size() == 2);
  CHECK(concat(a, trivial_path(2)) == a);
  const SkeletonPath c = make_path(2, {wt(2, {-1, 1})});
  CHECK(concat(concat(a, b), c) == concat(a, concat(b, c)));

  CHECK_THROWS_AS((void)make_path(2, {fundamental_weight(3, 1)}), RankMismatch);
  CHECK_THROWS_AS((void)make_path(2, {zero_weight(2)}), NotFundamental);
}

TEST_CASE("path literal grammar") {
  const SkeletonPath p = parse_path(2, "w1-w2, w2");
  REQUIRE(p.factors.size() == 2);
  CHECK(p.factors[0].weight == wt(2, {1, -1}));
  CHECK(p.factors[1].weight == wt(2, {0, 1}));
  CHECK(path_to_string(p) == "w1-w2, w2");
  CHECK(parse_path(2, path_to_string(p)) == p);

  CHECK(parse_path(3, "  w1 - w2+ w3 ").factors[0].weight == wt(3, {1, -1, 1}));
  CHECK(parse_path(2, "").factors.empty());
  CHECK(parse_path(2, "   ").factors.empty());

  CHECK_THROWS_AS((void)parse_path(2, "w1+w2"), NotFundamental);
  CHECK_THROWS_AS((void)parse_path(2, "w5"), BoundsError);
  CHECK_THROWS_AS((void)parse_path(2, "zz"), std::invalid_argument);
  CHECK_THROWS_AS((void)parse_path(2, "w1,,w2"), std::invalid_argument);

  // Every chain vertex round-trips through the grammar.
  for (int n = 1; n <= 4; ++n) {
    for (int j = 1; j <= n; ++j) {
      for (const Weight& v : chain(n, j).vertices) {
        const SkeletonPath single = make_path(n, {v});
        CHECK(parse_path(n, path_to_string(single)) == single);
      }
    }
  }
}

TEST_CASE("chain below a vertex is the reachable subgraph") {
  const FundamentalPath top = fundamental_path(wt(3, {-1, 0, 1}));  // w3-w1 in Q_2
  const Chain below = chain_below(top);
  CHECK(below.level == 2);
  CHECK(below.vertices == std::vector<Weight>{wt(3, {-1, 0, 1}), wt(3, {-1, 1, -1}),
                                              wt(3, {0, -1, 0})});
  CHECK(below.arrows == std::vector<ChainArrow>{{0, 3, 1}, {1, 2, 2}});
}
