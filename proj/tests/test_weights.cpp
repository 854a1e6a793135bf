#include <doctest.h>

#include <random>

#include "skmv/errors.hpp"
#include "skmv/weights.hpp"

using namespace skmv;

namespace {

Weight wt(int n, IntVec c) { return Weight{n, std::move(c)}; }

Weight random_weight(int n, std::mt19937& rng) {
  std::uniform_int_distribution<long long> dist(-4, 4);
  IntVec c(static_cast<size_t>(n));
  for (auto& x : c) x = dist(rng);
  return Weight{n, std::move(c)};
}

}  // namespace

TEST_CASE("Cartan matrix entries") {
  CHECK(cartan(2) == std::vector<IntVec>{{2, -1}, {-1, 2}});
  CHECK(cartan(1) == std::vector<IntVec>{{2}});
  CHECK(cartan(4)[1][3] == 0);
  CHECK(cartan(4)[2][3] == -1);
}

TEST_CASE("pairing is the omega coordinate") {
  CHECK(pairing(fundamental_weight(2, 1), 1) == 1);
  CHECK(pairing(fundamental_weight(2, 1), 2) == 0);
  CHECK(pairing(wt(2, {2, -1}), 2) == -1);  // alpha_1 against the second coroot
  CHECK_THROWS_AS((void)pairing(fundamental_weight(2, 1), 3), BoundsError);
  CHECK_THROWS_AS((void)pairing(fundamental_weight(2, 1), 0), BoundsError);
}

TEST_CASE("simple reflections") {
  CHECK(simple_reflection(fundamental_weight(2, 1), 1) == wt(2, {-1, 1}));
  const Weight fixed = wt(2, {0, 3});
  CHECK(simple_reflection(fixed, 1) == fixed);

  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    for (int n = 1; n <= 5; ++n) {
      const Weight v = random_weight(n, rng);
      for (int i = 1; i <= n; ++i) {
        CHECK(simple_reflection(simple_reflection(v, i), i) == v);
        CHECK(pairing(simple_reflection(v, i), i) == -pairing(v, i));
        if (i < n) {
          const int j = i + 1;
          const Weight lhs = simple_reflection(
              simple_reflection(simple_reflection(v, i), j), i);
          const Weight rhs = simple_reflection(
              simple_reflection(simple_reflection(v, j), i), j);
          CHECK(lhs == rhs);
        }
      }
    }
  }
}

TEST_CASE("root coordinate conversions") {
  CHECK(to_root_coords(wt(2, {1, 1})).coords == IntVec{1, 1});
  CHECK(to_root_coords(zero_weight(3)).coords == IntVec{0, 0, 0});
  CHECK_THROWS_AS((void)to_root_coords(fundamental_weight(2, 1)), NotInRootLattice);

  for (int n = 1; n <= 5; ++n) {
    for (int i = 1; i <= n; ++i) {
      const RootVector r = to_root_coords(simple_root_weight(n, i));
      IntVec expected(static_cast<size_t>(n), 0);
      expected[static_cast<size_t>(i - 1)] = 1;
      CHECK(r.coords == expected);
      CHECK(from_root_coords(r) == simple_root_weight(n, i));
      CHECK(simple_root_index(simple_root(n, i)) == i);
    }
  }

  // Round trip through epsilon coordinates.
  std::mt19937 rng(11);
  std::uniform_int_distribution<long long> dist(-3, 3);
  for (int trial = 0; trial < 50; ++trial) {
    for (int n = 1; n <= 5; ++n) {
      IntVec c(static_cast<size_t>(n));
      for (auto& x : c) x = dist(rng);
      const RootVector r{n, c};
      const IntVec eps = to_epsilon_coords(r);
      long long sum = 0;
      for (long long e : eps) sum += e;
      CHECK(sum == 0);
      CHECK(from_epsilon_coords(eps) == r);
    }
  }
  CHECK_THROWS_AS((void)from_epsilon_coords(IntVec{1, 0}), BoundsError);
}

TEST_CASE("root pairing against coroots") {
  // <a_i, a_j^vee> is the Cartan entry.
  for (int n = 1; n <= 4; ++n) {
    const auto C = cartan(n);
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        CHECK(root_pairing(simple_root(n, i), simple_root(n, j)) ==
              C[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)]);
      }
    }
  }
}

TEST_CASE("permutation basics") {
  const Permutation id(4);
  CHECK(id.is_identity());
  CHECK(id.length() == 0);

  const Permutation s1 = simple_permutation(3, 1);
  CHECK(s1.image(1) == 2);
  CHECK(s1.image(2) == 1);
  CHECK(s1.image(3) == 3);
  CHECK(s1.length() == 1);
  CHECK(s1.compose(s1).is_identity());

  CHECK_THROWS_AS((void)Permutation::from_images({1, 1, 3}), BoundsError);
  CHECK_THROWS_AS((void)Permutation::from_images({1, 2, 4}), BoundsError);

  // Composition acts as functions: (a ∘ b)(x) = a(b(x)).
  const Permutation s2 = simple_permutation(3, 2);
  const Permutation p = s1.compose(s2);
  CHECK(p.image(3) == 1);  // s2 sends 3 to 2, then s1 sends 2 to 1
  CHECK(p.images() == std::vector<int>{2, 3, 1, 4});
  CHECK(p.inverse().compose(p).is_identity());
}

TEST_CASE("longest elements and Coxeter length") {
  CHECK(longest_element(3).images() == std::vector<int>{4, 3, 2, 1});
  CHECK(longest_element(3).length() == 6);
  CHECK(product_of_simples(3, std::vector<int>{1, 2, 3, 1, 2, 1}) == longest_element(3));

  // Parabolic longest element: block reversals per consecutive run.
  CHECK(longest_parabolic(3, {1, 2, 3}) == longest_element(3));
  CHECK(longest_parabolic(3, {2, 3}).images() == std::vector<int>{1, 4, 3, 2});
  CHECK(longest_parabolic(4, {1, 3}).images() == std::vector<int>{2, 1, 4, 3, 5});
  CHECK(longest_parabolic(3, {}).is_identity());
}

TEST_CASE("permutations act on roots through epsilon coordinates") {
  // s_i(a_i) = -a_i; w_0 sends a_i to -a_{n+1-i}.
  for (int n = 1; n <= 5; ++n) {
    for (int i = 1; i <= n; ++i) {
      const RootVector neg = act_on_root(simple_permutation(n, i), simple_root(n, i));
      IntVec expected(static_cast<size_t>(n), 0);
      expected[static_cast<size_t>(i - 1)] = -1;
      CHECK(neg.coords == expected);

      const RootVector w0img = act_on_root(longest_element(n), simple_root(n, i));
      IntVec mirrored(static_cast<size_t>(n), 0);
      mirrored[static_cast<size_t>(n - i)] = -1;
      CHECK(w0img.coords == mirrored);
    }
  }

  // r(7) of the standard rank-3 word: s_1 s_2 s_3 applied to alpha_1 is alpha_2.
  const Permutation w = product_of_simples(3, std::vector<int>{1, 2, 3});
  CHECK(act_on_root(w, simple_root(3, 1)) == simple_root(3, 2));
}

TEST_CASE("weight rendering") {
  CHECK(weight_to_string(fundamental_weight(3, 2)) == "w2");
  CHECK(weight_to_string(wt(3, {1, -1, 1})) == "w1-w2+w3");
  CHECK(weight_to_string(wt(2, {2, -1})) == "w1+w1-w2");
  CHECK(weight_to_string(zero_weight(2)) == "0");
}
