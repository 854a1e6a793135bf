#include "skmv/cluster.hpp"

#include <algorithm>
#include <string>

namespace skmv {

namespace {

void check_cluster_rank(int n) {
  if (n < 2) throw BoundsError("cluster seed requires rank >= 2, got " + std::to_string(n));
}

int word_length(int n) { return n * (n + 1) / 2; }

}  // namespace

Weight EdgeLabel::weight(int n) const {
  if (frozen()) return fundamental_weight(n, k);
  return fundamental_weight(n, j) - fundamental_weight(n, k);
}

std::vector<int> standard_word(int n) {
  std::vector<int> word;
  word.reserve(word_length(n));
  for (int block = n; block >= 1; --block) {
    for (int i = 1; i <= block; ++i) word.push_back(i);
  }
  return word;
}

std::vector<SeedIndex> seed_indices(int n) {
  check_cluster_rank(n);
  const int N = word_length(n);
  std::vector<SeedIndex> out;
  out.reserve(n + N);
  for (int k = -n; k <= -1; ++k) out.push_back(SeedIndex{k, -k, 0, false});
  const std::vector<int> word = standard_word(n);
  for (int k = 1; k <= N; ++k) out.push_back(SeedIndex{k, word[k - 1], 0, false});

  // kplus: the next position in list order carrying the same letter.
  const int total = static_cast<int>(out.size());
  for (int a = 0; a < total; ++a) {
    out[a].kplus = N + 1;
    for (int b = a + 1; b < total; ++b) {
      if (out[b].letter == out[a].letter) {
        out[a].kplus = out[b].k;
        break;
      }
    }
    out[a].exchangeable = out[a].k >= 1 && out[a].kplus <= N;
  }
  return out;
}

std::vector<int> exchangeable_positions(int n) {
  std::vector<int> out;
  for (const SeedIndex& s : seed_indices(n)) {
    if (s.exchangeable) out.push_back(s.k);
  }
  return out;
}

std::vector<EdgeLabel> edge_set(int n) {
  std::vector<EdgeLabel> out;
  for (int i = 1; i <= n; ++i) out.push_back(EdgeLabel{0, i});
  for (int j = 1; j <= n; ++j) {
    for (int k = j + 1; k <= n; ++k) out.push_back(EdgeLabel{j, k});
  }
  return out;
}

EdgeLabel beta(int n, int k) {
  check_cluster_rank(n);
  const int N = word_length(n);
  if (k == 0 || k < -n || k > N) {
    throw BoundsError("seed position " + std::to_string(k) + " outside [-" +
                      std::to_string(n) + ",-1] u [1," + std::to_string(N) + "]");
  }
  if (k < 0) return EdgeLabel{0, n + 1 + k};

  const std::vector<SeedIndex> idx = seed_indices(n);
  auto at = [&](int pos) -> const SeedIndex& {
    return idx[pos < 0 ? pos + n : n + pos - 1];
  };
  const SeedIndex& sk = at(k);
  if (!sk.exchangeable) {
    throw BoundsError("seed position " + std::to_string(k) + " is not exchangeable");
  }
  int t = 0;
  for (int h = k + 1; h <= N; ++h) {
    if (!at(h).exchangeable) {
      t = h;
      break;
    }
  }
  // Every positive suffix of the word ends in a non-exchangeable position,
  // so t is always found for an exchangeable k.
  const int lt = at(t).letter;
  return EdgeLabel{lt - sk.letter, lt};
}

SeedQuiver seed_quiver(int n, bool restricted) {
  const std::vector<SeedIndex> idx = seed_indices(n);
  const int total = static_cast<int>(idx.size());
  auto keep = [&](const SeedIndex& s) {
    return !restricted || s.k < 0 || s.exchangeable;
  };
  SeedQuiver q;
  for (int a = 0; a < total; ++a) {
    for (int b = a + 1; b < total; ++b) {
      const SeedIndex& sk = idx[a];
      const SeedIndex& sl = idx[b];
      if (!sk.exchangeable && !sl.exchangeable) continue;
      if (!keep(sk) || !keep(sl)) continue;
      if (sk.kplus == sl.k) q.forward.emplace_back(sk.k, sl.k);
      if (sl.k < sk.kplus && sk.kplus < sl.kplus &&
          std::abs(sk.letter - sl.letter) == 1) {
        q.backward.emplace_back(sl.k, sk.k);
      }
    }
  }
  return q;
}

namespace {

std::vector<IntVec> zero_matrix(int size) {
  return std::vector<IntVec>(size, IntVec(size, 0));
}

}  // namespace

std::vector<IntVec> exchange_matrix(int n) {
  check_cluster_rank(n);
  const std::vector<EdgeLabel> edges = edge_set(n);
  std::map<EdgeLabel, int> index;
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) index[edges[i]] = i;
  std::vector<IntVec> b = zero_matrix(static_cast<int>(edges.size()));
  auto add = [&](EdgeLabel s, EdgeLabel t, long long val) {
    b[index.at(s)][index.at(t)] += val;
    b[index.at(t)][index.at(s)] -= val;
  };
  for (int i = 1; i <= n - 1; ++i) add(EdgeLabel{0, i}, EdgeLabel{i, n}, 1);
  for (int j = 1; j <= n; ++j) {
    for (int k = j + 2; k <= n; ++k) {
      add(EdgeLabel{j, k}, EdgeLabel{j, k - 1}, 1);
      add(EdgeLabel{j, k}, EdgeLabel{j + 1, k}, -1);
    }
  }
  return b;
}

std::vector<IntVec> exchange_matrix_from_quiver(int n) {
  check_cluster_rank(n);
  const std::vector<EdgeLabel> edges = edge_set(n);
  std::map<EdgeLabel, int> index;
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) index[edges[i]] = i;
  std::vector<IntVec> b = zero_matrix(static_cast<int>(edges.size()));
  const SeedQuiver q = seed_quiver(n, /*restricted=*/true);
  for (const auto& [l, k] : q.backward) {
    const int row = index.at(beta(n, k));
    const int col = index.at(beta(n, l));
    b[row][col] += 1;
    b[col][row] -= 1;
  }
  return b;
}

std::map<EdgeLabel, LatticePolytope> seed_polytopes(int n) {
  check_cluster_rank(n);
  std::map<EdgeLabel, LatticePolytope> out;
  for (const EdgeLabel& e : edge_set(n)) {
    out[e] = pol(make_path(n, {e.weight(n)}));
  }
  return out;
}

}  // namespace skmv
