#include "skmv/paths.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace skmv {

// ---------------------------------------------------------------------------
// Fundamental paths
// ---------------------------------------------------------------------------

std::optional<int> fundamental_level(const Weight& v) {
  const int n = v.n;
  for (int tail = 0; tail <= 1; ++tail) {
    std::vector<long long> chi(n + 2, 0);
    chi[n + 1] = tail;
    bool ok = true;
    for (int i = n; i >= 1; --i) {
      chi[i] = chi[i + 1] + v.coords[i - 1];
      if (chi[i] < 0 || chi[i] > 1) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    long long ones = 0;
    for (int i = 1; i <= n + 1; ++i) ones += chi[i];
    if (ones > 0 && ones < n + 1) return static_cast<int>(ones);
  }
  return std::nullopt;
}

FundamentalPath fundamental_path(const Weight& v) {
  const auto level = fundamental_level(v);
  if (!level) {
    throw NotFundamental("weight " + weight_to_string(v) +
                         " is not an extremal weight of a fundamental representation");
  }
  return FundamentalPath{v, *level};
}

std::optional<FundamentalPath> lower(const FundamentalPath& p, int i) {
  if (pairing(p.weight, i) != 1) return std::nullopt;
  return FundamentalPath{p.weight - simple_root_weight(p.weight.n, i), p.level};
}

std::optional<FundamentalPath> raise(const FundamentalPath& p, int i) {
  if (pairing(p.weight, i) != -1) return std::nullopt;
  return FundamentalPath{p.weight + simple_root_weight(p.weight.n, i), p.level};
}

// ---------------------------------------------------------------------------
// Chains
// ---------------------------------------------------------------------------

Chain chain_below(const FundamentalPath& p) {
  const int n = p.weight.n;

  // Breadth-first closure under lowering moves.
  std::vector<Weight> reached;
  std::map<Weight, int> seen;
  std::queue<Weight> todo;
  seen[p.weight] = 0;
  reached.push_back(p.weight);
  todo.push(p.weight);
  while (!todo.empty()) {
    const Weight v = todo.front();
    todo.pop();
    const FundamentalPath cur{v, p.level};
    for (int i = 1; i <= n; ++i) {
      if (auto next = lower(cur, i)) {
        if (seen.emplace(next->weight, 0).second) {
          reached.push_back(next->weight);
          todo.push(next->weight);
        }
      }
    }
  }

  // Canonical vertex order: height below the source, then lexicographic.
  auto height = [&](const Weight& v) -> long long {
    const RootVector d = to_root_coords(p.weight - v);
    return std::accumulate(d.coords.begin(), d.coords.end(), 0LL);
  };
  std::sort(reached.begin(), reached.end(), [&](const Weight& a, const Weight& b) {
    const long long ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a.coords < b.coords;
  });
  std::map<Weight, int> index;
  for (int k = 0; k < static_cast<int>(reached.size()); ++k) index[reached[k]] = k;

  Chain c;
  c.n = n;
  c.level = p.level;
  c.vertices = reached;
  for (int k = 0; k < static_cast<int>(reached.size()); ++k) {
    const FundamentalPath cur{reached[k], p.level};
    for (int i = 1; i <= n; ++i) {
      if (auto next = lower(cur, i)) {
        c.arrows.push_back(ChainArrow{k, i, index.at(next->weight)});
      }
    }
  }
  return c;
}

Chain chain(int n, int j) {
  return chain_below(fundamental_path(fundamental_weight(n, j)));
}

// ---------------------------------------------------------------------------
// Concatenations
// ---------------------------------------------------------------------------

SkeletonPath trivial_path(int n) {
  if (n < 1) throw BoundsError("rank must be at least 1, got " + std::to_string(n));
  return SkeletonPath{n, {}};
}

SkeletonPath make_path(int n, const std::vector<Weight>& factors) {
  SkeletonPath p = trivial_path(n);
  for (const Weight& w : factors) {
    if (w.n != n) {
      throw RankMismatch("factor rank " + std::to_string(w.n) +
                         " does not match path rank " + std::to_string(n));
    }
    p.factors.push_back(fundamental_path(w));
  }
  return p;
}

SkeletonPath concat(const SkeletonPath& p, const SkeletonPath& q) {
  if (p.n != q.n) {
    throw RankMismatch("concatenating paths of ranks " + std::to_string(p.n) + " and " +
                       std::to_string(q.n));
  }
  SkeletonPath out = p;
  out.factors.insert(out.factors.end(), q.factors.begin(), q.factors.end());
  return out;
}

Weight weight_of(const SkeletonPath& p) {
  Weight total = zero_weight(p.n);
  for (const auto& f : p.factors) total = total + f.weight;
  return total;
}

std::optional<SkeletonPath> lower_path(const SkeletonPath& p, int i) {
  for (size_t k = 0; k < p.factors.size(); ++k) {
    if (pairing(p.factors[k].weight, i) > 0) {
      SkeletonPath out = p;
      auto lowered = lower(p.factors[k], i);
      if (!lowered) return std::nullopt;  // unreachable: pairing 1 on fundamental paths
      out.factors[k] = *lowered;
      return out;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Text grammar
// ---------------------------------------------------------------------------

namespace {

Weight parse_factor(int n, const std::string& text) {
  Weight v = zero_weight(n);
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos == text.size()) throw std::invalid_argument("empty path factor");
  bool first = true;
  while (pos < text.size()) {
    int sign = 1;
    if (text[pos] == '+') {
      ++pos;
    } else if (text[pos] == '-') {
      sign = -1;
      ++pos;
    } else if (!first) {
      throw std::invalid_argument("expected '+' or '-' in factor \"" + text + "\"");
    }
    skip_ws();
    if (pos >= text.size() || text[pos] != 'w') {
      throw std::invalid_argument("expected token w<i> in factor \"" + text + "\"");
    }
    ++pos;
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) {
      throw std::invalid_argument("expected index after 'w' in factor \"" + text + "\"");
    }
    const int i = std::stoi(text.substr(start, pos - start));
    if (i < 1 || i > n) {
      throw BoundsError("token w" + std::to_string(i) + " outside rank " + std::to_string(n));
    }
    v.coords[i - 1] += sign;
    first = false;
    skip_ws();
  }
  return v;
}

}  // namespace

SkeletonPath parse_path(int n, const std::string& text) {
  const bool blank = std::all_of(text.begin(), text.end(), [](unsigned char c) {
    return std::isspace(c);
  });
  if (blank) return trivial_path(n);

  std::vector<Weight> factors;
  size_t begin = 0;
  while (true) {
    const size_t comma = text.find(',', begin);
    const std::string piece =
        comma == std::string::npos ? text.substr(begin) : text.substr(begin, comma - begin);
    factors.push_back(parse_factor(n, piece));
    if (comma == std::string::npos) break;
    begin = comma + 1;
  }
  return make_path(n, factors);
}

std::string path_to_string(const SkeletonPath& p) {
  std::ostringstream os;
  for (size_t k = 0; k < p.factors.size(); ++k) {
    if (k > 0) os << ", ";
    os << weight_to_string(p.factors[k].weight);
  }
  return os.str();
}

}  // namespace skmv
