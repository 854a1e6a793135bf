#include "skmv/polytopes.hpp"

#include <algorithm>
#include <queue>
#include <string>
#include <unordered_set>

#include <boost/multiprecision/cpp_int.hpp>

namespace skmv {

namespace {

using Rational = boost::multiprecision::cpp_rational;

/// Exact feasibility test for { lambda >= 0 : sum lambda_c * pts[c] = target,
/// sum lambda_c = 1 } via a phase-1 simplex over rationals with Bland's rule
/// (anti-cycling, guaranteed termination).
bool in_convex_hull(const IntVec& target, const std::vector<const IntVec*>& pts) {
  const int m = static_cast<int>(pts.size());
  if (m == 0) return false;
  const int n = static_cast<int>(target.size());
  const int rows = n + 1;           // n coordinate equations + the affine one
  const int cols = m + rows + 1;    // real vars, artificial vars, rhs

  std::vector<std::vector<Rational>> t(rows, std::vector<Rational>(cols));
  for (int r = 0; r < rows; ++r) {
    const long long rhs = r < n ? target[r] : 1;
    const bool flip = rhs < 0;
    for (int c = 0; c < m; ++c) {
      const long long a = r < n ? (*pts[c])[r] : 1;
      t[r][c] = flip ? -a : a;
    }
    t[r][m + r] = 1;
    t[r][cols - 1] = flip ? -rhs : rhs;
  }
  std::vector<int> basis(rows);
  for (int r = 0; r < rows; ++r) basis[r] = m + r;

  // Reduced costs for minimizing the artificial sum, with the artificial
  // basis already canonicalized (their reduced costs are zero).
  std::vector<Rational> obj(cols);
  for (int c = 0; c < m; ++c) {
    Rational s = 0;
    for (int r = 0; r < rows; ++r) s += t[r][c];
    obj[c] = s;
  }
  {
    Rational s = 0;
    for (int r = 0; r < rows; ++r) s += t[r][cols - 1];
    obj[cols - 1] = s;
  }

  while (true) {
    int enter = -1;
    for (int c = 0; c < cols - 1; ++c) {
      if (obj[c] > 0) {
        enter = c;
        break;
      }
    }
    if (enter < 0) break;
    int pivot_row = -1;
    Rational best;
    for (int r = 0; r < rows; ++r) {
      if (t[r][enter] > 0) {
        Rational ratio = t[r][cols - 1] / t[r][enter];
        if (pivot_row < 0 || ratio < best ||
            (ratio == best && basis[r] < basis[pivot_row])) {
          pivot_row = r;
          best = ratio;
        }
      }
    }
    if (pivot_row < 0) break;  // cannot happen in phase 1; defensive
    const Rational piv = t[pivot_row][enter];
    for (auto& x : t[pivot_row]) x /= piv;
    for (int r = 0; r < rows; ++r) {
      if (r == pivot_row) continue;
      const Rational f = t[r][enter];
      if (f == 0) continue;
      for (int c = 0; c < cols; ++c) t[r][c] -= f * t[pivot_row][c];
    }
    const Rational f = obj[enter];
    if (f != 0) {
      for (int c = 0; c < cols; ++c) obj[c] -= f * t[pivot_row][c];
    }
    basis[pivot_row] = enter;
  }
  return obj[cols - 1] == 0;
}

/// Exact extreme-point filter.  Two sound accelerations precede the simplex:
/// points that are midpoints of two other input points are discarded up
/// front, and points that are the unique maximizer of some {-1,0,1} direction
/// are accepted without a feasibility run.  A single shrinking pass is valid
/// because the candidate set always contains every true extreme point.
std::vector<IntVec> extreme_points(int n, std::vector<IntVec> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const int m = static_cast<int>(pts.size());
  if (m <= 2) return pts;

  const std::set<IntVec> all(pts.begin(), pts.end());
  std::vector<char> alive(m, 1);
  std::vector<char> confirmed(m, 0);

  for (int k = 0; k < m; ++k) {
    IntVec r(n);
    for (const IntVec& q : pts) {
      if (q == pts[k]) continue;
      for (int c = 0; c < n; ++c) r[c] = 2 * pts[k][c] - q[c];
      if (r != pts[k] && all.count(r)) {
        alive[k] = 0;
        break;
      }
    }
  }

  if (n <= 7) {
    long long total = 1;
    for (int c = 0; c < n; ++c) total *= 3;
    IntVec dir(n);
    for (long long code = 1; code < total; ++code) {
      long long rem = code;
      for (int c = 0; c < n; ++c) {
        dir[c] = rem % 3 - 1;
        rem /= 3;
      }
      long long best = 0;
      int arg = -1, count = 0;
      for (int k = 0; k < m; ++k) {
        if (!alive[k]) continue;
        long long dot = 0;
        for (int c = 0; c < n; ++c) dot += dir[c] * pts[k][c];
        if (arg < 0 || dot > best) {
          best = dot;
          arg = k;
          count = 1;
        } else if (dot == best) {
          ++count;
        }
      }
      if (count == 1) confirmed[arg] = 1;
    }
  }

  for (int k = 0; k < m; ++k) {
    if (!alive[k] || confirmed[k]) continue;
    std::vector<const IntVec*> others;
    others.reserve(m);
    for (int l = 0; l < m; ++l) {
      if (alive[l] && l != k) others.push_back(&pts[l]);
    }
    if (in_convex_hull(pts[k], others)) alive[k] = 0;
  }

  std::vector<IntVec> out;
  for (int k = 0; k < m; ++k) {
    if (alive[k]) out.push_back(pts[k]);
  }
  return out;
}

/// Componentwise minimum of a nonempty point list.
IntVec componentwise_min(int n, const std::vector<IntVec>& pts) {
  IntVec mins = pts.front();
  for (const IntVec& p : pts) {
    for (int c = 0; c < n; ++c) mins[c] = std::min(mins[c], p[c]);
  }
  return mins;
}

}  // namespace

LatticePolytope hull(int n, const std::vector<IntVec>& points) {
  if (n < 1) throw BoundsError("rank must be at least 1, got " + std::to_string(n));
  if (points.empty()) throw BoundsError("hull of an empty point set");
  for (const IntVec& p : points) {
    if (static_cast<int>(p.size()) != n) {
      throw BoundsError("point dimension does not match rank " + std::to_string(n));
    }
  }
  std::vector<IntVec> vertices = extreme_points(n, points);
  const IntVec mins = componentwise_min(n, vertices);
  if (std::find(vertices.begin(), vertices.end(), mins) == vertices.end()) {
    throw AmbiguousMinimum("no input point attains the componentwise minimum");
  }
  for (IntVec& v : vertices) {
    for (int c = 0; c < n; ++c) v[c] -= mins[c];
  }
  std::sort(vertices.begin(), vertices.end());
  LatticePolytope out;
  out.n = n;
  out.vertices = std::move(vertices);
  return out;
}

std::vector<IntVec> lowering_closure_points(const SkeletonPath& p) {
  const int n = p.n;
  // Keys are full factor sequences: distinct states may share a weight.
  // Factor coordinates always lie in {-1,0,1}, so one byte per coordinate.
  auto key = [n](const SkeletonPath& s) {
    std::string k;
    k.reserve(s.factors.size() * static_cast<size_t>(n));
    for (const auto& f : s.factors) {
      for (long long c : f.weight.coords) k.push_back(static_cast<char>(100 + c));
    }
    return k;
  };

  std::unordered_set<std::string> seen;
  std::queue<SkeletonPath> todo;
  std::vector<Weight> weights;
  seen.insert(key(p));
  weights.push_back(weight_of(p));
  todo.push(p);
  while (!todo.empty()) {
    SkeletonPath cur = std::move(todo.front());
    todo.pop();
    for (int i = 1; i <= n; ++i) {
      if (auto next = lower_path(cur, i)) {
        if (seen.insert(key(*next)).second) {
          weights.push_back(weight_of(*next));
          todo.push(std::move(*next));
        }
      }
    }
  }

  const Weight top = weights.front();
  std::vector<IntVec> pts;
  pts.reserve(weights.size());
  for (const Weight& w : weights) pts.push_back(to_root_coords(w - top).coords);
  // Shift so the minimal reached weight sits at the origin; it must be an
  // actual reached weight.
  const IntVec mins = componentwise_min(n, pts);
  if (std::find(pts.begin(), pts.end(), mins) == pts.end()) {
    throw AmbiguousMinimum("lowering closure has no minimal reached weight");
  }
  for (IntVec& q : pts) {
    for (int c = 0; c < n; ++c) q[c] -= mins[c];
  }
  return pts;
}

LatticePolytope pol(const SkeletonPath& p) {
  return hull(p.n, lowering_closure_points(p));
}

LatticePolytope minkowski(const LatticePolytope& P, const LatticePolytope& Q) {
  if (P.n != Q.n) {
    throw RankMismatch("Minkowski sum of polytopes of ranks " + std::to_string(P.n) +
                       " and " + std::to_string(Q.n));
  }
  std::vector<IntVec> sums;
  sums.reserve(P.vertices.size() * Q.vertices.size());
  for (const IntVec& a : P.vertices) {
    for (const IntVec& b : Q.vertices) {
      IntVec s(P.n);
      for (int c = 0; c < P.n; ++c) s[c] = a[c] + b[c];
      sums.push_back(std::move(s));
    }
  }
  return hull(P.n, sums);
}

Chain subchain(const FundamentalPath& p) { return chain_below(p); }

LatticePolytope hull_of_vertexset(int n, const std::vector<Weight>& weights) {
  if (weights.empty()) throw BoundsError("hull of an empty weight set");
  std::vector<IntVec> pts;
  pts.reserve(weights.size());
  for (const Weight& w : weights) {
    if (w.n != n) {
      throw RankMismatch("weight rank " + std::to_string(w.n) +
                         " does not match rank " + std::to_string(n));
    }
    pts.push_back(to_root_coords(w - weights.front()).coords);
  }
  return hull(n, pts);
}

std::vector<IntVec> chain_orbit_points(const Chain& c) {
  std::vector<IntVec> pts;
  pts.reserve(c.vertices.size());
  for (const Weight& v : c.vertices) {
    pts.push_back(to_root_coords(v - c.vertices.front()).coords);
  }
  const IntVec mins = componentwise_min(c.n, pts);
  if (std::find(pts.begin(), pts.end(), mins) == pts.end()) {
    throw AmbiguousMinimum("chain has no minimal vertex");
  }
  for (IntVec& q : pts) {
    for (int i = 0; i < c.n; ++i) q[i] -= mins[i];
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

bool is_good(const LatticePolytope& P, const std::vector<IntVec>& orbit_points) {
  const std::set<IntVec> orbit(orbit_points.begin(), orbit_points.end());
  for (const IntVec& v : P.vertices) {
    if (!orbit.count(v)) return false;
  }
  return true;
}

namespace {

void color_dfs(const FundamentalPath& cur, std::vector<int>& colors,
               std::set<std::vector<int>>& out) {
  bool any = false;
  for (int i = 1; i <= cur.weight.n; ++i) {
    if (auto next = lower(cur, i)) {
      any = true;
      colors.push_back(i);
      color_dfs(*next, colors, out);
      colors.pop_back();
    }
  }
  if (!any) out.insert(colors);
}

}  // namespace

std::set<std::vector<int>> lowering_color_sequences(const FundamentalPath& p) {
  std::set<std::vector<int>> out;
  std::vector<int> colors;
  color_dfs(p, colors, out);
  return out;
}

LatticePolytope hn_string(int n, int a, int b) {
  if (n < 1) throw BoundsError("rank must be at least 1, got " + std::to_string(n));
  if (a < 1 || a > b || b > n) {
    throw BoundsError("interval [" + std::to_string(a) + "," + std::to_string(b) +
                      "] is not inside [1," + std::to_string(n) + "]");
  }
  std::vector<IntVec> pts;
  pts.push_back(IntVec(n, 0));
  for (int k = a; k <= b; ++k) {
    IntVec s(n, 0);
    for (int c = k; c <= b; ++c) s[c - 1] = 1;
    pts.push_back(std::move(s));
  }
  return hull(n, pts);
}

LatticePolytope point_polytope(int n) {
  return hull(n, {IntVec(n, 0)});
}

LatticePolytope segment_polytope(int n, int i) {
  return hull(n, {IntVec(n, 0), simple_root(n, i).coords});
}

}  // namespace skmv
