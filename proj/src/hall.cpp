#include "skmv/hall.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "skmv/cluster.hpp"

#include <json.hpp>

namespace skmv {

namespace {

void check_part(int n, const Interval& p) {
  if (p.first < 1 || p.first > p.second || p.second > n) {
    throw BoundsError("part [" + std::to_string(p.first) + "," + std::to_string(p.second) +
                      "] is not an interval inside [1," + std::to_string(n) + "]");
  }
}

void check_same_rank(int a, int b) {
  if (a != b) {
    throw RankMismatch("operands have ranks " + std::to_string(a) + " and " +
                       std::to_string(b));
  }
}

using Multiset = std::map<Interval, int>;

Multiset to_multiset(const std::vector<Interval>& parts) {
  Multiset m;
  for (const Interval& p : parts) ++m[p];
  return m;
}

bool take(Multiset& m, const Interval& p) {
  auto it = m.find(p);
  if (it == m.end() || it->second == 0) return false;
  --it->second;
  return true;
}

void give(Multiset& m, const Interval& p) { ++m[p]; }

long long remaining(const Multiset& m) {
  long long total = 0;
  for (const auto& [part, count] : m) total += count;
  return total;
}

/// Count assignments: for each part of C (by position) choose a split point;
/// nonempty suffixes must exactly exhaust `subs`, prefixes `quots`.
long long count_assignments(const std::vector<Interval>& c_parts, size_t at, Multiset& subs,
                            Multiset& quots) {
  if (at == c_parts.size()) {
    return remaining(subs) == 0 && remaining(quots) == 0 ? 1 : 0;
  }
  const auto [u, v] = c_parts[at];
  long long total = 0;
  for (int k = u; k <= v + 1; ++k) {
    const bool has_suffix = k <= v;
    const bool has_prefix = k > u;
    const Interval suffix{k, v};
    const Interval prefix{u, k - 1};
    if (has_suffix && !take(subs, suffix)) continue;
    if (has_prefix && !take(quots, prefix)) {
      if (has_suffix) give(subs, suffix);
      continue;
    }
    total += count_assignments(c_parts, at + 1, subs, quots);
    if (has_suffix) give(subs, suffix);
    if (has_prefix) give(quots, prefix);
  }
  return total;
}

/// Enumerate candidate products: match some parts of B to parts of A whose
/// start they extend (b.end + 1 == a.start), merge matched pairs, keep the
/// rest.  Every object with a nonzero coefficient arises this way.
void enumerate_candidates(const HallObject& A, const HallObject& B, size_t at,
                          std::vector<char>& used_b, std::vector<Interval>& acc,
                          std::set<HallObject>& out) {
  if (at == A.parts.size()) {
    std::vector<Interval> parts = acc;
    for (size_t b = 0; b < B.parts.size(); ++b) {
      if (!used_b[b]) parts.push_back(B.parts[b]);
    }
    out.insert(hall_object(A.n, std::move(parts)));
    return;
  }
  const Interval a = A.parts[at];
  // a stays a standalone part.
  acc.push_back(a);
  enumerate_candidates(A, B, at + 1, used_b, acc, out);
  acc.pop_back();
  // a extends some unmatched part of B into one interval.
  for (size_t b = 0; b < B.parts.size(); ++b) {
    if (used_b[b] || B.parts[b].second + 1 != a.first) continue;
    used_b[b] = 1;
    acc.push_back(Interval{B.parts[b].first, a.second});
    enumerate_candidates(A, B, at + 1, used_b, acc, out);
    acc.pop_back();
    used_b[b] = 0;
  }
}

}  // namespace

HallObject hall_object(int n, std::vector<Interval> parts) {
  if (n < 1) throw BoundsError("rank must be at least 1, got " + std::to_string(n));
  for (const Interval& p : parts) check_part(n, p);
  std::sort(parts.begin(), parts.end());
  return HallObject{n, std::move(parts)};
}

bool admissible_sub(const Interval& H, const Interval& J) {
  if (H.first > H.second || J.first > J.second || H.first < J.first || H.second > J.second) {
    throw BoundsError("[" + std::to_string(H.first) + "," + std::to_string(H.second) +
                      "] is not a subinterval of [" + std::to_string(J.first) + "," +
                      std::to_string(J.second) + "]");
  }
  return H.second == J.second;
}

HallElement hall_product(const HallObject& A, const HallObject& B) {
  check_same_rank(A.n, B.n);
  std::set<HallObject> candidates;
  std::vector<char> used_b(B.parts.size(), 0);
  std::vector<Interval> acc;
  enumerate_candidates(A, B, 0, used_b, acc, candidates);

  HallElement out;
  for (const HallObject& c : candidates) {
    Multiset subs = to_multiset(A.parts);
    Multiset quots = to_multiset(B.parts);
    const long long g = count_assignments(c.parts, 0, subs, quots);
    if (g != 0) out[c] = g;
  }
  return out;
}

HallElement hall_add(const HallElement& x, const HallElement& y) {
  HallElement out = x;
  for (const auto& [obj, c] : y) {
    const long long v = (out[obj] += c);
    if (v == 0) out.erase(obj);
  }
  return out;
}

HallElement hall_scale(long long c, const HallElement& x) {
  HallElement out;
  if (c == 0) return out;
  for (const auto& [obj, v] : x) out[obj] = c * v;
  return out;
}

HallElement hall_mul(const HallElement& x, const HallElement& y) {
  HallElement out;
  for (const auto& [xo, xc] : x) {
    for (const auto& [yo, yc] : y) {
      out = hall_add(out, hall_scale(xc * yc, hall_product(xo, yo)));
    }
  }
  return out;
}

HallElement hall_generator(int n, int i) {
  return {{hall_object(n, {{i, i}}), 1}};
}

bool serre_check(int n) {
  if (n < 2) throw BoundsError("Serre check requires rank >= 2, got " + std::to_string(n));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      const HallElement Ei = hall_generator(n, i);
      const HallElement Ej = hall_generator(n, j);
      if (std::abs(i - j) == 1) {
        const HallElement lhs = hall_add(
            hall_add(hall_mul(hall_mul(Ei, Ei), Ej),
                     hall_scale(-2, hall_mul(hall_mul(Ei, Ej), Ei))),
            hall_mul(Ej, hall_mul(Ei, Ei)));
        if (!lhs.empty()) return false;
      } else {
        const HallElement comm =
            hall_add(hall_mul(Ei, Ej), hall_scale(-1, hall_mul(Ej, Ei)));
        if (!comm.empty()) return false;
      }
    }
  }
  return true;
}

std::vector<DualDeltaTerm> dual_delta(int n, const Interval& c) {
  if (n < 1) throw BoundsError("rank must be at least 1, got " + std::to_string(n));
  check_part(n, c);
  const auto [h, j] = c;
  std::vector<DualDeltaTerm> out;
  for (int k = h - 1; k <= j; ++k) {
    DualDeltaTerm term;
    if (k >= h) term.left = Interval{h, k};
    if (k + 1 <= j) term.right = Interval{k + 1, j};
    out.push_back(term);
  }
  return out;
}

TensorPoly dual_delta_as_comult(int n, const Interval& c) {
  TensorPoly out;
  out.n = n;
  for (const DualDeltaTerm& term : dual_delta(n, c)) {
    const Monomial left =
        term.left ? monomial(n, {*term.left}) : unit_monomial(n);
    const Monomial right =
        term.right ? monomial(n, {*term.right}) : unit_monomial(n);
    out = tp_add(out, tensor_term(left, right, 1));
  }
  return out;
}

Quadruple standard_quadruple(int n) {
  if (n < 1) throw BoundsError("rank must be at least 1, got " + std::to_string(n));
  Quadruple X;
  X.n = n;
  for (int i = 1; i <= n; ++i) X.word.push_back(i);
  const std::vector<int> tail = standard_word(n);
  X.word.insert(X.word.end(), tail.begin(), tail.end());
  for (int i = 1; i <= n; ++i) X.face.insert(i);
  X.pi = longest_element(n);
  return X;
}

HallObject parse_hall_object(int n, const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("object literal is not valid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw std::invalid_argument("object literal must be a list");
  std::vector<Interval> parts;
  for (const auto& item : doc) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
        !item[1].is_number_integer()) {
      throw std::invalid_argument("each part must be a two-integer list [a,b]");
    }
    parts.emplace_back(item[0].get<int>(), item[1].get<int>());
  }
  return hall_object(n, std::move(parts));
}

std::string hall_object_to_string(const HallObject& o) {
  std::ostringstream os;
  os << "[";
  for (size_t k = 0; k < o.parts.size(); ++k) {
    if (k > 0) os << ",";
    os << "[" << o.parts[k].first << "," << o.parts[k].second << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace skmv
