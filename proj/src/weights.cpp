#include "skmv/weights.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace skmv {

namespace {

void check_rank(int n) {
  if (n < 1) throw BoundsError("rank must be at least 1, got " + std::to_string(n));
}

void check_index(int n, int i, const char* what) {
  if (i < 1 || i > n) {
    throw BoundsError(std::string(what) + " index " + std::to_string(i) +
                      " outside 1.." + std::to_string(n));
  }
}

void check_same_rank(int a, int b) {
  if (a != b) {
    throw RankMismatch("operands have ranks " + std::to_string(a) + " and " +
                       std::to_string(b));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Weights and root vectors
// ---------------------------------------------------------------------------

std::vector<IntVec> cartan(int n) {
  check_rank(n);
  std::vector<IntVec> m(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i) {
    m[i][i] = 2;
    if (i > 0) m[i][i - 1] = -1;
    if (i + 1 < n) m[i][i + 1] = -1;
  }
  return m;
}

Weight zero_weight(int n) {
  check_rank(n);
  return Weight{n, IntVec(n, 0)};
}

Weight fundamental_weight(int n, int i) {
  check_rank(n);
  check_index(n, i, "fundamental weight");
  Weight v = zero_weight(n);
  v.coords[i - 1] = 1;
  return v;
}

Weight simple_root_weight(int n, int i) {
  check_rank(n);
  check_index(n, i, "simple root");
  Weight v = zero_weight(n);
  v.coords[i - 1] = 2;
  if (i - 2 >= 0) v.coords[i - 2] = -1;
  if (i < n) v.coords[i] = -1;
  return v;
}

long long pairing(const Weight& v, int i) {
  check_index(v.n, i, "coroot");
  return v.coords[i - 1];
}

Weight simple_reflection(const Weight& v, int i) {
  const long long c = pairing(v, i);
  Weight out = v;
  const Weight alpha = simple_root_weight(v.n, i);
  for (int j = 0; j < v.n; ++j) out.coords[j] -= c * alpha.coords[j];
  return out;
}

RootVector to_root_coords(const Weight& v) {
  // Inverting the Cartan matrix of type A_n gives the closed form
  //   x_i = sum_j min(i,j) a_j - i * T / (n+1),  T = sum_j j * a_j,
  // and every x_i is integral exactly when (n+1) divides T.
  const int n = v.n;
  long long t = 0;
  for (int j = 1; j <= n; ++j) t += static_cast<long long>(j) * v.coords[j - 1];
  if (t % (n + 1) != 0) {
    throw NotInRootLattice("weight " + weight_to_string(v) +
                           " is not in the root lattice of rank " + std::to_string(n));
  }
  const long long q = t / (n + 1);
  RootVector r{n, IntVec(n, 0)};
  for (int i = 1; i <= n; ++i) {
    long long x = -static_cast<long long>(i) * q;
    for (int j = 1; j <= n; ++j) x += static_cast<long long>(std::min(i, j)) * v.coords[j - 1];
    r.coords[i - 1] = x;
  }
  return r;
}

Weight from_root_coords(const RootVector& r) {
  const int n = r.n;
  Weight v = zero_weight(n);
  for (int i = 0; i < n; ++i) {
    long long a = 2 * r.coords[i];
    if (i > 0) a -= r.coords[i - 1];
    if (i + 1 < n) a -= r.coords[i + 1];
    v.coords[i] = a;
  }
  return v;
}

Weight operator+(const Weight& a, const Weight& b) {
  check_same_rank(a.n, b.n);
  Weight out = a;
  for (int i = 0; i < a.n; ++i) out.coords[i] += b.coords[i];
  return out;
}

Weight operator-(const Weight& a, const Weight& b) {
  check_same_rank(a.n, b.n);
  Weight out = a;
  for (int i = 0; i < a.n; ++i) out.coords[i] -= b.coords[i];
  return out;
}

Weight operator-(const Weight& a) {
  Weight out = a;
  for (auto& c : out.coords) c = -c;
  return out;
}

RootVector operator+(const RootVector& a, const RootVector& b) {
  check_same_rank(a.n, b.n);
  RootVector out = a;
  for (int i = 0; i < a.n; ++i) out.coords[i] += b.coords[i];
  return out;
}

RootVector operator-(const RootVector& a, const RootVector& b) {
  check_same_rank(a.n, b.n);
  RootVector out = a;
  for (int i = 0; i < a.n; ++i) out.coords[i] -= b.coords[i];
  return out;
}

RootVector simple_root(int n, int i) {
  check_rank(n);
  check_index(n, i, "simple root");
  RootVector r{n, IntVec(n, 0)};
  r.coords[i - 1] = 1;
  return r;
}

RootVector zero_root(int n) {
  check_rank(n);
  return RootVector{n, IntVec(n, 0)};
}

std::optional<int> simple_root_index(const RootVector& r) {
  int idx = 0;
  for (int i = 0; i < r.n; ++i) {
    if (r.coords[i] == 0) continue;
    if (r.coords[i] != 1 || idx != 0) return std::nullopt;
    idx = i + 1;
  }
  if (idx == 0) return std::nullopt;
  return idx;
}

IntVec to_epsilon_coords(const RootVector& r) {
  IntVec eps(r.n + 1, 0);
  for (int i = 0; i < r.n; ++i) {
    eps[i] += r.coords[i];
    eps[i + 1] -= r.coords[i];
  }
  return eps;
}

RootVector from_epsilon_coords(const IntVec& eps) {
  const int n = static_cast<int>(eps.size()) - 1;
  check_rank(n);
  if (std::accumulate(eps.begin(), eps.end(), 0LL) != 0) {
    throw BoundsError("epsilon coordinates must sum to zero");
  }
  RootVector r{n, IntVec(n, 0)};
  long long run = 0;
  for (int i = 0; i < n; ++i) {
    run += eps[i];
    r.coords[i] = run;
  }
  return r;
}

long long root_pairing(const RootVector& a, const RootVector& b) {
  check_same_rank(a.n, b.n);
  const IntVec ea = to_epsilon_coords(a);
  const IntVec eb = to_epsilon_coords(b);
  long long dot = 0;
  for (size_t i = 0; i < ea.size(); ++i) dot += ea[i] * eb[i];
  return dot;
}

// ---------------------------------------------------------------------------
// Permutations
// ---------------------------------------------------------------------------

Permutation::Permutation(int m) {
  if (m < 1) throw BoundsError("permutation degree must be positive");
  img_.resize(m);
  std::iota(img_.begin(), img_.end(), 1);
}

Permutation Permutation::from_images(std::vector<int> images) {
  const int m = static_cast<int>(images.size());
  if (m < 1) throw BoundsError("permutation image list must be non-empty");
  std::vector<bool> seen(m, false);
  for (int x : images) {
    if (x < 1 || x > m || seen[x - 1]) {
      throw BoundsError("image list is not a bijection of 1.." + std::to_string(m));
    }
    seen[x - 1] = true;
  }
  Permutation p;
  p.img_ = std::move(images);
  return p;
}

Permutation Permutation::transposition(int m, int i) {
  Permutation p(m);
  if (i < 1 || i + 1 > m) {
    throw BoundsError("transposition index " + std::to_string(i) + " outside 1.." +
                      std::to_string(m - 1));
  }
  std::swap(p.img_[i - 1], p.img_[i]);
  return p;
}

int Permutation::image(int x) const {
  if (x < 1 || x > degree()) {
    throw BoundsError("argument " + std::to_string(x) + " outside 1.." +
                      std::to_string(degree()));
  }
  return img_[x - 1];
}

Permutation Permutation::compose(const Permutation& rhs) const {
  if (degree() != rhs.degree()) {
    throw RankMismatch("composing permutations of degrees " + std::to_string(degree()) +
                       " and " + std::to_string(rhs.degree()));
  }
  Permutation out;
  out.img_.resize(img_.size());
  for (int x = 1; x <= degree(); ++x) out.img_[x - 1] = img_[rhs.img_[x - 1] - 1];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.img_.resize(img_.size());
  for (int x = 1; x <= degree(); ++x) out.img_[img_[x - 1] - 1] = x;
  return out;
}

long long Permutation::length() const {
  long long inv = 0;
  for (int a = 0; a < degree(); ++a) {
    for (int b = a + 1; b < degree(); ++b) {
      if (img_[a] > img_[b]) ++inv;
    }
  }
  return inv;
}

bool Permutation::is_identity() const {
  for (int x = 1; x <= degree(); ++x) {
    if (img_[x - 1] != x) return false;
  }
  return true;
}

Permutation simple_permutation(int n, int i) {
  check_rank(n);
  check_index(n, i, "simple reflection");
  return Permutation::transposition(n + 1, i);
}

Permutation product_of_simples(int n, const std::vector<int>& word) {
  Permutation acc(n + 1);
  for (int letter : word) acc = acc.compose(simple_permutation(n, letter));
  return acc;
}

Permutation longest_element(int n) {
  check_rank(n);
  std::vector<int> img(n + 1);
  for (int x = 1; x <= n + 1; ++x) img[x - 1] = n + 2 - x;
  return Permutation::from_images(std::move(img));
}

Permutation longest_parabolic(int n, const std::set<int>& letters) {
  check_rank(n);
  std::vector<int> img(n + 1);
  std::iota(img.begin(), img.end(), 1);
  for (int i : letters) check_index(n, i, "parabolic generator");
  // Each maximal run of consecutive generator indices [a, b] reverses the
  // block {a, ..., b+1}.
  auto it = letters.begin();
  while (it != letters.end()) {
    const int a = *it;
    int b = a;
    auto jt = std::next(it);
    while (jt != letters.end() && *jt == b + 1) {
      b = *jt;
      ++jt;
    }
    for (int x = a; x <= b + 1; ++x) img[x - 1] = a + b + 1 - x;
    it = jt;
  }
  return Permutation::from_images(std::move(img));
}

RootVector act_on_root(const Permutation& w, const RootVector& r) {
  if (w.degree() != r.n + 1) {
    throw RankMismatch("permutation degree " + std::to_string(w.degree()) +
                       " does not match root rank " + std::to_string(r.n));
  }
  const IntVec eps = to_epsilon_coords(r);
  IntVec out(eps.size(), 0);
  for (int k = 1; k <= w.degree(); ++k) out[w.image(k) - 1] = eps[k - 1];
  return from_epsilon_coords(out);
}

std::string weight_to_string(const Weight& v) {
  std::ostringstream os;
  bool any = false;
  for (int i = 1; i <= v.n; ++i) {
    const long long c = v.coords[i - 1];
    if (c == 0) continue;
    const long long mag = c < 0 ? -c : c;
    for (long long k = 0; k < mag; ++k) {
      if (c > 0 && any) os << "+";
      if (c < 0) os << "-";
      os << "w" << i;
      any = true;
    }
  }
  if (!any) return "0";
  return os.str();
}

}  // namespace skmv
