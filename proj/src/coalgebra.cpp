#include "skmv/coalgebra.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace skmv {

namespace {

void check_interval(int n, int a, int b) {
  if (n < 1) throw BoundsError("rank must be at least 1, got " + std::to_string(n));
  if (a < 1 || a > b || b > n) {
    throw BoundsError("support interval [" + std::to_string(a) + "," + std::to_string(b) +
                      "] is not inside [1," + std::to_string(n) + "]");
  }
}

}  // namespace

StringGen string_gen(int n, int a, int b) {
  check_interval(n, a, b);
  return StringGen{n, a, b};
}

FundamentalPath string_path(const StringGen& g) {
  Weight w = fundamental_weight(g.n, g.a);
  if (g.a - 1 >= 1) w = w - fundamental_weight(g.n, g.a - 1);
  if (g.b + 1 <= g.n) w = w - fundamental_weight(g.n, g.b + 1);
  return fundamental_path(w);
}

std::pair<int, int> gen_label(const StringGen& g) { return {g.a, g.b + 1}; }

Monomial monomial(int n, std::vector<std::pair<int, int>> supports) {
  for (const auto& [a, b] : supports) check_interval(n, a, b);
  std::sort(supports.begin(), supports.end());
  return Monomial{n, std::move(supports)};
}

Monomial unit_monomial(int n) { return monomial(n, {}); }

Monomial mul(const Monomial& x, const Monomial& y) {
  if (x.n != y.n) {
    throw RankMismatch("multiplying monomials of ranks " + std::to_string(x.n) + " and " +
                       std::to_string(y.n));
  }
  std::vector<std::pair<int, int>> gens = x.gens;
  gens.insert(gens.end(), y.gens.begin(), y.gens.end());
  return monomial(x.n, std::move(gens));
}

Weight weight_of(const Monomial& m) {
  Weight total = zero_weight(m.n);
  for (const auto& [a, b] : m.gens) {
    total = total + string_path(string_gen(m.n, a, b)).weight;
  }
  return total;
}

TensorPoly tensor_term(const Monomial& left, const Monomial& right, long long coeff) {
  TensorPoly t;
  t.n = left.n;
  if (coeff != 0) t.terms[{left, right}] = coeff;
  return t;
}

TensorPoly tp_add(const TensorPoly& x, const TensorPoly& y) {
  if (x.n != y.n) {
    throw RankMismatch("adding tensors of ranks " + std::to_string(x.n) + " and " +
                       std::to_string(y.n));
  }
  TensorPoly out = x;
  for (const auto& [key, c] : y.terms) {
    const long long v = (out.terms[key] += c);
    if (v == 0) out.terms.erase(key);
  }
  return out;
}

TensorPoly tp_mul(const TensorPoly& x, const TensorPoly& y) {
  if (x.n != y.n) {
    throw RankMismatch("multiplying tensors of ranks " + std::to_string(x.n) + " and " +
                       std::to_string(y.n));
  }
  TensorPoly out;
  out.n = x.n;
  for (const auto& [xk, xc] : x.terms) {
    for (const auto& [yk, yc] : y.terms) {
      const auto key = std::make_pair(mul(xk.first, yk.first), mul(xk.second, yk.second));
      const long long v = (out.terms[key] += xc * yc);
      if (v == 0) out.terms.erase(key);
    }
  }
  return out;
}

TensorPoly delta_gen(const StringGen& g) {
  const auto [i, j] = gen_label(g);
  TensorPoly out;
  out.n = g.n;
  for (int k = i; k <= j; ++k) {
    // x_{i,k} (empty when k == i) tensor x_{k,j} (empty when k == j).
    Monomial left = unit_monomial(g.n);
    Monomial right = unit_monomial(g.n);
    if (k > i) left = monomial(g.n, {{i, k - 1}});
    if (k < j) right = monomial(g.n, {{k, j - 1}});
    out = tp_add(out, tensor_term(left, right, 1));
  }
  return out;
}

TensorPoly delta(const Monomial& m) {
  TensorPoly acc = tensor_term(unit_monomial(m.n), unit_monomial(m.n), 1);
  for (const auto& [a, b] : m.gens) {
    acc = tp_mul(acc, delta_gen(string_gen(m.n, a, b)));
  }
  return acc;
}

Monomial parse_monomial(int n, const std::string& text) {
  if (n < 1) throw BoundsError("rank must be at least 1, got " + std::to_string(n));
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw std::invalid_argument("empty monomial literal");
  if (s == "1") return unit_monomial(n);

  std::vector<std::pair<int, int>> supports;
  size_t pos = 0;
  auto parse_int = [&]() {
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw std::invalid_argument("expected integer in monomial literal");
    return std::stoi(s.substr(start, pos - start));
  };
  while (true) {
    if (pos >= s.size() || s[pos] != 'x') {
      throw std::invalid_argument("expected token x[i,j] in monomial literal");
    }
    ++pos;
    if (pos >= s.size() || s[pos] != '[') {
      throw std::invalid_argument("expected '[' after 'x' in monomial literal");
    }
    ++pos;
    const int i = parse_int();
    if (pos >= s.size() || s[pos] != ',') {
      throw std::invalid_argument("expected ',' in monomial token");
    }
    ++pos;
    const int j = parse_int();
    if (pos >= s.size() || s[pos] != ']') {
      throw std::invalid_argument("expected ']' in monomial token");
    }
    ++pos;
    if (i < 1 || i >= j || j > n + 1) {
      throw BoundsError("label x[" + std::to_string(i) + "," + std::to_string(j) +
                        "] outside 1 <= i < j <= " + std::to_string(n + 1));
    }
    supports.emplace_back(i, j - 1);
    if (pos == s.size()) break;
    if (s[pos] != '*') throw std::invalid_argument("expected '*' between monomial tokens");
    ++pos;
  }
  return monomial(n, std::move(supports));
}

std::string monomial_to_string(const Monomial& m) {
  if (m.gens.empty()) return "1";
  std::ostringstream os;
  for (size_t k = 0; k < m.gens.size(); ++k) {
    if (k > 0) os << "*";
    os << "x[" << m.gens[k].first << "," << m.gens[k].second + 1 << "]";
  }
  return os.str();
}

}  // namespace skmv
