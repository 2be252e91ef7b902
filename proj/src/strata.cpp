#include "eostrata/strata.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace eo {

namespace {

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument("strata: " + msg);
}

}  // namespace

void validate(const Signature& s) {
  if (s.b < 0 || s.a < s.b || s.a + s.b < 1) fail("signature requires a >= b >= 0, a+b >= 1");
}

void validate(const CosetRep& r) {
  validate(r.sig);
  const int n = r.sig.a + r.sig.b;
  if (static_cast<int>(r.u.size()) != r.sig.b) fail("u-tuple size must equal b");
  for (int i = 0; i < r.sig.b; ++i) {
    if (r.u[i] < 1 || r.u[i] > n) fail("u-tuple entry out of range");
    if (i > 0 && r.u[i - 1] >= r.u[i]) fail("u-tuple must be strictly increasing");
  }
}

void validate(const GammaUV& g) {
  if (g.q < 2) fail("q must be at least 2");
  if (!(1 <= g.u && g.u < g.v && g.v <= g.q)) fail("require 1 <= u < v <= q");
}

std::vector<CosetRep> enumerate_reps(const Signature& s) {
  validate(s);
  const int n = s.a + s.b, b = s.b;
  std::vector<CosetRep> out;
  std::vector<int> u(b);
  for (int i = 0; i < b; ++i) u[i] = i + 1;
  for (;;) {
    out.push_back(CosetRep{s, u});
    // next combination in lexicographic order
    int i = b - 1;
    while (i >= 0 && u[i] == n - (b - 1 - i)) --i;
    if (i < 0) break;
    ++u[i];
    for (int k = i + 1; k < b; ++k) u[k] = u[k - 1] + 1;
  }
  return out;
}

Perm to_permutation(const CosetRep& r) {
  validate(r);
  const int n = r.sig.a + r.sig.b, b = r.sig.b;
  std::vector<int> img(n, 0);
  for (int i = 0; i < b; ++i) img[r.u[i] - 1] = i + 1;
  int next = b + 1;
  for (int x = 1; x <= n; ++x)
    if (img[x - 1] == 0) img[x - 1] = next++;
  return Perm::from_one_line(std::move(img));
}

Perm to_permutation(const GammaUV& g) { return to_permutation(to_coset_rep(g)); }

int coset_length(const CosetRep& r) {
  validate(r);
  int len = 0;
  for (int i = 0; i < r.sig.b; ++i) len += r.u[i] - (i + 1);
  return len;
}

int dim(const GammaUV& g) {
  validate(g);
  return g.u + g.v - 3;
}

bool bruhat_leq_reps(const CosetRep& p, const CosetRep& r) {
  validate(p);
  validate(r);
  if (!(p.sig == r.sig)) fail("signature mismatch in bruhat_leq_reps");
  for (int i = 0; i < p.sig.b; ++i)
    if (p.u[i] > r.u[i]) return false;
  return true;
}

bool bruhat_leq_reps(const GammaUV& p, const GammaUV& r) {
  return bruhat_leq_reps(to_coset_rep(p), to_coset_rep(r));
}

GammaUV to_gamma_uv(const CosetRep& r) {
  // Deliberately does not insist on a >= b: (u,v) labels are meaningful for
  // every rank a+2 >= 2 even though the enumerative machinery assumes a >= b.
  if (r.sig.b != 2) fail("to_gamma_uv requires b == 2");
  if (r.u.size() != 2) fail("u-tuple size must equal b");
  GammaUV g{r.sig.a + 2, r.u[0], r.u[1]};
  validate(g);
  return g;
}

CosetRep to_coset_rep(const GammaUV& g) {
  validate(g);
  return CosetRep{Signature{g.q - 2, 2}, {g.u, g.v}};
}

std::vector<GammaUV> all_strata(int q) {
  if (q < 2) fail("q must be at least 2");
  std::vector<GammaUV> out;
  for (int u = 1; u <= q; ++u)
    for (int v = u + 1; v <= q; ++v) out.push_back(GammaUV{q, u, v});
  std::sort(out.begin(), out.end(), [](const GammaUV& x, const GammaUV& y) {
    int dx = x.u + x.v, dy = y.u + y.v;  // dim order == (u+v) order
    if (dx != dy) return dx < dy;
    if (x.u != y.u) return x.u < y.u;
    return x.v < y.v;
  });
  return out;
}

std::vector<long long> dimension_counts(const Signature& s) {
  validate(s);
  std::vector<long long> counts(static_cast<size_t>(s.a) * s.b + 1, 0);
  for (const auto& r : enumerate_reps(s)) ++counts[coset_length(r)];
  return counts;
}

long long count_by_dimension_b2(int q, int d) {
  if (q < 2) fail("q must be at least 2");
  if (d < 0 || d > 2 * (q - 2)) return 0;
  long long base = d / 2 + 1;
  if (d <= q - 2) return base;
  return std::max<long long>(0, base - (d - (q - 2)));
}

std::vector<long long> gaussian_binomial(int a, int b) {
  if (a < 0 || b < 0) fail("gaussian_binomial requires nonnegative arguments");
  // [n choose k]_t via [n k]_t = [n-1 k-1]_t + t^k [n-1 k]_t
  const int n = a + b, k = b;
  // table[j] = coefficient vector of [m choose j]_t while m sweeps 0..n
  std::vector<std::vector<long long>> table(k + 1);
  table[0] = {1};
  for (int j = 1; j <= k; ++j) table[j] = {0};
  for (int m = 1; m <= n; ++m) {
    for (int j = std::min(m, k); j >= 1; --j) {
      // new [m j] = [m-1 j-1] + t^j [m-1 j]
      std::vector<long long> res(std::max(table[j - 1].size(), table[j].size() + j), 0);
      for (size_t i = 0; i < table[j - 1].size(); ++i) res[i] += table[j - 1][i];
      for (size_t i = 0; i < table[j].size(); ++i) res[i + j] += table[j][i];
      table[j] = std::move(res);
    }
  }
  table[k].resize(static_cast<size_t>(a) * b + 1, 0);
  return table[k];
}

std::ostream& operator<<(std::ostream& os, const GammaUV& g) {
  return os << '(' << g.u << ',' << g.v << ')';
}

}  // namespace eo
