#include "eostrata/products.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "eostrata/dieudonne.hpp"

namespace eo {

namespace {

[[noreturn]] void bad(const std::string& msg) {
  throw std::invalid_argument("products: " + msg);
}

void check_m1(int m, int a) {
  if (m < 0 || a < 0 || a > m) bad("require 0 <= a <= m");
}

GammaUV gamma(int q, int u, int v) {
  GammaUV g{q, u, v};
  validate(g);
  return g;
}

}  // namespace

// ---------- (m,1) strata ----------

bool is_ss_m1(int m, int a) {
  check_m1(m, a);
  return 2 * a <= m;
}

Thresholds m1_thresholds(int m, int a) {
  check_m1(m, a);
  return {std::min(a + 1, m + 1 - a), std::max(a, m + 1 - a)};
}

// ---------- (m,2) x (n,0) bookkeeping ----------

UpDownSets updown_sets(int m, int u, int v) {
  if (m < 0) bad("require m >= 0");
  const int qm = m + 2;
  if (!(1 <= u && u < v && v <= qm)) bad("require 1 <= u < v <= m+2");
  UpDownSets s;
  s.s_up = {u, v, qm - v + 2, qm - u + 1};
  s.s_down = {u - 1, v - 1, qm - v + 2, qm - u + 1};
  std::sort(s.s_up.begin(), s.s_up.end());
  std::sort(s.s_down.begin(), s.s_down.end());
  s.r2 = s.s_up[1];
  s.r3 = s.s_down[2];
  return s;
}

// ---------- product maps on stratum labels ----------

GammaUV phi_1x1(int m, int a, int n, int b) {
  check_m1(m, a);
  check_m1(n, b);
  const int q = m + n + 2;
  const bool ssm = 2 * a <= m;
  const bool ssn = 2 * b <= n;
  if (ssm && ssn) {
    if (a < b) {
      std::swap(m, n);
      std::swap(a, b);
    }
    if (a == b) return gamma(q, 2 * b + 1, 2 * b + 2);
    return gamma(q, 2 * b + 2, a + b + 2);
  }
  if (!ssm && !ssn) {
    if (m - a > n - b) {
      std::swap(m, n);
      std::swap(a, b);
    }
    return gamma(q, a + b + 1, 2 * a + n - m + 2);
  }
  // Mixed: normalize to (m,a) not supersingular, (n,b) supersingular.
  if (ssm) {
    std::swap(m, n);
    std::swap(a, b);
  }
  return gamma(q, b + 2 + std::min(b, m - a),
               a + 2 + std::max(n - m + a, n - b));
}

GammaUV phi_1x1_oracle(int m, int a, int n, int b) {
  check_m1(m, a);
  check_m1(n, b);
  const MonomialModule L =
      direct_sum({standard_object_m1(m, a), standard_object_m1(n, b)});
  return to_gamma_uv(extract_gamma(L, 2));
}

GammaUV phi_2x0(int m, int u, int v, int n) {
  if (n < 0) bad("require n >= 0");
  const UpDownSets s = updown_sets(m, u, v);
  const int q = m + n + 2;
  const int y = (u <= s.r2) ? u : u + n;
  const int t = (v <= s.r2) ? v : v + n;
  return gamma(q, y, t);
}

GammaUV phi_2x0_oracle(int m, int u, int v, int n) {
  if (n < 0) bad("require n >= 0");
  std::vector<MonomialModule> blocks;
  blocks.push_back(standard_object_a2(m + 2, u, v));
  for (int i = 0; i < n; ++i) blocks.push_back(superspecial_block());
  return to_gamma_uv(extract_gamma(direct_sum(blocks), 2));
}

// ---------- supersingular-intersection certificates ----------

std::map<GammaUV, Certificate> certified_ss_intersections(int q) {
  if (q < 2) bad("require q >= 2");
  std::map<GammaUV, Certificate> out;

  for (int m = 0; m <= q - 2; ++m) {
    const int n = q - 2 - m;

    // Seed certificates for strata of M(m,2) known to meet the
    // supersingular locus.
    std::vector<Certificate> seeds;
    if (m == 0) {
      seeds.push_back({{"base-m0", {0}, gamma(2, 1, 2)}});
    }
    if (m == 2) {
      constexpr std::pair<int, int> kSmallStrata[] = {
          {1, 2}, {1, 3}, {1, 4}, {2, 3}};
      for (auto [su, sv] : kSmallStrata)
        seeds.push_back({{"base-m2", {2}, gamma(4, su, sv)}});
    }
    for (int m1 = 0; m1 <= m; ++m1) {
      const int n1 = m - m1;
      for (int a = 0; 2 * a <= m1; ++a)
        for (int b = 0; 2 * b <= n1; ++b)
          seeds.push_back(
              {{"1x1", {m1, a, n1, b}, phi_1x1(m1, a, n1, b)}});
    }

    // Push each seed into M(q-2,2); the first certificate for a stratum
    // wins, so the output is deterministic.
    for (Certificate& cert : seeds) {
      GammaUV g = cert.back().result;
      if (n > 0) {
        const GammaUV fin = phi_2x0(m, g.u, g.v, n);
        cert.push_back({"2x0", {m, g.u, g.v, n}, fin});
        g = fin;
      }
      out.emplace(g, std::move(cert));
    }
  }
  return out;
}

}  // namespace eo
