#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "eostrata/strata.hpp"

namespace eo {

// ---------- (m,1) strata ----------

// The stratum of M(m,1) with invariant a (its dimension) lies inside the
// supersingular locus iff a <= m/2.
bool is_ss_m1(int m, int a);

// Stall positions for the (V^-1 F)-iterates inside the first component of
// the (m,1) standard object: moving up from 0 stabilizes at C_{1,s1},
// moving down from the whole module at C_{1,s2}.
//   s1 = min{a+1, m+1-a},  s2 = max{a, m+1-a}.
// The stratum is supersingular exactly when s1 = a+1.
struct Thresholds {
  int s1 = 0;
  int s2 = 0;
  friend bool operator==(const Thresholds&, const Thresholds&) = default;
};
Thresholds m1_thresholds(int m, int a);

// ---------- (m,2) x (n,0) bookkeeping ----------

// Sorted copies of the four-element multisets controlling how far the
// (V^-1 F)-iterates move inside the first component of the (m,2) standard
// object gamma_{u,v} (q_M = m+2):
//   s_up   = {u, v, q_M-v+2, q_M-u+1},     r2 = second smallest,
//   s_down = {u-1, v-1, q_M-v+2, q_M-u+1}, r3 = second largest.
// Moving up stabilizes at C_{1,r2}, moving down at C_{1,r3}, and no kernel
// vector of F lies strictly between the two.
struct UpDownSets {
  std::array<int, 4> s_up{};
  std::array<int, 4> s_down{};
  int r2 = 0;
  int r3 = 0;
};
UpDownSets updown_sets(int m, int u, int v);

// ---------- product maps on stratum labels ----------

// Stratum of M(m+n,2) containing the product of the (m,1) stratum with
// invariant a and the (n,1) stratum with invariant b.  Closed form with a
// three-way case split on supersingularity of the factors; symmetric, so
// the arguments are swapped internally into the case's normal form.
GammaUV phi_1x1(int m, int a, int n, int b);

// Same value computed from the module itself: direct sum of the two
// standard objects, eta of the first component, jump positions.
GammaUV phi_1x1_oracle(int m, int a, int n, int b);

// Stratum of M(m+n,2) containing the product of the (m,2) stratum
// gamma_{u,v} with the unique (superspecial) stratum of M(n,0):
//   gamma_{y,s},  y = u (u <= r2) or u+n,  s = v (v <= r2) or v+n.
GammaUV phi_2x0(int m, int u, int v, int n);
GammaUV phi_2x0_oracle(int m, int u, int v, int n);

// ---------- supersingular-intersection certificates ----------

// One step in a chain certifying that a stratum meets the supersingular
// locus.  Kinds:
//   "base-m0"  unique stratum of M(0,2), params {0}
//   "base-m2"  one of the four strata of M(2,2) of dimension <= 2, params {2}
//   "1x1"      product of two supersingular (.,1) strata, params {m,a,n,b}
//   "2x0"      product with the superspecial M(n,0), params {m,u,v,n}
// `result` is the certified stratum after the step.
struct CertificateStep {
  std::string map;
  std::vector<int> params;
  GammaUV result;
  friend bool operator==(const CertificateStep&, const CertificateStep&) = default;
};
using Certificate = std::vector<CertificateStep>;

// Every stratum of M(q-2,2) that the product maps force to meet the
// supersingular locus, each with one certificate (deterministically the
// first found: seeds scanned by ascending intermediate rank m, base cases
// before 1x1 products in lexicographic parameter order).  Certifies
// intersection only; containment and disjointness are separate questions.
// The list is knowingly incomplete for q >= 5: strata it misses are merely
// undecided, not disjoint.
std::map<GammaUV, Certificate> certified_ss_intersections(int q);

}  // namespace eo
