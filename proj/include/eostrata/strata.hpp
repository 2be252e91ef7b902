#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "eostrata/permutation.hpp"

namespace eo {

// Signature (a, b) of a unitary group of rank a+b, a >= b >= 0, a+b >= 1.
struct Signature {
  int a = 0;
  int b = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

// Minimal-length coset representative for W / (S_a x S_b), encoded by the
// strictly increasing tuple u = (u_1 < ... < u_b) with 1 <= u_i <= a+b.
// The associated permutation gamma sends u_i -> i and is order-preserving
// on the complement {z_1 < ... < z_a}, sending z_j -> b + j.
struct CosetRep {
  Signature sig;
  std::vector<int> u;
  friend bool operator==(const CosetRep&, const CosetRep&) = default;
};

// The b = 2 case: stratum label (u, v) with 1 <= u < v <= q, q = a + 2.
struct GammaUV {
  int q = 0;
  int u = 0;
  int v = 0;
  friend bool operator==(const GammaUV&, const GammaUV&) = default;
  friend auto operator<=>(const GammaUV&, const GammaUV&) = default;
};

void validate(const Signature&);  // throws std::invalid_argument
void validate(const CosetRep&);
void validate(const GammaUV&);

// All coset representatives, u-tuples in lexicographic order.
std::vector<CosetRep> enumerate_reps(const Signature&);

Perm to_permutation(const CosetRep&);
Perm to_permutation(const GammaUV&);

// Coxeter length directly from the tuple: sum (u_i - i).
int coset_length(const CosetRep&);
int dim(const GammaUV&);  // u + v - 3

// Bruhat order restricted to minimal coset representatives is componentwise
// comparison of the u-tuples.
bool bruhat_leq_reps(const CosetRep&, const CosetRep&);
bool bruhat_leq_reps(const GammaUV&, const GammaUV&);

GammaUV to_gamma_uv(const CosetRep&);  // requires b == 2
CosetRep to_coset_rep(const GammaUV&);

// All strata of the (q-2, 2) index set, sorted by (dim, u, v).
std::vector<GammaUV> all_strata(int q);

// Number of strata of each Coxeter length d = 0 .. a*b, by enumeration.
std::vector<long long> dimension_counts(const Signature&);

// Closed piecewise form for b = 2: floor(d/2)+1, truncated past d = q-2.
long long count_by_dimension_b2(int q, int d);

// Coefficients of the Gaussian binomial [a+b choose b]_t, degree a*b.
std::vector<long long> gaussian_binomial(int a, int b);

std::ostream& operator<<(std::ostream&, const GammaUV&);

}  // namespace eo
