#pragma once

#include <map>
#include <string>
#include <vector>

#include "eostrata/permutation.hpp"
#include "eostrata/products.hpp"
#include "eostrata/strata.hpp"

namespace eo {

// ---------- the Siegel index set W_q ----------

// Permutations of degree 2q with the positions of 1..q increasing and
// omega(i) + omega(2q+1-i) = 2q+1 for every i.
bool is_siegel_perm(const Perm& w);
void validate_siegel(const Perm& w);  // throws std::invalid_argument

// Positions in 1..q where the eta function of the (u,v) standard object does
// not jump.  The closed form behind psi, exposed for tests: eta determines
// omega by giving jumps the values 1,2,... and non-jumps q+1,q+2,... in
// position order.
std::vector<int> psi_nonjumps(int q, int u, int v);

// Forgetful image of the stratum (u,v) in W_q: first half from the non-jump
// set, second half completed by the duality relation.
Perm psi(int q, int u, int v);

// Same permutation computed from the standard object's eta function.
Perm psi_oracle(int q, int u, int v);

// omega(i) = i for all i <= ceil(q/2): the corresponding Siegel stratum (and
// hence the unitary one) lies inside the supersingular locus.  Holds exactly
// for u = 1, v < floor(q/2) + 2.
bool ss_contained(const Perm& w);

// omega(1) = 1: F acts nilpotently.  When this fails the Newton polygon has
// slopes 0 and 1, so the stratum cannot meet the supersingular locus.
bool f_nilpotent(const Perm& w);

// ---------- minimal strata of non-supersingular Newton polygons ----------

// Value of a word over {F, V^-1} on the cyclic block M_{m,n}: the dimension
// of the image subspace when the word is applied to the whole module.
// Letters act right to left; 'F' drops the dimension by n, 'V' (meaning
// V^-1) raises it by m, both clamped to [0, m+n].
int word_value(const std::string& word, int m, int n);

// Slope data (n_1..n_r): part l pairs with part r+1-l into the block
// M_{n_{r+1-l}, n_l}.  Admissible when the parts are non-negative and sum to
// q >= 1, mirrored parts are coprime, and not every slope equals 1/2.
struct SlopeProfile {
  std::vector<int> parts;
  friend bool operator==(const SlopeProfile&, const SlopeProfile&) = default;
};
void validate_profile(const SlopeProfile&);  // names the broken rule

// The W_q element of the minimal stratum with these slopes: direct sum of
// the blocks with the mirror pairing, eta from the canonical filtration,
// cross-checked against the word-value formula on every reachable state
// (mismatch would be an engine bug and throws std::logic_error).
Perm minimal_omega(const SlopeProfile&);

// All admissible profiles with parts summing to q, one representative per
// block multiset: mirror pairs in a canonical order plus an optional middle
// part 1.
std::vector<SlopeProfile> enumerate_minimal_profiles(int q);

// ---------- classification against the supersingular locus ----------

enum class SSVerdict { Contained, Intersects, Disjoint, Unknown };
std::string to_string(SSVerdict);

struct SSStatus {
  SSVerdict verdict = SSVerdict::Unknown;
  std::vector<std::string> provenance;  // every criterion that fired
};

// Combine, for the stratum (u,v) of the rank-q family: the containment
// criterion, the nilpotence criterion, comparison with every minimal
// stratum of a non-supersingular Newton polygon, and the supplied product
// certificates.  Strongest verdict wins (Contained > Intersects > Disjoint);
// contradictory criteria throw std::logic_error.
SSStatus classify(int q, int u, int v,
                  const std::map<GammaUV, Certificate>& certificates);

struct StratumReport {
  GammaUV stratum;
  int dim = 0;
  SSStatus status;
};

// classify() across all strata of the rank-q family, computing the
// certificate map and the minimal-stratum list once.
std::vector<StratumReport> ss_report(int q);

}  // namespace eo
