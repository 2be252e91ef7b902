#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eostrata/permutation.hpp"
#include "eostrata/strata.hpp"

namespace eo {

// A monomial module: a based module where F and V act by sending each basis
// vector to another basis vector or to zero. Everything downstream (images,
// preimages, pairing complements, filtrations) then operates on subsets of
// the basis, represented as bitmasks.
//
// Index conventions: basis indices are 0-based; kZeroTarget marks "maps to
// zero" and kNoPartner / kNoComponent mark absent pairing / component tags.
inline constexpr int kZeroTarget = -1;
inline constexpr int kNoPartner = -1;
inline constexpr int kNoComponent = 0;

using Subspace = std::uint64_t;  // bit i set <=> basis vector i included
using Chain = std::vector<Subspace>;  // strictly increasing, 0 and full included

struct MonomialModule {
  int dim = 0;
  std::vector<std::string> labels;  // diagnostic names, e.g. "e1_3"
  std::vector<int> F;               // F[i] = image index of basis vector i, or kZeroTarget
  std::vector<int> V;               // likewise for V
  std::vector<int> component;       // 1 or 2 for bi-graded modules, else kNoComponent
  std::vector<int> partner;         // perfect-pairing partner index, or kNoPartner
  bool paired = false;              // true if every vector has a partner

  Subspace full() const { return dim == 64 ? ~0ULL : (1ULL << dim) - 1; }
  // Throws std::invalid_argument on malformed tables (sizes, ranges,
  // non-injective F/V on nonzero targets, inconsistent pairing).
  void validate() const;
};

// ---- standard objects -------------------------------------------------------

// Signature (q-2, 2) standard object attached to stratum (u, v); components
// 1 and 2 each of rank q; paired; basis order: e1_1..e1_q, e2_1..e2_q.
MonomialModule standard_object_a2(int q, int u, int v);

// Signature (m, 1) standard object with invariant a (0 <= a <= m+1... valid
// range 0 <= a <= m); components of rank m+1 each; paired.
MonomialModule standard_object_m1(int m, int a);

// Rank-2 superspecial block: F(g1)=V(g1)=g2, F(g2)=V(g2)=0; paired.
MonomialModule superspecial_block();

// Minimal (slope) block M_{m,n} of rank m+n: F(e_i)=e_{i+n} for i <= m-1,
// V(e_i)=e_{i+m} for i <= n-1 (0-based). Unpaired and untagged on its own.
MonomialModule minimal_block(int m, int n);

// Concatenates blocks. Pairing: each block keeps its own pairing if it has
// one; `dual_pairs` marks cross-paired block pairs (i, j), i <= j, paired by
// k <-> (dim_j - 1 - k); i == j means the block is self-dual under that rule.
// The result is paired iff every block ends up covered. Component tags are
// kept as-is.
struct PairingPlan {
  std::vector<std::pair<int, int>> dual_pairs;
};
MonomialModule direct_sum(const std::vector<MonomialModule>& blocks,
                          const PairingPlan& plan = {});

// ---- subspace operators -----------------------------------------------------

Subspace apply_F(const MonomialModule&, Subspace);      // F(span s)
Subspace preimage_V(const MonomialModule&, Subspace);   // V^{-1}(span s + 0)
// Orthogonal complement under the monomial pairing; requires paired.
Subspace complement(const MonomialModule&, Subspace);

// ---- filtrations ------------------------------------------------------------

// Smallest set of subspaces containing {0, full} and closed under apply_F,
// preimage_V and (if paired) complement; returned sorted by dimension.
// Throws std::domain_error("...not a chain...") if the closure is not
// totally ordered by inclusion.
Chain canonical_filtration(const MonomialModule&);

// Order in which refinement candidates are tried (ascending or descending
// basis index); both must yield the same eta profile.
enum class InsertionOrder { forward, reverse };

// A complete flag refining the canonical filtration, stable under apply_F
// and preimage_V (built by greedy insertion with backtracking). Throws
// std::domain_error("...no refinement found...") when no complete flag made
// of coordinate subspaces is F/V-stable; that genuinely happens (smallest
// case: the m1 object with m = a = 1, where the only stable line in the
// middle canonical piece is a twisted diagonal). The eta profile of such
// modules is still well defined; use eta_profile / the one-argument
// extractors below, which need only the canonical filtration.
Chain final_filtration(const MonomialModule&, InsertionOrder = InsertionOrder::forward);

// ---- invariants -------------------------------------------------------------

// eta(j) = dim(W_j  intersect  ker F) for the flag W_0 < ... < W_dim;
// returned vector has size dim+1 with eta[0] = 0.
std::vector<int> eta(const MonomialModule&, const Chain& flag);

// Same, restricted to component i (1 or 2): the flag is intersected with the
// component and deduplicated into a flag of the component's rank.
std::vector<int> eta_component(const MonomialModule&, const Chain& flag, int comp);

// eta of any complete F/V-stable flag, computed without materializing one:
// on every graded piece of the canonical filtration F is either zero or
// injective (checked; std::domain_error otherwise), so each step inside a
// kernel piece is a jump and every other step is flat, independent of how
// the refinement interleaves. eta_component_profile is the component-
// restricted analogue (indexed by component dimension 0..rank).
std::vector<int> eta_profile(const MonomialModule&);
std::vector<int> eta_component_profile(const MonomialModule&, int comp);

// Reads the stratum label off a final filtration: the jump positions of
// eta on component 1. Requires exactly b jumps. The one-argument form uses
// eta_component_profile and therefore works for every valid module; the
// flag form evaluates an explicitly given complete flag.
CosetRep extract_gamma(const MonomialModule&, int b);
CosetRep extract_gamma(const MonomialModule&, const Chain& flag, int b);

// Reads the Weyl-group element of the symplectic (degree 2q) setting off a
// final filtration: jumps j_l get omega(j_l) = l, non-jumps i_m get
// omega(i_m) = q + m. Requires dim = 2q and exactly q jumps. One-argument
// form uses eta_profile.
Perm extract_siegel(const MonomialModule&);
Perm extract_siegel(const MonomialModule&, const Chain& flag);

}  // namespace eo
