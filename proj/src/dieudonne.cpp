#include "eostrata/dieudonne.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

namespace eo {

namespace {

[[noreturn]] void bad(const std::string& msg) {
  throw std::invalid_argument("dieudonne: " + msg);
}

int popcount(Subspace s) { return std::popcount(s); }

std::string lab(const char* stem, int idx) {
  std::ostringstream os;
  os << stem << idx;
  return os.str();
}

std::string lab2(int comp, int j) {
  std::ostringstream os;
  os << 'e' << comp << '_' << j;
  return os.str();
}

Subspace ker_F_mask(const MonomialModule& M) {
  Subspace k = 0;
  for (int i = 0; i < M.dim; ++i)
    if (M.F[i] == kZeroTarget) k |= 1ULL << i;
  return k;
}

Subspace component_mask(const MonomialModule& M, int comp) {
  Subspace k = 0;
  for (int i = 0; i < M.dim; ++i)
    if (M.component[i] == comp) k |= 1ULL << i;
  return k;
}

bool nested(Subspace a, Subspace b) { return (a & ~b) == 0; }

// Closure of `S` under apply_F and preimage_V, plus complement when asked.
// The complete flag built by final_filtration is only F/V^{-1}-stable: a
// complement-stable complete flag need not exist on coordinate subspaces
// (m1(1,0) is a 4-dimensional counterexample), while eta duality holds for
// any F/V^{-1}-stable flag regardless.
std::set<Subspace> close_under_ops(const MonomialModule& M, std::set<Subspace> S,
                                   bool with_complement) {
  constexpr size_t kSizeBound = 10000;  // defensive; real inputs stay tiny
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Subspace> snapshot(S.begin(), S.end());
    for (Subspace s : snapshot) {
      Subspace imgs[3];
      int cnt = 0;
      imgs[cnt++] = apply_F(M, s);
      imgs[cnt++] = preimage_V(M, s);
      if (with_complement && M.paired) imgs[cnt++] = complement(M, s);
      for (int t = 0; t < cnt; ++t)
        if (S.insert(imgs[t]).second) changed = true;
    }
    if (S.size() > kSizeBound)
      throw std::domain_error("dieudonne: closure exceeded size bound");
  }
  return S;
}

bool is_chain_set(const std::set<Subspace>& S) {
  // sorted ascending by mask value; verify total nesting via dim-sorted order
  std::vector<Subspace> v(S.begin(), S.end());
  std::sort(v.begin(), v.end(), [](Subspace a, Subspace b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return a < b;
  });
  for (size_t i = 1; i < v.size(); ++i)
    if (!nested(v[i - 1], v[i]) || std::popcount(v[i - 1]) == std::popcount(v[i]))
      return false;
  return true;
}

Chain sorted_chain(const std::set<Subspace>& S) {
  Chain c(S.begin(), S.end());
  std::sort(c.begin(), c.end(),
            [](Subspace a, Subspace b) { return std::popcount(a) < std::popcount(b); });
  return c;
}

}  // namespace

void MonomialModule::validate() const {
  const size_t d = static_cast<size_t>(dim);
  if (dim < 1 || dim > 63) bad("dimension out of supported range [1, 63]");
  if (F.size() != d || V.size() != d || component.size() != d || partner.size() != d ||
      labels.size() != d)
    bad("table sizes must all equal dim");
  auto check_map = [&](const std::vector<int>& T, const char* name) {
    std::vector<char> hit(d, 0);
    for (int i = 0; i < dim; ++i) {
      if (T[i] == kZeroTarget) continue;
      if (T[i] < 0 || T[i] >= dim) bad(std::string(name) + " target out of range");
      if (hit[T[i]]) bad(std::string(name) + " is not injective on nonzero targets");
      hit[T[i]] = 1;
    }
  };
  check_map(F, "F");
  check_map(V, "V");
  for (int i = 0; i < dim; ++i)
    if (component[i] != kNoComponent && component[i] != 1 && component[i] != 2)
      bad("component tags must be 0, 1 or 2");
  if (paired) {
    for (int i = 0; i < dim; ++i) {
      if (partner[i] < 0 || partner[i] >= dim) bad("pairing must be total when paired");
      if (partner[partner[i]] != i) bad("pairing is not an involution");
      if (partner[i] == i) bad("pairing has a fixed point");
    }
    // monomial adjunction: <F x, y> != 0  iff  <x, V y> != 0
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        bool lhs = F[i] != kZeroTarget && F[i] == partner[j];
        bool rhs = V[j] != kZeroTarget && V[j] == partner[i];
        if (lhs != rhs) bad("pairing is not F/V-adjoint");
      }
  }
}

MonomialModule standard_object_a2(int q, int u, int v) {
  if (q < 2) bad("standard_object_a2: q must be at least 2");
  if (!(1 <= u && u < v && v <= q)) bad("standard_object_a2: require 1 <= u < v <= q");
  MonomialModule M;
  M.dim = 2 * q;
  M.labels.resize(M.dim);
  M.F.assign(M.dim, kZeroTarget);
  M.V.assign(M.dim, kZeroTarget);
  M.component.resize(M.dim);
  M.partner.resize(M.dim);
  M.paired = true;
  auto e1 = [&](int j) { return j - 1; };      // e1_j, 1-based j
  auto e2 = [&](int j) { return q + j - 1; };  // e2_j
  for (int j = 1; j <= q; ++j) {
    M.labels[e1(j)] = lab2(1, j);
    M.labels[e2(j)] = lab2(2, j);
    M.component[e1(j)] = 1;
    M.component[e2(j)] = 2;
    M.partner[e1(j)] = e2(q + 1 - j);
    M.partner[e2(j)] = e1(q + 1 - j);
  }
  for (int j = 1; j <= q; ++j) {
    if (j == u || j == v) {
      // F kills e1_u and e1_v
    } else if (j <= u - 1) {
      M.F[e1(j)] = e2(j);
    } else if (j <= v - 1) {
      M.F[e1(j)] = e2(j - 1);
    } else {
      M.F[e1(j)] = e2(j - 2);
    }
    if (j <= 2) {
      // V kills e1_1 and e1_2
    } else if (j <= q - v + 2) {
      M.V[e1(j)] = e2(j - 2);
    } else if (j <= q - u + 1) {
      M.V[e1(j)] = e2(j - 1);
    } else {
      M.V[e1(j)] = e2(j);
    }
  }
  M.F[e2(q - v + 1)] = e1(1);
  M.F[e2(q - u + 1)] = e1(2);
  M.V[e2(q - 1)] = e1(u);
  M.V[e2(q)] = e1(v);
  M.validate();
  return M;
}

MonomialModule standard_object_m1(int m, int a) {
  if (m < 0) bad("standard_object_m1: m must be nonnegative");
  if (a < 0 || a > m) bad("standard_object_m1: require 0 <= a <= m");
  const int r = m + 1;  // rank of each component
  MonomialModule M;
  M.dim = 2 * r;
  M.labels.resize(M.dim);
  M.F.assign(M.dim, kZeroTarget);
  M.V.assign(M.dim, kZeroTarget);
  M.component.resize(M.dim);
  M.partner.resize(M.dim);
  M.paired = true;
  auto e1 = [&](int j) { return j - 1; };
  auto e2 = [&](int j) { return r + j - 1; };
  for (int j = 1; j <= r; ++j) {
    M.labels[e1(j)] = lab2(1, j);
    M.labels[e2(j)] = lab2(2, j);
    M.component[e1(j)] = 1;
    M.component[e2(j)] = 2;
    M.partner[e1(j)] = e2(m + 2 - j);
    M.partner[e2(j)] = e1(m + 2 - j);
  }
  for (int j = 1; j <= r; ++j) {
    if (j <= a) M.F[e1(j)] = e2(j);
    else if (j > a + 1) M.F[e1(j)] = e2(j - 1);
    if (j > 1 && j <= m + 1 - a) M.V[e1(j)] = e2(j - 1);
    else if (j > std::max(1, m + 1 - a)) M.V[e1(j)] = e2(j);
  }
  M.F[e2(m + 1 - a)] = e1(1);
  M.V[e2(m + 1)] = e1(a + 1);
  M.validate();
  return M;
}

MonomialModule superspecial_block() {
  MonomialModule M;
  M.dim = 2;
  M.labels = {lab("g", 1), lab("g", 2)};
  M.F = {1, kZeroTarget};
  M.V = {1, kZeroTarget};
  M.component = {1, 2};
  M.partner = {1, 0};
  M.paired = true;
  M.validate();
  return M;
}

MonomialModule minimal_block(int m, int n) {
  if (m < 0 || n < 0 || m + n < 1) bad("minimal_block: require m, n >= 0 and m+n >= 1");
  MonomialModule M;
  M.dim = m + n;
  M.labels.resize(M.dim);
  M.F.assign(M.dim, kZeroTarget);
  M.V.assign(M.dim, kZeroTarget);
  M.component.assign(M.dim, kNoComponent);
  M.partner.assign(M.dim, kNoPartner);
  M.paired = false;
  for (int i = 0; i < M.dim; ++i) M.labels[i] = lab("e", i);
  for (int i = 0; i <= m - 1; ++i) M.F[i] = i + n;
  for (int i = 0; i <= n - 1; ++i) M.V[i] = i + m;
  M.validate();
  return M;
}

MonomialModule direct_sum(const std::vector<MonomialModule>& blocks, const PairingPlan& plan) {
  if (blocks.empty()) bad("direct_sum: need at least one block");
  const int nb = static_cast<int>(blocks.size());
  std::vector<int> off(nb + 1, 0);
  for (int b = 0; b < nb; ++b) {
    blocks[b].validate();
    off[b + 1] = off[b] + blocks[b].dim;
  }
  MonomialModule M;
  M.dim = off[nb];
  if (M.dim > 63) bad("direct_sum: total dimension exceeds 63");
  M.labels.resize(M.dim);
  M.F.assign(M.dim, kZeroTarget);
  M.V.assign(M.dim, kZeroTarget);
  M.component.assign(M.dim, kNoComponent);
  M.partner.assign(M.dim, kNoPartner);
  for (int b = 0; b < nb; ++b) {
    const MonomialModule& B = blocks[b];
    for (int i = 0; i < B.dim; ++i) {
      std::ostringstream os;
      os << 'b' << b << '.' << B.labels[i];
      M.labels[off[b] + i] = os.str();
      if (B.F[i] != kZeroTarget) M.F[off[b] + i] = off[b] + B.F[i];
      if (B.V[i] != kZeroTarget) M.V[off[b] + i] = off[b] + B.V[i];
      M.component[off[b] + i] = B.component[i];
      if (B.paired) M.partner[off[b] + i] = off[b] + B.partner[i];
    }
  }
  std::vector<char> covered(nb, 0);
  for (int b = 0; b < nb; ++b) covered[b] = blocks[b].paired ? 1 : 0;
  for (auto [i, j] : plan.dual_pairs) {
    if (i < 0 || j < 0 || i >= nb || j >= nb || i > j) bad("direct_sum: bad dual pair indices");
    if (covered[i] || covered[j]) bad("direct_sum: block already paired");
    if (blocks[i].dim != blocks[j].dim) bad("direct_sum: dual blocks must have equal dimension");
    const int d = blocks[i].dim;
    if (i == j && d % 2 != 0) bad("direct_sum: self-dual block needs even dimension");
    for (int k = 0; k < d; ++k) {
      M.partner[off[i] + k] = off[j] + (d - 1 - k);
      M.partner[off[j] + (d - 1 - k)] = off[i] + k;
    }
    covered[i] = covered[j] = 1;
  }
  M.paired = std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
  M.validate();
  return M;
}

Subspace apply_F(const MonomialModule& M, Subspace s) {
  Subspace out = 0;
  for (int i = 0; i < M.dim; ++i)
    if ((s >> i & 1) && M.F[i] != kZeroTarget) out |= 1ULL << M.F[i];
  return out;
}

Subspace preimage_V(const MonomialModule& M, Subspace s) {
  Subspace out = 0;
  for (int i = 0; i < M.dim; ++i)
    if (M.V[i] == kZeroTarget || (s >> M.V[i] & 1)) out |= 1ULL << i;
  return out;
}

Subspace complement(const MonomialModule& M, Subspace s) {
  if (!M.paired) bad("complement requires a paired module");
  Subspace out = 0;
  for (int i = 0; i < M.dim; ++i)
    if (!(s >> M.partner[i] & 1)) out |= 1ULL << i;
  return out;
}

Chain canonical_filtration(const MonomialModule& M) {
  M.validate();
  auto S = close_under_ops(M, {0, M.full()}, /*with_complement=*/true);
  if (!is_chain_set(S))
    throw std::domain_error("dieudonne: canonical filtration is not a chain");
  return sorted_chain(S);
}

namespace {

bool refine(const MonomialModule& M, std::set<Subspace>& S, InsertionOrder order) {
  // locate the lowest gap of at least two dimensions
  Chain c = sorted_chain(S);
  size_t g = c.size();
  for (size_t i = 1; i < c.size(); ++i)
    if (popcount(c[i]) - popcount(c[i - 1]) >= 2) {
      g = i;
      break;
    }
  if (g == c.size()) return true;  // complete flag
  const Subspace A = c[g - 1], B = c[g];
  std::vector<int> candidates;
  for (int x = 0; x < M.dim; ++x)
    if ((B >> x & 1) && !(A >> x & 1)) candidates.push_back(x);
  if (order == InsertionOrder::reverse) std::reverse(candidates.begin(), candidates.end());
  for (int x : candidates) {
    std::set<Subspace> T = S;
    T.insert(A | (1ULL << x));
    T = close_under_ops(M, std::move(T), /*with_complement=*/false);
    if (!is_chain_set(T)) continue;
    if (refine(M, T, order)) {
      S = std::move(T);
      return true;
    }
  }
  return false;
}

}  // namespace

Chain final_filtration(const MonomialModule& M, InsertionOrder order) {
  auto S = close_under_ops(M, {0, M.full()}, /*with_complement=*/true);
  if (!is_chain_set(S))
    throw std::domain_error("dieudonne: canonical filtration is not a chain");
  if (!refine(M, S, order))
    throw std::domain_error(
        "dieudonne: no refinement found (no complete coordinate flag is F/V-stable)");
  return sorted_chain(S);
}

namespace {

// per graded piece of the canonical filtration: F is zero or injective
struct CanonicalPiece {
  Subspace mask = 0;
  bool in_kernel = false;
};

std::vector<CanonicalPiece> canonical_pieces(const MonomialModule& M) {
  Chain can = canonical_filtration(M);
  Subspace ker = ker_F_mask(M);
  std::vector<CanonicalPiece> out;
  for (size_t i = 1; i < can.size(); ++i) {
    Subspace piece = can[i] & ~can[i - 1];
    Subspace hit = piece & ker;
    if (hit != 0 && hit != piece)
      throw std::domain_error("dieudonne: canonical piece mixes kernel and non-kernel vectors");
    out.push_back({piece, hit == piece});
  }
  return out;
}

}  // namespace

std::vector<int> eta_profile(const MonomialModule& M) {
  std::vector<int> out{0};
  for (const auto& p : canonical_pieces(M))
    for (int s = 0; s < popcount(p.mask); ++s)
      out.push_back(out.back() + (p.in_kernel ? 1 : 0));
  return out;
}

std::vector<int> eta_component_profile(const MonomialModule& M, int comp) {
  if (comp != 1 && comp != 2) bad("eta_component_profile: component must be 1 or 2");
  Subspace cm = component_mask(M, comp);
  std::vector<int> out{0};
  for (const auto& p : canonical_pieces(M))
    for (int s = 0; s < popcount(p.mask & cm); ++s)
      out.push_back(out.back() + (p.in_kernel ? 1 : 0));
  return out;
}

std::vector<int> eta(const MonomialModule& M, const Chain& flag) {
  if (static_cast<int>(flag.size()) != M.dim + 1)
    bad("eta expects a complete flag (dim+1 members)");
  for (size_t i = 0; i < flag.size(); ++i) {
    if (popcount(flag[i]) != static_cast<int>(i)) bad("eta: flag dimensions must be 0..dim");
    if (i > 0 && !nested(flag[i - 1], flag[i])) bad("eta: flag is not nested");
  }
  Subspace ker = ker_F_mask(M);
  std::vector<int> out(flag.size());
  for (size_t i = 0; i < flag.size(); ++i) out[i] = popcount(flag[i] & ker);
  return out;
}

std::vector<int> eta_component(const MonomialModule& M, const Chain& flag, int comp) {
  if (comp != 1 && comp != 2) bad("eta_component: component must be 1 or 2");
  Subspace cm = component_mask(M, comp);
  Subspace ker = ker_F_mask(M);
  std::vector<int> out;
  Subspace prev = ~0ULL;
  for (Subspace s : flag) {
    Subspace t = s & cm;
    if (t == prev) continue;
    prev = t;
    out.push_back(popcount(t & ker));
  }
  return out;
}

namespace {

CosetRep gamma_from_eta1(const std::vector<int>& e1, int b) {
  const int q1 = static_cast<int>(e1.size()) - 1;
  std::vector<int> jumps;
  for (int j = 1; j <= q1; ++j)
    if (e1[j] > e1[j - 1]) jumps.push_back(j);
  if (static_cast<int>(jumps.size()) != b)
    throw std::domain_error("dieudonne: eta jump count does not match b");
  return CosetRep{Signature{q1 - b, b}, jumps};
}

Perm siegel_from_eta(const std::vector<int>& ev) {
  const int q = (static_cast<int>(ev.size()) - 1) / 2;
  std::vector<int> jumps, nonjumps;
  for (int j = 1; j <= 2 * q; ++j)
    (ev[j] > ev[j - 1] ? jumps : nonjumps).push_back(j);
  if (static_cast<int>(jumps.size()) != q)
    throw std::domain_error("dieudonne: expected exactly half the steps to be eta jumps");
  std::vector<int> img(2 * q);
  for (int l = 0; l < q; ++l) img[jumps[l] - 1] = l + 1;
  for (int m = 0; m < q; ++m) img[nonjumps[m] - 1] = q + m + 1;
  return Perm::from_one_line(std::move(img));
}

}  // namespace

CosetRep extract_gamma(const MonomialModule& M, const Chain& flag, int b) {
  const int q1 = popcount(component_mask(M, 1));
  if (q1 == 0) bad("extract_gamma: module has no component-1 vectors");
  auto e1 = eta_component(M, flag, 1);
  if (static_cast<int>(e1.size()) != q1 + 1)
    bad("extract_gamma: flag does not restrict to a complete component flag");
  return gamma_from_eta1(e1, b);
}

CosetRep extract_gamma(const MonomialModule& M, int b) {
  const int q1 = popcount(component_mask(M, 1));
  if (q1 == 0) bad("extract_gamma: module has no component-1 vectors");
  return gamma_from_eta1(eta_component_profile(M, 1), b);
}

Perm extract_siegel(const MonomialModule& M, const Chain& flag) {
  if (M.dim % 2 != 0) bad("extract_siegel: dimension must be even");
  return siegel_from_eta(eta(M, flag));
}

Perm extract_siegel(const MonomialModule& M) {
  if (M.dim % 2 != 0) bad("extract_siegel: dimension must be even");
  return siegel_from_eta(eta_profile(M));
}

}  // namespace eo
