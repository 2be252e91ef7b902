#include "eostrata/closure.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

namespace eo {

namespace {

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument("closure: " + msg);
}

// ---------------------------------------------------------------------------
// Bruhat dominance against a fixed right-hand side, via precomputed sorted
// prefixes. dominated(e, T) iff for every k the i-th smallest of e(1..k) is
// <= the i-th smallest of T's permutation's first k images.
// ---------------------------------------------------------------------------

constexpr int kMaxDeg = 32;  // dominance scratch bound (scan reaches degree 20)

struct PrefixTable {
  int n = 0;
  std::vector<int> rows;  // rows[k*n + i] = (i+1)-th smallest of first k+1 images
};

PrefixTable make_prefix_table(const Perm& p) {
  const int n = p.degree();
  PrefixTable t;
  t.n = n;
  t.rows.assign(static_cast<size_t>(n) * n, 0);
  std::vector<int> sorted;
  sorted.reserve(n);
  for (int k = 0; k < n; ++k) {
    int v = p(k + 1);
    sorted.insert(std::upper_bound(sorted.begin(), sorted.end(), v), v);
    std::copy(sorted.begin(), sorted.end(), t.rows.begin() + static_cast<size_t>(k) * n);
  }
  return t;
}

bool dominated(const int* e, const PrefixTable& t) {
  const int n = t.n;
  int sorted[kMaxDeg];
  for (int k = 0; k < n; ++k) {
    // insert e[k] into sorted[0..k)
    int v = e[k], pos = k;
    while (pos > 0 && sorted[pos - 1] > v) {
      sorted[pos] = sorted[pos - 1];
      --pos;
    }
    sorted[pos] = v;
    const int* row = t.rows.data() + static_cast<size_t>(k) * n;
    for (int i = 0; i <= k; ++i)
      if (sorted[i] > row[i]) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Candidate enumeration for the pruned strategy.
//
// For a fixed source gamma the orbit {h . gamma : h in W_J} is walked with
// every step a single simple reflection on each side of the candidate:
//   h -> s_p h   ==>   e -> s_p e s_{p'},  p' = w0J-conjugate index of p,
// so the candidate e, its inverse and its Coxeter length all update in O(1).
// The walk interleaves a Steinhaus-Johnson-Trotter (plain changes) pass over
// the arrangements of the block {3..q} with toggles of the S_{{1,2}} factor.
// The arrangements are partitioned by the symbol at position 3 into q-2
// lexicographic ranges; ranges are independent (thread contract) and their
// result maps are merged in fixed range order, so output never depends on
// the thread count.
// ---------------------------------------------------------------------------

constexpr std::uint64_t kReject = std::numeric_limits<std::uint64_t>::max();

int inversion_count(const int* e, int n) {
  int inv = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (e[i] > e[j]) ++inv;
  return inv;
}

std::uint64_t pack16(const int* one_line, int n) {
  std::uint64_t key = 0;
  for (int i = 0; i < n; ++i)
    key |= static_cast<std::uint64_t>(one_line[i] - 1) << (4 * i);
  return key;
}

Perm unpack16(std::uint64_t key, int n) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = static_cast<int>((key >> (4 * i)) & 0xF) + 1;
  return Perm::from_one_line(std::move(img));
}

// Plain changes (adjacent-transposition Gray code) over m items.
// next() returns the 1-based left index of the next adjacent swap within the
// sub-array, or 0 when the enumeration is exhausted.
struct PlainChanges {
  int m;
  std::vector<int> c, o;
  explicit PlainChanges(int m_) : m(m_), c(m_ + 1, 0), o(m_ + 1, 1) {}
  int next() {
    int j = m, s = 0;
    while (j >= 1) {
      int q = c[j] + o[j];
      if (q >= 0 && q != j) {
        int left = j - std::max(c[j], q) + s;
        c[j] = q;
        return left;
      }
      if (q == j) {
        if (j == 1) return 0;
        ++s;
      }
      o[j] = -o[j];
      --j;
    }
    return 0;
  }
};

struct RangeScanParams {
  int q = 0;
  int max_len = 0;
  const PrefixTable* gate = nullptr;  // full insert-time filter
  // cheap necessary conditions derived from the gate's first two rows
  int g1 = 0, g2a = 0, g2b = 0;
};

// Walks one lexicographic range (symbol t fixed at position 3) of the orbit
// of `gamma` and records accepted candidates: packed(e) -> packed(h), where
// h is the first witness met in walk order. Entries failing the gate are
// memoized as kReject so they are tested once.
void scan_range(const RangeScanParams& P, const Perm& gamma, int t,
                std::unordered_map<std::uint64_t, std::uint64_t>& out) {
  const int q = P.q;
  // g = [1, 2, t, remaining block symbols ascending]; h = sigma * g^{-1}
  std::vector<int> g(q), gpos(q + 1);
  g[0] = 1;
  g[1] = 2;
  g[2] = t;
  {
    int w = 3;
    for (int sym = 3; sym <= q; ++sym)
      if (sym != t) g[w++] = sym;
  }
  for (int i = 0; i < q; ++i) gpos[g[i]] = i + 1;

  Perm g0 = Perm::from_one_line(g);
  Perm e0 = dot_action(g0.inverse(), gamma);

  int e[16], einv[16];
  for (int i = 0; i < q; ++i) e[i] = e0(i + 1);
  for (int i = 0; i < q; ++i) einv[e[i] - 1] = i;
  int len = e0.length();
  bool sigma = false;

  auto mul_left = [&](int a) {  // e <- s_a * e
    int i = einv[a - 1], j = einv[a];
    len += (i < j) ? 1 : -1;
    e[i] = a + 1;
    e[j] = a;
    einv[a - 1] = j;
    einv[a] = i;
  };
  auto mul_right = [&](int b) {  // e <- e * s_b
    int x = e[b - 1], y = e[b];
    len += (x < y) ? 1 : -1;
    e[b - 1] = y;
    e[b] = x;
    einv[x - 1] = b;
    einv[y - 1] = b - 1;
  };

  auto visit = [&] {
    if (len > P.max_len) return;
    int a = e[0], b = e[1];
    if (a > P.g2b || b > P.g2b || std::min(a, b) > P.g2a || a > P.g1) return;
    std::uint64_t key = pack16(e, q);
    auto it = out.find(key);
    if (it != out.end()) return;
    if (!dominated(e, *P.gate)) {
      out.emplace(key, kReject);
      return;
    }
    int h[16];
    for (int x = 1; x <= q; ++x) {
      int y = gpos[x];
      if (sigma && y <= 2) y = 3 - y;
      h[x - 1] = y;
    }
    out.emplace(key, pack16(h, q));
  };

  PlainChanges sjt(q - 3);
  visit();
  for (;;) {
    // toggle the S_{{1,2}} factor: h -> s_1 h, e -> s_1 e s_1
    sigma = !sigma;
    mul_left(1);
    mul_right(1);
    visit();
    int w = sjt.next();
    if (w == 0) break;
    // adjacent swap at block positions: h -> s_p h, e -> s_p e s_{q+2-p}
    int i0 = 2 + w;  // 0-based left index in g
    std::swap(g[i0], g[i0 + 1]);
    gpos[g[i0]] = i0 + 1;
    gpos[g[i0 + 1]] = i0 + 2;
    int p = i0 + 1;  // 1-based simple reflection index
    mul_left(p);
    mul_right(q + 2 - p);
    visit();
  }
}

struct Candidate {
  std::uint64_t key = 0;
  std::uint64_t h_key = 0;
  int e[16] = {};
  int len = 0;
};

// Runs scan_range over all q-2 ranges (optionally in parallel) and merges the
// per-range maps in fixed range order, keeping the first witness seen.
std::vector<Candidate> collect_candidates(const RangeScanParams& P, const Perm& gamma,
                                          int thread_budget) {
  const int q = P.q;
  const int ranges = q - 2;
  std::vector<std::unordered_map<std::uint64_t, std::uint64_t>> maps(ranges);
  if (thread_budget <= 1 || ranges == 1) {
    for (int r = 0; r < ranges; ++r) scan_range(P, gamma, 3 + r, maps[r]);
  } else {
    std::atomic<int> next{0};
    auto worker = [&] {
      for (;;) {
        int r = next.fetch_add(1);
        if (r >= ranges) return;
        scan_range(P, gamma, 3 + r, maps[r]);
      }
    };
    int nt = std::min(thread_budget, ranges);
    std::vector<std::thread> pool;
    pool.reserve(nt);
    for (int i = 0; i < nt; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  std::unordered_map<std::uint64_t, std::uint64_t> merged;
  for (int r = 0; r < ranges; ++r)
    for (const auto& [k, h] : maps[r])
      if (h != kReject) merged.emplace(k, h);  // first range wins on ties
  std::vector<Candidate> out;
  out.reserve(merged.size());
  for (const auto& [k, h] : merged) {
    Candidate c;
    c.key = k;
    c.h_key = h;
    for (int i = 0; i < q; ++i) c.e[i] = static_cast<int>((k >> (4 * i)) & 0xF) + 1;
    c.len = inversion_count(c.e, q);
    out.push_back(c);
  }
  std::sort(out.begin(), out.end(),
            [](const Candidate& a, const Candidate& b) { return a.key < b.key; });
  return out;
}

RangeScanParams make_params(int q, int max_len, const PrefixTable& gate) {
  RangeScanParams P;
  P.q = q;
  P.max_len = max_len;
  P.gate = &gate;
  P.g1 = gate.rows[0];
  P.g2a = gate.rows[q];      // smallest of first two images
  P.g2b = gate.rows[q + 1];  // largest of first two images
  return P;
}

}  // namespace

bool stabilizes_blocks(const Perm& h) {
  if (h.degree() < 3) return false;
  int a = h(1), b = h(2);
  return (a == 1 && b == 2) || (a == 2 && b == 1);
}

Perm dot_action(const Perm& h, const Perm& w) {
  if (h.degree() != w.degree()) fail("dot_action: degree mismatch");
  if (!stabilizes_blocks(h)) fail("dot_action: h must stabilize the blocks {1,2} and {3..q}");
  Perm w0J = longest_element_block2(h.degree());
  return h * w * w0J * h.inverse() * w0J;
}

std::optional<ClosureWitness> closure_leq(const GammaUV& source, const GammaUV& target,
                                          SearchStrategy strategy) {
  validate(source);
  validate(target);
  if (source.q != target.q) fail("closure_leq: q mismatch");
  const int q = source.q;
  if (q < 3 || q > 16) fail("closure_leq: supported range is 3 <= q <= 16");
  Perm gs = to_permutation(source), gt = to_permutation(target);

  if (strategy == SearchStrategy::exhaustive) {
    std::vector<int> head0{1, 2}, head1{2, 1};
    for (const auto& head : {head0, head1}) {
      std::vector<int> arr(q - 2);
      for (int i = 0; i < q - 2; ++i) arr[i] = i + 3;
      do {
        std::vector<int> img = head;
        img.insert(img.end(), arr.begin(), arr.end());
        Perm h = Perm::from_one_line(img);
        if (bruhat_leq(dot_action(h, gs), gt))
          return ClosureWitness{h, source, target};
      } while (std::next_permutation(arr.begin(), arr.end()));
    }
    return std::nullopt;
  }

  PrefixTable gate = make_prefix_table(gt);
  RangeScanParams P = make_params(q, gt.length(), gate);
  // candidates are pre-filtered against the target itself
  auto cands = collect_candidates(P, gs, 1);
  if (cands.empty()) return std::nullopt;
  Perm h = unpack16(cands.front().h_key, q);
  ClosureWitness w{h, source, target};
  if (!bruhat_leq(dot_action(h, gs), gt))
    throw std::logic_error("closure: witness failed verification");
  return w;
}

ClosurePoset closure_poset(int q, SearchStrategy strategy, int thread_budget) {
  if (q < 3 || q > 16) fail("closure_poset: supported range is 3 <= q <= 16");
  if (thread_budget < 1) thread_budget = 1;

  ClosurePoset P;
  P.q = q;
  P.strata = all_strata(q);
  const int n = static_cast<int>(P.strata.size());
  std::vector<Perm> gammas(n);
  std::vector<int> lens(n);
  std::vector<PrefixTable> tables(n);
  for (int i = 0; i < n; ++i) {
    gammas[i] = to_permutation(P.strata[i]);
    lens[i] = gammas[i].length();
    tables[i] = make_prefix_table(gammas[i]);
  }
  const int max_len = *std::max_element(lens.begin(), lens.end());
  // the index poset has the unique Bruhat-maximal representative (q-1, q);
  // every accepted candidate must be dominated by it
  const PrefixTable& gate = tables[n - 1];

  P.leq.assign(n, std::vector<bool>(n, false));
  std::vector<std::vector<std::uint64_t>> wit(n, std::vector<std::uint64_t>(n, kReject));

  if (strategy == SearchStrategy::pruned) {
    RangeScanParams params = make_params(q, max_len, gate);
    for (int i = 0; i < n; ++i) {
      auto cands = collect_candidates(params, gammas[i], thread_budget);
      for (int j = 0; j < n; ++j) {
        if (j == i) {
          P.leq[i][i] = true;
          continue;
        }
        for (const auto& c : cands) {
          if (c.len > lens[j]) continue;
          if (dominated(c.e, tables[j])) {
            P.leq[i][j] = true;
            wit[i][j] = c.h_key;
            break;
          }
        }
      }
    }
  } else {
    std::atomic<int> next{0};
    auto worker = [&] {
      for (;;) {
        int i = next.fetch_add(1);
        if (i >= n) return;
        P.leq[i][i] = true;
        int remaining = n - 1;
        std::vector<int> head0{1, 2}, head1{2, 1};
        for (const auto& head : {head0, head1}) {
          std::vector<int> arr(q - 2);
          for (int t = 0; t < q - 2; ++t) arr[t] = t + 3;
          do {
            std::vector<int> img = head;
            img.insert(img.end(), arr.begin(), arr.end());
            Perm h = Perm::from_one_line(img);
            Perm e = dot_action(h, gammas[i]);
            int earr[16];
            for (int x = 0; x < q; ++x) earr[x] = e(x + 1);
            for (int j = 0; j < n; ++j) {
              if (j == i || P.leq[i][j]) continue;
              if (dominated(earr, tables[j])) {
                P.leq[i][j] = true;
                wit[i][j] = pack16(h.images().data(), q);
                --remaining;
              }
            }
            if (remaining == 0) break;
          } while (std::next_permutation(arr.begin(), arr.end()));
          if (remaining == 0) break;
        }
      }
    };
    // each worker owns whole rows, so rows never race
    int nt = std::min(thread_budget, n);
    if (nt <= 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      pool.reserve(nt);
      for (int t = 0; t < nt; ++t) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
    }
  }

  // internal consistency: a closure order must be a partial order
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i != j && P.leq[i][j] && P.leq[j][i])
        throw std::logic_error("closure: computed relation violates antisymmetry");
    }
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (!P.leq[i][k]) continue;
      for (int j = 0; j < n; ++j)
        if (P.leq[k][j] && !P.leq[i][j])
          throw std::logic_error("closure: computed relation violates transitivity");
    }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || !P.leq[i][j]) continue;
      bool is_cover = true;
      for (int k = 0; k < n && is_cover; ++k)
        if (k != i && k != j && P.leq[i][k] && P.leq[k][j]) is_cover = false;
      if (!is_cover) continue;
      CoverRelation c;
      c.lower = P.strata[i];
      c.upper = P.strata[j];
      if (bruhat_leq_reps(P.strata[i], P.strata[j])) {
        c.kind = CoverKind::Bruhat;
        c.witness = Perm(q);
      } else {
        c.kind = CoverKind::NonBruhat;
        c.witness = (wit[i][j] != kReject) ? unpack16(wit[i][j], q) : Perm(q);
        if (!bruhat_leq(dot_action(c.witness, gammas[i]), gammas[j]))
          throw std::logic_error("closure: cover witness failed verification");
      }
      P.covers.push_back(std::move(c));
    }
  // strata are (dim,u,v)-sorted, so (i,j) scan order is already canonical
  return P;
}

std::vector<TheoremRelation> theorem_relations(int q) {
  if (q < 2) fail("theorem_relations: q must be at least 2");
  std::vector<TheoremRelation> out;
  if (q < 5) return out;
  auto prod = [&](int j, int i, bool large) {
    Perm h(q);
    for (int d = 0; d <= i; ++d) h = h * Perm::simple(q, j - d);
    for (int d = 1; d <= i; ++d)
      h = h * Perm::simple(q, large ? (q + 1 - j + d) : (q - j + d));
    return h;
  };
  // single-reflection family
  for (int j = 3; 2 * j < q; ++j)
    out.push_back({GammaUV{q, j + 1, q + 1 - j}, GammaUV{q, j, q + 3 - j},
                   Perm::simple(q, j), false});
  for (int j = (q + 2) / 2 + 1; j <= q - 1; ++j) {
    if (2 * j <= q + 2) continue;
    out.push_back({GammaUV{q, q - j, j + 1}, GammaUV{q, q + 2 - j, j},
                   Perm::simple(q, j), false});
  }
  // longer-witness family
  for (int j = 4; 2 * j < q; ++j)
    for (int i = 1; i <= j - 3; ++i)
      out.push_back({GammaUV{q, j + 1, q + 1 - j + i}, GammaUV{q, j, q + 3 - j + i},
                     prod(j, i, false), true});
  for (int j = 1; j <= q - 1; ++j) {
    if (2 * j <= q + 4) continue;
    for (int i = 1; 2 * i < 2 * j - q - 2; ++i)
      out.push_back({GammaUV{q, q - j, j + 1 - i}, GammaUV{q, q + 2 - j, j - i},
                     prod(j, i, true), true});
  }
  return out;
}

long long expected_primary_count(int q) {
  if (q < 5) return 0;
  return 2LL * ((q + 1) / 2) - 5;
}

long long expected_secondary_count(int q) {
  if (q < 7) return 0;
  long long m = (q + 1) / 2 - 3;
  return m * m;
}

ConjectureReport verify_conjecture(int q, int thread_budget, SearchStrategy strategy) {
  ClosurePoset poset = closure_poset(q, strategy, thread_budget);
  const int n = static_cast<int>(poset.strata.size());
  auto index_of = [&](const GammaUV& g) -> int {
    for (int i = 0; i < n; ++i)
      if (poset.strata[i] == g) return i;
    fail("verify_conjecture: unknown stratum");
  };

  // generated order: Bruhat relations + theorem relations, transitively closed
  std::vector<std::vector<bool>> gen(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      gen[i][j] = bruhat_leq_reps(poset.strata[i], poset.strata[j]);
  for (const auto& rel : theorem_relations(q))
    gen[index_of(rel.lower)][index_of(rel.upper)] = true;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      if (!gen[i][k]) continue;
      for (int j = 0; j < n; ++j)
        if (gen[k][j]) gen[i][j] = true;
    }

  ConjectureReport rep;
  rep.q = q;
  rep.holds = true;
  for (int i = 0; i < n && rep.holds; ++i)
    for (int j = 0; j < n; ++j)
      if (gen[i][j] != poset.leq[i][j]) {
        rep.holds = false;
        break;
      }

  for (const auto& c : poset.covers)
    if (c.kind == CoverKind::NonBruhat) rep.non_bruhat_covers.push_back(c);

  if (!rep.holds) {
    auto covers_of = [&](const std::vector<std::vector<bool>>& leq) {
      std::vector<std::pair<int, int>> cs;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (i == j || !leq[i][j]) continue;
          bool cover = true;
          for (int k = 0; k < n && cover; ++k)
            if (k != i && k != j && leq[i][k] && leq[k][j]) cover = false;
          if (cover) cs.emplace_back(i, j);
        }
      return cs;
    };
    for (auto [i, j] : covers_of(poset.leq))
      if (!gen[i][j]) rep.extra.emplace_back(poset.strata[i], poset.strata[j]);
    for (auto [i, j] : covers_of(gen))
      if (!poset.leq[i][j]) rep.missing.emplace_back(poset.strata[i], poset.strata[j]);
  }
  return rep;
}

std::vector<ScanRelation> single_transposition_relations(int q) {
  if (q < 3) fail("single_transposition_relations: q must be at least 3");
  auto strata = all_strata(q);
  const int n = static_cast<int>(strata.size());
  std::vector<Perm> gammas(n);
  std::vector<int> lens(n);
  std::vector<PrefixTable> tables(n);
  for (int i = 0; i < n; ++i) {
    gammas[i] = to_permutation(strata[i]);
    lens[i] = gammas[i].length();
    tables[i] = make_prefix_table(gammas[i]);
  }
  std::vector<int> gens;
  gens.push_back(1);
  for (int k = 3; k <= q - 1; ++k) gens.push_back(k);

  std::vector<ScanRelation> out;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j || bruhat_leq_reps(strata[i], strata[j])) continue;
      for (int k : gens) {
        Perm e = dot_action(Perm::simple(q, k), gammas[i]);
        if (e.length() > lens[j]) continue;
        int earr[kMaxDeg];
        for (int x = 0; x < q; ++x) earr[x] = e(x + 1);
        if (dominated(earr, tables[j])) {
          out.push_back({strata[i], strata[j], k});
          break;  // smallest witness index only
        }
      }
    }
  }
  return out;
}

ScanReport scan_report(int q) {
  ScanReport rep;
  rep.q = q;
  rep.relations = single_transposition_relations(q);

  auto strata = all_strata(q);
  const int n = static_cast<int>(strata.size());
  auto index_of = [&](const GammaUV& g) -> int {
    for (int i = 0; i < n; ++i)
      if (strata[i] == g) return i;
    fail("scan_report: unknown stratum");
  };

  // generated order: Bruhat + both theorem families, transitively closed
  std::vector<std::vector<bool>> gen(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) gen[i][j] = bruhat_leq_reps(strata[i], strata[j]);
  for (const auto& rel : theorem_relations(q))
    gen[index_of(rel.lower)][index_of(rel.upper)] = true;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      if (!gen[i][k]) continue;
      for (int j = 0; j < n; ++j)
        if (gen[k][j]) gen[i][j] = true;
    }

  std::vector<std::vector<bool>> found(n, std::vector<bool>(n, false));
  for (const auto& r : rep.relations) {
    int i = index_of(r.lower), j = index_of(r.upper);
    found[i][j] = true;
    if (!gen[i][j]) rep.beyond_generated.emplace_back(r.lower, r.upper);
  }
  for (const auto& rel : theorem_relations(q)) {
    if (rel.secondary) continue;
    if (!found[index_of(rel.lower)][index_of(rel.upper)])
      rep.primary_missing.emplace_back(rel.lower, rel.upper);
  }
  rep.agree = rep.primary_missing.empty() && rep.beyond_generated.empty();
  return rep;
}

}  // namespace eo
