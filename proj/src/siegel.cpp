#include "eostrata/siegel.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "eostrata/dieudonne.hpp"

namespace eo {

namespace {

[[noreturn]] void bad(const std::string& msg) {
  throw std::invalid_argument("siegel: " + msg);
}

std::string profile_str(const SlopeProfile& p) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < p.parts.size(); ++i) {
    if (i) os << ',';
    os << p.parts[i];
  }
  os << ')';
  return os.str();
}

}  // namespace

// ---------- the Siegel index set W_q ----------

bool is_siegel_perm(const Perm& w) {
  const int deg = w.degree();
  if (deg < 2 || deg % 2 != 0) return false;
  const int q = deg / 2;
  const Perm winv = w.inverse();
  int prev_pos = 0;
  for (int t = 1; t <= q; ++t) {
    const int pos = winv(t);
    if (pos <= prev_pos) return false;
    prev_pos = pos;
  }
  for (int i = 1; i <= deg; ++i)
    if (w(i) + w(deg + 1 - i) != deg + 1) return false;
  return true;
}

void validate_siegel(const Perm& w) {
  if (!is_siegel_perm(w))
    bad("permutation is not in W_q (positions of 1..q increasing, "
        "w(i)+w(2q+1-i)=2q+1)");
}

std::vector<int> psi_nonjumps(int q, int u, int v) {
  validate(GammaUV{q, u, v});
  std::vector<int> nj;
  if (u == 1) {
    if (v > 2) nj = {q + 2 - v, q};
    // (1,2) keeps nj empty: eta jumps everywhere, the image is the identity
  } else if (u == 2) {
    if (v == q)
      nj = {1, 2};
    else if (q + 1 - v <= v - 2)
      nj = {2, q + 2 - v};
    else
      nj = {2, q + 3 - v};
  } else if (u == q - 1) {
    nj = {1, 2, 3, 4};
  } else {  // 2 < u < q-1
    if (v == q - 1)
      nj = {2, 3, 4, q + 3 - u};
    else if (v == q)
      nj = {1, 2, 4, q + 3 - u};
    else
      nj = {3, 4, q + 3 - v, q + 3 - u};
  }
  std::sort(nj.begin(), nj.end());
  for (size_t i = 0; i < nj.size(); ++i) {
    assert(nj[i] >= 1 && nj[i] <= q);
    assert(i == 0 || nj[i - 1] < nj[i]);
  }
  return nj;
}

Perm psi(int q, int u, int v) {
  const std::vector<int> nj = psi_nonjumps(q, u, v);
  std::vector<int> img(2 * q);
  int jumps = 0, skips = 0;
  for (int i = 1; i <= q; ++i) {
    if (std::binary_search(nj.begin(), nj.end(), i))
      img[i - 1] = q + (++skips);
    else
      img[i - 1] = ++jumps;
  }
  for (int i = q + 1; i <= 2 * q; ++i)
    img[i - 1] = 2 * q + 1 - img[2 * q - i];
  Perm w = Perm::from_one_line(std::move(img));
  assert(is_siegel_perm(w));
  return w;
}

Perm psi_oracle(int q, int u, int v) {
  return extract_siegel(standard_object_a2(q, u, v));
}

bool ss_contained(const Perm& w) {
  validate_siegel(w);
  const int q = w.degree() / 2;
  for (int i = 1; i <= (q + 1) / 2; ++i)
    if (w(i) != i) return false;
  return true;
}

bool f_nilpotent(const Perm& w) {
  validate_siegel(w);
  return w(1) == 1;
}

// ---------- minimal strata of non-supersingular Newton polygons ----------

int word_value(const std::string& word, int m, int n) {
  if (m < 0 || n < 0) bad("word_value requires m, n >= 0");
  int val = m + n;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it == 'F')
      val = std::max(0, val - n);
    else if (*it == 'V')
      val = std::min(m + n, val + m);
    else
      bad("word letters must be 'F' or 'V'");
  }
  return val;
}

void validate_profile(const SlopeProfile& p) {
  const int r = static_cast<int>(p.parts.size());
  int q = 0;
  for (int x : p.parts) {
    if (x < 0) bad("slope parts must be non-negative");
    q += x;
  }
  if (q < 1) bad("slope parts must sum to at least 1");
  for (int l = 0; l < r; ++l)
    if (std::gcd(p.parts[l], p.parts[r - 1 - l]) != 1)
      bad("mirrored slope parts must be coprime (parts " +
          std::to_string(l + 1) + " and " + std::to_string(r - l) + ")");
  bool non_half = false;
  for (int l = 0; l < r; ++l)
    if (p.parts[l] + p.parts[r - 1 - l] != 2) non_half = true;
  if (!non_half) bad("every slope equals 1/2: the profile is supersingular");
}

Perm minimal_omega(const SlopeProfile& p) {
  validate_profile(p);
  const int r = static_cast<int>(p.parts.size());
  std::vector<MonomialModule> blocks;
  std::vector<std::pair<int, int>> mn;  // (m_l, n_l) per block
  for (int l = 1; l <= r; ++l) {
    const int nl = p.parts[l - 1];
    const int ml = p.parts[r - l];
    mn.emplace_back(ml, nl);
    blocks.push_back(minimal_block(ml, nl));
  }
  PairingPlan plan;
  for (int i = 0; i < r - 1 - i; ++i) plan.dual_pairs.push_back({i, r - 1 - i});
  if (r % 2 == 1) plan.dual_pairs.push_back({r / 2, r / 2});
  const MonomialModule M = direct_sum(blocks, plan);

  // Every word over {F, V^-1} applied to the whole module reaches a member
  // of the canonical filtration whose per-block dimensions follow the
  // word-value recursion; eta there must equal sum min{n_l, value_l}.
  const std::vector<int> ev = eta_profile(M);
  std::set<std::vector<int>> seen;
  std::deque<std::vector<int>> queue;
  std::vector<int> start(r);
  for (int l = 0; l < r; ++l) start[l] = mn[l].first + mn[l].second;
  seen.insert(start);
  queue.push_back(start);
  while (!queue.empty()) {
    const std::vector<int> s = queue.front();
    queue.pop_front();
    int total = 0, expect = 0;
    for (int l = 0; l < r; ++l) {
      total += s[l];
      expect += std::min(mn[l].second, s[l]);
    }
    if (ev[total] != expect)
      throw std::logic_error(
          "siegel: minimal-stratum eta disagrees with the word-value "
          "recursion at profile " +
          profile_str(p));
    std::vector<int> f(r), vi(r);
    for (int l = 0; l < r; ++l) {
      f[l] = std::max(0, s[l] - mn[l].second);
      vi[l] = std::min(mn[l].first + mn[l].second, s[l] + mn[l].first);
    }
    if (seen.insert(f).second) queue.push_back(f);
    if (seen.insert(vi).second) queue.push_back(vi);
    if (seen.size() > 100000)
      throw std::logic_error("siegel: word-state exploration exceeded bound");
  }

  return extract_siegel(M);
}

std::vector<SlopeProfile> enumerate_minimal_profiles(int q) {
  if (q < 1) bad("require q >= 1");
  // Assemble block multisets: mirror pairs {x,y} with x <= y, gcd(x,y) = 1,
  // x+y >= 1, chosen in non-decreasing order, plus an optional middle part 1.
  std::vector<SlopeProfile> out;
  std::vector<std::pair<int, int>> pairs;

  auto emit = [&](bool middle) {
    bool non_half = false;
    for (auto [x, y] : pairs)
      if (x + y != 2) non_half = true;
    if (!non_half) return;  // every slope 1/2: supersingular, not admissible
    SlopeProfile p;
    for (auto [x, y] : pairs) p.parts.push_back(x);
    if (middle) p.parts.push_back(1);
    for (auto it = pairs.rbegin(); it != pairs.rend(); ++it)
      p.parts.push_back(it->second);
    validate_profile(p);
    out.push_back(std::move(p));
  };

  auto rec = [&](auto&& self, int remaining, std::pair<int, int> min_pair) -> void {
    if (remaining == 0) {
      emit(false);
      return;
    }
    if (remaining == 1) emit(true);  // middle block uses the last unit
    for (int s = min_pair.first + min_pair.second; s <= remaining; ++s)
      for (int x = 0; 2 * x <= s; ++x) {
        const int y = s - x;
        if (std::pair{x, y} < min_pair) continue;
        if (std::gcd(x, y) != 1) continue;
        pairs.emplace_back(x, y);
        self(self, remaining - s, {x, y});
        pairs.pop_back();
      }
  };
  rec(rec, q, {0, 1});
  return out;
}

// ---------- classification against the supersingular locus ----------

std::string to_string(SSVerdict v) {
  switch (v) {
    case SSVerdict::Contained:
      return "Contained";
    case SSVerdict::Intersects:
      return "Intersects";
    case SSVerdict::Disjoint:
      return "Disjoint";
    default:
      return "Unknown";
  }
}

namespace {

SSStatus classify_impl(
    int q, int u, int v, const std::map<GammaUV, Certificate>& certificates,
    const std::vector<std::pair<Perm, SlopeProfile>>& minimals) {
  const GammaUV g{q, u, v};
  validate(g);
  const Perm w = psi(q, u, v);
  SSStatus st;

  const bool contained = ss_contained(w);
  if (contained)
    st.provenance.push_back(
        "Siegel permutation fixes 1..ceil(q/2): stratum contained in the "
        "supersingular locus");

  bool disjoint = false;
  if (!f_nilpotent(w)) {
    disjoint = true;
    st.provenance.push_back(
        "F acts invertibly on a subobject (nonzero p-rank): disjoint from "
        "the supersingular locus");
  }
  for (const auto& [omega, prof] : minimals) {
    if (w == omega) {
      disjoint = true;
      st.provenance.push_back(
          "equals the minimal stratum of the non-supersingular slope "
          "profile " +
          profile_str(prof));
      break;
    }
  }

  const auto cert = certificates.find(g);
  const bool certified = cert != certificates.end();
  if (certified && !contained)
    st.provenance.push_back("supersingular product certificate (seed " +
                            cert->second.front().map + ")");

  if (contained && disjoint)
    throw std::logic_error(
        "siegel: containment and disjointness criteria both fired for (" +
        std::to_string(u) + "," + std::to_string(v) + ") at q=" +
        std::to_string(q));
  if (certified && disjoint)
    throw std::logic_error(
        "siegel: product certificate contradicts a disjointness criterion "
        "for (" +
        std::to_string(u) + "," + std::to_string(v) + ") at q=" +
        std::to_string(q));

  st.verdict = contained    ? SSVerdict::Contained
               : certified  ? SSVerdict::Intersects
               : disjoint   ? SSVerdict::Disjoint
                            : SSVerdict::Unknown;
  return st;
}

std::vector<std::pair<Perm, SlopeProfile>> minimal_omegas(int q) {
  std::vector<std::pair<Perm, SlopeProfile>> out;
  for (SlopeProfile& p : enumerate_minimal_profiles(q)) {
    Perm w = minimal_omega(p);
    out.emplace_back(std::move(w), std::move(p));
  }
  return out;
}

}  // namespace

SSStatus classify(int q, int u, int v,
                  const std::map<GammaUV, Certificate>& certificates) {
  return classify_impl(q, u, v, certificates, minimal_omegas(q));
}

std::vector<StratumReport> ss_report(int q) {
  if (q < 2) bad("require q >= 2");
  const auto certificates = certified_ss_intersections(q);
  const auto minimals = minimal_omegas(q);
  std::vector<StratumReport> out;
  for (int u = 1; u < q; ++u)
    for (int v = u + 1; v <= q; ++v) {
      StratumReport r;
      r.stratum = GammaUV{q, u, v};
      r.dim = dim(r.stratum);
      r.status = classify_impl(q, u, v, certificates, minimals);
      out.push_back(std::move(r));
    }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::pair(a.dim, a.stratum) < std::pair(b.dim, b.stratum);
  });
  return out;
}

}  // namespace eo
