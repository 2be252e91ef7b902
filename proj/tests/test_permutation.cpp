#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "eostrata/permutation.hpp"

using eo::Perm;

namespace {

// Independent Bruhat oracle: BFS over reflection multiplications.
// x < y iff y is reachable from x by steps x -> x*t (t any transposition)
// that increase length by at least 1, with length strictly increasing
// toward y. Classic characterization: x <= y iff there is a chain
// x = x0, x1, ..., xk = y where x_{i+1} = x_i * t and l(x_{i+1}) > l(x_i).
bool bruhat_leq_oracle(const Perm& x, const Perm& y) {
  if (x == y) return true;
  const int n = x.degree();
  if (x.length() >= y.length()) return false;
  std::set<Perm> layer{x}, seen{x};
  while (!layer.empty()) {
    std::set<Perm> next;
    for (const Perm& p : layer) {
      for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
          Perm q = p * Perm::transposition(n, a, b);
          if (q.length() <= p.length() || q.length() > y.length()) continue;
          if (q == y) return true;
          if (seen.insert(q).second) next.insert(q);
        }
    }
    layer = std::move(next);
  }
  return false;
}

std::vector<Perm> symmetric_group(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::vector<Perm> out;
  do {
    out.push_back(Perm::from_one_line(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace

TEST_CASE("composition applies the right factor first") {
  // (2,3) after (1,2): 1 -> 2 -> 3
  Perm t23 = Perm::transposition(4, 2, 3);
  Perm t12 = Perm::transposition(4, 1, 2);
  Perm p = t23 * t12;
  CHECK(p(1) == 3);
  CHECK(p(2) == 1);
  CHECK(p(3) == 2);
  CHECK(p(4) == 4);
  CHECK(p.one_line() == "[3,1,2,4]");
}

TEST_CASE("constructors validate input") {
  CHECK_THROWS(Perm::from_one_line({1, 1, 2}));
  CHECK_THROWS(Perm::from_one_line({0, 1, 2}));
  CHECK_THROWS(Perm::from_one_line({1, 2, 4}));
  CHECK_THROWS(Perm::transposition(3, 1, 1));
  CHECK_THROWS(Perm::transposition(3, 0, 2));
  CHECK_THROWS(Perm::simple(3, 3));
  CHECK_THROWS(Perm::simple(3, 0));
  CHECK_THROWS(Perm::from_cycles(4, {{1, 2, 1}}));
  CHECK_THROWS(Perm::from_cycles(4, {{1, 5}}));
}

TEST_CASE("inverse and identity") {
  Perm p = Perm::from_one_line({3, 1, 4, 2});
  CHECK((p * p.inverse()).is_identity());
  CHECK((p.inverse() * p).is_identity());
  CHECK(p.inverse().one_line() == "[2,4,1,3]");
  CHECK(Perm(5).is_identity());
}

TEST_CASE("length is the inversion count and steps by one under simples") {
  CHECK(Perm(4).length() == 0);
  CHECK(eo::longest_element(4).length() == 6);
  for (const Perm& p : symmetric_group(5)) {
    for (int i = 1; i <= 4; ++i) {
      int d = (p * Perm::simple(5, i)).length() - p.length();
      CHECK(std::abs(d) == 1);
      int dl = (Perm::simple(5, i) * p).length() - p.length();
      CHECK(std::abs(dl) == 1);
    }
    CHECK(p.length() == p.inverse().length());
  }
}

TEST_CASE("cycle form round trips") {
  Perm p = Perm::from_cycles(6, {{2, 3}, {1, 2}});
  CHECK(p.one_line() == "[3,1,2,4,5,6]");
  CHECK(p.cycle_form() == "(1,3,2)");
  CHECK(Perm::parse(p.cycle_form(), 6) == p);
  CHECK(Perm::parse("[3,1,4,2]") == Perm::from_one_line({3, 1, 4, 2}));
  CHECK(Perm::parse(" [ 3 , 1 , 4 , 2 ] ") == Perm::from_one_line({3, 1, 4, 2}));
  CHECK(Perm::parse("()", 3).is_identity());
  CHECK(Perm::parse("(2,3)(1,2)", 4).one_line() == "[3,1,2,4]");
  CHECK_THROWS(Perm::parse("(1,2)"));      // cycle form needs a degree
  CHECK_THROWS(Perm::parse("[1,2", 0));    // unterminated
  CHECK_THROWS(Perm::parse("garbage"));
  for (const Perm& p5 : symmetric_group(5)) {
    CHECK(Perm::parse(p5.one_line()) == p5);
    CHECK(Perm::parse(p5.cycle_form(), 5) == p5);
  }
}

TEST_CASE("longest elements") {
  CHECK(eo::longest_element(4).one_line() == "[4,3,2,1]");
  CHECK(eo::longest_element_block2(5).one_line() == "[2,1,5,4,3]");
  CHECK(eo::longest_element_block2(3).one_line() == "[2,1,3]");
  CHECK_THROWS(eo::longest_element_block2(2));
  // w0J is an involution of the expected length
  for (int q = 3; q <= 9; ++q) {
    Perm w = eo::longest_element_block2(q);
    CHECK((w * w).is_identity());
    CHECK(w.length() == 1 + (q - 2) * (q - 3) / 2);
  }
}

TEST_CASE("conjugation by w0J relabels block generators") {
  // w0J s_k w0J = s_{q+2-k} for k in {3..q-1}, and fixes s_1
  for (int q = 4; q <= 10; ++q) {
    Perm w = eo::longest_element_block2(q);
    CHECK(w * Perm::simple(q, 1) * w == Perm::simple(q, 1));
    for (int k = 3; k <= q - 1; ++k)
      CHECK(w * Perm::simple(q, k) * w == Perm::simple(q, q + 2 - k));
  }
}

TEST_CASE("bruhat dominance matches the reflection-chain oracle on S4 and S5") {
  for (int n : {4, 5}) {
    auto sn = symmetric_group(n);
    for (const Perm& x : sn)
      for (const Perm& y : sn)
        CHECK(eo::bruhat_leq(x, y) == bruhat_leq_oracle(x, y));
  }
}

TEST_CASE("bruhat order axioms hold exhaustively up to S6") {
  for (int n = 2; n <= 6; ++n) {
    auto sn = symmetric_group(n);
    const int N = static_cast<int>(sn.size());
    std::vector<std::vector<bool>> leq(N, std::vector<bool>(N));
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) leq[i][j] = eo::bruhat_leq(sn[i], sn[j]);
    Perm w0 = eo::longest_element(n);
    for (int i = 0; i < N; ++i) {
      CHECK(leq[i][i]);
      CHECK(eo::bruhat_leq(Perm(n), sn[i]));  // identity is the minimum
      CHECK(eo::bruhat_leq(sn[i], w0));       // w0 is the maximum
      for (int j = 0; j < N; ++j) {
        if (leq[i][j] && leq[j][i]) CHECK(i == j);
        if (leq[i][j] && i != j) CHECK(sn[i].length() < sn[j].length());
        for (int k = 0; k < N; ++k)
          if (leq[i][j] && leq[j][k]) CHECK(leq[i][k]);
      }
    }
  }
}

TEST_CASE("bruhat comparison is invariant under inversion") {
  auto s5 = symmetric_group(5);
  for (const Perm& x : s5)
    for (const Perm& y : s5)
      CHECK(eo::bruhat_leq(x, y) == eo::bruhat_leq(x.inverse(), y.inverse()));
}
