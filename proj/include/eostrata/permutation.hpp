#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace eo {

// Permutation of {1,...,n} in one-line notation.
//
// Composition convention: (p * r)(x) = p(r(x)) — the right factor acts first,
// so a product of cycles "(2,3)(1,2)" maps 1 -> 2 -> 3.
class Perm {
 public:
  Perm() = default;  // degree 0; useful only as a container placeholder
  explicit Perm(int n);  // identity on {1..n}

  static Perm from_one_line(std::vector<int> images);
  static Perm transposition(int n, int a, int b);
  static Perm simple(int n, int i);  // s_i = (i, i+1), 1 <= i <= n-1
  // Product of (not necessarily disjoint) cycles, rightmost applied first.
  static Perm from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  // Parses "[3,1,4,2]" (one-line) or "(2,3)(1,2)" / "()" (cycles; degree
  // must be supplied as n). Whitespace between tokens is ignored.
  static Perm parse(std::string_view text, int n = 0);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[x - 1]; }
  const std::vector<int>& images() const { return img_; }

  Perm inverse() const;
  bool is_identity() const;
  int length() const;  // number of inversions = Coxeter length

  friend Perm operator*(const Perm& p, const Perm& r);  // p after r
  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

  // Disjoint nontrivial cycles, each rotated to start at its minimum,
  // sorted by that minimum.
  std::vector<std::vector<int>> cycles() const;
  std::string one_line() const;    // "[3,1,4,2]"
  std::string cycle_form() const;  // "(1,3,4)(2,5)"; identity -> "()"

 private:
  std::vector<int> img_;
};

// Bruhat order via the sorted-prefix dominance criterion:
// p <= r  iff  for every k, the i-th smallest of {p(1),...,p(k)} is
// <= the i-th smallest of {r(1),...,r(k)} for all i.
bool bruhat_leq(const Perm& p, const Perm& r);

// Longest element of S_n: [n, n-1, ..., 1].
Perm longest_element(int n);

// Longest element of S_{{1,2}} x S_{{3,...,q}} inside S_q:
// [2, 1, q, q-1, ..., 3].  Requires q >= 3.
Perm longest_element_block2(int q);

std::ostream& operator<<(std::ostream&, const Perm&);

}  // namespace eo
