#include "eostrata/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace eo {

namespace {

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument("Perm: " + msg);
}

}  // namespace

Perm::Perm(int n) {
  if (n < 0) fail("negative degree");
  img_.resize(n);
  for (int i = 0; i < n; ++i) img_[i] = i + 1;
}

Perm Perm::from_one_line(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  std::vector<char> seen(n + 1, 0);
  for (int x : images) {
    if (x < 1 || x > n) fail("one-line entry out of range");
    if (seen[x]) fail("one-line entry repeated");
    seen[x] = 1;
  }
  Perm p;
  p.img_ = std::move(images);
  return p;
}

Perm Perm::transposition(int n, int a, int b) {
  if (a < 1 || a > n || b < 1 || b > n || a == b)
    fail("bad transposition indices");
  Perm p(n);
  std::swap(p.img_[a - 1], p.img_[b - 1]);
  return p;
}

Perm Perm::simple(int n, int i) {
  if (i < 1 || i >= n) fail("simple reflection index out of range");
  return transposition(n, i, i + 1);
}

Perm Perm::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  Perm p(n);
  // Rightmost cycle acts first, so fold right-to-left.
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    const auto& c = *it;
    if (c.size() < 2) {
      if (c.size() == 1 && (c[0] < 1 || c[0] > n)) fail("cycle entry out of range");
      continue;  // fixed point, no effect
    }
    Perm step(n);
    for (size_t k = 0; k < c.size(); ++k) {
      int from = c[k], to = c[(k + 1) % c.size()];
      if (from < 1 || from > n) fail("cycle entry out of range");
      if (step.img_[from - 1] != from) fail("repeated entry within a cycle");
      step.img_[from - 1] = to;
    }
    // validate 'to' values form a permutation (catches repeats like (1,2,1))
    (void)from_one_line(step.img_);
    p = step * p;
  }
  return p;
}

Perm Perm::inverse() const {
  Perm r;
  r.img_.resize(img_.size());
  for (int i = 0; i < degree(); ++i) r.img_[img_[i] - 1] = i + 1;
  return r;
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i + 1) return false;
  return true;
}

int Perm::length() const {
  int inv = 0;
  for (int i = 0; i < degree(); ++i)
    for (int j = i + 1; j < degree(); ++j)
      if (img_[i] > img_[j]) ++inv;
  return inv;
}

Perm operator*(const Perm& p, const Perm& r) {
  if (p.degree() != r.degree()) fail("degree mismatch in product");
  Perm out;
  out.img_.resize(p.img_.size());
  for (int i = 0; i < p.degree(); ++i) out.img_[i] = p.img_[r.img_[i] - 1];
  return out;
}

std::vector<std::vector<int>> Perm::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> done(degree() + 1, 0);
  for (int start = 1; start <= degree(); ++start) {
    if (done[start] || img_[start - 1] == start) continue;
    std::vector<int> c;
    int x = start;
    do {
      c.push_back(x);
      done[x] = 1;
      x = img_[x - 1];
    } while (x != start);
    out.push_back(std::move(c));
  }
  return out;
}

std::string Perm::one_line() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < degree(); ++i) {
    if (i) os << ',';
    os << img_[i];
  }
  os << ']';
  return os.str();
}

std::string Perm::cycle_form() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (size_t k = 0; k < c.size(); ++k) {
      if (k) os << ',';
      os << c[k];
    }
    os << ')';
  }
  return os.str();
}

Perm Perm::parse(std::string_view text, int n) {
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_int = [&]() -> int {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected integer in '" + std::string(text) + "'");
    return std::stoi(std::string(text.substr(start, pos - start)));
  };
  skip_ws();
  if (pos >= text.size()) fail("empty permutation text");

  if (text[pos] == '[') {
    ++pos;
    std::vector<int> images;
    skip_ws();
    if (pos < text.size() && text[pos] == ']') {
      ++pos;
    } else {
      for (;;) {
        images.push_back(read_int());
        skip_ws();
        if (pos < text.size() && text[pos] == ',') { ++pos; continue; }
        if (pos < text.size() && text[pos] == ']') { ++pos; break; }
        fail("expected ',' or ']' in one-line form");
      }
    }
    skip_ws();
    if (pos != text.size()) fail("trailing characters after one-line form");
    if (n != 0 && n != static_cast<int>(images.size())) fail("degree mismatch in one-line form");
    return from_one_line(std::move(images));
  }

  if (text[pos] == '(') {
    if (n <= 0) fail("cycle form requires an explicit degree");
    std::vector<std::vector<int>> cycles;
    while (pos < text.size()) {
      skip_ws();
      if (pos >= text.size()) break;
      if (text[pos] != '(') fail("expected '(' in cycle form");
      ++pos;
      std::vector<int> c;
      skip_ws();
      if (pos < text.size() && text[pos] == ')') {
        ++pos;  // "()" = identity factor
      } else {
        for (;;) {
          c.push_back(read_int());
          skip_ws();
          if (pos < text.size() && text[pos] == ',') { ++pos; continue; }
          if (pos < text.size() && text[pos] == ')') { ++pos; break; }
          fail("expected ',' or ')' in cycle form");
        }
      }
      if (!c.empty()) cycles.push_back(std::move(c));
      skip_ws();
    }
    return from_cycles(n, cycles);
  }
  fail("unrecognized permutation syntax: '" + std::string(text) + "'");
}

bool bruhat_leq(const Perm& p, const Perm& r) {
  const int n = p.degree();
  if (r.degree() != n) fail("degree mismatch in bruhat_leq");
  // sorted-prefix dominance; maintain sorted prefixes incrementally
  std::vector<int> sp, sr;
  sp.reserve(n);
  sr.reserve(n);
  for (int k = 1; k <= n; ++k) {
    sp.insert(std::upper_bound(sp.begin(), sp.end(), p(k)), p(k));
    sr.insert(std::upper_bound(sr.begin(), sr.end(), r(k)), r(k));
    for (int i = 0; i < k; ++i)
      if (sp[i] > sr[i]) return false;
  }
  return true;
}

Perm longest_element(int n) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = n - i;
  return Perm::from_one_line(std::move(img));
}

Perm longest_element_block2(int q) {
  if (q < 3) fail("longest_element_block2 requires q >= 3");
  std::vector<int> img(q);
  img[0] = 2;
  img[1] = 1;
  for (int i = 2; i < q; ++i) img[i] = q + 2 - i;  // q, q-1, ..., 3
  return Perm::from_one_line(std::move(img));
}

std::ostream& operator<<(std::ostream& os, const Perm& p) {
  return os << p.one_line();
}

}  // namespace eo
