// Permutations of {1..n} as image tables, with cycle-notation text I/O.
#pragma once

#include <compare>
#include <string>
#include <vector>

namespace gelfand {

// A bijection of {1..n}. All public indices are 1-based; the internal
// table is 0-based and never leaks.
class Permutation {
 public:
  // Identity permutation of degree n (n >= 1).
  explicit Permutation(int n);

  static Permutation identity(int n) { return Permutation(n); }

  // From a 1-based image table: images[i-1] = sigma(i).
  static Permutation from_images(const std::vector<int>& images);

  // The transposition (a b) inside degree n.
  static Permutation transposition(int n, int a, int b);

  // From disjoint cycles over {1..n}; entries must be distinct overall.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  // Parses cycle notation such as "(1 2)(3 4)" or "()"; arbitrary
  // whitespace is allowed between tokens. Cycles must be disjoint.
  static Permutation parse(const std::string& text, int n);

  int degree() const { return n_; }
  int operator()(int i) const;  // image of i, 1 <= i <= n
  bool is_identity() const;
  Permutation inverse() const;

  // Canonical disjoint-cycle decomposition: each cycle starts at its
  // minimum, cycles ordered by minimum, fixed points omitted.
  std::vector<std::vector<int>> cycles() const;

  // Canonical cycle string; identity prints as "()".
  std::string cycle_string() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  // compose(a, b) maps i to a(b(i)).
  friend Permutation compose(const Permutation& a, const Permutation& b);

 private:
  Permutation(int n, std::vector<int> zero_based_images);

  int n_;
  std::vector<int> img_;  // img_[i] = 0-based image of 0-based point i
};

Permutation compose(const Permutation& a, const Permutation& b);

inline Permutation operator*(const Permutation& a, const Permutation& b) {
  return compose(a, b);
}

// All n! permutations in lexicographic image-table order. Exhaustive
// scans with this are intended for n <= 8.
std::vector<Permutation> all_permutations(int n);

}  // namespace gelfand
