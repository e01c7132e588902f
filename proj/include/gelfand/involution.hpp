// Involutions of {1..n} in canonical transposition-list form, the
// conjugacy classes X_j, and small exhaustive centralizer scans.
#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gelfand/permutation.hpp"

namespace gelfand {

// A product of j disjoint transpositions of {1..n}, kept in the unique
// canonical form: each pair (a,b) with a < b, pairs sorted by first
// element. The number of pairs is the involution's length.
class Involution {
 public:
  // Identity involution (length 0).
  explicit Involution(int n);

  // Canonicalizes and validates the given transpositions.
  Involution(int n, std::vector<std::pair<int, int>> transpositions);

  // Requires p * p == identity.
  static Involution from_permutation(const Permutation& p);

  // Cycle notation ("(1 2)(3 4)", identity "()"); all cycles must be
  // transpositions.
  static Involution parse(const std::string& text, int n);

  int degree() const { return n_; }
  int length() const { return static_cast<int>(pairs_.size()); }
  const std::vector<std::pair<int, int>>& transpositions() const { return pairs_; }

  int operator()(int i) const;  // image of i
  bool moves(int i) const { return (*this)(i) != i; }

  // Bitmask of moved points (bit i-1 set when i is moved); degree <= 32.
  std::uint32_t support_mask() const;

  Permutation to_permutation() const;
  std::string cycle_string() const;

  friend auto operator<=>(const Involution&, const Involution&) = default;

  friend std::vector<Involution> enumerate_involutions(int n, int j);

 private:
  struct unchecked_t {};
  Involution(unchecked_t, int n, std::vector<std::pair<int, int>> canonical);

  int n_;
  std::vector<std::pair<int, int>> pairs_;
};

// sigma tau sigma^{-1}, re-canonicalized. Preserves length.
Involution conjugate(const Permutation& sigma, const Involution& tau);

// All involutions of length exactly j, in lexicographic order of the
// canonical transposition list. Requires 0 <= j <= n/2.
std::vector<Involution> enumerate_involutions(int n, int j);

// Concatenation of X_0, X_1, ... X_{n/2}.
std::vector<Involution> all_involutions(int n);

// |X_j| = n! / (2^j j! (n-2j)!), exact.
long long involution_class_size(int n, int j);

// Total number of involutions of degree n.
long long involution_count(int n);

// Every sigma commuting with both tau and kappa, by scanning all n!
// permutations. An exhaustive oracle, intended for n <= 8.
std::vector<Permutation> centralizer_pair(const Involution& tau, const Involution& kappa);

}  // namespace gelfand
