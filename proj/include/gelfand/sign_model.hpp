// The sign function S(sigma, tau), the signed conjugation action on the
// span of each involution class, and the graded algebra product.
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "gelfand/involution.hpp"
#include "gelfand/permutation.hpp"

namespace gelfand {

// S(sigma, tau) = (-1)^{#{k : sigma(a_k) > sigma(b_k)}} over the
// canonical pairs (a_k, b_k) of tau. Returns +1 or -1.
int sign(const Permutation& sigma, const Involution& tau);

// Whether S(s1 s2, tau) == S(s1, s2 tau s2^{-1}) * S(s2, tau) for this
// triple. Holds identically; used as a test oracle.
bool cocycle_check(const Permutation& sigma1, const Permutation& sigma2, const Involution& tau);

// The action of a fixed sigma on the basis X_j: tau maps to
// (sigma tau sigma^{-1}, S(sigma, tau)). A row-sparse signed
// permutation matrix, stored against the lexicographic basis order.
class SignedBasisMap {
 public:
  SignedBasisMap(const Permutation& sigma, int j);

  int degree() const { return n_; }
  int length_class() const { return j_; }
  std::size_t size() const { return image_.size(); }
  const std::vector<Involution>& basis() const { return *basis_; }

  // (sigma tau sigma^{-1}, S(sigma, tau)) for tau in X_j.
  std::pair<Involution, int> entry(const Involution& tau) const;

  // Whether the target components form a bijection of X_j.
  bool image_is_bijection() const;

  // compose(outer, inner) is the map of (outer's sigma) * (inner's sigma).
  friend SignedBasisMap compose(const SignedBasisMap& outer, const SignedBasisMap& inner);

  friend bool operator==(const SignedBasisMap& a, const SignedBasisMap& b) {
    return a.n_ == b.n_ && a.j_ == b.j_ && a.image_ == b.image_ && a.sign_ == b.sign_;
  }

 private:
  SignedBasisMap(int n, int j, std::shared_ptr<const std::vector<Involution>> basis);

  int n_, j_;
  std::shared_ptr<const std::vector<Involution>> basis_;
  std::vector<std::uint32_t> image_;  // basis index of sigma tau sigma^{-1}
  std::vector<std::int8_t> sign_;
};

SignedBasisMap compose(const SignedBasisMap& outer, const SignedBasisMap& inner);

// An integer vector supported on finitely many involutions of a fixed
// degree; the underlying module of the graded algebra.
class ModelVector {
 public:
  explicit ModelVector(int n) : n_(n) {}

  static ModelVector basis(const Involution& tau);

  int degree() const { return n_; }
  long long coefficient(const Involution& tau) const;
  void add(const Involution& tau, long long c);
  const std::map<Involution, long long>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // "+1·(1 2)(3 4) -2·(1 3)"; the zero vector prints as "0".
  std::string text() const;

  friend bool operator==(const ModelVector&, const ModelVector&) = default;

 private:
  int n_;
  std::map<Involution, long long> terms_;  // nonzero coefficients only
};

// Linear extension of tau -> S(sigma, tau) sigma tau sigma^{-1}.
ModelVector act(const Permutation& sigma, const ModelVector& v);

// Bilinear extension of: tau * kappa = union of their transpositions
// when supports are disjoint, 0 otherwise. Unit: the identity involution.
ModelVector model_product(const ModelVector& a, const ModelVector& b);

// Trace of the signed basis map of class_rep on X_j: the sum of
// S(sigma, tau) over the tau in X_j fixed by conjugation.
long long character_of_Vj(int n, int j, const Permutation& class_rep);

}  // namespace gelfand
