#pragma once

#include <optional>
#include <string>
#include <vector>

#include "derivscope/algebra.hpp"

namespace derivscope {

/// Scalar triple of the derivation identity
///   alpha·D mu(X,Y) = beta·mu(DX,Y) + gamma·mu(X,DY).
/// Every triple is a legal input, including degenerate ones.
struct DerivationParams {
  Rational alpha;
  Rational beta;
  Rational gamma;

  /// The one-parameter family (t, 1, 0) behind the phi invariants.
  static DerivationParams phi_family(const Rational& t) { return {t, Rational(1), Rational(0)}; }

  friend bool operator==(const DerivationParams& a, const DerivationParams& b) {
    return a.alpha == b.alpha && a.beta == b.beta && a.gamma == b.gamma;
  }
};

/// Square rational matrix acting on the algebra; column j holds the
/// coordinates of the image of e_j.
using LinearMap = RatMatrix;

/// Column-major flattening: the coordinates of D(e_0), then D(e_1), ...
/// The canonical bases of every map space below live in this coordinate
/// order, so it is part of the module contract.
RatVector vectorize(const LinearMap& d);
LinearMap unvectorize(const RatVector& v, Index n);

/// First basis pair where d fails the identity for p, with the exact defect
/// alpha·D mu(e_i,e_j) - beta·mu(De_i,e_j) - gamma·mu(e_i,De_j); nullopt when
/// d satisfies the identity everywhere.
struct IdentityDefect {
  Index i;
  Index j;
  RatVector defect;
};
std::optional<IdentityDefect> identity_defect(const Algebra& a, const DerivationParams& p,
                                              const LinearMap& d);
std::string describe(const IdentityDefect& defect);

/// Solution space of one derivation identity (or an intersection of several,
/// in which case params is empty): a canonical basis of linear maps together
/// with the vectorized subspace of Q^(n^2) behind it.
class MapSpace {
 public:
  MapSpace() = default;
  MapSpace(std::optional<DerivationParams> params, Index algebra_dim, Subspace vectorized);

  Index algebra_dim() const { return algebra_dim_; }
  Index dimension() const { return vectorized_.dim(); }
  const std::optional<DerivationParams>& params() const { return params_; }
  const Subspace& vectorized() const { return vectorized_; }
  const std::vector<LinearMap>& basis() const { return basis_; }
  bool contains(const LinearMap& d) const { return vectorized_.contains(vectorize(d)); }

 private:
  std::optional<DerivationParams> params_;
  Index algebra_dim_ = 0;
  Subspace vectorized_;
  std::vector<LinearMap> basis_;
};

/// Linear system over the flattened unknown D whose kernel is the space of
/// (alpha,beta,gamma)-derivations: one block of n rows (one per output
/// coordinate) for every ordered basis pair (i,j), n^3 rows by n^2 columns.
/// Ordered pairs — including the diagonal — are required: the identity is
/// quantified over all of V x V, and for beta != gamma the (j,i) and (i,i)
/// constraints are not consequences of the i < j ones.
RatMatrix constraint_matrix(const Algebra& a, const DerivationParams& p);

/// Kernel of the constraint system; every basis map is re-verified against
/// the defining identity before being returned.
MapSpace derivation_space(const Algebra& a, const DerivationParams& p);

/// Dimension of the (t,1,0)-derivation space.
Index phi(const Algebra& a, const Rational& t);

/// Maps with image inside the center and the derived algebra inside the
/// kernel: the intersection of the (0,1,0) and (1,0,0) spaces.
MapSpace omega_space(const Algebra& a);

/// The (1,1,0) space; always contains the identity map.
MapSpace centroid(const Algebra& a);

/// Rescales a (t,1,0)-derivation of a non-perfect Lie algebra into an
/// (s,1,0)-derivation: acts as (s/t)·d on the coordinate complement of the
/// derived algebra and as d on the derived algebra itself. For s outside
/// {0,1} the transport with swapped parameters is a two-sided inverse.
LinearMap transport(const Algebra& a, const LinearMap& d, const Rational& t, const Rational& s);

/// Same construction over an arbitrary complement of the derived algebra
/// (the resulting space dimension does not depend on the choice).
LinearMap transport_with_complement(const Algebra& a, const LinearMap& d, const Rational& t,
                                    const Rational& s, const Subspace& complement);

/// Matrix of d restricted to the derived algebra, expressed in bases of the
/// derived algebra (domain) and of center ∩ derived (codomain). Throws if the
/// image escapes the codomain. Zero-dimensional domain or codomain yields an
/// empty matrix.
RatMatrix restrict_to_derived(const Algebra& a, const LinearMap& d, const Rational& t);

/// Smallest k <= n with d^k = 0, or nullopt when d is not nilpotent.
std::optional<Index> nilpotency_index(const LinearMap& d);

/// All anti-commutative laws on Q^n for which the fixed map d satisfies the
/// p-identity, as a subspace of the flattened structure-constant space
/// (pair_count(n)·n coordinates, ordered as in constant_vector).
Subspace products_admitting(const LinearMap& d, const DerivationParams& p);

/// The bilinear map lambda(x, y) = mu(d x, y) attached to a (t,1,0)-derivation
/// of a Lie algebra, returned as structure-constant data. Antisymmetry of
/// lambda is verified and its violation reported as an error.
Algebra deformation_cocycle(const Algebra& a, const LinearMap& d, const Rational& t);

}  // namespace derivscope
