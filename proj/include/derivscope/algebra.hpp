#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "derivscope/linalg.hpp"

namespace derivscope {

/// Anti-commutative algebra on Q^n given by structure constants: for i < j,
/// constants[{i,j}] holds the coordinates of mu(e_i, e_j). The products
/// mu(e_j, e_i) = -mu(e_i, e_j) and mu(e_i, e_i) = 0 are implied by the
/// storage convention, and absent keys mean a zero product.
struct Algebra {
  Index dim = 0;
  std::map<std::pair<Index, Index>, RatVector> constants;
  std::string name;

  /// mu(e_i, e_j) for any index order (antisymmetric fill-in).
  RatVector bracket(Index i, Index j) const;
  /// Stores mu(e_i, e_j) = value; requires 0 <= i < j < dim and |value| = dim.
  /// A zero value erases the key.
  void set_bracket(Index i, Index j, RatVector value);

  /// Structural equality of the law (name ignored).
  friend bool operator==(const Algebra& a, const Algebra& b);
  friend bool operator!=(const Algebra& a, const Algebra& b) { return !(a == b); }
};

/// Structural problems of a raw description (key order, index range, vector
/// lengths); an empty list means the algebra is well formed. Operations below
/// assume a validated input.
std::vector<std::string> validate(const Algebra& a);

/// Bilinear extension of the structure constants.
RatVector product(const Algebra& a, const RatVector& x, const RatVector& y);

/// mu(x, mu(y,z)) + mu(y, mu(z,x)) + mu(z, mu(x,y)).
RatVector jacobiator(const Algebra& a, const RatVector& x, const RatVector& y,
                     const RatVector& z);

/// True iff the jacobiator vanishes on all basis triples i < j < k (complete
/// by trilinearity and antisymmetry).
bool is_lie(const Algebra& a);

/// Span of {mu(u_i, w_j)} over basis pairs of the two subspaces.
Subspace product_subspace(const Algebra& a, const Subspace& u, const Subspace& w);

/// Span of all products; equals product_subspace(a, full, full).
Subspace derived_algebra(const Algebra& a);

bool is_perfect(const Algebra& a);

/// {x : mu(x, g) = 0 for every generator g}; the full space for an empty set.
Subspace centralizer(const Algebra& a, const std::vector<RatVector>& generators);

/// Centralizer of the whole algebra.
Subspace center(const Algebra& a);

/// mu(derived_algebra, full space): the next lower-central term.
Subspace lower_central_term(const Algebra& a);

/// Block sum: constants of a on the first factor, of b on the second,
/// vanishing cross products.
Algebra direct_product(const Algebra& a, const Algebra& b);

/// Algebra of dimension m+1 with mu(e_0, e_{1+i}) = t_map(e_i) embedded in the
/// last m coordinates and zero products inside the abelian block.
Algebra one_dim_extension(const RatMatrix& t_map);

/// Transported law g·mu(x, y) = g mu(g^{-1}x, g^{-1}y); throws on singular g.
Algebra change_of_basis(const Algebra& a, const RatMatrix& g);

/// Pointwise mu + s·lambda on matching dimensions.
Algebra deformed_product(const Algebra& a, const Algebra& lambda, const Rational& s);

// Flattened structure-constant coordinates: pairs (i,j) with i < j in
// lexicographic order, n entries per pair.
Index pair_count(Index n);
Index pair_offset(Index i, Index j, Index n);
RatVector constant_vector(const Algebra& a);
Algebra algebra_from_constant_vector(const RatVector& v, Index n, std::string name = {});

}  // namespace derivscope
