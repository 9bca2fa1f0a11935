#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "derivscope/types.hpp"

namespace derivscope {

/// Gauss-Jordan reduction result: the unique reduced row echelon form of the
/// input and its pivot columns (strictly increasing). Pivoting always takes
/// the first nonzero entry in column order; in exact arithmetic the pivot
/// choice can only affect speed, never the result.
struct RrefResult {
  RatMatrix matrix;
  std::vector<Index> pivots;
};

RrefResult rref(RatMatrix m);
Index rank(const RatMatrix& m);

/// Exact inverse; std::nullopt when singular.
std::optional<RatMatrix> try_inverse(const RatMatrix& m);
/// Exact inverse; throws std::invalid_argument when singular or non-square.
RatMatrix inverse(const RatMatrix& m);

/// Subspace of Q^n held in canonical form: the basis rows are the RREF of any
/// spanning set (full row rank, strictly increasing pivots), so two subspaces
/// are equal as sets iff their basis matrices are identical.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(Index ambient_dim);
  static Subspace full(Index ambient_dim);
  /// Canonical span of the rows of an arbitrary matrix.
  static Subspace span_rows(const RatMatrix& rows);
  static Subspace span(const std::vector<RatVector>& vectors, Index ambient_dim);

  Index ambient_dim() const { return ambient_; }
  Index dim() const { return basis_.rows(); }
  bool is_zero_space() const { return basis_.rows() == 0; }
  bool is_full_space() const { return basis_.rows() == ambient_; }

  /// dim() x ambient_dim() matrix in RREF, one basis vector per row.
  const RatMatrix& basis() const { return basis_; }
  RatVector basis_vector(Index i) const { return basis_.row(i).transpose(); }

  bool contains(const RatVector& v) const;
  bool contains(const Subspace& other) const;
  /// Coefficients of v against the basis rows; nullopt when v lies outside.
  std::optional<RatVector> coordinates_of(const RatVector& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && equal(a.basis_, b.basis_);
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  Subspace(Index ambient, RatMatrix basis) : ambient_(ambient), basis_(std::move(basis)) {}

  Index ambient_ = 0;
  RatMatrix basis_{0, 0};
};

/// Kernel {v : m v = 0} as a subspace of Q^cols.
Subspace nullspace(const RatMatrix& m);

Subspace sum(const Subspace& u, const Subspace& w);
Subspace intersect(const Subspace& u, const Subspace& w);

/// Span of the standard basis vectors whose index is not a pivot column of
/// u's basis; a canonical complement with u + result = Q^n, u ∩ result = {0}.
Subspace coordinate_complement(const Subspace& u);

std::ostream& operator<<(std::ostream& os, const Subspace& s);

}  // namespace derivscope
