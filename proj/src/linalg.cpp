#include "derivscope/linalg.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace derivscope {

RatMatrix vstack(const RatMatrix& top, const RatMatrix& bottom) {
  if (top.cols() != bottom.cols() && top.rows() != 0 && bottom.rows() != 0)
    throw std::invalid_argument("vstack: column count mismatch");
  const Index cols = top.rows() != 0 ? top.cols() : bottom.cols();
  RatMatrix out(top.rows() + bottom.rows(), cols);
  out.topRows(top.rows()) = top;
  out.bottomRows(bottom.rows()) = bottom;
  return out;
}

std::vector<std::vector<std::string>> row_major_strings(const RatMatrix& m) {
  std::vector<std::vector<std::string>> out(static_cast<std::size_t>(m.rows()));
  for (Index i = 0; i < m.rows(); ++i) {
    out[static_cast<std::size_t>(i)].reserve(static_cast<std::size_t>(m.cols()));
    for (Index j = 0; j < m.cols(); ++j)
      out[static_cast<std::size_t>(i)].push_back(m(i, j).str());
  }
  return out;
}

RrefResult rref(RatMatrix m) {
  const Index rows = m.rows();
  const Index cols = m.cols();
  std::vector<Index> pivots;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index p = -1;
    for (Index i = r; i < rows; ++i) {
      if (!m(i, c).is_zero()) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    if (p != r) m.row(r).swap(m.row(p));
    const Rational inv = m(r, c).inverse();
    if (!inv.is_one())
      for (Index j = c; j < cols; ++j) m(r, j) *= inv;
    for (Index i = 0; i < rows; ++i) {
      if (i == r) continue;
      const Rational f = m(i, c);
      if (f.is_zero()) continue;
      for (Index j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

Index rank(const RatMatrix& m) { return static_cast<Index>(rref(m).pivots.size()); }

std::optional<RatMatrix> try_inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
  const Index n = m.rows();
  RatMatrix aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = RatMatrix::Identity(n, n);
  RrefResult rr = rref(std::move(aug));
  if (static_cast<Index>(rr.pivots.size()) != n) return std::nullopt;
  for (Index i = 0; i < n; ++i)
    if (rr.pivots[static_cast<std::size_t>(i)] != i) return std::nullopt;
  return RatMatrix(rr.matrix.rightCols(n));
}

RatMatrix inverse(const RatMatrix& m) {
  auto inv = try_inverse(m);
  if (!inv) throw std::invalid_argument("inverse: singular matrix");
  return *std::move(inv);
}

Subspace Subspace::zero(Index ambient_dim) { return Subspace(ambient_dim, RatMatrix(0, ambient_dim)); }

Subspace Subspace::full(Index ambient_dim) {
  return Subspace(ambient_dim, RatMatrix::Identity(ambient_dim, ambient_dim));
}

Subspace Subspace::span_rows(const RatMatrix& rows) {
  RrefResult rr = rref(rows);
  const Index d = static_cast<Index>(rr.pivots.size());
  return Subspace(rows.cols(), RatMatrix(rr.matrix.topRows(d)));
}

Subspace Subspace::span(const std::vector<RatVector>& vectors, Index ambient_dim) {
  RatMatrix rows(static_cast<Index>(vectors.size()), ambient_dim);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != ambient_dim)
      throw std::invalid_argument("span: vector length does not match ambient dimension");
    rows.row(static_cast<Index>(i)) = vectors[i].transpose();
  }
  return span_rows(rows);
}

namespace {

// Pivot column of row i of an RREF basis (first nonzero entry).
Index pivot_of_row(const RatMatrix& basis, Index i) {
  for (Index j = 0; j < basis.cols(); ++j)
    if (!basis(i, j).is_zero()) return j;
  return -1;
}

}  // namespace

std::optional<RatVector> Subspace::coordinates_of(const RatVector& v) const {
  if (v.size() != ambient_)
    throw std::invalid_argument("Subspace: vector length does not match ambient dimension");
  // In RREF each basis row is the only one with a nonzero entry in its pivot
  // column, so the coefficient against row i is just v at that pivot.
  RatVector coeffs(dim());
  RatVector residual = v;
  for (Index i = 0; i < dim(); ++i) {
    const Index p = pivot_of_row(basis_, i);
    coeffs[i] = v[p];
    if (!coeffs[i].is_zero()) residual -= coeffs[i] * basis_.row(i).transpose();
  }
  if (!is_zero(residual)) return std::nullopt;
  return coeffs;
}

bool Subspace::contains(const RatVector& v) const { return coordinates_of(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) return false;
  for (Index i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_vector(i))) return false;
  return true;
}

Subspace nullspace(const RatMatrix& m) {
  const Index cols = m.cols();
  RrefResult rr = rref(m);
  const auto& pivots = rr.pivots;
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Index p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;

  const Index nullity = cols - static_cast<Index>(pivots.size());
  RatMatrix rows(nullity, cols);
  Index out = 0;
  for (Index f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    for (Index j = 0; j < cols; ++j) rows(out, j) = Rational(0);
    rows(out, f) = Rational(1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      rows(out, pivots[r]) = -rr.matrix(static_cast<Index>(r), f);
    ++out;
  }
  return Subspace::span_rows(rows);
}

Subspace sum(const Subspace& u, const Subspace& w) {
  if (u.ambient_dim() != w.ambient_dim())
    throw std::invalid_argument("sum: ambient dimension mismatch");
  return Subspace::span_rows(vstack(u.basis(), w.basis()));
}

Subspace intersect(const Subspace& u, const Subspace& w) {
  if (u.ambient_dim() != w.ambient_dim())
    throw std::invalid_argument("intersect: ambient dimension mismatch");
  const Index n = u.ambient_dim();
  const Index p = u.dim();
  const Index q = w.dim();
  if (p == 0 || q == 0) return Subspace::zero(n);

  // x in u ∩ w  <=>  x = a·U = b·W; solve U^T a - W^T b = 0.
  RatMatrix system(n, p + q);
  system.leftCols(p) = u.basis().transpose();
  system.rightCols(q) = -w.basis().transpose();
  const Subspace coeffs = nullspace(system);

  RatMatrix rows(coeffs.dim(), n);
  for (Index i = 0; i < coeffs.dim(); ++i)
    rows.row(i) = coeffs.basis().row(i).head(p) * u.basis();
  Subspace result = Subspace::span_rows(rows);
  for (Index i = 0; i < result.dim(); ++i) {
    const RatVector v = result.basis_vector(i);
    if (!u.contains(v) || !w.contains(v))
      throw std::logic_error("intersect: basis vector escaped an input subspace");
  }
  return result;
}

Subspace coordinate_complement(const Subspace& u) {
  const Index n = u.ambient_dim();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Index i = 0; i < u.dim(); ++i)
    is_pivot[static_cast<std::size_t>(pivot_of_row(u.basis(), i))] = true;
  RatMatrix rows(n - u.dim(), n);
  rows.setZero();
  Index out = 0;
  for (Index j = 0; j < n; ++j) {
    if (is_pivot[static_cast<std::size_t>(j)]) continue;
    rows(out, j) = Rational(1);
    ++out;
  }
  return Subspace::span_rows(rows);
}

std::ostream& operator<<(std::ostream& os, const Subspace& s) {
  os << "Subspace(dim " << s.dim() << " of Q^" << s.ambient_dim() << ")";
  if (s.dim() > 0) os << "\n" << s.basis();
  return os;
}

}  // namespace derivscope
