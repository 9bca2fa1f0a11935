#include "derivscope/algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace derivscope {

RatVector Algebra::bracket(Index i, Index j) const {
  RatVector zero = RatVector::Zero(dim);
  if (i == j) return zero;
  const bool flip = i > j;
  if (flip) std::swap(i, j);
  const auto it = constants.find({i, j});
  if (it == constants.end()) return zero;
  return flip ? RatVector(-it->second) : it->second;
}

void Algebra::set_bracket(Index i, Index j, RatVector value) {
  if (!(0 <= i && i < j && j < dim))
    throw std::invalid_argument("set_bracket: indices must satisfy 0 <= i < j < dim");
  if (value.size() != dim)
    throw std::invalid_argument("set_bracket: value length does not match dimension");
  if (is_zero(value))
    constants.erase({i, j});
  else
    constants[{i, j}] = std::move(value);
}

bool operator==(const Algebra& a, const Algebra& b) {
  if (a.dim != b.dim || a.constants.size() != b.constants.size()) return false;
  auto ita = a.constants.begin();
  auto itb = b.constants.begin();
  for (; ita != a.constants.end(); ++ita, ++itb) {
    if (ita->first != itb->first) return false;
    if (!equal(ita->second, itb->second)) return false;
  }
  return true;
}

std::vector<std::string> validate(const Algebra& a) {
  std::vector<std::string> violations;
  if (a.dim < 0) violations.push_back("dimension is negative");
  for (const auto& [key, value] : a.constants) {
    const auto [i, j] = key;
    std::ostringstream where;
    where << "constant (" << i << "," << j << ")";
    if (!(0 <= i && i < j && j < a.dim))
      violations.push_back(where.str() + ": indices must satisfy 0 <= i < j < dim");
    if (value.size() != a.dim)
      violations.push_back(where.str() + ": vector length " + std::to_string(value.size()) +
                           " does not match dimension " + std::to_string(a.dim));
  }
  return violations;
}

RatVector product(const Algebra& a, const RatVector& x, const RatVector& y) {
  if (x.size() != a.dim || y.size() != a.dim)
    throw std::invalid_argument("product: vector length does not match algebra dimension");
  RatVector out = RatVector::Zero(a.dim);
  for (const auto& [key, c] : a.constants) {
    const auto [i, j] = key;
    const Rational coeff = x[i] * y[j] - x[j] * y[i];
    if (!coeff.is_zero()) out += coeff * c;
  }
  return out;
}

RatVector jacobiator(const Algebra& a, const RatVector& x, const RatVector& y,
                     const RatVector& z) {
  return product(a, x, product(a, y, z)) + product(a, y, product(a, z, x)) +
         product(a, z, product(a, x, y));
}

bool is_lie(const Algebra& a) {
  const Index n = a.dim;
  for (Index i = 0; i < n; ++i) {
    const RatVector ei = RatVector::Unit(n, i);
    for (Index j = i + 1; j < n; ++j) {
      const RatVector ej = RatVector::Unit(n, j);
      for (Index k = j + 1; k < n; ++k) {
        if (!is_zero(jacobiator(a, ei, ej, RatVector::Unit(n, k)))) return false;
      }
    }
  }
  return true;
}

Subspace product_subspace(const Algebra& a, const Subspace& u, const Subspace& w) {
  if (u.ambient_dim() != a.dim || w.ambient_dim() != a.dim)
    throw std::invalid_argument("product_subspace: ambient dimension mismatch");
  RatMatrix rows(u.dim() * w.dim(), a.dim);
  Index out = 0;
  for (Index i = 0; i < u.dim(); ++i)
    for (Index j = 0; j < w.dim(); ++j)
      rows.row(out++) = product(a, u.basis_vector(i), w.basis_vector(j)).transpose();
  return Subspace::span_rows(rows);
}

Subspace derived_algebra(const Algebra& a) {
  RatMatrix rows(static_cast<Index>(a.constants.size()), a.dim);
  Index out = 0;
  for (const auto& [key, c] : a.constants) rows.row(out++) = c.transpose();
  return Subspace::span_rows(rows);
}

bool is_perfect(const Algebra& a) { return derived_algebra(a).dim() == a.dim; }

Subspace centralizer(const Algebra& a, const std::vector<RatVector>& generators) {
  const Index n = a.dim;
  // Rows of the linear system over the unknown x: coordinate k of
  // mu(x, g) = sum_i x_i mu(e_i, g).
  RatMatrix system(static_cast<Index>(generators.size()) * n, n);
  Index row = 0;
  for (const RatVector& g : generators) {
    if (g.size() != n)
      throw std::invalid_argument("centralizer: generator length does not match dimension");
    for (Index i = 0; i < n; ++i) {
      const RatVector col = product(a, RatVector::Unit(n, i), g);
      for (Index k = 0; k < n; ++k) system(row + k, i) = col[k];
    }
    row += n;
  }
  return nullspace(system);
}

Subspace center(const Algebra& a) {
  std::vector<RatVector> basis;
  basis.reserve(static_cast<std::size_t>(a.dim));
  for (Index i = 0; i < a.dim; ++i) basis.push_back(RatVector::Unit(a.dim, i));
  return centralizer(a, basis);
}

Subspace lower_central_term(const Algebra& a) {
  return product_subspace(a, derived_algebra(a), Subspace::full(a.dim));
}

Algebra direct_product(const Algebra& a, const Algebra& b) {
  Algebra out;
  out.dim = a.dim + b.dim;
  out.name = a.name.empty() || b.name.empty() ? a.name + b.name : a.name + " x " + b.name;
  for (const auto& [key, c] : a.constants) {
    RatVector v = RatVector::Zero(out.dim);
    v.head(a.dim) = c;
    out.constants[key] = std::move(v);
  }
  for (const auto& [key, c] : b.constants) {
    RatVector v = RatVector::Zero(out.dim);
    v.tail(b.dim) = c;
    out.constants[{key.first + a.dim, key.second + a.dim}] = std::move(v);
  }
  return out;
}

Algebra one_dim_extension(const RatMatrix& t_map) {
  if (t_map.rows() != t_map.cols())
    throw std::invalid_argument("one_dim_extension: map must be square");
  const Index m = t_map.rows();
  Algebra out;
  out.dim = m + 1;
  for (Index i = 0; i < m; ++i) {
    RatVector v = RatVector::Zero(m + 1);
    v.tail(m) = t_map.col(i);
    if (!is_zero(v)) out.constants[{0, 1 + i}] = std::move(v);
  }
  return out;
}

Algebra change_of_basis(const Algebra& a, const RatMatrix& g) {
  if (g.rows() != a.dim || g.cols() != a.dim)
    throw std::invalid_argument("change_of_basis: map size does not match dimension");
  const RatMatrix ginv = inverse(g);
  Algebra out;
  out.dim = a.dim;
  out.name = a.name;
  for (Index i = 0; i < a.dim; ++i) {
    for (Index j = i + 1; j < a.dim; ++j) {
      const RatVector w = g * product(a, ginv.col(i), ginv.col(j));
      if (!is_zero(w)) out.constants[{i, j}] = w;
    }
  }
  return out;
}

Algebra deformed_product(const Algebra& a, const Algebra& lambda, const Rational& s) {
  if (a.dim != lambda.dim)
    throw std::invalid_argument("deformed_product: dimension mismatch");
  Algebra out;
  out.dim = a.dim;
  out.name = a.name;
  for (Index i = 0; i < a.dim; ++i) {
    for (Index j = i + 1; j < a.dim; ++j) {
      const RatVector v = a.bracket(i, j) + s * lambda.bracket(i, j);
      if (!is_zero(v)) out.constants[{i, j}] = v;
    }
  }
  return out;
}

Index pair_count(Index n) { return n * (n - 1) / 2; }

Index pair_offset(Index i, Index j, Index n) {
  // Position of (i,j), i<j, in the lexicographic pair order.
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

RatVector constant_vector(const Algebra& a) {
  const Index n = a.dim;
  RatVector v = RatVector::Zero(pair_count(n) * n);
  for (const auto& [key, c] : a.constants) {
    const Index base = pair_offset(key.first, key.second, n) * n;
    v.segment(base, n) = c;
  }
  return v;
}

Algebra algebra_from_constant_vector(const RatVector& v, Index n, std::string name) {
  if (v.size() != pair_count(n) * n)
    throw std::invalid_argument("algebra_from_constant_vector: wrong coordinate length");
  Algebra out;
  out.dim = n;
  out.name = std::move(name);
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      const RatVector c = v.segment(pair_offset(i, j, n) * n, n);
      if (!is_zero(c)) out.constants[{i, j}] = c;
    }
  }
  return out;
}

}  // namespace derivscope
