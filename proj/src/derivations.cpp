#include "derivscope/derivations.hpp"

#include <sstream>
#include <stdexcept>

namespace derivscope {

RatVector vectorize(const LinearMap& d) {
  const Index n = d.rows();
  if (d.cols() != n) throw std::invalid_argument("vectorize: map must be square");
  RatVector v(n * n);
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i) v[j * n + i] = d(i, j);
  return v;
}

LinearMap unvectorize(const RatVector& v, Index n) {
  if (v.size() != n * n) throw std::invalid_argument("unvectorize: wrong coordinate length");
  LinearMap d(n, n);
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i) d(i, j) = v[j * n + i];
  return d;
}

std::optional<IdentityDefect> identity_defect(const Algebra& a, const DerivationParams& p,
                                              const LinearMap& d) {
  const Index n = a.dim;
  if (d.rows() != n || d.cols() != n)
    throw std::invalid_argument("identity_defect: map size does not match algebra dimension");
  for (Index i = 0; i < n; ++i) {
    const RatVector ei = RatVector::Unit(n, i);
    const RatVector dei = d.col(i);
    for (Index j = 0; j < n; ++j) {
      const RatVector ej = RatVector::Unit(n, j);
      const RatVector defect = p.alpha * (d * a.bracket(i, j)) -
                               p.beta * product(a, dei, ej) - p.gamma * product(a, ei, d.col(j));
      if (!is_zero(defect)) return IdentityDefect{i, j, defect};
    }
  }
  return std::nullopt;
}

std::string describe(const IdentityDefect& defect) {
  std::ostringstream os;
  os << "identity fails at basis pair (e" << defect.i << ", e" << defect.j << "), defect (";
  for (Index k = 0; k < defect.defect.size(); ++k) {
    if (k) os << ", ";
    os << defect.defect[k];
  }
  os << ")";
  return os.str();
}

MapSpace::MapSpace(std::optional<DerivationParams> params, Index algebra_dim, Subspace vectorized)
    : params_(std::move(params)), algebra_dim_(algebra_dim), vectorized_(std::move(vectorized)) {
  if (vectorized_.ambient_dim() != algebra_dim_ * algebra_dim_)
    throw std::invalid_argument("MapSpace: subspace ambient must be n^2");
  basis_.reserve(static_cast<std::size_t>(vectorized_.dim()));
  for (Index i = 0; i < vectorized_.dim(); ++i)
    basis_.push_back(unvectorize(vectorized_.basis_vector(i), algebra_dim_));
}

RatMatrix constraint_matrix(const Algebra& a, const DerivationParams& p) {
  const Index n = a.dim;
  RatMatrix m = RatMatrix::Zero(n * n * n, n * n);
  // Unknown x flattens D column-major: x[c*n + r] = D(r, c).
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      const Index row0 = (i * n + j) * n;
      // alpha · (D mu(e_i,e_j))_k = alpha · sum_m c_ij^m · x[m*n + k]
      if (!p.alpha.is_zero()) {
        const RatVector cij = a.bracket(i, j);
        for (Index mm = 0; mm < n; ++mm) {
          if (cij[mm].is_zero()) continue;
          const Rational coeff = p.alpha * cij[mm];
          for (Index k = 0; k < n; ++k) m(row0 + k, mm * n + k) += coeff;
        }
      }
      // -beta · (mu(De_i, e_j))_k = -beta · sum_a x[i*n + a] · mu(e_a, e_j)_k
      if (!p.beta.is_zero()) {
        for (Index aa = 0; aa < n; ++aa) {
          const RatVector caj = a.bracket(aa, j);
          for (Index k = 0; k < n; ++k) {
            if (caj[k].is_zero()) continue;
            m(row0 + k, i * n + aa) -= p.beta * caj[k];
          }
        }
      }
      // -gamma · (mu(e_i, De_j))_k = -gamma · sum_b x[j*n + b] · mu(e_i, e_b)_k
      if (!p.gamma.is_zero()) {
        for (Index bb = 0; bb < n; ++bb) {
          const RatVector cib = a.bracket(i, bb);
          for (Index k = 0; k < n; ++k) {
            if (cib[k].is_zero()) continue;
            m(row0 + k, j * n + bb) -= p.gamma * cib[k];
          }
        }
      }
    }
  }
  return m;
}

MapSpace derivation_space(const Algebra& a, const DerivationParams& p) {
  MapSpace space(p, a.dim, nullspace(constraint_matrix(a, p)));
  for (const LinearMap& d : space.basis()) {
    if (auto defect = identity_defect(a, p, d))
      throw std::logic_error("derivation_space: solver returned a non-derivation: " +
                             describe(*defect));
  }
  return space;
}

Index phi(const Algebra& a, const Rational& t) {
  return derivation_space(a, DerivationParams::phi_family(t)).dimension();
}

MapSpace omega_space(const Algebra& a) {
  const DerivationParams into_center{Rational(0), Rational(1), Rational(0)};
  const DerivationParams killing_derived{Rational(1), Rational(0), Rational(0)};
  Subspace inter = intersect(derivation_space(a, into_center).vectorized(),
                             derivation_space(a, killing_derived).vectorized());
  return MapSpace(std::nullopt, a.dim, std::move(inter));
}

MapSpace centroid(const Algebra& a) {
  return derivation_space(a, DerivationParams{Rational(1), Rational(1), Rational(0)});
}

LinearMap transport_with_complement(const Algebra& a, const LinearMap& d, const Rational& t,
                                    const Rational& s, const Subspace& complement) {
  if (t.is_zero() || t.is_one())
    throw std::invalid_argument("transport: t must lie outside {0,1}");
  if (!is_lie(a)) throw std::invalid_argument("transport: algebra is not Lie");
  const Subspace derived = derived_algebra(a);
  if (derived.dim() == a.dim) throw std::invalid_argument("transport: algebra is perfect");
  if (auto defect = identity_defect(a, DerivationParams::phi_family(t), d))
    throw std::invalid_argument("transport: map is not a (t,1,0)-derivation: " +
                                describe(*defect));
  if (complement.ambient_dim() != a.dim ||
      sum(complement, derived).dim() != a.dim ||
      intersect(complement, derived).dim() != 0)
    throw std::invalid_argument("transport: not a complement of the derived algebra");

  // Basis of V adapted to complement ⊕ derived; rescale the complement block.
  const Index n = a.dim;
  RatMatrix basis(n, n);
  basis.leftCols(complement.dim()) = complement.basis().transpose();
  basis.rightCols(derived.dim()) = derived.basis().transpose();
  RatMatrix scale = RatMatrix::Identity(n, n);
  const Rational factor = s / t;
  for (Index i = 0; i < complement.dim(); ++i) scale(i, i) = factor;
  return d * basis * scale * inverse(basis);
}

LinearMap transport(const Algebra& a, const LinearMap& d, const Rational& t, const Rational& s) {
  return transport_with_complement(a, d, t, s, coordinate_complement(derived_algebra(a)));
}

RatMatrix restrict_to_derived(const Algebra& a, const LinearMap& d, const Rational& t) {
  if (t.is_zero() || t.is_one())
    throw std::invalid_argument("restrict_to_derived: t must lie outside {0,1}");
  if (!is_lie(a)) throw std::invalid_argument("restrict_to_derived: algebra is not Lie");
  if (auto defect = identity_defect(a, DerivationParams::phi_family(t), d))
    throw std::invalid_argument("restrict_to_derived: map is not a (t,1,0)-derivation: " +
                                describe(*defect));
  const Subspace domain = derived_algebra(a);
  const Subspace codomain = intersect(center(a), domain);
  RatMatrix out(codomain.dim(), domain.dim());
  for (Index i = 0; i < domain.dim(); ++i) {
    const RatVector image = d * domain.basis_vector(i);
    const auto coords = codomain.coordinates_of(image);
    if (!coords)
      throw std::invalid_argument(
          "restrict_to_derived: image of the derived algebra escapes center ∩ derived");
    out.col(i) = *coords;
  }
  return out;
}

std::optional<Index> nilpotency_index(const LinearMap& d) {
  const Index n = d.rows();
  if (d.cols() != n) throw std::invalid_argument("nilpotency_index: map must be square");
  LinearMap power = d;
  for (Index k = 1; k <= n; ++k) {
    if (is_zero(power)) return k;
    power = power * d;
  }
  return std::nullopt;
}

Subspace products_admitting(const LinearMap& d, const DerivationParams& p) {
  const Index n = d.rows();
  if (d.cols() != n) throw std::invalid_argument("products_admitting: map must be square");
  const Index unknowns = pair_count(n) * n;

  // Same ordered-pair quantification as constraint_matrix, with the roles
  // swapped: d is fixed and the law is the unknown. sign(a,b) resolves
  // c_ab = sign · c_{min,max} with c_aa = 0.
  const auto add = [n](RatMatrix& m, Index row, Index a_, Index b_, Index k,
                       const Rational& coeff) {
    if (a_ == b_ || coeff.is_zero()) return;
    const bool flip = a_ > b_;
    const Index i = flip ? b_ : a_;
    const Index j = flip ? a_ : b_;
    const Rational signed_coeff = flip ? -coeff : coeff;
    m(row, pair_offset(i, j, n) * n + k) += signed_coeff;
  };

  RatMatrix m = RatMatrix::Zero(n * n * n, unknowns);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      const Index row0 = (i * n + j) * n;
      for (Index k = 0; k < n; ++k) {
        const Index row = row0 + k;
        // alpha · (D mu(e_i,e_j))_k = alpha · sum_m d(k,m) · c_ij^m
        if (!p.alpha.is_zero())
          for (Index mm = 0; mm < n; ++mm) add(m, row, i, j, mm, p.alpha * d(k, mm));
        // -beta · (mu(De_i,e_j))_k = -beta · sum_a d(a,i) · c_aj^k
        if (!p.beta.is_zero())
          for (Index aa = 0; aa < n; ++aa) add(m, row, aa, j, k, -(p.beta * d(aa, i)));
        // -gamma · (mu(e_i,De_j))_k = -gamma · sum_b d(b,j) · c_ib^k
        if (!p.gamma.is_zero())
          for (Index bb = 0; bb < n; ++bb) add(m, row, i, bb, k, -(p.gamma * d(bb, j)));
      }
    }
  }
  return nullspace(m);
}

Algebra deformation_cocycle(const Algebra& a, const LinearMap& d, const Rational& t) {
  if (t.is_zero() || t.is_one())
    throw std::invalid_argument("deformation_cocycle: t must lie outside {0,1}");
  if (!is_lie(a)) throw std::invalid_argument("deformation_cocycle: algebra is not Lie");
  if (auto defect = identity_defect(a, DerivationParams::phi_family(t), d))
    throw std::invalid_argument("deformation_cocycle: map is not a (t,1,0)-derivation: " +
                                describe(*defect));
  const Index n = a.dim;
  // Antisymmetry check: mu(De_i, e_j) + mu(De_j, e_i) = 0 for i <= j.
  for (Index i = 0; i < n; ++i) {
    for (Index j = i; j < n; ++j) {
      const RatVector defect = product(a, d.col(i), RatVector::Unit(n, j)) +
                               product(a, d.col(j), RatVector::Unit(n, i));
      if (!is_zero(defect)) {
        std::ostringstream os;
        os << "deformation_cocycle: lambda is not antisymmetric at (e" << i << ", e" << j << ")";
        throw std::invalid_argument(os.str());
      }
    }
  }
  Algebra lambda;
  lambda.dim = n;
  lambda.name = a.name.empty() ? "lambda" : "lambda(" + a.name + ")";
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      RatVector v = product(a, d.col(i), RatVector::Unit(n, j));
      if (!is_zero(v)) lambda.constants[{i, j}] = std::move(v);
    }
  }
  return lambda;
}

}  // namespace derivscope
