#pragma once

#include <Eigen/Core>

#include <string>
#include <vector>

#include "derivscope/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<derivscope::Rational> : GenericNumTraits<derivscope::Rational> {
  typedef derivscope::Rational Real;
  typedef derivscope::Rational NonInteger;
  typedef derivscope::Rational Nested;

  static inline Real epsilon() { return derivscope::Rational(0); }
  static inline Real dummy_precision() { return derivscope::Rational(0); }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace derivscope {

using Index = Eigen::Index;
using RatMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// Exact zero test for any dense expression.
template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero()) return false;
  return true;
}

/// Exact equality; shape mismatch compares unequal instead of asserting.
template <typename D1, typename D2>
bool equal(const Eigen::MatrixBase<D1>& a, const Eigen::MatrixBase<D2>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return is_zero((a - b).eval());
}

RatMatrix vstack(const RatMatrix& top, const RatMatrix& bottom);

/// Entries rendered "p" / "p/q", row by row.
std::vector<std::vector<std::string>> row_major_strings(const RatMatrix& m);

}  // namespace derivscope
