#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "derivscope/algebra.hpp"

namespace derivscope {

/// Abelian law on Q^n.
Algebra abelian(Index n);

/// Affine algebra of the line: dim 2, mu(e0, e1) = e1.
Algebra aff();

/// Heisenberg algebra: dim 3, mu(e0, e1) = e2.
Algebra heisenberg3();

/// One-parameter family: dim 4 with mu(e0,e2) = e0, mu(e0,e3) = s·e1,
/// mu(e1,e2) = s·e1. Lie exactly for s in {0, 1}.
Algebra family_as(const Rational& s);

/// dim 3 with mu(h,e) = 2e, mu(h,f) = -2f, mu(e,f) = h on (h,e,f) = (e0,e1,e2);
/// perfect.
Algebra sl2();

/// One-dimensional extension of the single nilpotent Jordan block of size
/// n-1; total dimension n, requires n >= 4.
Algebra standard_filiform(Index n);

/// a x K^m.
Algebra with_abelian_factor(Algebra a, Index m);

/// A catalog algebra together with externally known exact invariants, keyed
/// by name ("dim_omega", "phi_generic", ...); the verifier recomputes and
/// matches every entry.
struct CatalogEntry {
  std::string name;
  Algebra algebra;
  std::map<std::string, Rational> expected;
};

const std::vector<CatalogEntry>& default_catalog();

/// Constructor registry behind `catalog <name> [args...]`; throws
/// std::invalid_argument for unknown names or wrong arity.
Algebra build_named(const std::string& name, const std::vector<Rational>& args);

/// (name, usage) pairs for `catalog list`.
std::vector<std::pair<std::string, std::string>> catalog_usage();

}  // namespace derivscope
