#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "derivscope/catalog.hpp"
#include "derivscope/derivations.hpp"

namespace derivscope {

enum class CheckStatus { pass, fail, not_applicable };
std::string_view to_string(CheckStatus status);

/// One executable statement: what was checked, on which algebra, with which
/// parameters. A failing report always carries a witness precise enough to
/// replay the failure through the algebra operations alone; a check whose
/// precondition does not hold reports not_applicable instead of passing
/// vacuously.
struct CheckReport {
  std::string check;
  std::string subject;
  std::vector<Rational> params;
  CheckStatus status = CheckStatus::not_applicable;
  std::string witness;  // nonempty iff status == fail
  std::string detail;   // e.g. the matched values, or why a check is n/a

  bool passed() const { return status == CheckStatus::pass; }
  bool failed() const { return status == CheckStatus::fail; }
};

/// Every basis map of `space` satisfies the p-identity on all basis pairs.
CheckReport check_defining_identity(const Algebra& a, const DerivationParams& p,
                                    const MapSpace& space);

/// D mu(e_i, mu(e_j, e_k)) = 0 for every basis triple and every basis D of
/// the (t,1,0) space (Lie, t outside {0,1}).
CheckReport check_triple_identity(const Algebra& a, const Rational& t);

/// Perfect Lie algebras have zero (t,1,0) space for t outside {0,1}.
CheckReport check_perfect_trivial(const Algebra& a, const Rational& t);

/// phi takes one common value over all t in t_set (Lie, all t outside {0,1}).
CheckReport check_constancy(const Algebra& a, const std::vector<Rational>& t_set);

/// dim Omega <= phi <= dim Omega + dim(derived)·dim(center ∩ derived) on
/// non-perfect Lie algebras, with the refined upper bound through
/// derived/lower-central when that quotient is nontrivial and proper.
CheckReport check_bounds(const Algebra& a, const Rational& t);

/// Transport to s = 1 embeds the (t,1,0) space into the centroid with
/// independent images; when the lower central term is nontrivial and proper
/// in the derived algebra, additionally phi + 1 <= dim centroid, with the
/// identity map independent of the embedded image.
CheckReport check_centroid_embedding(const Algebra& a, const Rational& t);

/// dim of the (t,1,0) space of b x K^m decomposes as
/// dim (t,1,0)-space(b) + (dim a - dim derived(a))·dim center(a); requires
/// the computed center of a = b x K^m to be exactly the K^m block.
CheckReport check_direct_sum_lemma(const Algebra& b, Index m, const Rational& t);

/// phi(A_0, t) = 6, phi(A_t, t) = 1 and phi(A_s, t) = 0 for sampled s
/// outside {0, t}.
CheckReport check_proposition_table(const Rational& t, const std::vector<Rational>& s_values);

/// For every basis D at (t,1,0): lambda(x,y) = mu(Dx,y) is antisymmetric,
/// (V,lambda) is Lie, and mu + s·lambda is Lie for each sampled s. The Jacobi
/// defect of mu + s·lambda is a polynomial of degree <= 2 in s, so vanishing
/// at s = 0 plus three distinct nonzero samples certifies every s; the report
/// records that argument.
CheckReport check_deformation(const Algebra& a, const Rational& t,
                              const std::vector<Rational>& s_samples);

/// Derivation-space dimensions are unchanged under change_of_basis by g.
CheckReport check_isomorphism_invariance(const Algebra& a, const LinearMap& g,
                                         const DerivationParams& p);

/// dim Omega = (n - dim derived) · dim center, and Omega is contained in the
/// (t,1,0) space for every sampled t.
CheckReport check_omega_dimension(const Algebra& a, const std::vector<Rational>& t_set);

/// Every basis element of the (t,1,0) space is nilpotent (centerless algebra,
/// t outside {0, 1, -1}).
CheckReport check_nilpotent_derivations(const Algebra& a, const Rational& t);

/// centroid = span{Id} ⊕ Omega and phi(t) = dim Omega for t outside {0,1}
/// (the standard filiform picture).
CheckReport check_centroid_split(const Algebra& a, const std::vector<Rational>& t_set);

/// phi at t in {-1, 0, 1} on aff x K^m: the three value tuples over the
/// sampled m are pairwise distinct, so the three functions differ.
CheckReport check_phi_collapse(const std::vector<Index>& abelian_factors);

/// Recomputes every expected invariant of a catalog entry and matches it
/// exactly.
CheckReport check_catalog_expected(const CatalogEntry& e);

std::vector<Rational> default_t_set();  // {-2, -1, 1/2, 2, 3}

struct VerifierConfig {
  std::vector<Rational> t_set = default_t_set();
  std::vector<Rational> s_samples{Rational(1), Rational(2), Rational(3)};
  std::vector<Index> filiform_dims{4, 5, 6};
  unsigned rng_seed = 20240801;
  int invariance_samples = 3;
};

/// Every applicable check over the built-in catalog crossed with the config.
/// Checks run independently (possibly in parallel, capped by
/// DERIVSCOPE_THREADS); reports come back sorted by check name, subject,
/// parameters regardless of execution order.
std::vector<CheckReport> run_all(const VerifierConfig& config = {});

/// The applicable per-algebra checks for one externally supplied algebra.
std::vector<CheckReport> run_for_algebra(const Algebra& a, const VerifierConfig& config = {});

bool all_passed(const std::vector<CheckReport>& reports);

/// Deterministic invertible map built from a seeded permutation, unit shears
/// and a small diagonal; used for the isomorphism-invariance checks.
LinearMap seeded_invertible_map(Index n, unsigned seed);

}  // namespace derivscope
