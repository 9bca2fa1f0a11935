#include "derivscope/verifier.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "derivscope/parallel.hpp"

namespace derivscope {

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::not_applicable: return "not_applicable";
  }
  return "unknown";
}

std::vector<Rational> default_t_set() {
  return {Rational(-2), Rational(-1), Rational(1, 2), Rational(2), Rational(3)};
}

bool all_passed(const std::vector<CheckReport>& reports) {
  return std::none_of(reports.begin(), reports.end(),
                      [](const CheckReport& r) { return r.failed(); });
}

namespace {

CheckReport make_report(std::string check, std::string subject, std::vector<Rational> params) {
  CheckReport r;
  r.check = std::move(check);
  r.subject = std::move(subject);
  r.params = std::move(params);
  return r;
}

CheckReport& pass(CheckReport& r, std::string detail = {}) {
  r.status = CheckStatus::pass;
  r.detail = std::move(detail);
  return r;
}

CheckReport& fail(CheckReport& r, std::string witness) {
  r.status = CheckStatus::fail;
  r.witness = std::move(witness);
  return r;
}

CheckReport& not_applicable(CheckReport& r, std::string reason) {
  r.status = CheckStatus::not_applicable;
  r.detail = std::move(reason);
  return r;
}

bool excluded_t(const Rational& t) { return t.is_zero() || t.is_one(); }

std::string vec_str(const RatVector& v) {
  std::ostringstream os;
  os << "(";
  for (Index k = 0; k < v.size(); ++k) {
    if (k) os << ", ";
    os << v[k];
  }
  os << ")";
  return os.str();
}

std::string rat_list_str(const std::vector<Rational>& values) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) os << ", ";
    os << values[i];
  }
  os << "}";
  return os.str();
}

// Stacks the vectorizations of `maps` (plus optional extras) and returns the
// rank, for linear-independence arguments.
Index stacked_rank(const std::vector<LinearMap>& maps, const std::vector<RatVector>& extra = {}) {
  if (maps.empty() && extra.empty()) return 0;
  const Index cols = maps.empty() ? extra.front().size() : maps.front().size();
  RatMatrix rows(static_cast<Index>(maps.size() + extra.size()), cols);
  Index out = 0;
  for (const auto& d : maps) rows.row(out++) = vectorize(d).transpose();
  for (const auto& v : extra) rows.row(out++) = v.transpose();
  return rank(rows);
}

}  // namespace

CheckReport check_defining_identity(const Algebra& a, const DerivationParams& p,
                                    const MapSpace& space) {
  CheckReport r = make_report("defining_identity", a.name, {p.alpha, p.beta, p.gamma});
  if (space.algebra_dim() != a.dim)
    return not_applicable(r, "map space was computed for a different dimension");
  for (std::size_t m = 0; m < space.basis().size(); ++m) {
    if (auto defect = identity_defect(a, p, space.basis()[m])) {
      return fail(r, "basis map #" + std::to_string(m) + ": " + describe(*defect));
    }
  }
  return pass(r, "all " + std::to_string(space.basis().size()) +
                     " basis maps satisfy the identity on every basis pair");
}

CheckReport check_triple_identity(const Algebra& a, const Rational& t) {
  CheckReport r = make_report("triple_identity", a.name, {t});
  if (excluded_t(t)) return not_applicable(r, "precondition: t outside {0,1}");
  if (!is_lie(a)) return not_applicable(r, "precondition: algebra must be Lie");
  const MapSpace space = derivation_space(a, DerivationParams::phi_family(t));
  const Index n = a.dim;
  for (std::size_t m = 0; m < space.basis().size(); ++m) {
    const LinearMap& d = space.basis()[m];
    for (Index i = 0; i < n; ++i) {
      const RatVector ei = RatVector::Unit(n, i);
      for (Index j = 0; j < n; ++j) {
        for (Index k = j + 1; k < n; ++k) {
          const RatVector inner = product(a, ei, a.bracket(j, k));
          const RatVector image = d * inner;
          if (!is_zero(image)) {
            std::ostringstream os;
            os << "basis map #" << m << ": D mu(e" << i << ", mu(e" << j << ", e" << k
               << ")) = " << vec_str(image);
            return fail(r, os.str());
          }
        }
      }
    }
  }
  return pass(r, "D mu(e_i, mu(e_j, e_k)) = 0 for all basis triples and all " +
                     std::to_string(space.basis().size()) + " basis maps");
}

CheckReport check_perfect_trivial(const Algebra& a, const Rational& t) {
  CheckReport r = make_report("perfect_trivial", a.name, {t});
  if (excluded_t(t)) return not_applicable(r, "precondition: t outside {0,1}");
  if (!is_lie(a)) return not_applicable(r, "precondition: algebra must be Lie");
  if (!is_perfect(a)) return not_applicable(r, "precondition: algebra must be perfect");
  const Index value = phi(a, t);
  if (value != 0) return fail(r, "phi = " + std::to_string(value) + ", expected 0");
  return pass(r, "phi = 0");
}

CheckReport check_constancy(const Algebra& a, const std::vector<Rational>& t_set) {
  CheckReport r = make_report("phi_constancy", a.name, t_set);
  if (!is_lie(a)) return not_applicable(r, "precondition: algebra must be Lie");
  if (t_set.empty()) return not_applicable(r, "precondition: empty t sample");
  for (const Rational& t : t_set)
    if (excluded_t(t)) return not_applicable(r, "precondition: every t outside {0,1}");
  std::vector<Index> values;
  values.reserve(t_set.size());
  for (const Rational& t : t_set) values.push_back(phi(a, t));
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] != values[0]) {
      std::ostringstream os;
      os << "phi(" << t_set[0] << ") = " << values[0] << " but phi(" << t_set[i]
         << ") = " << values[i];
      return fail(r, os.str());
    }
  }
  return pass(r, "phi = " + std::to_string(values[0]) + " across sampled t " +
                     rat_list_str(t_set) +
                     " (equality for all t outside {0,1} holds by the constancy theorem; the "
                     "sample certifies these values exactly)");
}

CheckReport check_bounds(const Algebra& a, const Rational& t) {
  CheckReport r = make_report("phi_bounds", a.name, {t});
  if (excluded_t(t)) return not_applicable(r, "precondition: t outside {0,1}");
  if (!is_lie(a)) return not_applicable(r, "precondition: algebra must be Lie");
  if (is_perfect(a)) return not_applicable(r, "precondition: algebra must be non-perfect");

  const Index value = phi(a, t);
  const Index omega = omega_space(a).dimension();
  const Subspace derived = derived_algebra(a);
  const Subspace z_cap_derived = intersect(center(a), derived);
  const Subspace g2 = lower_central_term(a);
  const Index upper = omega + derived.dim() * z_cap_derived.dim();

  std::ostringstream detail;
  detail << "dim Omega = " << omega << " <= phi = " << value << " <= " << upper;
  if (value < omega || value > upper) {
    std::ostringstream os;
    os << "bounds violated: dim Omega = " << omega << ", phi = " << value
       << ", upper = " << upper;
    return fail(r, os.str());
  }
  const bool refined_applies = g2.dim() > 0 && g2.dim() < derived.dim();
  if (refined_applies) {
    const Index refined = omega + (derived.dim() - g2.dim()) * z_cap_derived.dim();
    detail << "; refined upper (via derived/lower-central quotient) = " << refined;
    if (value > refined) {
      std::ostringstream os;
      os << "refined bound violated: phi = " << value << " > " << refined;
      return fail(r, os.str());
    }
  }
  if (value == omega) detail << "; lower bound attained";
  if (value == upper) detail << "; upper bound attained";
  return pass(r, detail.str());
}

CheckReport check_centroid_embedding(const Algebra& a, const Rational& t) {
  CheckReport r = make_report("centroid_embedding", a.name, {t});
  if (excluded_t(t)) return not_applicable(r, "precondition: t outside {0,1}");
  if (!is_lie(a)) return not_applicable(r, "precondition: algebra must be Lie");
  if (is_perfect(a)) return not_applicable(r, "precondition: algebra must be non-perfect");

  const MapSpace space = derivation_space(a, DerivationParams::phi_family(t));
  const MapSpace cent = centroid(a);
  std::vector<LinearMap> transported;
  transported.reserve(space.basis().size());
  for (std::size_t m = 0; m < space.basis().size(); ++m) {
    LinearMap image = transport(a, space.basis()[m], t, Rational(1));
    if (!cent.contains(image))
      return fail(r, "transport of basis map #" + std::to_string(m) + " is not in the centroid");
    transported.push_back(std::move(image));
  }
  const Index independent = stacked_rank(transported);
  if (independent != space.dimension()) {
    std::ostringstream os;
    os << "transported images are dependent: rank " << independent << " of "
       << space.dimension();
    return fail(r, os.str());
  }
  std::ostringstream detail;
  detail << "phi = " << space.dimension() << " embeds into centroid of dim "
         << cent.dimension();

  const Subspace derived = derived_algebra(a);
  const Subspace g2 = lower_central_term(a);
  if (g2.dim() > 0 && g2.dim() < derived.dim()) {
    const RatVector id_vec = vectorize(RatMatrix::Identity(a.dim, a.dim));
    const Index with_id = stacked_rank(transported, {id_vec});
    if (with_id != space.dimension() + 1)
      return fail(r, "identity map lies in the embedded image");
    if (space.dimension() + 1 > cent.dimension()) {
      std::ostringstream os;
      os << "phi + 1 = " << space.dimension() + 1 << " exceeds centroid dim "
         << cent.dimension();
      return fail(r, os.str());
    }
    detail << "; identity independent of the image, so phi + 1 <= dim centroid";
    if (space.dimension() + 1 == cent.dimension()) detail << " (with equality)";
  }
  return pass(r, detail.str());
}

CheckReport check_direct_sum_lemma(const Algebra& b, Index m, const Rational& t) {
  CheckReport r = make_report("direct_sum_lemma", b.name + " x K^" + std::to_string(m), {t});
  r.params.push_back(Rational(m));
  if (t.is_zero()) return not_applicable(r, "precondition: t must be nonzero");

  const Algebra a = with_abelian_factor(b, m);
  const Subspace z = center(a);
  std::vector<RatVector> tail_units;
  tail_units.reserve(static_cast<std::size_t>(m));
  for (Index i = 0; i < m; ++i) tail_units.push_back(RatVector::Unit(a.dim, b.dim + i));
  const Subspace expected_center = Subspace::span(tail_units, a.dim);
  if (!(z == expected_center))
    return not_applicable(
        r, "precondition: center of b x K^m must be exactly the K^m block (b must be a "
           "centerless complement)");

  const Index lhs = derivation_space(a, DerivationParams::phi_family(t)).dimension();
  const Index factor_dim = derivation_space(b, DerivationParams::phi_family(t)).dimension();
  const Index derived_dim = derived_algebra(a).dim();
  const Index rhs = factor_dim + (a.dim - derived_dim) * z.dim();
  if (lhs != rhs) {
    std::ostringstream os;
    os << "dim D(t,1,0)(b x K^m) = " << lhs << " but factor decomposition gives " << factor_dim
       << " + " << (a.dim - derived_dim) << "*" << z.dim() << " = " << rhs;
    return fail(r, os.str());
  }
  std::ostringstream detail;
  detail << lhs << " = " << factor_dim << " + " << (a.dim - derived_dim) << "*" << z.dim();
  return pass(r, detail.str());
}

CheckReport check_proposition_table(const Rational& t, const std::vector<Rational>& s_values) {
  CheckReport r = make_report("proposition_table", "As family", {t});
  r.params.insert(r.params.end(), s_values.begin(), s_values.end());
  if (excluded_t(t)) return not_applicable(r, "precondition: t outside {0,1}");

  const Index at_zero = phi(family_as(Rational(0)), t);
  if (at_zero != 6)
    return fail(r, "phi(A_0, " + t.str() + ") = " + std::to_string(at_zero) + ", expected 6");
  const Index at_t = phi(family_as(t), t);
  if (at_t != 1)
    return fail(r, "phi(A_t, " + t.str() + ") = " + std::to_string(at_t) + ", expected 1");
  Index others = 0;
  for (const Rational& s : s_values) {
    if (s.is_zero() || s == t) continue;
    const Index value = phi(family_as(s), t);
    if (value != 0) {
      std::ostringstream os;
      os << "phi(A_s, t) with s = " << s << ", t = " << t << " is " << value << ", expected 0";
      return fail(r, os.str());
    }
    ++others;
  }
  std::ostringstream detail;
  detail << "phi(A_0) = 6, phi(A_t) = 1, and phi(A_s) = 0 for " << others
         << " sampled s outside {0, t}";
  return pass(r, detail.str());
}

CheckReport check_deformation(const Algebra& a, const Rational& t,
                              const std::vector<Rational>& s_samples) {
  CheckReport r = make_report("deformation", a.name, {t});
  r.params.insert(r.params.end(), s_samples.begin(), s_samples.end());
  if (excluded_t(t)) return not_applicable(r, "precondition: t outside {0,1}");
  if (!is_lie(a)) return not_applicable(r, "precondition: algebra must be Lie");

  const MapSpace space = derivation_space(a, DerivationParams::phi_family(t));
  for (std::size_t m = 0; m < space.basis().size(); ++m) {
    Algebra lambda;
    try {
      lambda = deformation_cocycle(a, space.basis()[m], t);
    } catch (const std::invalid_argument& e) {
      return fail(r, "basis map #" + std::to_string(m) + ": " + e.what());
    }
    if (!is_lie(lambda))
      return fail(r, "basis map #" + std::to_string(m) + ": (V, lambda) violates Jacobi");
    for (const Rational& s : s_samples) {
      if (!is_lie(deformed_product(a, lambda, s))) {
        std::ostringstream os;
        os << "basis map #" << m << ": mu + s*lambda violates Jacobi at s = " << s;
        return fail(r, os.str());
      }
    }
  }
  std::size_t distinct_nonzero = 0;
  {
    std::vector<Rational> seen;
    for (const Rational& s : s_samples) {
      if (s.is_zero()) continue;
      if (std::find(seen.begin(), seen.end(), s) == seen.end()) {
        seen.push_back(s);
        ++distinct_nonzero;
      }
    }
  }
  std::ostringstream detail;
  detail << "lambda antisymmetric and Lie; mu + s*lambda Lie at s in " << rat_list_str(s_samples)
         << " for all " << space.basis().size() << " basis maps.";
  if (distinct_nonzero >= 3) {
    detail << " The Jacobi defect of mu + s*lambda is polynomial of degree <= 2 in s; it "
              "vanishes at s = 0 (the base law) and at "
           << distinct_nonzero
           << " distinct nonzero samples, hence identically — the family is Lie for every s.";
  } else {
    detail << " Fewer than 3 distinct nonzero samples: the sampled values are certified, not "
              "the whole line.";
  }
  return pass(r, detail.str());
}

CheckReport check_isomorphism_invariance(const Algebra& a, const LinearMap& g,
                                         const DerivationParams& p) {
  CheckReport r = make_report("isomorphism_invariance", a.name, {p.alpha, p.beta, p.gamma});
  const Algebra moved = change_of_basis(a, g);  // throws on singular g
  const Index before = derivation_space(a, p).dimension();
  const Index after = derivation_space(moved, p).dimension();
  if (before != after) {
    std::ostringstream os;
    os << "dimension changed under change of basis: " << before << " -> " << after;
    return fail(r, os.str());
  }
  return pass(r, "dimension " + std::to_string(before) + " preserved");
}

CheckReport check_omega_dimension(const Algebra& a, const std::vector<Rational>& t_set) {
  CheckReport r = make_report("omega_dimension", a.name, t_set);
  const MapSpace omega = omega_space(a);
  const Index derived_dim = derived_algebra(a).dim();
  const Index center_dim = center(a).dim();
  const Index expected = (a.dim - derived_dim) * center_dim;
  if (omega.dimension() != expected) {
    std::ostringstream os;
    os << "dim Omega = " << omega.dimension() << " but (n - dim derived)*dim center = "
       << expected;
    return fail(r, os.str());
  }
  for (const Rational& t : t_set) {
    const MapSpace space = derivation_space(a, DerivationParams::phi_family(t));
    if (!space.vectorized().contains(omega.vectorized())) {
      return fail(r, "Omega is not contained in the (t,1,0) space at t = " + t.str());
    }
  }
  std::ostringstream detail;
  detail << "dim Omega = " << expected << " and Omega ⊆ D(t,1,0) for t in " << rat_list_str(t_set);
  return pass(r, detail.str());
}

CheckReport check_nilpotent_derivations(const Algebra& a, const Rational& t) {
  CheckReport r = make_report("nilpotent_derivations", a.name, {t});
  if (excluded_t(t) || t == Rational(-1))
    return not_applicable(r, "precondition: t outside {0, 1, -1}");
  if (center(a).dim() != 0) return not_applicable(r, "precondition: algebra must be centerless");
  const MapSpace space = derivation_space(a, DerivationParams::phi_family(t));
  for (std::size_t m = 0; m < space.basis().size(); ++m) {
    const auto idx = nilpotency_index(space.basis()[m]);
    if (!idx) return fail(r, "basis map #" + std::to_string(m) + " is not nilpotent");
  }
  return pass(r, "all " + std::to_string(space.basis().size()) + " basis maps nilpotent");
}

CheckReport check_centroid_split(const Algebra& a, const std::vector<Rational>& t_set) {
  CheckReport r = make_report("centroid_split", a.name, t_set);
  if (!is_lie(a)) return not_applicable(r, "precondition: algebra must be Lie");
  if (is_perfect(a)) return not_applicable(r, "precondition: algebra must be non-perfect");

  const MapSpace cent = centroid(a);
  const MapSpace omega = omega_space(a);
  const RatVector id_vec = vectorize(RatMatrix::Identity(a.dim, a.dim));
  if (!cent.vectorized().contains(id_vec)) return fail(r, "identity map not in centroid");
  if (!cent.vectorized().contains(omega.vectorized()))
    return fail(r, "Omega not contained in the centroid");
  const Subspace id_plus_omega =
      sum(omega.vectorized(), Subspace::span({id_vec}, id_vec.size()));
  if (id_plus_omega.dim() != omega.dimension() + 1)
    return fail(r, "identity map lies in Omega");
  if (cent.dimension() != omega.dimension() + 1) {
    std::ostringstream os;
    os << "dim centroid = " << cent.dimension() << " but 1 + dim Omega = "
       << omega.dimension() + 1;
    return fail(r, os.str());
  }
  for (const Rational& t : t_set) {
    if (excluded_t(t)) continue;
    const Index value = phi(a, t);
    if (value != omega.dimension()) {
      std::ostringstream os;
      os << "phi(" << t << ") = " << value << " differs from dim Omega = " << omega.dimension();
      return fail(r, os.str());
    }
  }
  return pass(r, "centroid = span{Id} ⊕ Omega (dim " + std::to_string(cent.dimension()) +
                     ") and phi = dim Omega on the sampled t");
}

CheckReport check_phi_collapse(const std::vector<Index>& abelian_factors) {
  CheckReport r = make_report("phi_collapse", "aff x K^m family", {});
  for (Index m : abelian_factors) r.params.push_back(Rational(m));
  if (abelian_factors.empty()) return not_applicable(r, "precondition: empty sample");

  const std::vector<Rational> ts = {Rational(-1), Rational(0), Rational(1)};
  std::vector<std::vector<Index>> tuples(ts.size());
  for (std::size_t ti = 0; ti < ts.size(); ++ti)
    for (Index m : abelian_factors)
      tuples[ti].push_back(phi(with_abelian_factor(aff(), m), ts[ti]));
  std::ostringstream detail;
  for (std::size_t ti = 0; ti < ts.size(); ++ti) {
    if (ti) detail << "; ";
    detail << "t = " << ts[ti] << ": (";
    for (std::size_t k = 0; k < tuples[ti].size(); ++k) {
      if (k) detail << ", ";
      detail << tuples[ti][k];
    }
    detail << ")";
  }
  for (std::size_t i = 0; i < ts.size(); ++i) {
    for (std::size_t j = i + 1; j < ts.size(); ++j) {
      if (tuples[i] == tuples[j]) {
        std::ostringstream os;
        os << "phi at t = " << ts[i] << " and t = " << ts[j]
           << " agree on every sampled algebra: " << detail.str();
        return fail(r, os.str());
      }
    }
  }
  return pass(r, detail.str());
}

CheckReport check_catalog_expected(const CatalogEntry& e) {
  CheckReport r = make_report("catalog_expected", e.name, {});
  const Algebra& a = e.algebra;
  for (const auto& [key, expected] : e.expected) {
    Rational actual;
    if (key == "is_lie")
      actual = Rational(is_lie(a) ? 1 : 0);
    else if (key == "is_perfect")
      actual = Rational(is_perfect(a) ? 1 : 0);
    else if (key == "dim_derived")
      actual = Rational(derived_algebra(a).dim());
    else if (key == "dim_center")
      actual = Rational(center(a).dim());
    else if (key == "dim_g2")
      actual = Rational(lower_central_term(a).dim());
    else if (key == "dim_omega")
      actual = Rational(omega_space(a).dimension());
    else if (key == "dim_centroid")
      actual = Rational(centroid(a).dimension());
    else if (key == "phi_generic")
      actual = Rational(phi(a, Rational(2)));
    else
      return fail(r, "unknown expected invariant '" + key + "'");
    if (actual != expected) {
      std::ostringstream os;
      os << key << " recomputed as " << actual << ", catalog says " << expected;
      return fail(r, os.str());
    }
  }
  return pass(r, std::to_string(e.expected.size()) + " expected invariants matched");
}

LinearMap seeded_invertible_map(Index n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> small(-2, 2);
  std::uniform_int_distribution<int> diag_pick(0, 3);
  std::uniform_int_distribution<int> coin(0, 1);

  std::vector<Index> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), Index(0));
  std::shuffle(perm.begin(), perm.end(), rng);

  RatMatrix p = RatMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) p(perm[static_cast<std::size_t>(i)], i) = Rational(1);

  RatMatrix lower = RatMatrix::Identity(n, n);
  RatMatrix upper = RatMatrix::Identity(n, n);
  const int diag_values[4] = {1, -1, 2, -2};
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < i; ++j) {
      if (coin(rng)) lower(i, j) = Rational(small(rng));
      if (coin(rng)) upper(j, i) = Rational(small(rng));
    }
    upper(i, i) = Rational(diag_values[diag_pick(rng)]);
  }
  return p * lower * upper;  // product of invertible factors
}

namespace {

using Task = std::function<CheckReport()>;

void algebra_tasks(const Algebra& a, const VerifierConfig& cfg, std::vector<Task>& tasks) {
  tasks.push_back([a, cfg] { return check_omega_dimension(a, cfg.t_set); });

  std::vector<DerivationParams> identity_params;
  for (const Rational& t : cfg.t_set) identity_params.push_back(DerivationParams::phi_family(t));
  identity_params.push_back({Rational(1), Rational(1), Rational(0)});
  identity_params.push_back({Rational(0), Rational(1), Rational(0)});
  identity_params.push_back({Rational(1), Rational(0), Rational(0)});
  identity_params.push_back({Rational(0), Rational(1), Rational(-1)});
  for (const DerivationParams& p : identity_params)
    tasks.push_back([a, p] { return check_defining_identity(a, p, derivation_space(a, p)); });

  for (const Rational& t : cfg.t_set) {
    tasks.push_back([a, t] { return check_triple_identity(a, t); });
    tasks.push_back([a, t] { return check_bounds(a, t); });
    tasks.push_back([a, t] { return check_centroid_embedding(a, t); });
    tasks.push_back([a, t] { return check_nilpotent_derivations(a, t); });
  }
  tasks.push_back([a, cfg] { return check_constancy(a, cfg.t_set); });
  if (is_lie(a) && is_perfect(a))
    for (const Rational& t : cfg.t_set)
      tasks.push_back([a, t] { return check_perfect_trivial(a, t); });

  for (const Rational& t : cfg.t_set) {
    if (t.is_zero() || t.is_one()) continue;
    tasks.push_back([a, t, cfg] { return check_deformation(a, t, cfg.s_samples); });
  }

  for (int k = 0; k < cfg.invariance_samples; ++k) {
    const unsigned seed = cfg.rng_seed + 7919u * static_cast<unsigned>(k) +
                          static_cast<unsigned>(std::hash<std::string>{}(a.name) & 0xffffu);
    tasks.push_back([a, seed] {
      const LinearMap g = seeded_invertible_map(a.dim, seed);
      return check_isomorphism_invariance(a, g, DerivationParams::phi_family(Rational(2)));
    });
    tasks.push_back([a, seed] {
      const LinearMap g = seeded_invertible_map(a.dim, seed + 1);
      return check_isomorphism_invariance(a, g,
                                          DerivationParams{Rational(1), Rational(1), Rational(0)});
    });
  }
}

std::vector<CheckReport> execute(std::vector<Task> tasks) {
  std::vector<CheckReport> reports(tasks.size());
  parallel_for(tasks.size(), [&](std::size_t i) { reports[i] = tasks[i](); });
  std::sort(reports.begin(), reports.end(), [](const CheckReport& a, const CheckReport& b) {
    if (a.check != b.check) return a.check < b.check;
    if (a.subject != b.subject) return a.subject < b.subject;
    const std::size_t len = std::min(a.params.size(), b.params.size());
    for (std::size_t i = 0; i < len; ++i) {
      if (a.params[i] != b.params[i]) return a.params[i] < b.params[i];
    }
    return a.params.size() < b.params.size();
  });
  return reports;
}

}  // namespace

std::vector<CheckReport> run_for_algebra(const Algebra& a, const VerifierConfig& config) {
  std::vector<Task> tasks;
  algebra_tasks(a, config, tasks);
  return execute(std::move(tasks));
}

std::vector<CheckReport> run_all(const VerifierConfig& config) {
  std::vector<Task> tasks;
  for (const CatalogEntry& e : default_catalog()) {
    tasks.push_back([&e] { return check_catalog_expected(e); });
    algebra_tasks(e.algebra, config, tasks);
  }
  for (const Rational& t : config.t_set) {
    tasks.push_back([t] {
      return check_proposition_table(t, {Rational(0), t, t + Rational(1), -t});
    });
  }
  const std::vector<Algebra> lemma_factors = {aff(), family_as(Rational(2)),
                                              family_as(Rational(3)), sl2(), heisenberg3()};
  for (const Algebra& b : lemma_factors) {
    for (Index m : {Index(1), Index(2)}) {
      for (const Rational& t : {Rational(2), Rational(3)}) {
        tasks.push_back([b, m, t] { return check_direct_sum_lemma(b, m, t); });
      }
    }
  }
  for (Index n : config.filiform_dims) {
    tasks.push_back(
        [n, config] { return check_centroid_split(standard_filiform(n), config.t_set); });
  }
  tasks.push_back([] { return check_phi_collapse({Index(1), Index(2)}); });
  return execute(std::move(tasks));
}

}  // namespace derivscope
