#include "derivscope/catalog.hpp"

#include <sstream>
#include <stdexcept>

namespace derivscope {

Algebra abelian(Index n) {
  if (n < 0) throw std::invalid_argument("abelian: negative dimension");
  Algebra a;
  a.dim = n;
  a.name = "K^" + std::to_string(n);
  return a;
}

Algebra aff() {
  Algebra a;
  a.dim = 2;
  a.name = "aff";
  RatVector v = RatVector::Zero(2);
  v[1] = Rational(1);
  a.constants[{0, 1}] = std::move(v);
  return a;
}

Algebra heisenberg3() {
  Algebra a;
  a.dim = 3;
  a.name = "h3";
  RatVector v = RatVector::Zero(3);
  v[2] = Rational(1);
  a.constants[{0, 1}] = std::move(v);
  return a;
}

Algebra family_as(const Rational& s) {
  Algebra a;
  a.dim = 4;
  a.name = "As(" + s.str() + ")";
  RatVector e0 = RatVector::Unit(4, 0);
  a.constants[{0, 2}] = std::move(e0);
  if (!s.is_zero()) {
    RatVector se1 = RatVector::Zero(4);
    se1[1] = s;
    a.constants[{0, 3}] = se1;
    a.constants[{1, 2}] = std::move(se1);
  }
  return a;
}

Algebra sl2() {
  Algebra a;
  a.dim = 3;
  a.name = "sl2";
  RatVector he = RatVector::Zero(3);
  he[1] = Rational(2);
  RatVector hf = RatVector::Zero(3);
  hf[2] = Rational(-2);
  RatVector ef = RatVector::Unit(3, 0);
  a.constants[{0, 1}] = std::move(he);
  a.constants[{0, 2}] = std::move(hf);
  a.constants[{1, 2}] = std::move(ef);
  return a;
}

Algebra standard_filiform(Index n) {
  if (n < 4) throw std::invalid_argument("standard_filiform: dimension must be at least 4");
  const Index m = n - 1;
  RatMatrix t = RatMatrix::Zero(m, m);
  for (Index i = 0; i + 1 < m; ++i) t(i + 1, i) = Rational(1);  // single Jordan block, index m
  Algebra a = one_dim_extension(t);
  a.name = "filiform(" + std::to_string(n) + ")";
  return a;
}

Algebra with_abelian_factor(Algebra a, Index m) {
  if (m == 0) return a;
  Algebra out = direct_product(a, abelian(m));
  out.name = a.name + " x K^" + std::to_string(m);
  return out;
}

namespace {

using Expected = std::map<std::string, Rational>;

CatalogEntry entry(Algebra a, Expected expected) {
  std::string name = a.name;
  return CatalogEntry{std::move(name), std::move(a), std::move(expected)};
}

std::vector<CatalogEntry> build_default_catalog() {
  std::vector<CatalogEntry> out;

  out.push_back(entry(abelian(3), Expected{{"is_lie", 1},
                                           {"is_perfect", 0},
                                           {"dim_derived", 0},
                                           {"dim_center", 3},
                                           {"dim_omega", 9},
                                           {"dim_centroid", 9},
                                           {"phi_generic", 9}}));
  out.push_back(entry(aff(), Expected{{"is_lie", 1},
                                      {"is_perfect", 0},
                                      {"dim_derived", 1},
                                      {"dim_center", 0},
                                      {"dim_omega", 0},
                                      {"dim_centroid", 1},
                                      {"phi_generic", 0}}));
  out.push_back(entry(with_abelian_factor(aff(), 1), Expected{{"is_lie", 1},
                                                              {"dim_derived", 1},
                                                              {"dim_center", 1},
                                                              {"dim_omega", 2},
                                                              {"dim_centroid", 3},
                                                              {"phi_generic", 2}}));
  out.push_back(entry(with_abelian_factor(aff(), 2), Expected{{"is_lie", 1},
                                                              {"dim_derived", 1},
                                                              {"dim_center", 2},
                                                              {"dim_omega", 6},
                                                              {"dim_centroid", 7},
                                                              {"phi_generic", 6}}));
  out.push_back(entry(heisenberg3(), Expected{{"is_lie", 1},
                                              {"is_perfect", 0},
                                              {"dim_derived", 1},
                                              {"dim_center", 1},
                                              {"dim_g2", 0},
                                              {"dim_omega", 2},
                                              {"dim_centroid", 3},
                                              {"phi_generic", 3}}));
  out.push_back(entry(with_abelian_factor(heisenberg3(), 1), Expected{{"is_lie", 1},
                                                                      {"dim_derived", 1},
                                                                      {"dim_center", 2},
                                                                      {"dim_omega", 6},
                                                                      {"phi_generic", 7}}));
  out.push_back(entry(with_abelian_factor(heisenberg3(), 2), Expected{{"is_lie", 1},
                                                                      {"dim_derived", 1},
                                                                      {"dim_center", 3},
                                                                      {"dim_omega", 12},
                                                                      {"phi_generic", 13}}));
  out.push_back(entry(sl2(), Expected{{"is_lie", 1},
                                      {"is_perfect", 1},
                                      {"dim_derived", 3},
                                      {"dim_center", 0},
                                      {"dim_omega", 0},
                                      {"dim_centroid", 1},
                                      {"phi_generic", 0}}));
  {
    Algebra a = direct_product(sl2(), sl2());
    a.name = "sl2 x sl2";
    out.push_back(entry(std::move(a), Expected{{"is_lie", 1},
                                               {"is_perfect", 1},
                                               {"dim_derived", 6},
                                               {"dim_center", 0},
                                               {"dim_omega", 0},
                                               {"phi_generic", 0}}));
  }
  for (Index n : {Index(4), Index(5), Index(6)}) {
    out.push_back(entry(standard_filiform(n), Expected{{"is_lie", 1},
                                                       {"is_perfect", 0},
                                                       {"dim_derived", n - 2},
                                                       {"dim_center", 1},
                                                       {"dim_g2", n - 3},
                                                       {"dim_omega", 2},
                                                       {"dim_centroid", 3},
                                                       {"phi_generic", 2}}));
  }
  out.push_back(entry(family_as(0), Expected{{"is_lie", 1},
                                             {"dim_derived", 1},
                                             {"dim_center", 2},
                                             {"dim_omega", 6},
                                             {"dim_centroid", 7},
                                             {"phi_generic", 6}}));
  out.push_back(entry(family_as(1), Expected{{"is_lie", 1},
                                             {"dim_derived", 2},
                                             {"dim_center", 0},
                                             {"dim_omega", 0},
                                             {"phi_generic", 0}}));
  out.push_back(entry(family_as(2), Expected{{"is_lie", 0},
                                             {"dim_derived", 2},
                                             {"dim_center", 0},
                                             {"dim_omega", 0}}));
  out.push_back(entry(family_as(3), Expected{{"is_lie", 0}, {"dim_derived", 2}, {"dim_center", 0}}));
  out.push_back(
      entry(family_as(Rational(1, 2)), Expected{{"is_lie", 0}, {"dim_derived", 2}}));
  out.push_back(entry(with_abelian_factor(family_as(2), 1),
                      Expected{{"is_lie", 0}, {"dim_derived", 2}, {"dim_center", 1}}));
  out.push_back(entry(with_abelian_factor(family_as(2), 2),
                      Expected{{"is_lie", 0}, {"dim_derived", 2}, {"dim_center", 2}}));
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& default_catalog() {
  static const std::vector<CatalogEntry> catalog = build_default_catalog();
  return catalog;
}

namespace {

Index nat_arg(const Rational& r, const char* what) {
  if (!(r.denominator() == 1) || r.sign() < 0)
    throw std::invalid_argument(std::string(what) + " must be a non-negative integer");
  if (!r.numerator().fits_slong_p())
    throw std::invalid_argument(std::string(what) + " is out of range");
  return static_cast<Index>(r.numerator().get_si());
}

void expect_arity(const std::vector<Rational>& args, std::size_t arity, const char* name) {
  if (args.size() != arity) {
    std::ostringstream os;
    os << "catalog " << name << " expects " << arity << " argument(s), got " << args.size();
    throw std::invalid_argument(os.str());
  }
}

}  // namespace

Algebra build_named(const std::string& name, const std::vector<Rational>& args) {
  if (name == "abelian") {
    expect_arity(args, 1, "abelian");
    return abelian(nat_arg(args[0], "abelian n"));
  }
  if (name == "aff") {
    expect_arity(args, 0, "aff");
    return aff();
  }
  if (name == "h3" || name == "heisenberg3") {
    expect_arity(args, 0, "h3");
    return heisenberg3();
  }
  if (name == "As") {
    expect_arity(args, 1, "As");
    return family_as(args[0]);
  }
  if (name == "sl2") {
    expect_arity(args, 0, "sl2");
    return sl2();
  }
  if (name == "filiform") {
    expect_arity(args, 1, "filiform");
    return standard_filiform(nat_arg(args[0], "filiform n"));
  }
  if (name == "affxK") {
    expect_arity(args, 1, "affxK");
    return with_abelian_factor(aff(), nat_arg(args[0], "affxK m"));
  }
  if (name == "h3xK") {
    expect_arity(args, 1, "h3xK");
    return with_abelian_factor(heisenberg3(), nat_arg(args[0], "h3xK m"));
  }
  if (name == "AsxK") {
    expect_arity(args, 2, "AsxK");
    return with_abelian_factor(family_as(args[0]), nat_arg(args[1], "AsxK m"));
  }
  if (name == "sl2xsl2") {
    expect_arity(args, 0, "sl2xsl2");
    Algebra a = direct_product(sl2(), sl2());
    a.name = "sl2 x sl2";
    return a;
  }
  throw std::invalid_argument("unknown catalog name '" + name + "' (try `catalog list`)");
}

std::vector<std::pair<std::string, std::string>> catalog_usage() {
  return {
      {"abelian", "abelian <n>          abelian algebra K^n"},
      {"aff", "aff                  affine algebra of the line (dim 2)"},
      {"h3", "h3                   Heisenberg algebra (dim 3)"},
      {"As", "As <s>               four-dimensional family member A_s"},
      {"sl2", "sl2                  sl(2) (dim 3, perfect)"},
      {"filiform", "filiform <n>         standard filiform algebra, n >= 4"},
      {"affxK", "affxK <m>            aff x K^m"},
      {"h3xK", "h3xK <m>             h3 x K^m"},
      {"AsxK", "AsxK <s> <m>         A_s x K^m"},
      {"sl2xsl2", "sl2xsl2              sl(2) x sl(2) (dim 6, perfect)"},
  };
}

}  // namespace derivscope
