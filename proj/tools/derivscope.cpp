// derivscope — exact computations with (alpha,beta,gamma)-derivations of
// anti-commutative algebras given by structure constants.
//
// Exit codes: 0 success (and every applicable check passed for `verify`),
// 1 check failure, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "derivscope/algebra_io.hpp"
#include "derivscope/catalog.hpp"
#include "derivscope/parallel.hpp"
#include "derivscope/report.hpp"

namespace {

using namespace derivscope;

std::vector<Rational> parse_csv_rationals(const std::string& csv, const char* flag) {
  std::vector<Rational> out;
  std::string token;
  std::istringstream in(csv);
  while (std::getline(in, token, ',')) {
    const auto begin = token.find_first_not_of(" \t");
    if (begin == std::string::npos)
      throw std::invalid_argument(std::string(flag) + ": empty value in list");
    const auto end = token.find_last_not_of(" \t");
    out.push_back(Rational::parse(token.substr(begin, end - begin + 1)));
  }
  if (out.empty()) throw std::invalid_argument(std::string(flag) + ": empty list");
  return out;
}

Algebra load_algebra(const std::string& path) {
  Algebra a = parse_algebra_file(path);
  const auto violations = validate(a);
  if (!violations.empty()) throw AlgebraParseError(0, violations.front());
  return a;
}

int emit(const Json& doc) {
  std::cout << doc.dump(2) << "\n";
  return 0;
}

int cmd_info(const std::string& path) {
  const Algebra a = load_algebra(path);
  const Subspace derived = derived_algebra(a);
  const Subspace z = center(a);
  Json result;
  result["n"] = a.dim;
  result["is_lie"] = is_lie(a);
  result["is_perfect"] = derived.dim() == a.dim;
  result["derived"] = derived.dim();
  result["center"] = z.dim();
  result["center_cap_derived"] = intersect(z, derived).dim();
  result["g2"] = lower_central_term(a).dim();
  result["omega"] = omega_space(a).dimension();
  return emit(report_document("info", path, Json::object(), Json::array({result}), true));
}

int cmd_derive(const std::string& path, const Rational& alpha, const Rational& beta,
               const Rational& gamma) {
  const Algebra a = load_algebra(path);
  const MapSpace space = derivation_space(a, DerivationParams{alpha, beta, gamma});
  Json params;
  params["alpha"] = alpha.str();
  params["beta"] = beta.str();
  params["gamma"] = gamma.str();
  Json basis = Json::array();
  for (const LinearMap& d : space.basis()) {
    Json rows = Json::array();
    for (const auto& row : row_major_strings(d)) rows.push_back(row);
    basis.push_back(rows);
  }
  Json result;
  result["dimension"] = space.dimension();
  result["basis"] = std::move(basis);
  return emit(report_document("derive", path, std::move(params), Json::array({result}), true));
}

int cmd_phi(const std::string& path, const std::vector<Rational>& t_set) {
  const Algebra a = load_algebra(path);
  Json params;
  params["t_set"] = rational_list_json(t_set);

  std::vector<Index> values(t_set.size());
  parallel_for(t_set.size(), [&](std::size_t i) { values[i] = phi(a, t_set[i]); });

  Json results = Json::array();
  for (std::size_t i = 0; i < t_set.size(); ++i) {
    Json row;
    row["t"] = t_set[i].str();
    row["phi"] = values[i];
    results.push_back(std::move(row));
  }
  bool pass = true;
  const bool generic_sample = std::none_of(t_set.begin(), t_set.end(), [](const Rational& t) {
    return t.is_zero() || t.is_one();
  });
  if (is_lie(a) && generic_sample) {
    const bool constant =
        std::all_of(values.begin(), values.end(), [&](Index v) { return v == values[0]; });
    Json note;
    note["constancy"] = constant;
    if (constant) {
      note["value"] = values[0];
      note["note"] =
          "phi takes one value on all t outside {0,1} for a Lie algebra; the sampled values "
          "agree with that";
    } else {
      note["note"] = "sampled values differ although the algebra is Lie; this should never "
                     "happen and indicates a defect";
      pass = false;
    }
    results.push_back(std::move(note));
  }
  emit(report_document("phi", path, std::move(params), std::move(results), pass));
  return pass ? 0 : 1;
}

int cmd_verify(const std::string& path, bool use_catalog, const std::vector<Rational>& t_set,
               const std::vector<Rational>& s_samples) {
  VerifierConfig config;
  config.t_set = t_set;
  config.s_samples = s_samples;

  std::vector<CheckReport> reports;
  std::string subject;
  if (use_catalog) {
    subject = "catalog";
    reports = run_all(config);
  } else {
    const Algebra a = load_algebra(path);
    subject = path;
    reports = run_for_algebra(a, config);
  }
  Json params;
  params["catalog"] = use_catalog;
  params["t_set"] = rational_list_json(config.t_set);
  params["s_samples"] = rational_list_json(config.s_samples);
  Json results = Json::array();
  for (const CheckReport& r : reports) results.push_back(to_json(r));
  const bool pass = all_passed(reports);
  emit(report_document("verify", subject, std::move(params), std::move(results), pass));
  return pass ? 0 : 1;
}

int cmd_catalog(const std::string& name, const std::vector<std::string>& args,
                const std::string& out_path) {
  if (name == "list") {
    for (const auto& [_, usage] : catalog_usage()) std::cout << usage << "\n";
    return 0;
  }
  std::vector<Rational> rat_args;
  rat_args.reserve(args.size());
  for (const std::string& s : args) rat_args.push_back(Rational::parse(s));
  const Algebra a = build_named(name, rat_args);
  const std::string text = serialize_algebra(a);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
    out << text;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact (alpha,beta,gamma)-derivation computations for anti-commutative "
               "algebras over Q"};
  app.require_subcommand(1);

  std::string file;
  std::string alpha_s = "1", beta_s = "1", gamma_s = "0";
  std::string t_set_csv = "-2,-1,1/2,2,3";
  std::string s_samples_csv = "1,2,3";
  bool use_catalog = false;
  std::string catalog_name;
  std::vector<std::string> catalog_args;
  std::string out_path;

  CLI::App* info = app.add_subcommand("info", "structural invariants of an algebra file");
  info->add_option("file", file, "algebra file")->required();

  CLI::App* derive = app.add_subcommand(
      "derive", "basis of the (alpha,beta,gamma)-derivation space of an algebra file");
  derive->add_option("file", file, "algebra file")->required();
  derive->add_option("--alpha", alpha_s, "rational alpha (default 1)");
  derive->add_option("--beta", beta_s, "rational beta (default 1)");
  derive->add_option("--gamma", gamma_s, "rational gamma (default 0)");

  CLI::App* phi_cmd = app.add_subcommand("phi", "phi(t) = dim of the (t,1,0) space over a t list");
  phi_cmd->add_option("file", file, "algebra file")->required();
  phi_cmd->add_option("--t-set", t_set_csv, "comma-separated rationals (default -2,-1,1/2,2,3)");

  CLI::App* verify = app.add_subcommand("verify", "run every applicable check");
  verify->add_option("file", file, "algebra file");
  verify->add_flag("--catalog", use_catalog, "verify the built-in catalog instead of a file");
  verify->add_option("--t-set", t_set_csv, "comma-separated rationals");
  verify->add_option("--s-samples", s_samples_csv, "comma-separated rationals");

  CLI::App* catalog_cmd =
      app.add_subcommand("catalog", "write a built-in algebra ('catalog list' shows names)");
  catalog_cmd->add_option("name", catalog_name, "constructor name or 'list'")->required();
  catalog_cmd->add_option("args", catalog_args, "constructor arguments");
  catalog_cmd->add_option("-o,--output", out_path, "output file (stdout when absent)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (info->parsed()) return cmd_info(file);
    if (derive->parsed())
      return cmd_derive(file, Rational::parse(alpha_s), Rational::parse(beta_s),
                        Rational::parse(gamma_s));
    if (phi_cmd->parsed()) return cmd_phi(file, parse_csv_rationals(t_set_csv, "--t-set"));
    if (verify->parsed()) {
      if (use_catalog != file.empty()) {
        // exactly one source: a file or --catalog
        std::cerr << "verify: pass an algebra file or --catalog (not both, not neither)\n";
        return 2;
      }
      return cmd_verify(file, use_catalog, parse_csv_rationals(t_set_csv, "--t-set"),
                        parse_csv_rationals(s_samples_csv, "--s-samples"));
    }
    if (catalog_cmd->parsed()) return cmd_catalog(catalog_name, catalog_args, out_path);
  } catch (const AlgebraParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
