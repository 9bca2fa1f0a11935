// End-to-end exercise of the command-line tool: spawns the real binary,
// checks exit codes, JSON schema and the file format contract.
// Usage: cli_e2e <path-to-derivscope-binary>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "derivscope/algebra_io.hpp"
#include "derivscope/catalog.hpp"

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

int g_failures = 0;

#define EXPECT(cond)                                                      \
  do {                                                                    \
    if (!(cond)) {                                                        \
      std::cerr << "FAIL " << __FILE__ << ":" << __LINE__ << "  " #cond   \
                << "\n";                                                  \
      ++g_failures;                                                       \
    }                                                                     \
  } while (0)

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string g_binary;
fs::path g_tmp;

RunResult run(const std::string& args, const std::string& env_prefix = {}) {
  const fs::path err_file = g_tmp / "stderr.txt";
  const std::string cmd =
      env_prefix + "\"" + g_binary + "\" " + args + " 2>" + err_file.string();
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    std::cerr << "cannot spawn: " << cmd << "\n";
    ++g_failures;
    return r;
  }
  char buffer[4096];
  while (std::size_t got = fread(buffer, 1, sizeof(buffer), pipe)) r.out.append(buffer, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream err(err_file);
  std::stringstream err_text;
  err_text << err.rdbuf();
  r.err = err_text.str();
  return r;
}

void assert_no_float_tokens(const Json& j) {
  if (j.is_number_float()) {
    std::cerr << "FAIL float token in JSON output: " << j << "\n";
    ++g_failures;
    return;
  }
  if (j.is_object() || j.is_array())
    for (const auto& child : j) assert_no_float_tokens(child);
}

Json parse_doc(const RunResult& r) {
  Json doc = Json::parse(r.out, nullptr, false);
  EXPECT(!doc.is_discarded());
  if (doc.is_discarded()) return Json::object();
  // schema: fixed keys in fixed order
  std::vector<std::string> keys;
  for (auto it = doc.begin(); it != doc.end(); ++it) keys.push_back(it.key());
  const std::vector<std::string> expected = {"tool_version", "subject", "command",
                                             "params",       "results", "pass"};
  EXPECT(keys == expected);
  assert_no_float_tokens(doc);
  return doc;
}

std::string path_of(const char* name) { return (g_tmp / name).string(); }

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_e2e <derivscope binary>\n";
    return 2;
  }
  g_binary = argv[1];
  g_tmp = fs::temp_directory_path() / ("derivscope_e2e_" + std::to_string(getpid()));
  fs::create_directories(g_tmp);

  // --- catalog writes parseable files, round-trips exactly -----------------
  {
    const RunResult r = run("catalog h3 -o " + path_of("h3.alg"));
    EXPECT(r.exit_code == 0);
    const derivscope::Algebra a = derivscope::parse_algebra_file(path_of("h3.alg"));
    EXPECT(a == derivscope::heisenberg3());
  }
  {
    const RunResult r = run("catalog As 2 -o " + path_of("as2.alg"));
    EXPECT(r.exit_code == 0);
    const derivscope::Algebra a = derivscope::parse_algebra_file(path_of("as2.alg"));
    EXPECT(a == derivscope::family_as(2));
    // serialize(parse(file)) reproduces the file byte for byte
    std::ifstream in(path_of("as2.alg"));
    std::stringstream bytes;
    bytes << in.rdbuf();
    derivscope::Algebra named = a;
    named.name = "As(2)";
    EXPECT(bytes.str() == derivscope::serialize_algebra(named));
  }
  {
    const RunResult r = run("catalog filiform 5 -o " + path_of("f5.alg"));
    EXPECT(r.exit_code == 0);
    std::ifstream in(path_of("f5.alg"));
    std::string line;
    int constant_lines = 0;
    bool saw_dim = false;
    while (std::getline(in, line)) {
      if (line.rfind("dim", 0) == 0) saw_dim = true;
      else if (!line.empty() && line[0] != '#') ++constant_lines;
    }
    EXPECT(saw_dim);
    // dim-5 filiform law: brackets [e0,e1]=e2, [e0,e2]=e3, [e0,e3]=e4
    EXPECT(constant_lines == 3);
    EXPECT(derivscope::parse_algebra_file(path_of("f5.alg")).dim == 5);
  }
  EXPECT(run("catalog nosuch").exit_code == 2);
  EXPECT(run("catalog As").exit_code == 2);          // missing parameter
  EXPECT(run("catalog As x").exit_code == 2);        // unparsable parameter
  {
    const RunResult r = run("catalog list");
    EXPECT(r.exit_code == 0);
    EXPECT(r.out.find("filiform") != std::string::npos);
    EXPECT(r.out.find("AsxK") != std::string::npos);
  }

  // --- info ----------------------------------------------------------------
  {
    const RunResult r = run("info " + path_of("h3.alg"));
    EXPECT(r.exit_code == 0);
    const Json doc = parse_doc(r);
    EXPECT(doc["command"] == "info");
    EXPECT(doc["pass"] == true);
    const Json& info = doc["results"][0];
    EXPECT(info["n"] == 3);
    EXPECT(info["is_lie"] == true);
    EXPECT(info["is_perfect"] == false);
    EXPECT(info["derived"] == 1);
    EXPECT(info["center"] == 1);
    EXPECT(info["center_cap_derived"] == 1);
    EXPECT(info["g2"] == 0);
    EXPECT(info["omega"] == 2);
  }
  {
    const RunResult catalog_run = run("catalog abelian 4 -o " + path_of("k4.alg"));
    EXPECT(catalog_run.exit_code == 0);
    const RunResult r = run("info " + path_of("k4.alg"));
    const Json doc = parse_doc(r);
    EXPECT(doc["results"][0]["derived"] == 0);
    EXPECT(doc["results"][0]["center"] == 4);
    EXPECT(doc["results"][0]["omega"] == 16);
  }

  // --- malformed input exits 2 with the broken rule named -------------------
  {
    std::ofstream bad(path_of("bad.alg"));
    bad << "dim 3\n0 0 1 1\n";
    bad.close();
    const RunResult r = run("info " + path_of("bad.alg"));
    EXPECT(r.exit_code == 2);
    EXPECT(r.err.find("i < j") != std::string::npos);
  }
  EXPECT(run("info " + path_of("missing.alg")).exit_code == 2);

  // --- derive ----------------------------------------------------------------
  {
    const RunResult catalog_run = run("catalog aff -o " + path_of("aff.alg"));
    EXPECT(catalog_run.exit_code == 0);
    const RunResult r = run("derive " + path_of("aff.alg") + " --alpha 1 --beta 1 --gamma 0");
    EXPECT(r.exit_code == 0);
    const Json doc = parse_doc(r);
    EXPECT(doc["params"]["alpha"] == "1");
    const Json& result = doc["results"][0];
    EXPECT(result["dimension"] == 1);
    // the basis of the centroid of aff is the identity, row-major strings
    const Json expected_basis = Json::array({Json::array(
        {Json::array({"1", "0"}), Json::array({"0", "1"})})});
    EXPECT(result["basis"] == expected_basis);
  }
  {
    const RunResult r =
        run("derive " + path_of("aff.alg") + " --alpha=-1 --beta 1 --gamma 0");
    EXPECT(r.exit_code == 0);
    EXPECT(parse_doc(r)["results"][0]["dimension"] == 0);
  }
  {
    const RunResult r = run("derive " + path_of("k4.alg") + " --alpha 5/7 --beta=-2 --gamma 3");
    EXPECT(r.exit_code == 0);
    EXPECT(parse_doc(r)["results"][0]["dimension"] == 16);
  }
  EXPECT(run("derive " + path_of("aff.alg") + " --alpha 1.5").exit_code == 2);

  // --- phi -------------------------------------------------------------------
  {
    const RunResult r = run("phi " + path_of("as2.alg") + " --t-set 2,3");
    EXPECT(r.exit_code == 0);
    const Json doc = parse_doc(r);
    EXPECT(doc["results"].size() == 2);  // non-Lie: no constancy note
    EXPECT(doc["results"][0]["t"] == "2");
    EXPECT(doc["results"][0]["phi"] == 1);
    EXPECT(doc["results"][1]["t"] == "3");
    EXPECT(doc["results"][1]["phi"] == 0);
  }
  {
    const RunResult r = run("phi " + path_of("h3.alg") + " --t-set=-1,2");
    EXPECT(r.exit_code == 0);
    const Json doc = parse_doc(r);
    EXPECT(doc["results"].size() == 3);
    EXPECT(doc["results"][0]["phi"] == 3);
    EXPECT(doc["results"][1]["phi"] == 3);
    EXPECT(doc["results"][2]["constancy"] == true);
    EXPECT(doc["results"][2]["value"] == 3);
  }
  {
    // t = 1 present: phi(1) = centroid dimension, no constancy note
    const RunResult r = run("phi " + path_of("h3.alg") + " --t-set 1");
    const Json doc = parse_doc(r);
    EXPECT(doc["results"].size() == 1);
    EXPECT(doc["results"][0]["phi"] == 3);  // centroid of h3
  }
  EXPECT(run("phi " + path_of("h3.alg") + " --t-set 1,,2").exit_code == 2);

  // --- verify ----------------------------------------------------------------
  {
    const RunResult r = run("verify " + path_of("as2.alg") + " --t-set 2,3");
    EXPECT(r.exit_code == 0);
    const Json doc = parse_doc(r);
    EXPECT(doc["pass"] == true);
    bool saw_na = false;
    for (const Json& res : doc["results"]) {
      EXPECT(res["status"] != "fail");
      if (res["status"] == "not_applicable") saw_na = true;
    }
    EXPECT(saw_na);  // Lie-only checks are skipped, not failed, on a non-Lie law
  }
  {
    const RunResult r = run("verify --catalog --t-set 2,-1 --s-samples 1,2,3");
    EXPECT(r.exit_code == 0);
    const Json doc = parse_doc(r);
    EXPECT(doc["pass"] == true);
    EXPECT(doc["subject"] == "catalog");
    EXPECT(doc["results"].size() > 100);
  }
  EXPECT(run("verify").exit_code == 2);
  EXPECT(run("verify --catalog " + path_of("h3.alg")).exit_code == 2);
  EXPECT(run("verify " + path_of("bad.alg")).exit_code == 2);  // broken i < j ordering

  // --- determinism across thread caps ----------------------------------------
  {
    const std::string args = "verify --catalog --t-set 2";
    const RunResult seq = run(args, "DERIVSCOPE_THREADS=0 ");
    const RunResult par = run(args, "DERIVSCOPE_THREADS=4 ");
    EXPECT(seq.exit_code == 0);
    EXPECT(par.exit_code == 0);
    EXPECT(seq.out == par.out);
  }

  // --- usage errors ------------------------------------------------------------
  EXPECT(run("").exit_code == 2);
  EXPECT(run("nosuchcommand").exit_code == 2);

  std::error_code ec;
  fs::remove_all(g_tmp, ec);

  if (g_failures == 0) {
    std::cout << "cli_e2e: all scenarios passed\n";
    return 0;
  }
  std::cerr << "cli_e2e: " << g_failures << " failure(s)\n";
  return 1;
}
