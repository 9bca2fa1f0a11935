#include "derivscope/algebra_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace derivscope {

namespace {

Index parse_index(const std::string& token, int line) {
  try {
    std::size_t used = 0;
    const long v = std::stol(token, &used);
    if (used != token.size() || v < 0) throw std::invalid_argument("");
    return static_cast<Index>(v);
  } catch (...) {
    throw AlgebraParseError(line, "expected a non-negative integer, got '" + token + "'");
  }
}

}  // namespace

Algebra parse_algebra(std::istream& in, std::string name) {
  Algebra a;
  a.name = std::move(name);
  bool have_dim = false;
  std::set<std::tuple<Index, Index, Index>> seen;

  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream tokens(raw);
    std::string first;
    if (!(tokens >> first)) continue;  // blank or comment-only line

    if (!have_dim) {
      if (first != "dim")
        throw AlgebraParseError(line, "expected header 'dim <n>' before constants");
      std::string value, extra;
      if (!(tokens >> value) || (tokens >> extra))
        throw AlgebraParseError(line, "malformed header, expected 'dim <n>'");
      a.dim = parse_index(value, line);
      have_dim = true;
      continue;
    }

    std::string js, ks, vs, extra;
    if (!(tokens >> js >> ks >> vs) || (tokens >> extra))
      throw AlgebraParseError(line, "expected '<i> <j> <k> <value>'");
    const Index i = parse_index(first, line);
    const Index j = parse_index(js, line);
    const Index k = parse_index(ks, line);
    if (i >= j)
      throw AlgebraParseError(
          line, "constants are stored for i < j only (antisymmetry fills in the rest)");
    if (j >= a.dim || k >= a.dim)
      throw AlgebraParseError(line, "index out of range for dimension " +
                                        std::to_string(a.dim));
    if (!seen.insert({i, j, k}).second)
      throw AlgebraParseError(line, "duplicate entry for (i,j,k)");
    Rational value;
    try {
      value = Rational::parse(vs);
    } catch (const std::invalid_argument& e) {
      throw AlgebraParseError(line, e.what());
    }
    auto [it, inserted] = a.constants.try_emplace({i, j}, RatVector::Zero(a.dim));
    it->second[k] = value;
  }
  if (!have_dim) throw AlgebraParseError(0, "missing 'dim <n>' header");

  // Canonical in-memory form stores no all-zero products.
  for (auto it = a.constants.begin(); it != a.constants.end();) {
    if (is_zero(it->second))
      it = a.constants.erase(it);
    else
      ++it;
  }
  return a;
}

Algebra parse_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw AlgebraParseError(0, "cannot open '" + path + "'");
  std::string name = path;
  const auto slash = name.find_last_of('/');
  if (slash != std::string::npos) name.erase(0, slash + 1);
  const auto dot = name.rfind('.');
  if (dot != std::string::npos && dot > 0) name.erase(dot);
  return parse_algebra(in, std::move(name));
}

std::string serialize_algebra(const Algebra& a) {
  const auto violations = validate(a);
  if (!violations.empty())
    throw std::invalid_argument("serialize_algebra: " + violations.front());
  std::ostringstream out;
  if (!a.name.empty()) out << "# " << a.name << "\n";
  out << "dim " << a.dim << "\n";
  for (const auto& [key, c] : a.constants) {
    for (Index k = 0; k < a.dim; ++k) {
      if (c[k].is_zero()) continue;
      out << key.first << " " << key.second << " " << k << " " << c[k] << "\n";
    }
  }
  return out.str();
}

}  // namespace derivscope
