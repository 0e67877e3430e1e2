#include "crlie/catalog.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace crlie {

namespace {

using nlohmann::json;

GaussRational gauss_from_json(const json& j) {
  if (j.is_string()) return GaussRational(Rational::parse(j.get<std::string>()));
  if (j.is_number_integer()) return GaussRational(Rational(j.get<long>()));
  if (j.is_object()) {
    Rational re(0), im(0);
    if (j.contains("re")) re = Rational::parse(j.at("re").get<std::string>());
    if (j.contains("im")) im = Rational::parse(j.at("im").get<std::string>());
    return {re, im};
  }
  throw CatalogError("catalog: cannot parse scalar " + j.dump());
}

json gauss_to_json(const GaussRational& z) {
  return json{{"re", z.re.str()}, {"im", z.im.str()}};
}

}  // namespace

CatalogEntry parse_catalog(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw CatalogError(std::string("catalog: invalid JSON: ") + e.what());
  }
  try {
    int dim = j.at("dim").get<int>();
    std::vector<std::string> names = j.at("basis").get<std::vector<std::string>>();
    bool real = j.value("real", true);
    std::vector<std::tuple<int, int, Vec<GaussRational>>> brackets;
    for (const auto& b : j.value("brackets", json::array())) {
      int i = b.at("i").get<int>();
      int jj = b.at("j").get<int>();
      if (i >= jj)
        throw CatalogError("catalog: bracket entries must have i < j (found " + std::to_string(i) +
                           "," + std::to_string(jj) + ")");
      Vec<GaussRational> v(dim, GaussRational(0));
      for (const auto& [key, val] : b.at("coeffs").items()) {
        auto it = std::find(names.begin(), names.end(), key);
        if (it == names.end()) throw CatalogError("catalog: unknown basis name '" + key + "'");
        v[it - names.begin()] = gauss_from_json(val);
      }
      brackets.emplace_back(i, jj, std::move(v));
    }
    CatalogEntry entry;
    entry.algebra = LieAlgebra::from_brackets(dim, names, brackets, real);
    entry.algebra.set_name(j.value("name", ""));
    if (j.contains("cr")) {
      CatalogCR cr;
      cr.k = j.at("cr").at("k").get<std::vector<std::string>>();
      cr.phi = j.at("cr").value("phi", "");
      entry.cr = std::move(cr);
    }
    return entry;
  } catch (const json::exception& e) {
    throw CatalogError(std::string("catalog: schema error: ") + e.what());
  } catch (const Error& e) {
    throw CatalogError(std::string("catalog: ") + e.what());
  }
}

CatalogEntry load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CatalogError("catalog: cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_catalog(ss.str());
}

std::string catalog_to_json(const LieAlgebra& g) {
  json j;
  j["name"] = g.name();
  j["dim"] = g.dim();
  j["basis"] = g.basis_names();
  j["real"] = g.real_form();
  json brackets = json::array();
  for (int i = 0; i < g.dim(); ++i)
    for (int jj = i + 1; jj < g.dim(); ++jj) {
      Vec<GaussRational> v = g.bracket_basis(i, jj);
      if (vec_is_zero(v)) continue;
      json coeffs = json::object();
      for (int k = 0; k < g.dim(); ++k)
        if (!v[k].is_zero()) coeffs[g.basis_names()[k]] = gauss_to_json(v[k]);
      brackets.push_back(json{{"i", i}, {"j", jj}, {"coeffs", coeffs}});
    }
  j["brackets"] = brackets;
  return j.dump(2);
}

std::string default_catalog_dir() {
  if (const char* env = std::getenv("CRLIE_CATALOGS")) return env;
#ifdef CRLIE_CATALOG_DIR
  return CRLIE_CATALOG_DIR;
#else
  return "catalogs";
#endif
}

}  // namespace crlie
