#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <toml.hpp>

#include "motivic/cli.hpp"
#include "motivic/parse.hpp"

namespace motivic::cli {

namespace {

toml::table parse_toml(const std::string& text, const std::string& source) {
  try {
    return toml::parse(text, source);
  } catch (const toml::parse_error& e) {
    std::ostringstream os;
    os << source << ": " << e.description() << " (line " << e.source().begin.line << ")";
    throw ParseError(os.str());
  }
}

void reject_unknown(const toml::table& t, const std::set<std::string>& known, const std::string& where) {
  for (const auto& [k, v] : t) {
    if (!known.count(std::string(k.str()))) throw ParseError(where + ": unknown key '" + std::string(k.str()) + "'");
  }
}

template <class T>
std::optional<T> get(const toml::table& t, const char* key, const std::string& where) {
  const toml::node* n = t.get(key);
  if (!n) return std::nullopt;
  if (auto v = n->value<T>()) return *v;
  throw ParseError(where + ": key '" + key + "' has the wrong type");
}

std::optional<int> get_int(const toml::table& t, const char* key, const std::string& where) {
  auto v = get<int64_t>(t, key, where);
  if (!v) return std::nullopt;
  return static_cast<int>(*v);
}

GeneratorEntry parse_entry(const toml::table& t, const std::string& where) {
  reject_unknown(t, {"name", "dimension", "poincare", "hodge_deligne", "effective", "point_count", "genus"}, where);
  auto name = get<std::string>(t, "name", where);
  if (!name) throw ParseError(where + ": generator without a name");
  if (auto g = get_int(t, "genus", where)) {
    if (t.contains("poincare") || t.contains("hodge_deligne") || t.contains("dimension")) {
      throw ParseError(where + ": genus shorthand excludes poincare, hodge_deligne and dimension");
    }
    GeneratorEntry e = GeneratorTable::genus_curve(*name, *g);
    if (auto pc = get<std::string>(t, "point_count", where)) e.point_count = parse_uni(*pc, "q");
    e.effective = get<bool>(t, "effective", where).value_or(false);
    return e;
  }
  GeneratorEntry e;
  e.name = *name;
  auto dim = get_int(t, "dimension", where);
  auto p = get<std::string>(t, "poincare", where);
  auto hd = get<std::string>(t, "hodge_deligne", where);
  if (!dim || !p || !hd) throw ParseError(where + ": generator '" + *name + "' needs dimension, poincare, hodge_deligne");
  e.dimension = *dim;
  e.poincare = parse_uni(*p, "t");
  e.hodge_deligne = parse_bi(*hd);
  e.effective = get<bool>(t, "effective", where).value_or(false);
  if (auto pc = get<std::string>(t, "point_count", where)) e.point_count = parse_uni(*pc, "q");
  return e;
}

TablePtr table_from(const toml::table& root, const std::string& source) {
  const toml::node* n = root.get("generators");
  if (!n) return nullptr;
  const toml::array* arr = n->as_array();
  if (!arr) throw ParseError(source + ": 'generators' must be an array of tables ([[generators]])");
  std::vector<GeneratorEntry> entries;
  for (std::size_t i = 0; i < arr->size(); ++i) {
    const toml::table* t = (*arr)[i].as_table();
    if (!t) throw ParseError(source + ": generators[" + std::to_string(i) + "] is not a table");
    entries.push_back(parse_entry(*t, source + ": generators[" + std::to_string(i) + "]"));
  }
  try {
    return std::make_shared<const GeneratorTable>(std::move(entries));
  } catch (const DomainError& e) {
    throw ParseError(source + ": " + e.what());
  }
}

bounds::VarietyProfile profile_from(const toml::table& t, const std::string& where) {
  reject_unknown(t,
                 {"ambient_n", "dim_m", "degree_d", "ci_degrees", "equation_count", "smooth", "nondegenerate",
                  "fano_connected", "family_type", "b2", "fano_dim", "assume_hartshorne", "assume_ddj",
                  "containing_hypersurface_degree"},
                 where);
  bounds::VarietyProfile p;
  auto n = get_int(t, "ambient_n", where);
  auto m = get_int(t, "dim_m", where);
  if (!n || !m) throw ParseError(where + ": ambient_n and dim_m are required");
  p.ambient_n = *n;
  p.dim_m = *m;
  p.degree_d = get_int(t, "degree_d", where);
  if (const toml::node* d = t.get("ci_degrees")) {
    const toml::array* arr = d->as_array();
    if (!arr) throw ParseError(where + ": ci_degrees must be an array of integers");
    std::vector<int> degs;
    for (const auto& x : *arr) {
      auto v = x.value<int64_t>();
      if (!v) throw ParseError(where + ": ci_degrees must be an array of integers");
      degs.push_back(static_cast<int>(*v));
    }
    p.ci_degrees = degs;
  }
  p.equation_count = get_int(t, "equation_count", where);
  p.smooth = get<bool>(t, "smooth", where).value_or(true);
  p.nondegenerate = get<bool>(t, "nondegenerate", where).value_or(true);
  p.fano_connected = get<bool>(t, "fano_connected", where);
  if (auto f = get<std::string>(t, "family_type", where)) p.family_type = bounds::parse_family_type(*f);
  p.b2 = get_int(t, "b2", where);
  p.fano_dim = get_int(t, "fano_dim", where);
  p.assume_hartshorne = get<bool>(t, "assume_hartshorne", where).value_or(false);
  p.assume_ddj = get<bool>(t, "assume_ddj", where).value_or(false);
  p.containing_hypersurface_degree = get_int(t, "containing_hypersurface_degree", where);
  try {
    p.validate();
  } catch (const DomainError& e) {
    throw ParseError(where + ": " + e.what());
  }
  return p;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int truncation_from_env() {
  const char* s = std::getenv("MOTIVIC_TRUNCATION");
  if (!s || !*s) return 8;
  char* end = nullptr;
  long v = std::strtol(s, &end, 10);
  if (*end != '\0' || v < 1 || v > 1000) {
    throw ParseError(std::string("MOTIVIC_TRUNCATION must be an integer in 1..1000, got '") + s + "'");
  }
  return static_cast<int>(v);
}

TablePtr parse_table_toml(const std::string& text, const std::string& source) {
  return table_from(parse_toml(text, source), source);
}

InputFile parse_input_toml(const std::string& text, const std::string& source) {
  toml::table root = parse_toml(text, source);
  reject_unknown(root, {"profile", "yfy", "generators"}, source);
  InputFile in;
  in.table = table_from(root, source);
  if (const toml::node* n = root.get("profile")) {
    const toml::table* t = n->as_table();
    if (!t) throw ParseError(source + ": [profile] must be a table");
    in.profile = profile_from(*t, source + ": [profile]");
  }
  if (const toml::node* n = root.get("yfy")) {
    const toml::table* t = n->as_table();
    const std::string where = source + ": [yfy]";
    if (!t) throw ParseError(where + " must be a table");
    reject_unknown(*t, {"poincare", "m", "class", "sym2", "sing"}, where);
    in.poincare = get<std::string>(*t, "poincare", where);
    in.m = get_int(*t, "m", where);
    in.class_text = get<std::string>(*t, "class", where);
    in.sym2_text = get<std::string>(*t, "sym2", where);
    in.sing_text = get<std::string>(*t, "sing", where).value_or("0");
    if ((in.poincare || in.class_text) && !in.m) throw ParseError(where + ": m is required");
  }
  if (!in.profile && !in.poincare && !in.class_text) {
    throw ParseError(source + ": nothing to check (need [profile] or [yfy] with poincare or class)");
  }
  return in;
}

void apply_config_toml(RunConfig& cfg, const std::string& text, const std::string& source) {
  toml::table root = parse_toml(text, source);
  reject_unknown(root, {"run", "generators"}, source);
  if (auto t = table_from(root, source)) cfg.table = t;
  const toml::node* n = root.get("run");
  if (!n) return;
  const toml::table* t = n->as_table();
  const std::string where = source + ": [run]";
  if (!t) throw ParseError(where + " must be a table");
  reject_unknown(*t, {"format", "explain", "truncation", "order", "assume_hartshorne", "assume_ddj"}, where);
  if (auto f = get<std::string>(*t, "format", where)) {
    if (*f == "json") {
      cfg.output_format = Format::json;
    } else if (*f == "text") {
      cfg.output_format = Format::text;
    } else {
      throw ParseError(where + ": format must be json or text");
    }
  }
  if (auto v = get<bool>(*t, "explain", where)) cfg.explain = *v;
  if (auto v = get_int(*t, "truncation", where)) cfg.truncation = *v;
  if (auto v = get<std::string>(*t, "order", where)) cfg.order = *v;
  if (auto v = get<bool>(*t, "assume_hartshorne", where)) cfg.assume_hartshorne = *v;
  if (auto v = get<bool>(*t, "assume_ddj", where)) cfg.assume_ddj = *v;
}

}  // namespace motivic::cli
