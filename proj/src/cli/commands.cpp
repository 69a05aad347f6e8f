#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <future>
#include <ostream>
#include <sstream>

#include "motivic/case_studies.hpp"
#include "motivic/cli.hpp"
#include "motivic/parse.hpp"
#include "motivic/serialize.hpp"

namespace motivic::cli {

namespace {

using io::Json;

struct Output {
  Json json;
  std::string text;
  int code = 0;
};

bool is_exclusion(bounds::Branch b) {
  return b == bounds::Branch::excluded_family_case || b == bounds::Branch::excluded_22_ci ||
         b == bounds::Branch::relation_impossible;
}

TablePtr load_table(const std::string& path, const RunConfig& cfg) {
  if (path.empty()) return cfg.table;
  return parse_table_toml(read_file(path), path);
}

void require_truncation(int n, const RunConfig& cfg) {
  if (n > cfg.truncation) {
    throw ParseError("order " + std::to_string(n) + " exceeds the series truncation cap " +
                     std::to_string(cfg.truncation) + " (raise it with --truncation or MOTIVIC_TRUNCATION)");
  }
}

// ---- text renderings ----

std::string render(const yfy::FanoReport& r) {
  std::ostringstream os;
  os << "relation lhs: " << r.lhs.to_string() << "\n";
  os << "divisible by t^4: " << (r.divisible_by_t4 ? "yes" : "no") << "\n";
  if (r.p_fano) {
    os << "p_F(Y) = " << r.p_fano->to_string() << "\n";
    if (r.dim_fano) os << "dim F(Y) = " << *r.dim_fano << "\n";
    if (r.b0_fano) os << "b0(F(Y)) = " << to_string(*r.b0_fano) << "\n";
  }
  for (const auto& v : r.violations) os << "violation at " << v.monomial << ": " << v.reason << "\n";
  return os.str();
}

std::string render(const yfy::FanoClassResult& r) {
  std::ostringstream os;
  os << "[Y^(2)] - (1 + L^m)[Y] + L^m[Sing Y] = " << r.numerator.to_string() << "\n";
  if (r.fano) {
    os << "[F(Y)] = " << r.fano->to_string() << "\n";
    if (r.b0) os << "b0(F(Y)) = " << to_string(*r.b0) << (r.connected ? " (connected)" : " (not connected)") << "\n";
  }
  if (r.obstruction) os << "obstruction: " << *r.obstruction << "\n";
  return os.str();
}

std::string render(const bounds::Verdict& v, bool explain) {
  std::ostringstream os;
  os << "verdict: " << bounds::to_string(v.branch) << "\n";
  os << "reason: " << v.reason << "\n";
  for (const auto& p : v.conditions_fired) {
    os << "  " << p.name << " = " << (p.value ? "true" : "false");
    if (!p.detail.empty()) os << "  (" << p.detail << ")";
    os << "\n";
  }
  if (explain) {
    for (const auto& c : v.citations) os << "  cites: " << c << "\n";
  }
  return os.str();
}

std::string render(const studies::Certificate& c, bool explain) {
  std::ostringstream os;
  os << "case study " << c.name << ": " << (c.overall ? "all claims hold" : "SOME CLAIMS FAIL") << "\n";
  for (const auto& n : c.notes) os << "  " << n << "\n";
  for (const auto& cl : c.claims) {
    os << (cl.match ? "  [ok]   " : "  [FAIL] ") << cl.description << "\n";
    os << "         expected " << cl.expected << "\n";
    if (!cl.match || explain) os << "         computed " << cl.computed << "\n";
    if (explain && !cl.citation.empty()) os << "         cites: " << cl.citation << "\n";
  }
  return os.str();
}

std::string render(const ideal::GroebnerBasis& gb) {
  std::ostringstream os;
  os << "reduced Groebner basis (" << ideal::to_string(gb.order) << ", variables";
  for (const auto& v : gb.variables) os << " " << v;
  os << "):\n";
  for (const auto& g : gb.basis) os << "  " << g.to_string() << "\n";
  return os.str();
}

std::string render(const gen::GenerationResult& r) {
  std::ostringstream os;
  os << (r.generated ? "generated: g = A(f) with A = " + r.a->to_string() : std::string("not generated")) << "\n";
  os << "degree bound " << r.max_degree << (r.complete ? " (exhaustive)" : " (bounded search)") << "\n";
  for (const auto& l : r.layers) {
    os << "  layer " << l.degree << ": " << l.equations << " equations, "
       << (l.consistent ? "consistent" : "inconsistent at " + l.failing_monomial.value_or("?")) << "\n";
  }
  return os.str();
}

// ---- check-yfy ----

Output check_input(const InputFile& in, const RunConfig& cfg) {
  Output o;
  o.json = Json::object();
  TablePtr table = in.table ? in.table : cfg.table;
  if (in.poincare) {
    auto rep = yfy::solve_fano_poincare(parse_uni(*in.poincare, "t"), *in.m);
    o.json["fano_report"] = io::to_json(rep);
    o.text += render(rep);
    if (!rep.violations.empty()) o.code = 2;
  }
  if (in.class_text) {
    MotivicClass y = parse_class(*in.class_text, table);
    MotivicClass sing = parse_class(in.sing_text, table);
    auto res = in.sym2_text ? yfy::solve_fano_class(y, parse_class(*in.sym2_text, table), *in.m, sing)
                            : yfy::solve_fano_class(y, *in.m, sing);
    o.json["fano_class"] = io::to_json(res);
    o.text += render(res);
    if (res.obstruction) o.code = 2;
  }
  if (in.profile) {
    bounds::VarietyProfile p = *in.profile;
    p.assume_hartshorne = p.assume_hartshorne || cfg.assume_hartshorne;
    p.assume_ddj = p.assume_ddj || cfg.assume_ddj;
    auto v = bounds::resyfy_classify(p);
    o.json["verdict"] = io::to_json(v, cfg.explain);
    o.text += render(v, cfg.explain);
    if (is_exclusion(v.branch)) o.code = 2;
  }
  return o;
}

/// Errors inside one file of a batch become part of that file's record.
Output check_file(const std::string& path, const RunConfig& cfg) {
  Output o;
  try {
    o = check_input(parse_input_toml(read_file(path), path), cfg);
  } catch (const ObstructionError& e) {
    o.json = {{"error", e.what()}};
    o.text = std::string("obstruction: ") + e.what() + "\n";
    o.code = 2;
  } catch (const Error& e) {
    o.json = {{"error", e.what()}};
    o.text = std::string("error: ") + e.what() + "\n";
    o.code = 1;
  }
  o.json["file"] = path;
  o.json["exit_code"] = o.code;
  return o;
}

Output run_batch(const std::string& dir, const RunConfig& cfg) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw ParseError("--batch needs a directory, got '" + dir + "'");
  std::vector<std::string> files;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".toml") files.push_back(e.path().string());
  }
  std::sort(files.begin(), files.end());
  std::vector<std::future<Output>> jobs;
  for (const auto& f : files) jobs.push_back(std::async(std::launch::async, check_file, f, std::cref(cfg)));
  Output out;
  out.json = Json::array();
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    Output r = jobs[i].get();
    out.json.push_back(r.json);
    out.text += "== " + files[i] + "\n" + r.text;
    out.code = std::max(out.code, r.code);
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with classes in the Grothendieck ring and the Y-F(Y) relation", "motivic-cli"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  bool explain = false;
  std::optional<int> truncation;
  std::string config_path;
  bool assume_hartshorne = false, assume_ddj = false;
  std::string order;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--explain", explain, "Attach citations and notes");
  app.add_option("--truncation", truncation, "Series truncation cap (default MOTIVIC_TRUNCATION or 8)");
  app.add_option("--config", config_path, "TOML file with [run] settings and [[generators]]");
  app.add_flag("--assume-hartshorne", assume_hartshorne, "Classifier: assume Hartshorne's conjecture");
  app.add_flag("--assume-ddj", assume_ddj, "Classifier: assume the Debarre-de Jong analogue");

  std::string class_text, table_path;
  int n = 0;
  auto* sym = app.add_subcommand("sym-power", "Symmetric powers [c^(1)] .. [c^(n)] of a class");
  sym->add_option("class", class_text, "Class such as 1+7L+L^2")->required();
  sym->add_option("n", n, "Highest symmetric power")->required()->check(CLI::NonNegativeNumber);
  sym->add_option("--table", table_path, "Generator table (TOML)");

  std::string kind = "poincare";
  long q = 0;
  bool sym2 = false, want_mod_uv = false;
  auto* meas = app.add_subcommand("measure", "Apply a motivic measure to a class");
  meas->add_option("class", class_text, "Class")->required();
  meas->add_option("--kind", kind, "poincare, hodge-deligne or point-count")
      ->check(CLI::IsMember({"poincare", "hodge-deligne", "point-count"}));
  meas->add_option("--q", q, "Field size for point-count (omit for the polynomial in q)");
  meas->add_flag("--sym2", sym2, "Also report the measure of the symmetric square");
  meas->add_flag("--mod-uv", want_mod_uv, "Reduce Hodge-Deligne values modulo uv");
  meas->add_option("--table", table_path, "Generator table (TOML)");

  std::string input_path, batch_dir, poincare_text, sing_text = "0", sym2_text;
  std::optional<int> m_opt;
  auto* check = app.add_subcommand("check-yfy", "Test the Y-F(Y) relation on a fixture, a Poincare polynomial or a class");
  check->add_option("input", input_path, "TOML fixture");
  check->add_option("--batch", batch_dir, "Directory of fixtures, evaluated concurrently");
  check->add_option("--poincare", poincare_text, "p_Y(t)");
  check->add_option("--class", class_text, "[Y]");
  check->add_option("--sym2", sym2_text, "[Y^(2)] when not computable from [Y]");
  check->add_option("--sing", sing_text, "[Sing Y] (default 0)");
  check->add_option("--m", m_opt, "dim Y");
  check->add_option("--table", table_path, "Generator table (TOML)");

  auto* classify = app.add_subcommand("classify", "Run the numerical classifier on a profile");
  classify->add_option("input", input_path, "TOML file with a [profile] table")->required();

  std::vector<std::string> maps, members, equals;
  std::string x_name = "x";
  auto* kern = app.add_subcommand("kernel", "Kernel of Q[x][t..] -> Q[x], t_i -> f_i(x)");
  kern->add_option("maps", maps, "Assignments t1=1+7x+x^2 ...")->required();
  kern->add_option("--x", x_name, "Name of the retained variable");
  kern->add_option("--member", members, "Test membership of a polynomial");
  kern->add_option("--equals", equals, "Generators of an ideal to compare with the kernel");
  kern->add_option("--order", order, "Monomial order of the reported basis (lex, grlex, grevlex)");

  std::string study;
  auto* cs = app.add_subcommand("case-study", "Reproduce a worked example with a certificate");
  cs->add_option("name", study, "Study name")->required();
  cs->add_option("--m", m_opt, "Dimension for the family studies");

  std::string g_text, grading;
  std::vector<std::string> by;
  bool allow_constant = false;
  std::optional<int> max_degree;
  auto* gb = app.add_subcommand("generated-by", "Decide whether g = A(f_1, ..., f_N) with scalar coefficients");
  gb->add_option("g", g_text, "Target polynomial")->required();
  gb->add_option("--by", by, "Generator f (repeatable)")->required();
  gb->add_option("--grading", grading, "Comma-separated grading variables");
  gb->add_flag("--allow-constant", allow_constant, "Allow a constant term in A");
  gb->add_option("--max-degree", max_degree, "Bound on deg A");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    RunConfig cfg;
    cfg.truncation = truncation_from_env();
    if (!config_path.empty()) apply_config_toml(cfg, read_file(config_path), config_path);
    if (app.count("--format")) cfg.output_format = format == "text" ? Format::text : Format::json;
    cfg.explain = cfg.explain || explain;
    if (truncation) {
      if (*truncation < 1) throw ParseError("--truncation must be >= 1");
      cfg.truncation = *truncation;
    }
    cfg.assume_hartshorne = cfg.assume_hartshorne || assume_hartshorne;
    cfg.assume_ddj = cfg.assume_ddj || assume_ddj;
    if (!order.empty()) cfg.order = order;

    Output o;
    if (sym->parsed()) {
      cfg.command = "sym-power";
      require_truncation(n, cfg);
      MotivicClass c = parse_class(class_text, load_table(table_path, cfg));
      std::vector<MotivicClass> powers;
      try {
        powers = kapranov_zeta(c, n);
      } catch (const UnsupportedError& e) {
        throw UnsupportedError(std::string(e.what()) + " (try: measure '" + class_text + "' --sym2)");
      }
      o.json = {{"class", c.to_string()}, {"n", n}, {"powers", io::to_json(powers)}};
      for (int i = 0; i < n; ++i) {
        o.text += "[c^(" + std::to_string(i + 1) + ")] = " + powers[i].to_string() + "\n";
      }
    } else if (meas->parsed()) {
      cfg.command = "measure";
      MotivicClass c = parse_class(class_text, load_table(table_path, cfg));
      o.json = {{"class", c.to_string()}, {"kind", kind}};
      if (kind == "poincare") {
        UniPoly p = poincare(c);
        o.json["value"] = p.to_string();
        o.text = "P(t) = " + p.to_string() + "\n";
        if (sym2) {
          o.json["sym2"] = sym2_measure(p).to_string();
          o.text += "P(Sym^2)(t) = " + sym2_measure(p).to_string() + "\n";
        }
      } else if (kind == "hodge-deligne") {
        BiPoly h = hodge_deligne(c);
        BiPoly s = sym2_measure(h);
        if (want_mod_uv) {
          h = mod_uv(h);
          s = mod_uv(s);
        }
        o.json["value"] = h.to_string();
        o.text = "HD(u, v) = " + h.to_string() + "\n";
        if (sym2) {
          o.json["sym2"] = s.to_string();
          o.text += "HD(Sym^2)(u, v) = " + s.to_string() + "\n";
        }
        if (want_mod_uv) o.json["mod_uv"] = true;
      } else {
        UniPoly p = point_count_polynomial(c);
        std::optional<MotivicClass> c2;
        if (sym2) c2 = symmetric_power(c, 2);
        if (q != 0) {
          MeasureKind::point_count(q);  // rejects q that is not a prime power
          o.json["q"] = q;
          o.json["value"] = to_string(point_count(c, q));
          o.text = "#(F_" + std::to_string(q) + ") = " + o.json["value"].get<std::string>() + "\n";
          if (c2) {
            o.json["sym2"] = to_string(point_count(*c2, q));
            o.text += "#Sym^2(F_" + std::to_string(q) + ") = " + o.json["sym2"].get<std::string>() + "\n";
          }
        } else {
          o.json["value"] = p.to_string("q");
          o.text = "#(F_q) = " + p.to_string("q") + "\n";
          if (c2) {
            std::string s2 = point_count_polynomial(*c2).to_string("q");
            o.json["sym2"] = s2;
            o.text += "#Sym^2(F_q) = " + s2 + "\n";
          }
        }
      }
    } else if (check->parsed()) {
      cfg.command = "check-yfy";
      if (!batch_dir.empty()) {
        o = run_batch(batch_dir, cfg);
      } else if (!input_path.empty()) {
        cfg.input_path = input_path;
        o = check_input(parse_input_toml(read_file(input_path), input_path), cfg);
      } else {
        if (poincare_text.empty() && class_text.empty()) {
          throw ParseError("check-yfy needs a fixture, --batch, --poincare or --class");
        }
        if (!m_opt) throw ParseError("check-yfy needs --m with --poincare or --class");
        InputFile in;
        if (!poincare_text.empty()) in.poincare = poincare_text;
        if (!class_text.empty()) in.class_text = class_text;
        if (!sym2_text.empty()) in.sym2_text = sym2_text;
        in.sing_text = sing_text;
        in.m = m_opt;
        in.table = load_table(table_path, cfg);
        o = check_input(in, cfg);
      }
    } else if (classify->parsed()) {
      cfg.command = "classify";
      InputFile in = parse_input_toml(read_file(input_path), input_path);
      if (!in.profile) throw ParseError(input_path + ": no [profile] table");
      bounds::VarietyProfile p = *in.profile;
      p.assume_hartshorne = p.assume_hartshorne || cfg.assume_hartshorne;
      p.assume_ddj = p.assume_ddj || cfg.assume_ddj;
      auto v = bounds::resyfy_classify(p);
      o.json = {{"profile", io::to_json(p)}, {"verdict", io::to_json(v, cfg.explain)}};
      o.text = render(v, cfg.explain);
      try {
        int e = bounds::expected_fano_dim(p);
        o.json["expected_fano_dim"] = e;
        o.text += "expected dim F(Y) = " + std::to_string(e) + " (2m - 4 = " + std::to_string(2 * p.dim_m - 4) + ")\n";
      } catch (const DomainError&) {
        o.json["expected_fano_dim"] = nullptr;
      }
      if (is_exclusion(v.branch)) o.code = 2;
    } else if (kern->parsed()) {
      cfg.command = "kernel";
      std::vector<ideal::MapTarget> targets;
      for (const auto& a : maps) {
        auto eq = a.find('=');
        if (eq == std::string::npos || eq == 0) throw ParseError("kernel map '" + a + "' must look like t1=1+7x+x^2");
        targets.push_back({a.substr(0, eq), parse_uni(a.substr(eq + 1), x_name)});
      }
      auto kernel = ideal::kernel_of_map(targets, x_name);
      ideal::GroebnerBasis shown = kernel;
      if (cfg.order != "lex") {
        shown = ideal::buchberger(ideal::Ideal(kernel.basis, ideal::parse_order(cfg.order), kernel.variables));
      }
      o.json = {{"kernel", io::to_json(shown)}};
      o.text = render(shown);
      if (!members.empty()) {
        o.json["members"] = Json::array();
        for (const auto& mtxt : members) {
          auto mem = ideal::ideal_member(parse_poly(mtxt, kernel.variables), kernel);
          o.json["members"].push_back(
              {{"polynomial", mtxt}, {"member", mem.member}, {"remainder", mem.remainder.to_string()}});
          o.text += std::string(mem.member ? "  member:     " : "  not member: ") + mtxt +
                    (mem.member ? "" : "  (remainder " + mem.remainder.to_string() + ")") + "\n";
        }
      }
      if (!equals.empty()) {
        std::vector<MultiPoly> gens;
        for (const auto& e : equals) gens.push_back(parse_poly(e, kernel.variables));
        bool same = ideal::ideal_equal(ideal::Ideal(kernel.basis, ideal::MonomialOrder::lex, kernel.variables),
                                       ideal::Ideal(gens, ideal::MonomialOrder::lex, kernel.variables));
        o.json["equals"] = same;
        o.text += std::string("kernel ") + (same ? "equals" : "differs from") + " the given ideal\n";
      }
    } else if (cs->parsed()) {
      cfg.command = "case-study";
      auto cert = studies::run_study(study, m_opt);
      o.json = io::to_json(cert, cfg.explain);
      o.text = render(cert, cfg.explain);
      if (!cert.overall) o.code = 2;
    } else if (gb->parsed()) {
      cfg.command = "generated-by";
      std::vector<std::string> grade;
      std::stringstream ss(grading);
      for (std::string item; std::getline(ss, item, ',');) {
        item.erase(std::remove(item.begin(), item.end(), ' '), item.end());
        if (!item.empty()) grade.push_back(item);
      }
      MultiPoly g = parse_poly(g_text);
      std::vector<MultiPoly> fs;
      for (const auto& f : by) fs.push_back(parse_poly(f));
      gen::GenerationOptions opt;
      opt.allow_constant = allow_constant;
      opt.max_degree = max_degree;
      auto r = gen::generated_by(g, fs, grade, opt);
      o.json = io::to_json(r);
      o.text = render(r);
    }
    out << (cfg.output_format == Format::json ? io::dump(o.json) : o.text);
    return o.code;
  } catch (const ObstructionError& e) {
    err << "obstruction: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace motivic::cli
