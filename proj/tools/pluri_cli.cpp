// pluri: command-line front end. Every command prints a JSON envelope
// {command, inputs, result, tool_version, deterministic_seed} unless
// --format csv|table is given.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pluri/io.hpp"

namespace {

using nlohmann::json;
using namespace pluri;

constexpr const char* kToolVersion = "1.0.0";

enum class Exit { Ok = 0, Malformed = 1, Inadmissible = 2 };

struct Output {
  json result;
  std::vector<std::string> header;  // tabular view, may stay empty
  std::vector<std::vector<std::string>> rows;
  Exit code = Exit::Ok;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<int> parse_int_list(const std::string& s, char sep = ',') {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stoi(item, &pos));
      if (item.find_first_not_of(" \t", pos) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw InvalidInput("not an integer list: '" + s + "'");
    }
  }
  return out;
}

// Rows from result's top-level scalars, for commands without a natural table.
void scalar_rows(Output& out) {
  out.header = {"key", "value"};
  for (const auto& [k, v] : out.result.items())
    if (!v.is_structured()) out.rows.push_back({k, v.is_string() ? v.get<std::string>() : v.dump()});
}

void print_csv(const Output& out) {
  auto line = [](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) std::cout << (i ? "," : "") << io::csv_field(cells[i]);
    std::cout << "\n";
  };
  line(out.header);
  for (const auto& r : out.rows) line(r);
}

void print_table(const Output& out) {
  std::vector<std::size_t> width(out.header.size(), 0);
  auto grow = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size() && i < width.size(); ++i) width[i] = std::max(width[i], cells[i].size());
  };
  grow(out.header);
  for (const auto& r : out.rows) grow(r);
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i)
      std::cout << (i ? "  " : "") << std::left << std::setw(static_cast<int>(width[i])) << cells[i];
    std::cout << "\n";
  };
  line(out.header);
  for (const auto& r : out.rows) line(r);
}

std::vector<std::string> series_row(const FibrationNumericalType& t, int n_max) {
  std::vector<std::string> row{io::label(t)};
  for (const auto& v : plurigenera_series(t, n_max))
    if (v.n >= 1) row.push_back(std::to_string(v.value));
  return row;
}

std::vector<std::string> series_header(int n_max) {
  std::vector<std::string> h{"type"};
  for (int n = 1; n <= n_max; ++n) h.push_back("P_" + std::to_string(n));
  return h;
}

struct BoundsOptions {
  int max_mult = 30;
  int max_fibres = 8;
  int max_chi_plus_t = 4;
  std::string chars = "0,2,3,5,7";
  bool no_wild = false;
  bool no_quasi = false;
  int max_genus = 2;
  int max_fibre_torsion = 2;

  void add(CLI::App* app) {
    app->add_option("--max-mult", max_mult, "largest multiplicity")->capture_default_str();
    app->add_option("--max-fibres", max_fibres, "largest number of multiple fibres")->capture_default_str();
    app->add_option("--max-chi-t", max_chi_plus_t, "bound on chi + length(T)")->capture_default_str();
    app->add_option("--chars", chars, "characteristics, comma separated")->capture_default_str();
    app->add_flag("--no-wild", no_wild, "tame fibres only");
    app->add_flag("--no-quasi", no_quasi, "skip quasi-elliptic fibrations");
    app->add_option("--max-genus", max_genus, "largest base genus")->capture_default_str();
    app->add_option("--max-fibre-torsion", max_fibre_torsion, "largest t_j")->capture_default_str();
  }

  EnumerationBounds get() const {
    EnumerationBounds b;
    b.max_mult = max_mult;
    b.max_fibres = max_fibres;
    b.max_chi_plus_t = max_chi_plus_t;
    b.characteristics = parse_int_list(chars);
    b.include_wild = !no_wild;
    b.include_quasi_elliptic = !no_quasi;
    b.max_genus = max_genus;
    b.max_fibre_torsion = max_fibre_torsion;
    b.validate();
    return b;
  }
};

Output cmd_compute(const FibrationNumericalType& type, int n_max) {
  Output out;
  const auto adm = is_admissible(type);
  out.result["type"] = io::to_json(type);
  out.result["admissibility"] = io::to_json(adm);
  if (!adm.admissible) {
    out.code = Exit::Inadmissible;
    scalar_rows(out);
    return out;
  }
  json series = json::array();
  for (const auto& v : plurigenera_series(type, n_max)) series.push_back(io::to_json(v));
  out.result["slope"] = to_string(slope(type));
  out.result["plurigenera"] = series;
  out.header = series_header(n_max);
  out.rows.push_back(series_row(type, n_max));
  return out;
}

Output cmd_verify(const FibrationNumericalType& type) {
  Output out;
  const auto adm = is_admissible(type);
  out.result["type"] = io::to_json(type);
  out.result["admissibility"] = io::to_json(adm);
  if (!adm.admissible) {
    out.code = Exit::Inadmissible;
    scalar_rows(out);
    return out;
  }
  const auto rep = verify_main_theorem(type);
  out.result["report"] = io::to_json(rep);
  const auto assignment = assign_case(type);
  out.result["case"] = io::to_json(assignment);
  json violations = json::array();
  for (const auto& v : replay_case_bound(type, assignment))
    violations.push_back(json{{"n", v.n}, {"bound", v.bound}, {"exact", v.exact}});
  out.result["case_bound_violations"] = violations;
  auto opt = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("none"); };
  out.header = {"type", "P_12", "stmt1", "stmt2_witness", "stmt3_witness", "stmt4", "case"};
  out.rows.push_back({io::label(type), std::to_string(rep.p12), rep.stmt1 ? "true" : "false",
                      opt(rep.stmt2_witness), opt(rep.stmt3_witness), rep.stmt4 ? "true" : "false",
                      to_string(assignment.label)});
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Plurigenera of elliptic fibrations over curves"};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "json, csv or table")
      ->check(CLI::IsMember({"json", "csv", "table"}))
      ->capture_default_str();

  json inputs = json::object();
  std::function<Output()> run;

  std::string type_path;
  int n_max = 14;
  auto* compute = app.add_subcommand("compute", "plurigenera P_0..P_nmax of a type");
  compute->add_option("--type", type_path, "type JSON file")->required();
  compute->add_option("--n-max", n_max, "largest n")->capture_default_str();
  compute->callback([&] {
    inputs = {{"type", type_path}, {"n_max", n_max}};
    run = [&] { return cmd_compute(io::type_from_json(io::parse(read_file(type_path))), n_max); };
  });

  auto* verify = app.add_subcommand("verify", "check statements (1)-(4) on one type");
  verify->add_option("--type", type_path, "type JSON file")->required();
  verify->callback([&] {
    inputs = {{"type", type_path}};
    run = [&] { return cmd_verify(io::type_from_json(io::parse(read_file(type_path)))); };
  });

  BoundsOptions enum_bounds;
  std::size_t limit = 1000;
  auto* enumerate = app.add_subcommand("enumerate", "list admissible types within bounds");
  enum_bounds.add(enumerate);
  enumerate->add_option("--limit", limit, "stop after this many types")->capture_default_str();
  enumerate->callback([&] {
    run = [&] {
      const auto b = enum_bounds.get();
      inputs = {{"bounds", io::to_json(b)}, {"limit", limit}};
      Output out;
      std::vector<FibrationNumericalType> types;
      enumerate_types_while(b, [&](const FibrationNumericalType& t) {
        if (types.size() >= limit) return false;
        types.push_back(t);
        return true;
      });
      out.result["count"] = types.size();
      out.result["truncated"] = types.size() >= limit;
      out.result["types"] = io::types_to_json(types);
      out.header = series_header(kTrackedN);
      for (const auto& t : types) out.rows.push_back(series_row(t, kTrackedN));
      return out;
    };
  });

  BoundsOptions all_bounds;
  int jobs = 1;
  bool no_prune = false;
  auto* verify_all_cmd = app.add_subcommand("verify-all", "check statements (1)-(4) over the bounded space");
  all_bounds.add(verify_all_cmd);
  verify_all_cmd->add_option("--jobs", jobs, "worker threads")->capture_default_str();
  verify_all_cmd->add_flag("--no-prune", no_prune, "visit every type instead of discharging subtrees");
  verify_all_cmd->callback([&] {
    run = [&] {
      const auto b = all_bounds.get();
      if (jobs < 1) throw InvalidInput("--jobs must be >= 1");
      inputs = {{"bounds", io::to_json(b)}, {"jobs", jobs}, {"prune", !no_prune}};
      Output out;
      const auto rep = verify_all(b, jobs, !no_prune);
      out.result = io::to_json(rep);
      std::vector<FibrationNumericalType> cex;
      for (const auto& c : rep.counterexamples) cex.push_back(c.type);
      out.header = series_header(kTrackedN);
      for (const auto& t : cex) out.rows.push_back(series_row(t, kTrackedN));
      if (cex.empty()) scalar_rows(out);
      return out;
    };
  });

  BoundsOptions sharp_bounds;
  std::string predicate;
  auto* sharp = app.add_subcommand("sharp", "types meeting a sharpness predicate");
  sharp_bounds.add(sharp);
  sharp->add_option("--predicate", predicate, "p123-zero, pn-le-1-through-7 or p13-equals-1")->required();
  sharp->callback([&] {
    run = [&] {
      const auto b = sharp_bounds.get();
      inputs = {{"bounds", io::to_json(b)}, {"predicate", predicate}};
      Output out;
      const auto types = find_sharp_cases(b, predicate);
      out.result["count"] = types.size();
      out.result["types"] = io::types_to_json(types);
      out.header = series_header(kTrackedN);
      for (const auto& t : types) out.rows.push_back(series_row(t, kTrackedN));
      return out;
    };
  });

  SurfaceInvariants inv;
  int torsion = 0;
  int char_p = 0;
  auto* classify_cmd = app.add_subcommand("classify", "Kodaira class from P_12 and K^2");
  classify_cmd->add_option("--p12", inv.p12, "P_12")->required();
  classify_cmd->add_option("--k2", inv.k2_min, "K^2 of a minimal model")->required();
  classify_cmd->add_option("--pg", inv.pg, "geometric genus");
  classify_cmd->add_option("--q", inv.q, "irregularity");
  auto* torsion_opt = classify_cmd->add_option("--torsion", torsion, "order of K in Pic");
  classify_cmd->add_option("--char", char_p, "characteristic");
  classify_cmd->callback([&] {
    run = [&] {
      if (*torsion_opt) inv.canonical_torsion = torsion;
      inv.p = Characteristic(char_p);
      inputs = {{"p12", inv.p12}, {"k2", inv.k2_min}, {"pg", inv.pg}, {"q", inv.q}, {"char", char_p},
                {"torsion", inv.canonical_torsion ? json(torsion) : json(nullptr)}};
      Output out;
      const auto c = classify(inv);
      out.result["class"] = to_string(c.id);
      out.result["subtype"] = c.subtype ? json(to_string(*c.subtype)) : json(nullptr);
      scalar_rows(out);
      return out;
    };
  });

  std::string group;
  std::string monodromies;
  auto* factory = app.add_subcommand("factory", "type of (C x E)/G from abelian cover data");
  factory->add_option("--group", group, "invariant factors, e.g. 2,6")->required();
  factory->add_option("--monodromies", monodromies, "residue tuples, e.g. \"1,0;0,1;1,5\"")->required();
  factory->callback([&] {
    inputs = {{"group", group}, {"monodromies", monodromies}};
    run = [&] {
      AbelianGroupData data;
      data.invariant_factors = parse_int_list(group);
      std::stringstream ss(monodromies);
      std::string item;
      while (std::getline(ss, item, ';')) data.monodromies.push_back(parse_int_list(item));
      Output out;
      const auto type = cover_to_type(data);
      out.result["type"] = io::to_json(type);
      out.result["cover_genus"] = riemann_hurwitz_genus(data);
      out.result["advisory"] =
          "characteristic 0 construction; smoothness in characteristic p (in particular 2, 3) not checked";
      const auto adm = is_admissible(type);
      out.result["admissibility"] = io::to_json(adm);
      if (!adm.admissible) out.code = Exit::Inadmissible;
      scalar_rows(out);
      return out;
    };
  });

  std::string u_m;
  std::string u_nu;
  int u_i = 1;
  bool u_oracle = false;
  auto* ucheck = app.add_subcommand("u-check", "condition U_i for multiplicities m and torsion orders nu");
  ucheck->add_option("--m", u_m, "multiplicities, comma separated")->required();
  ucheck->add_option("--nu", u_nu, "torsion orders, comma separated")->required();
  ucheck->add_option("--i", u_i, "1-based fibre index")->required();
  ucheck->add_flag("--oracle", u_oracle, "also run the brute-force check");
  ucheck->callback([&] {
    inputs = {{"m", u_m}, {"nu", u_nu}, {"i", u_i}, {"oracle", u_oracle}};
    run = [&] {
      const ConditionUInstance inst{parse_int_list(u_m), parse_int_list(u_nu), u_i};
      Output out;
      out.result["holds"] = check_condition_U(inst);
      if (u_oracle) out.result["oracle"] = check_condition_U_bruteforce(inst, oracle_bound());
      scalar_rows(out);
      return out;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : static_cast<int>(Exit::Malformed);
  }

  Output out;
  try {
    out = run();
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(Exit::Malformed);
  } catch (const OracleBoundExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(Exit::Malformed);
  } catch (const Error& e) {
    out.result = json{{"error", e.what()}, {"violations", json::array({e.what()})}};
    out.code = Exit::Inadmissible;
    out.header = {"error"};
    out.rows = {{e.what()}};
  }

  if (format == "json") {
    const json envelope{{"command", app.get_subcommands().front()->get_name()},
                        {"inputs", inputs},
                        {"result", out.result},
                        {"tool_version", kToolVersion},
                        {"deterministic_seed", 0}};
    std::cout << envelope.dump(2) << "\n";
  } else if (format == "csv") {
    print_csv(out);
  } else {
    print_table(out);
  }
  return static_cast<int>(out.code);
}
