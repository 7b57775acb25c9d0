#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "entatlas/atlas.hpp"
#include "entatlas/classifier.hpp"
#include "entatlas/errors.hpp"
#include "entatlas/invariants.hpp"
#include "entatlas/orbits.hpp"
#include "entatlas/state_io.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace entatlas;

namespace {

enum Exit { kOk = 0, kInput = 1, kFail = 2, kIntegrity = 3 };

struct InputArgs {
  std::optional<long long> form;
  std::string file;
};

void add_input(CLI::App* cmd, InputArgs& in) {
  cmd->add_option("--form", in.form, "Form integer n in 0..65535");
  cmd->add_option("state", in.file, "State JSON file ('-' for stdin)");
}

std::string read_all(std::istream& is) {
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

State load_state(const InputArgs& in) {
  if (in.form && !in.file.empty()) throw InputError("give either --form or a state file, not both");
  if (in.form) {
    if (*in.form < 0 || *in.form > 65535) throw InputError("form must lie in 0..65535");
    return decode_form(*in.form);
  }
  if (in.file.empty()) throw InputError("no input: give --form n or a state file");
  if (in.file == "-") return parse_state_json(read_all(std::cin));
  std::ifstream f(in.file);
  if (!f) throw InputError("cannot open " + in.file);
  return parse_state_json(read_all(f));
}

json invariant_json(const InvariantValues& v) {
  json j;
  j["B"] = v.B.str();
  j["L"] = v.L.str();
  j["M"] = v.M.str();
  j["N"] = v.N.str();
  j["Dxy"] = v.Dxy.str();
  auto opt = [&](const char* name, const std::optional<Scalar>& x) {
    if (x) j[name] = x->str();
  };
  opt("Dxz", v.Dxz);
  opt("Dxt", v.Dxt);
  opt("Dyz", v.Dyz);
  opt("Dyt", v.Dyt);
  opt("Dzt", v.Dzt);
  opt("S", v.S);
  opt("T", v.T);
  opt("Delta", v.Delta);
  opt("Z", v.Z);
  opt("I2", v.I2);
  return j;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw InputError("cannot write " + path.string());
  f << text;
}

// classify

struct ClassifyArgs {
  InputArgs in;
  bool extended = false;
  std::string mode = "exact";
  double tolerance = 1e-9;
};

int cmd_classify(const ClassifyArgs& a) {
  State s = load_state(a.in);
  ClassifyOptions opt;
  opt.mode = a.mode == "float" ? Mode::floating : Mode::exact;
  opt.tolerance = a.tolerance;
  auto r = a.extended ? classify_secant3_extended(s, opt) : classify_secant3(s, opt);

  json j;
  j["label"] = r.label;
  j["variety"] = r.variety;
  j["stratum"] = r.stratum;
  if (auto t = permutation_type(r.label))
    j["permutation_type"] = *t;
  else
    j["permutation_type"] = nullptr;
  json sig = json::object();
  for (const auto& [name, bits] : r.signatures) sig[name] = bits.str();
  j["signatures"] = sig;
  auto v = compute_invariants(s);
  j["invariants"] = {{"B", v.B.str()},         {"L", v.L.str()},     {"M", v.M.str()},
                     {"Dxy", v.Dxy.str()},     {"Delta", v.Delta->str()}, {"Z", v.Z->str()}};
  j["mode"] = r.mode == Mode::exact ? "exact" : "float";
  if (r.mode == Mode::floating) j["confident"] = r.confident;
  std::cout << j.dump(2) << '\n';
  return kOk;
}

// invariants / eval

struct InvariantArgs {
  InputArgs in;
  bool alternates = false;
  bool sextic = false;
};

int cmd_invariants(const InvariantArgs& a) {
  InvariantOptions opt;
  opt.alternates = a.alternates;
  opt.sextic = a.sextic;
  std::cout << invariant_json(compute_invariants(load_state(a.in), opt)).dump(2) << '\n';
  return kOk;
}

struct EvalArgs {
  InputArgs in;
  std::string covariant;
};

int cmd_eval(const EvalArgs& a) {
  State s = load_state(a.in);
  auto id = CovariantId::parse(a.covariant);
  Evaluator ev(s);
  const auto& p = ev.eval(id);
  json j;
  j["covariant"] = id.str();
  j["degree"] = Catalog::builtin().at(id).degree;
  j["zero"] = p.is_zero();
  j["terms"] = p.size();
  j["value"] = p.str();
  std::cout << j.dump(2) << '\n';
  return kOk;
}

// atlas / graph / verify

struct AtlasArgs {
  std::string which = "nullcone";
  bool extended = false;
  std::string out = "entatlas-out";
};

struct Census {
  std::vector<int> forms;
  ClassTable table;
  AdherenceGraph graph;
};

Census run_census(const std::string& which, bool extended) {
  Census c;
  if (which == "nullcone") {
    c.forms = enumerate_forms(nullcone_filter);
    c.table = discover_classes(c.forms, full_catalog_spec());
    c.graph = adherence_order(c.table);
  } else {
    c.forms = enumerate_forms(secant_non_nilpotent_filter);
    c.table = discover_classes(c.forms, extended ? extended_spec() : secant_spec());
    c.graph = adherence_order(c.table, {59510});
  }
  return c;
}

int cmd_atlas(const AtlasArgs& a) {
  Census c = run_census(a.which, a.extended);
  fs::create_directories(a.out);
  json classes = json::array();
  for (const auto& cls : c.table.classes) {
    json row;
    row["representative"] = cls.representative;
    row["known_label"] = cls.known_label;
    row["size"] = cls.members.size();
    row["signature"] = cls.signature.str();
    row["members"] = cls.members;
    classes.push_back(row);
  }
  const std::string stem = a.which + (a.extended ? "-extended" : "");
  write_file(fs::path(a.out) / (stem + "-classes.json"), classes.dump(1) + "\n");
  write_file(fs::path(a.out) / (stem + "-graph.dot"), export_graph(c.graph, GraphFormat::dot));
  write_file(fs::path(a.out) / (stem + "-graph.json"), export_graph(c.graph, GraphFormat::json));
  std::cout << c.forms.size() << " forms, " << c.table.classes.size() << " classes\n";
  for (const auto& cls : c.table.classes)
    std::cout << "  " << cls.representative << (cls.known_label ? "" : "*") << "  size " << cls.members.size() << '\n';
  return kOk;
}

struct GraphArgs {
  std::string which = "nullcone";
  bool dot = false;
  std::string format = "json";
};

int cmd_graph(const GraphArgs& a) {
  AdherenceGraph g;
  if (a.which == "nullcone") {
    g = adherence_order(representative_nodes(golden::nullcone_labels(), full_catalog_spec()));
  } else if (a.which == "secant3") {
    g = adherence_order(representative_nodes(golden::secant_labels(), secant_spec()), {59510});
  } else {
    auto labels = golden::secant_labels();
    labels.push_back(6014);
    g = adherence_order(representative_nodes(labels, extended_spec()), {59510});
  }
  std::cout << export_graph(g, a.dot ? GraphFormat::dot : parse_graph_format(a.format));
  return kOk;
}

struct VerifyArgs {
  std::string out = "entatlas-out";
};

int cmd_verify(const VerifyArgs& a) {
  auto report = verify_tables();
  std::string text = report.text();
  fs::create_directories(a.out);
  write_file(fs::path(a.out) / "verify-report.txt", text);
  write_file(fs::path(a.out) / "nullcone-graph.dot",
             export_graph(adherence_order(representative_nodes(golden::nullcone_labels(), full_catalog_spec())),
                          GraphFormat::dot));
  write_file(fs::path(a.out) / "secant3-graph.dot",
             export_graph(adherence_order(representative_nodes(golden::secant_labels(), secant_spec()), {59510}),
                          GraphFormat::dot));
  std::cout << text;
  return report.all_pass() ? kOk : kIntegrity;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Four-qubit SLOCC classification by covariant signatures"};
  app.require_subcommand(1);

  ClassifyArgs classify;
  auto* c = app.add_subcommand("classify", "Classify a state in the third secant variety");
  add_input(c, classify.in);
  c->add_flag("--extended", classify.extended, "Refine 65257 by Z (separates 6014)");
  c->add_option("--mode", classify.mode, "exact or float")->check(CLI::IsMember({"exact", "float"}));
  c->add_option("--tolerance", classify.tolerance, "Relative nullity tolerance in float mode");

  InvariantArgs inv;
  auto* i = app.add_subcommand("invariants", "Print B, L, M, N, Dxy, S, T, Delta, Z");
  add_input(i, inv.in);
  i->add_flag("--alternates", inv.alternates, "Also print the other five D_uv");
  i->add_flag("--sextic", inv.sextic, "Also print I2 (evaluates the degree-12 chain)");

  EvalArgs ev;
  auto* e = app.add_subcommand("eval", "Evaluate one catalog covariant");
  add_input(e, ev.in);
  e->add_option("--covariant", ev.covariant, "Covariant id, e.g. F_2220^1")->required();

  AtlasArgs atlas;
  auto* at = app.add_subcommand("atlas", "Enumerate {0,1} forms and discover classes");
  at->add_option("which", atlas.which, "nullcone or secant3")->check(CLI::IsMember({"nullcone", "secant3"}));
  at->add_flag("--extended", atlas.extended, "Add the Z bit to the secant signature");
  at->add_option("--out", atlas.out, "Output directory");

  VerifyArgs verify;
  auto* vf = app.add_subcommand("verify", "Recompute the printed evaluation tables");
  vf->add_option("--out", verify.out, "Output directory");

  GraphArgs graph;
  auto* g = app.add_subcommand("graph", "Adherence graph of the catalog representatives");
  g->add_option("which", graph.which, "nullcone, secant3 or extended")
      ->check(CLI::IsMember({"nullcone", "secant3", "extended"}));
  g->add_flag("--dot", graph.dot, "Shorthand for --format dot");
  g->add_option("--format", graph.format, "dot or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    int code = app.exit(err);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (c->parsed()) return cmd_classify(classify);
    if (i->parsed()) return cmd_invariants(inv);
    if (e->parsed()) return cmd_eval(ev);
    if (at->parsed()) return cmd_atlas(atlas);
    if (vf->parsed()) return cmd_verify(verify);
    if (g->parsed()) return cmd_graph(graph);
  } catch (const InputError& err) {
    std::cerr << "input error: " << err.what() << '\n';
    return kInput;
  } catch (const ClassificationFailure& err) {
    std::cout << err.what() << '\n';
    return kFail;
  } catch (const IntegrityError& err) {
    std::cerr << "integrity error: " << err.what() << '\n';
    return kIntegrity;
  }
  return kInput;
}
