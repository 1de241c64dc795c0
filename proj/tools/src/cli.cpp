#include "harmonica_cli/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "harmonica/census.hpp"
#include "harmonica/covers.hpp"
#include "harmonica/dot.hpp"
#include "harmonica/error.hpp"
#include "harmonica/families.hpp"
#include "harmonica/io.hpp"

namespace harmonica::cli {

namespace fs = std::filesystem;

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path, const char* what) {
  if (path.empty()) throw InputError(std::string("missing --") + what);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
  if (text.empty() || text.back() != '\n') out << '\n';
}

// Writes to `out` when a path is given, else to the stream.
void emit(const std::string& path, const std::string& text, std::ostream& os) {
  if (path.empty()) os << text << (text.empty() || text.back() != '\n' ? "\n" : "");
  else write_file(path, text);
}

std::string cycles(const MultiGraph& g, const Automorphism& a) {
  std::string out;
  auto walk = [&](std::size_t n, auto image, auto name) {
    std::vector<bool> seen(n, false);
    for (std::uint32_t i = 0; i < n; ++i) {
      if (seen[i] || image(i) == i) continue;
      out += "(";
      for (std::uint32_t j = i; !seen[j]; j = image(j)) {
        seen[j] = true;
        if (j != i) out += " ";
        out += name(j);
      }
      out += ")";
    }
  };
  walk(g.vertex_count(), [&](std::uint32_t i) { return a(VertexId{i}).index; },
       [&](std::uint32_t i) { return g.name(VertexId{i}); });
  walk(g.edge_count(), [&](std::uint32_t i) { return a(EdgeId{i}).index; },
       [&](std::uint32_t i) { return g.name(EdgeId{i}); });
  return out.empty() ? "()" : out;
}

void print_profile(const RamificationProfile& p, std::ostream& os) {
  os << "order " << p.order << ", genus " << p.genus << ", quotient genus " << p.quotient_genus << "\n";
  os << "branch points:";
  if (p.branch_points.empty()) os << " none";
  for (const auto& b : p.branch_points) os << " (" << b.shape.r << "," << b.shape.w << ")";
  os << "\nR = " << p.R.to_string() << "\n";
  os << "case: " << classify_branch_locus(p).tag() << "\n";
  const auto t = riemann_hurwitz_terms(p);
  os << "Riemann-Hurwitz: " << t.lhs << " = " << t.branch_form.to_string()
     << (verify_riemann_hurwitz(p) ? " (holds)" : " (FAILS)") << "\n";
}

RootedTree parse_tree(const std::string& spec) {
  auto arg = [&](const std::string& prefix) -> std::optional<std::size_t> {
    if (spec.rfind(prefix, 0) != 0) return std::nullopt;
    try {
      return static_cast<std::size_t>(std::stoul(spec.substr(prefix.size())));
    } catch (const std::exception&) {
      throw InputError("bad tree spec '" + spec + "'");
    }
  };
  if (spec == "vertex") return RootedTree::single_vertex();
  if (spec == "edge") return RootedTree::single_edge();
  if (auto k = arg("path:")) return RootedTree::path(*k);
  if (auto k = arg("star:")) return RootedTree::star(*k);
  throw InputError("unknown tree '" + spec + "' (vertex, edge, path:K, star:K)");
}

GroupTable parse_group(const std::string& spec) {
  auto arg = [&](const std::string& prefix) -> std::optional<std::size_t> {
    if (spec.rfind(prefix, 0) != 0) return std::nullopt;
    try {
      return static_cast<std::size_t>(std::stoul(spec.substr(prefix.size())));
    } catch (const std::exception&) {
      throw InputError("bad group spec '" + spec + "'");
    }
  };
  if (spec == "klein") return GroupTable::klein_four();
  if (auto k = arg("cyclic:")) return GroupTable::cyclic(*k);
  if (auto k = arg("dihedral:")) return GroupTable::dihedral(*k);
  throw InputError("unknown group '" + spec + "' (cyclic:K, klein, dihedral:K)");
}

int verify_action(const CommandConfig& c, std::ostream& out) {
  const MultiGraph g = parse_graph(read_file(c.graph_path, "graph"));
  const ActionGroup group = parse_action(read_file(c.action_path, "action"), g);
  const HarmonicVerdict v = is_harmonic_action(group);
  if (v) {
    out << "HARMONIC (order " << group.order() << ")\n";
    print_profile(profile(group), out);
  } else if (v.fixed_edge) {
    const auto& w = *v.fixed_edge;
    out << "NOT HARMONIC, witness: (" << cycles(g, group.element(w.element)) << ", " << g.name(w.vertex)
        << ", " << g.name(w.edge) << ")\n";
  } else {
    out << "NOT HARMONIC, degenerate at " << g.name(*v.degenerate_vertex)
        << " (every neighbour lies in its orbit)\n";
  }
  if (c.by_definition) {
    const bool def = is_harmonic_action_by_definition(group, c.budget);
    out << "definition check: " << (def ? "harmonic" : "not harmonic")
        << (def == v.harmonic ? " (agrees)" : " (DISAGREES)") << "\n";
    if (def != v.harmonic) return kPropertyFails;
  }
  return v ? kOk : kPropertyFails;
}

int verify_morphism(const CommandConfig& c, std::ostream& out) {
  const MultiGraph src = parse_graph(read_file(c.graph_path, "graph"));
  const MultiGraph dst = parse_graph(read_file(c.target_path, "target"));
  const GraphMorphism phi = parse_morphism(read_file(c.morphism_path, "morphism"), src, dst);
  const bool nondeg = is_nondegenerate(phi);
  if (auto f = harmonicity_failure(phi)) {
    out << "NOT HARMONIC, witness: vertex " << src.name(f->vertex) << ": " << f->first_count
        << " preimage(s) of " << dst.name(f->first_edge) << " but " << f->second_count << " of "
        << dst.name(f->second_edge) << "\n";
    return kPropertyFails;
  }
  out << "HARMONIC" << (nondeg ? ", non-degenerate" : ", degenerate");
  if (!phi.is_constant()) out << ", degree " << degree(phi);
  out << "\n";
  return nondeg ? kOk : kPropertyFails;
}

int cmd_quotient(const CommandConfig& c, std::ostream& out) {
  const MultiGraph g = parse_graph(read_file(c.graph_path, "graph"));
  const ActionGroup group = parse_action(read_file(c.action_path, "action"), g);
  const Quotient q = quotient(group);
  if (c.out.empty()) {
    out << "{\"graph\": " << serialize_graph(q.graph) << ",\n\"morphism\": " << serialize_morphism(q.morphism)
        << "}\n";
  } else {
    write_file(fs::path(c.out) / "quotient.json", serialize_graph(q.graph));
    write_file(fs::path(c.out) / "morphism.json", serialize_morphism(q.morphism));
    out << "quotient: " << q.graph.vertex_count() << " vertices, " << q.graph.edge_count() << " edges\n";
  }
  out << "quotient morphism: harmonic " << (is_harmonic(q.morphism) ? "yes" : "no") << ", non-degenerate "
      << (is_nondegenerate(q.morphism) ? "yes" : "no") << "\n";
  return kOk;
}

int cmd_profile(const CommandConfig& c, std::ostream& out) {
  const MultiGraph g = parse_graph(read_file(c.graph_path, "graph"));
  const ActionGroup group = parse_action(read_file(c.action_path, "action"), g);
  if (!is_harmonic_action(group)) {
    out << "NOT HARMONIC: no ramification profile\n";
    return kPropertyFails;
  }
  const RamificationProfile p = profile(group);
  if (c.out.empty()) out << serialize_profile(p) << "\n";
  else write_file(c.out, serialize_profile(p));
  out << "case: " << classify_branch_locus(p).tag() << "\n";
  return kOk;
}

void write_instance(const fs::path& dir, const MultiGraph& g, const ActionGroup& group, std::ostream& out) {
  write_file(dir / "graph.json", serialize_graph(g));
  write_file(dir / "action.json", serialize_action(group));
  write_file(dir / "graph.dot", to_dot(group));
  if (is_harmonic_action(group)) write_file(dir / "profile.json", serialize_profile(profile(group)));
  out << "wrote " << dir.string() << "\n";
}

int cmd_construct(const CommandConfig& c, std::ostream& out) {
  const std::string& f = c.family;
  auto need = [&](const std::optional<int>& v, const char* flag) {
    if (!v) throw InputError("family '" + f + "' needs --" + flag);
    return *v;
  };
  std::optional<FamilyInstance> inst;
  if (f == "barbell") {
    const Barbell b = barbell();
    const std::vector<Automorphism> klein{b.vertical_reflection, b.half_rotation};
    const ActionGroup group = generate_group(b.graph, klein);
    out << "barbell: genus " << genus(b.graph) << ", Klein four action " << (is_harmonic_action(group) ? "" : "NOT ")
        << "harmonic\n";
    if (!c.out.empty()) {
      const fs::path dir(c.out);
      write_instance(dir, b.graph, group, out);
      write_file(dir / "hreflect.json", serialize_automorphisms(b.graph, {b.horizontal_reflection}));
      write_file(dir / "vreflect.json", serialize_automorphisms(b.graph, {b.vertical_reflection}));
      write_file(dir / "rotation.json", serialize_automorphisms(b.graph, {b.half_rotation}));
    }
    return kOk;
  }
  if (f == "macbeath") {
    const MacbeathInstance mb = macbeath(need(c.m, "m"));
    out << "macbeath m=" << mb.m << ": " << mb.graph.vertex_count() << " vertices, " << mb.graph.edge_count()
        << " edges, genus " << genus(mb.graph) << ", order " << mb.group.order() << "\n";
    print_profile(mb.profile, out);
    if (!c.out.empty()) write_instance(c.out, mb.graph, mb.group, out);
    return kOk;
  }
  if (f == "klein_genus3") inst = klein_genus3();
  else if (f == "klein_genus5") inst = klein_genus5();
  else if (f == "hurwitz_genus2") inst = hurwitz_genus2();
  else if (f == "decorated_cycle") inst = decorated_cycle(static_cast<std::size_t>(need(c.n, "n")), parse_tree(c.tree));
  else if (f == "tree_double") inst = tree_double(parse_tree(c.tree));
  else if (f == "tree_star") inst = tree_star(parse_tree(c.tree), parse_group(c.group));
  else if (f == "lower_bound") inst = lower_bound_family(need(c.g, "g"));
  else
    throw InputError("unknown family '" + f +
                     "' (barbell, klein_genus3, klein_genus5, hurwitz_genus2, decorated_cycle, tree_double, "
                     "tree_star, lower_bound, macbeath)");
  out << inst->name << ": " << inst->graph.vertex_count() << " vertices, " << inst->graph.edge_count()
      << " edges, genus " << genus(inst->graph) << ", order " << inst->group.order() << "\n";
  const bool harmonic = static_cast<bool>(is_harmonic_action(inst->group));
  if (harmonic) print_profile(profile(inst->group), out);
  if (!c.out.empty()) write_instance(c.out, inst->graph, inst->group, out);
  return harmonic == inst->harmonic ? kOk : kPropertyFails;
}

VoltageAssignment read_voltages(const std::string& text, const MultiGraph& base) {
  using nlohmann::json;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::ParseError, "$ (byte " + std::to_string(e.byte) + "): malformed JSON");
  }
  try {
    std::vector<std::uint32_t> moduli = j.at("moduli").get<std::vector<std::uint32_t>>();
    AbelianGroup grp(moduli);
    std::vector<EdgeId> tree;
    if (j.contains("tree"))
      for (const auto& id : j.at("tree")) tree.push_back(base.edge(id.get<std::string>()));
    else
      tree = spanning_tree(base);
    std::vector<std::uint32_t> volt(base.edge_count(), 0);
    for (const auto& [id, coords] : j.at("voltages").items())
      volt[base.edge(id).index] = grp.element(coords.get<std::vector<std::uint32_t>>());
    return make_voltage_assignment(base, std::move(tree), std::move(grp), std::move(volt));
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, std::string("voltages: ") + e.what());
  }
}

int cmd_cover(const CommandConfig& c, std::ostream& out) {
  const MultiGraph base = parse_graph(read_file(c.graph_path, "graph"));
  VoltageAssignment va = c.voltages_path.empty()
                             ? homology_voltages(base, spanning_tree(base), static_cast<std::uint32_t>(c.m.value_or(2)))
                             : read_voltages(read_file(c.voltages_path, "voltages"), base);
  const DerivedCover dc = derived_cover(va);
  out << "cover: " << dc.cover.vertex_count() << " vertices, " << dc.cover.edge_count() << " edges, genus "
      << genus(dc.cover) << ", deck group order " << dc.deck.order() << "\n";
  out << "projection: " << (is_harmonic(dc.projection) ? "harmonic" : "NOT harmonic") << ", degree "
      << degree(dc.projection) << "\n";
  if (!c.out.empty()) {
    const fs::path dir(c.out);
    write_file(dir / "cover.json", serialize_graph(dc.cover));
    write_file(dir / "projection.json", serialize_morphism(dc.projection));
    write_file(dir / "deck.json", serialize_action(dc.deck));
    out << "wrote " << dir.string() << "\n";
  }
  return kOk;
}

int cmd_census(const CommandConfig& c, std::ostream& out) {
  CensusOptions opt;
  opt.genus = c.genus;
  opt.max_vertices = c.max_vertices;
  opt.jobs = c.jobs;
  opt.aut_budget = c.aut_budget;
  opt.definition_budget = c.budget;
  const CensusReport r = run_census(opt);
  if (!c.out.empty()) write_file(c.out, serialize_census(r));
  out << "genus " << r.genus << ", |V| <= " << r.max_vertices << ": " << r.records.size() << " graphs, "
      << r.harmonic_pairs << " harmonic pairs, " << r.definition_checks << " definition checks\n";
  out << "max harmonic order found: " << r.max_order << "\n";
  for (const auto& n : r.notes) out << "note: " << n << "\n";
  out << "violations: " << r.violations.size() << "\n";
  for (const auto& v : r.violations)
    out << "  " << v.property << " on " << v.key << " (order " << v.order << "): " << v.detail << "\n";
  if (!r.violations.empty()) return kPropertyFails;
  return r.truncated ? kBudget : kOk;
}

int cmd_export_dot(const CommandConfig& c, std::ostream& out) {
  const MultiGraph g = parse_graph(read_file(c.graph_path, "graph"));
  std::string dot;
  if (!c.action_path.empty()) {
    dot = to_dot(parse_action(read_file(c.action_path, "action"), g));
  } else if (!c.morphism_path.empty()) {
    const MultiGraph t = parse_graph(read_file(c.target_path, "target"));
    dot = to_dot(parse_morphism(read_file(c.morphism_path, "morphism"), g, t));
  } else {
    dot = to_dot(g);
  }
  emit(c.out, dot, out);
  return kOk;
}

std::size_t env_budget(std::ostream& err) {
  const char* env = std::getenv("HARMONICA_BUDGET");
  if (!env || !*env) return kDefaultGroupBudget;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (used == std::string(env).size() && v > 0) return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
  }
  err << "warning: ignoring invalid HARMONICA_BUDGET='" << env << "'\n";
  return kDefaultGroupBudget;
}

}  // namespace

Parsed parse_command_line(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CommandConfig c;
  c.budget = env_budget(err);
  CLI::App app{"harmonic group actions on finite multigraphs", "harmonica"};
  app.require_subcommand(1, 1);
  auto positive = CLI::PositiveNumber;

  auto* verify = app.add_subcommand("verify", "harmonicity of an action (or of a morphism)");
  verify->add_option("--graph", c.graph_path, "graph JSON")->required();
  verify->add_option("--action", c.action_path, "action JSON");
  verify->add_option("--morphism", c.morphism_path, "morphism JSON (with --target)");
  verify->add_option("--target", c.target_path, "target graph JSON");
  verify->add_flag("--definition", c.by_definition, "also check every subgroup quotient");
  verify->add_option("--budget", c.budget, "largest group checked by definition")->check(positive);

  auto* quot = app.add_subcommand("quotient", "quotient graph and morphism");
  quot->add_option("--graph", c.graph_path)->required();
  quot->add_option("--action", c.action_path)->required();
  quot->add_option("--out", c.out, "output directory");

  auto* prof = app.add_subcommand("profile", "ramification profile of a harmonic action");
  prof->add_option("--graph", c.graph_path)->required();
  prof->add_option("--action", c.action_path)->required();
  prof->add_option("--out", c.out, "profile JSON path");

  auto* cons = app.add_subcommand("construct", "build a named family");
  cons->add_option("--family", c.family)->required();
  cons->add_option("--g", c.g, "genus (lower_bound)");
  cons->add_option("--n", c.n, "cycle length (decorated_cycle)");
  cons->add_option("--m", c.m, "cover modulus (macbeath)");
  cons->add_option("--tree", c.tree, "vertex | edge | path:K | star:K");
  cons->add_option("--group", c.group, "cyclic:K | klein | dihedral:K");
  cons->add_option("--out", c.out, "output directory");

  auto* cov = app.add_subcommand("cover", "derived cover from voltages");
  cov->add_option("--graph", c.graph_path)->required();
  cov->add_option("--m", c.m, "homology modulus (default 2)")->check(CLI::Range(2, 1 << 16));
  cov->add_option("--voltages", c.voltages_path, "voltage JSON instead of homology voltages");
  cov->add_option("--out", c.out, "output directory");

  auto* cen = app.add_subcommand("census", "exhaustive small-graph census");
  cen->add_option("--genus", c.genus)->required()->check(CLI::NonNegativeNumber);
  cen->add_option("--max-vertices", c.max_vertices)->required()->check(CLI::Range(2, 12));
  cen->add_option("--jobs", c.jobs)->check(positive);
  cen->add_option("--aut-budget", c.aut_budget, "largest Aut(G) searched")->check(positive);
  cen->add_option("--budget", c.budget, "largest group checked by definition")->check(positive);
  cen->add_option("--out", c.out, "report JSON path");

  auto* dot = app.add_subcommand("export-dot", "DOT rendering");
  dot->add_option("--graph", c.graph_path)->required();
  dot->add_option("--action", c.action_path);
  dot->add_option("--morphism", c.morphism_path);
  dot->add_option("--target", c.target_path);
  dot->add_option("--out", c.out, "DOT path (stdout if absent)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return Parsed{std::nullopt, code == 0 ? kOk : kInputError};
  }
  c.subcommand = app.get_subcommands().front()->get_name();
  return Parsed{c, kOk};
}

int run(const CommandConfig& c, std::ostream& out, std::ostream& err) {
  try {
    if (c.budget == 0 || c.aut_budget == 0 || c.jobs == 0) throw InputError("budgets must be positive");
    if (c.subcommand == "verify") {
      if (!c.morphism_path.empty()) return verify_morphism(c, out);
      if (c.action_path.empty()) throw InputError("verify needs --action or --morphism/--target");
      return verify_action(c, out);
    }
    if (c.subcommand == "quotient") return cmd_quotient(c, out);
    if (c.subcommand == "profile") return cmd_profile(c, out);
    if (c.subcommand == "construct") return cmd_construct(c, out);
    if (c.subcommand == "cover") return cmd_cover(c, out);
    if (c.subcommand == "census") return cmd_census(c, out);
    if (c.subcommand == "export-dot") return cmd_export_dot(c, out);
    throw InputError("unknown subcommand '" + c.subcommand + "'");
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == Errc::BudgetExceeded ? kBudget : kInputError;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

int main_with_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Parsed p = parse_command_line(argc, argv, out, err);
  if (!p.config) return p.exit_code;
  return run(*p.config, out, err);
}

}  // namespace harmonica::cli
