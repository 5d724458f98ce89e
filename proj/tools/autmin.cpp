#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "autmin/core.hpp"
#include "autmin/equiv.hpp"
#include "autmin/errors.hpp"
#include "autmin/hardness.hpp"
#include "autmin/io.hpp"
#include "autmin/minimise.hpp"
#include "autmin/scc.hpp"

using namespace autmin;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

std::string slurp(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  buf << in.rdbuf();
  return buf.str();
}

// Prefix parse errors with the file they came from.
template <class F>
auto load(const std::string& path, F parse) {
  const std::string text = slurp(path);
  try {
    return parse(text);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

Automaton load_automaton(const std::string& path) {
  return load(path, [](const std::string& t) { return parse_automaton(t); });
}

Graph load_graph(const std::string& path) {
  return load(path, [](const std::string& t) { return parse_graph(t); });
}

NiceGraph load_nice_graph(const std::string& path) {
  return load(path, [](const std::string& t) { return parse_nice_graph(t); });
}

std::size_t search_budget() {
  const char* raw = std::getenv("AUTMIN_BUDGET");
  if (!raw || !*raw) return kDefaultSearchBudget;
  char* end = nullptr;
  unsigned long long v = std::strtoull(raw, &end, 10);
  if (*end != '\0') throw InputError("AUTMIN_BUDGET must be a non-negative integer");
  return static_cast<std::size_t>(v);
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

void print_cover(const Graph& g, const VertexSet& cover) {
  std::cout << format_word(g.names(cover)) << '\n';
}

void emit(const Automaton& a) { std::cout << serialise_automaton(a); }

int cmd_info(const std::string& path) {
  const Automaton a = load_automaton(path);
  const SccDecomposition d = scc_decompose(a);
  std::size_t plain_sccs = 0;
  for (const auto& members : d.sccs)
    if (members.front().is_plain()) ++plain_sccs;
  std::cout << "states " << a.state_count() << '\n'
            << "reachable " << reachable_part(a).state_count() << '\n'
            << "alphabet " << format_word(a.alphabet()) << '\n'
            << "acceptance " << to_string(a.mode()) << '\n'
            << "sccs " << plain_sccs << '\n'
            << "weak " << (is_weak(a) ? "yes" : "no") << '\n';
  return kOk;
}

int cmd_equiv(const std::string& pa, const std::string& pb, std::string mode,
              bool witness) {
  const Automaton a = load_automaton(pa);
  const Automaton b = load_automaton(pb);
  if (mode.empty()) mode = a.mode() == Acceptance::finite ? "finite" : "omega";
  if (mode == "finite") {
    if (a.mode() == Acceptance::parity || b.mode() == Acceptance::parity)
      throw ModeError("finite-word equivalence is not defined for parity automata");
    auto word = dfa_diff_word(a.relabelled(Acceptance::finite), b.relabelled(Acceptance::finite));
    if (!word) return kOk;
    if (witness) std::cerr << format_word(*word) << '\n';
    return kNegative;
  }
  auto w = omega_diff_nonempty(a, b);
  if (!w) w = omega_diff_nonempty(b, a);
  if (!w) return kOk;
  if (witness) std::cerr << format_lasso(w->lasso) << '\n';
  return kNegative;
}

int cmd_diff(const std::string& pa, const std::string& pb) {
  auto w = omega_diff_nonempty(load_automaton(pa), load_automaton(pb));
  if (!w) return kNegative;
  std::cout << format_lasso(w->lasso) << '\n';
  return kOk;
}

int cmd_quotient(const std::string& path, std::string relation) {
  const Automaton a = load_automaton(path);
  if (relation.empty()) relation = a.mode() == Acceptance::finite ? "almost" : "omega";
  const Partition p = relation == "almost"
                          ? almost_equiv_quotient(a.relabelled(Acceptance::finite))
                          : omega_equiv_quotient(a);
  std::cout << format_partition(p);
  return kOk;
}

int cmd_reduce(const std::string& path, bool greedy, bool weak_normalize) {
  Automaton a = load_automaton(path);
  if (weak_normalize) a = normalize_weak_sccs(a);
  a = reduce_omega(a);
  if (greedy) a = canonicalize(greedy_merge(a));
  emit(a);
  return kOk;
}

int cmd_gen_vc(const std::string& path, const std::string& cover_list, bool nice) {
  const NiceGraph g = nice ? make_nice(load_graph(path)) : load_nice_graph(path);
  VertexSet cover;
  if (cover_list.empty()) {
    for (std::size_t v = 0; v < g.size(); ++v) cover.push_back(v);
  } else {
    cover = g.graph().resolve(split_commas(cover_list));
    if (!is_vertex_cover(g.graph(), cover))
      throw InputError("'" + cover_list + "' is not a vertex cover");
  }
  emit(characteristic_dba(g, cover));
  return kOk;
}

int cmd_extract_cover(const std::string& pa, const std::string& pg) {
  const Automaton a = load_automaton(pa);
  const NiceGraph g = load_nice_graph(pg);
  print_cover(g.graph(), extract_cover(a, g));
  return kOk;
}

int cmd_brute_min(const std::string& path, std::size_t max_states) {
  auto found = exact_min_dba(load_automaton(path), max_states, search_budget());
  if (!found) return kNegative;
  emit(*found);
  return kOk;
}

int cmd_cover(const std::string& path) {
  const NiceGraph g = load_nice_graph(path);
  print_cover(g.graph(), cover_via_minimisation(g, search_budget()));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimisation and reduction of deterministic automata", "autmin"};
  app.require_subcommand(1);

  std::string a_path, b_path, g_path, mode, relation, cover_list;
  bool greedy = false, weak_normalize = false, witness = false, nice = false;
  std::size_t max_states = 0;

  auto* info = app.add_subcommand("info", "Print size, alphabet, mode, SCC count and weakness");
  info->add_option("A", a_path)->required();

  auto* min_dfa = app.add_subcommand("min-dfa", "Minimise by partition refinement");
  min_dfa->add_option("A", a_path)->required();

  auto* rel_min = app.add_subcommand("rel-min", "Minimise up to almost equivalence");
  rel_min->add_option("A", a_path)->required();

  auto* reduce = app.add_subcommand("reduce", "Reduce a Buchi or co-Buchi automaton");
  reduce->add_option("A", a_path)->required();
  reduce->add_flag("--greedy", greedy, "Finish with greedy state merging");
  reduce->add_flag("--weak-normalize", weak_normalize, "Normalise weak SCCs first");

  auto* equiv = app.add_subcommand("equiv", "Decide language equivalence");
  equiv->add_option("A", a_path)->required();
  equiv->add_option("B", b_path)->required();
  equiv->add_option("--mode", mode)->check(CLI::IsMember({"finite", "omega"}));
  equiv->add_flag("--witness", witness, "Print a distinguishing word on stderr");

  auto* diff = app.add_subcommand("diff", "Find a lasso accepted by A and rejected by B");
  diff->add_option("A", a_path)->required();
  diff->add_option("B", b_path)->required();

  auto* quotient = app.add_subcommand("quotient", "Print the state partition");
  quotient->add_option("A", a_path)->required();
  quotient->add_option("--relation", relation)->check(CLI::IsMember({"almost", "omega"}));

  auto* gen_vc = app.add_subcommand("gen-vc", "Build the characteristic DBA of a graph");
  gen_vc->add_option("G", g_path)->required();
  gen_vc->add_option("--cover", cover_list, "Comma-separated cover (default: all vertices)");
  gen_vc->add_flag("--nice", nice, "Attach the two-vertex gadget first");

  auto* extract = app.add_subcommand("extract-cover", "Read a vertex cover off an automaton");
  extract->add_option("A", a_path)->required();
  extract->add_option("G", g_path)->required();

  auto* brute = app.add_subcommand("brute-min", "Search for a smallest equivalent DBA");
  brute->add_option("A", a_path)->required();
  brute->add_option("--max", max_states)->required();

  auto* cover = app.add_subcommand("cover", "Minimum vertex cover via DBA minimisation");
  cover->add_option("G", g_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "autmin: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*info) return cmd_info(a_path);
    if (*min_dfa) {
      emit(hopcroft_min(load_automaton(a_path)));
      return kOk;
    }
    if (*rel_min) {
      emit(relative_minimise(load_automaton(a_path)));
      return kOk;
    }
    if (*reduce) return cmd_reduce(a_path, greedy, weak_normalize);
    if (*equiv) return cmd_equiv(a_path, b_path, mode, witness);
    if (*diff) return cmd_diff(a_path, b_path);
    if (*quotient) return cmd_quotient(a_path, relation);
    if (*gen_vc) return cmd_gen_vc(g_path, cover_list, nice);
    if (*extract) return cmd_extract_cover(a_path, g_path);
    if (*brute) return cmd_brute_min(a_path, max_states);
    if (*cover) return cmd_cover(g_path);
  } catch (const ResourceError& e) {
    std::cerr << "autmin: " << e.what() << '\n';
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "autmin: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
