#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "autmin/automaton.hpp"

namespace autmin {

/// The stop symbol of characteristic languages.
inline constexpr const char* kStopSymbol = "#";

using VertexSet = std::vector<std::size_t>;  // sorted vertex indices

/// Simple undirected graph, optionally with a distinguished initial vertex.
struct Graph {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // u < v, sorted
  std::optional<std::size_t> initial;

  std::size_t size() const noexcept { return vertices.size(); }
  std::optional<std::size_t> find(const std::string& name) const;
  bool adjacent(std::size_t u, std::size_t v) const;
  /// Names to sorted unique indices; unknown names raise InputError.
  VertexSet resolve(std::span<const std::string> names) const;
  std::vector<std::string> names(const VertexSet& set) const;

  /// Throws InputError on self-loops, duplicate edges, duplicate or reserved
  /// vertex names, or out-of-range indices.
  void validate_simple() const;

  friend bool operator==(const Graph&, const Graph&) = default;
};

Graph make_graph(std::vector<std::string> vertices,
                 std::vector<std::pair<std::size_t, std::size_t>> edges,
                 std::optional<std::size_t> initial = std::nullopt);

/// Simple, connected, more than one vertex, with an initial vertex.
class NiceGraph {
 public:
  /// Throws InputError when `g` is not nice.
  explicit NiceGraph(Graph g);

  const Graph& graph() const noexcept { return g_; }
  std::size_t initial() const noexcept { return *g_.initial; }
  std::size_t size() const noexcept { return g_.size(); }

 private:
  Graph g_;
};

/// Adds a fresh initial vertex joined to every old vertex and to a second
/// fresh vertex. Fresh names are "v" and "v'"; on a clash both get the
/// suffix "_1", "_2", ... (first free one).
NiceGraph make_nice(const Graph& g);

bool is_vertex_cover(const Graph& g, const VertexSet& cover);

inline constexpr std::size_t kMaxCoverVertices = 25;

/// Minimum vertex cover; among the minimum ones the lexicographically least
/// index combination. More than kMaxCoverVertices vertices: ResourceError.
VertexSet min_cover_bruteforce(const Graph& g);

/// The Buchi automaton over V + {#} with states (v,r) for every v, then
/// (v,#) for every v, then (c,a) for every c in the cover, all in vertex
/// order; F = cover x {a}.
Automaton characteristic_dba(const NiceGraph& g, const VertexSet& cover);

/// Membership in the characteristic language, decided from its definition.
bool characteristic_member(const NiceGraph& g, const Lasso& lasso);

/// Vertices with an accepting v-state, found by the (vertex, state) fixpoint.
VertexSet extract_cover(const Automaton& b, const NiceGraph& g);

inline constexpr std::size_t kDefaultSearchBudget = 12;

enum class SearchRelation { omega, almost };

struct SearchOptions {
  std::size_t min_states = 0;
  std::size_t max_states = 0;
  SearchRelation relation = SearchRelation::omega;
  bool require_weak = false;
  /// Class-consistency pruning of partial tables. Off only for tests that
  /// check the pruning against plain enumeration.
  bool prune = true;
  std::size_t budget = kDefaultSearchBudget;
};

/// Canonically first automaton (ascending size, then canonical table order,
/// then acceptance sets in binary order) with between min_states and
/// max_states plain states that is equivalent to `reference` under the
/// chosen relation. Candidates use the reference's acceptance mode.
std::optional<Automaton> find_smallest_equivalent(const Automaton& reference,
                                                  const SearchOptions& options);

/// Smallest omega-equivalent DBA with at most `max_states` plain states.
std::optional<Automaton> exact_min_dba(const Automaton& reference,
                                       std::size_t max_states,
                                       std::size_t budget = kDefaultSearchBudget);

/// Minimum vertex cover read off a minimal DBA for the characteristic
/// language of `g`.
VertexSet cover_via_minimisation(const NiceGraph& g,
                                 std::size_t budget = kDefaultSearchBudget);

}  // namespace autmin
