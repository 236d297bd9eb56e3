#pragma once

// Finite multigraphs with loops and parallel edges, consolidation, and the
// counting lemmas about endpoints and cycle vertices.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hatsplit {

struct GraphEdge {
  int id = 0;
  int u = 0;
  int v = 0;
  [[nodiscard]] bool is_loop() const noexcept { return u == v; }
  bool operator==(const GraphEdge&) const = default;
};

// Vertices are 0..n-1 with string labels; edges keep caller-visible ids.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(std::vector<std::string> labels);

  int add_vertex(std::string label);
  // Appends an edge with id = previous max id + 1 (0 for the first).
  int add_edge(int u, int v);
  void add_edge_with_id(int id, int u, int v);

  [[nodiscard]] int num_vertices() const noexcept { return static_cast<int>(labels_.size()); }
  [[nodiscard]] int num_edges() const noexcept { return static_cast<int>(edges_.size()); }
  [[nodiscard]] const std::vector<std::string>& labels() const noexcept { return labels_; }
  [[nodiscard]] const std::string& label(int v) const;
  [[nodiscard]] const std::vector<GraphEdge>& edges() const noexcept { return edges_; }
  [[nodiscard]] std::optional<int> find_vertex(std::string_view label) const;
  // Edge positions (indices into edges()) touching v; a loop appears once.
  [[nodiscard]] const std::vector<int>& incident(int v) const;

  bool operator==(const Multigraph&) const = default;

 private:
  void check_vertex(int v) const;

  std::vector<std::string> labels_;
  std::vector<GraphEdge> edges_;
  std::vector<std::vector<int>> incident_;
  int next_id_ = 0;
};

// Loops count twice.
int degree(const Multigraph& g, int v);
int degree(const Multigraph& g, std::string_view label);
std::vector<int> degrees(const Multigraph& g);
// degree -> number of vertices with that degree
std::map<int, int> degree_census(const Multigraph& g);

// Component id per vertex; ids are dense and ordered by smallest vertex.
std::vector<int> component_ids(const Multigraph& g, int* count = nullptr);
// First Betti number (#edges - #vertices + 1) per component, in component id order.
std::vector<int> betti_by_component(const Multigraph& g);

// Edge positions that are bridges. Loops and parallel edges never are.
std::vector<int> bridges(const Multigraph& g);
// Vertices incident to a non-bridge edge, ascending.
std::vector<int> cycle_vertices(const Multigraph& g);

struct ConsolidationResult {
  Multigraph graph;
  // Original vertex -> new vertex, or -1 for smoothed degree-2 vertices.
  std::vector<int> kept;
  // For each new edge (by position), the original edge positions it replaces, in path order.
  std::vector<std::vector<int>> traces;
};

// Suppresses every degree-2 vertex. Throws CycleComponent when some component
// has only degree-2 vertices.
ConsolidationResult consolidate(const Multigraph& g);

struct Lemma1Report {
  int endpoints = 0;
  int internal = 0;
  bool holds = false;
  // endpoints - internal for each tree, in component id order.
  std::vector<int> per_tree_margins;
};
Lemma1Report check_lemma1(const Multigraph& g);

struct Lemma2Report {
  int on_cycles = 0;
  int off_cycles = 0;
  bool holds = false;
};
Lemma2Report check_lemma2(const Multigraph& g);

struct VertexInvolution {
  std::vector<int> pairing;

  // Involutive and fixed-point-free on g's vertices (and degree-preserving when asked).
  [[nodiscard]] bool valid_for(const Multigraph& g, bool degree_preserving) const;
};

// A vertex v with v and alpha(v) on simple closed curves, of degree > 2 when
// the graph has such vertices. Ties: highest degree, then smallest label.
int find_prop4_vertex(const Multigraph& g, const VertexInvolution& alpha);

enum class InstanceKind { Lemma1, Lemma2, Prop4 };

struct RandomInstance {
  Multigraph graph;
  std::optional<VertexInvolution> alpha;
};

// Deterministic per (kind, size, seed). Output satisfies the matching checker's preconditions.
RandomInstance random_instance(InstanceKind kind, int size, std::uint64_t seed);

std::optional<InstanceKind> parse_instance_kind(std::string_view name);

}  // namespace hatsplit
