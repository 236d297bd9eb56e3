#pragma once

// The link of the wedge vertex, read directly off the attaching word.

#include <vector>

#include "hatsplit/multigraph.hpp"
#include "hatsplit/word_model.hpp"

namespace hatsplit {

enum class Side { Start = 0, End = 1 };

// Link vertex of a side point: 2*edge for the start side, 2*edge+1 for the end.
constexpr int sidepoint_vertex(int edge, Side side) noexcept { return 2 * edge + static_cast<int>(side); }

struct LinkGraph {
  // Vertices labelled "<edge>.start" / "<edge>.end"; edge position j is word gap j+1.
  Multigraph graph;
  // Per link edge, the 1-based gap index (gap j sits between letters j and j+1).
  std::vector<int> provenance;
  // Swaps the two side points of every target edge.
  VertexInvolution alpha;
};

// Requires a rose target. Naked edges contribute isolated side points.
LinkGraph build_link(const Presentation& p);

struct Case1Report {
  int components = 0;  // k
  int euler = 0;       // k - n + 1
};

// Requires every edge to occur exactly twice.
Case1Report link_component_count(const Presentation& p);

struct Case2Selection {
  int edge = 0;
  // Link edge positions of a simple closed curve through each side point.
  std::vector<int> start_cycle;
  std::vector<int> end_cycle;
};

// An edge occurring at least three times whose side points both lie on
// simple closed curves in the link. Requires an unexposed presentation with
// some edge occurring three or more times.
Case2Selection select_case2_edge(const Presentation& p);

// Link edge positions of a simple closed curve through v, empty if none.
std::vector<int> cycle_through(const Multigraph& g, int v);

}  // namespace hatsplit
