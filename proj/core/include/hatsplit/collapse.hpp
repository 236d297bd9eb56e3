#pragma once

// Elementary collapses on 2-complexes: free faces, greedy and exact search,
// replay of recorded sequences.

#include <cstdint>
#include <optional>
#include <vector>

#include "hatsplit/complex.hpp"

namespace hatsplit {

// face is a proper face of exactly one simplex, coface.
struct FreePair {
  SimplexRef face;
  SimplexRef coface;
  bool operator==(const FreePair&) const = default;
};

struct CollapseSequence {
  std::vector<FreePair> steps;
  bool operator==(const CollapseSequence&) const = default;
};

// Edge-triangle pairs by edge index, then vertex-edge pairs by vertex index.
std::vector<FreePair> free_faces(const SimplicialComplex& c);
std::vector<FreePair> free_faces(const SimplicialComplex& c, const Subcomplex& s);

struct GreedyCollapse {
  CollapseSequence sequence;
  Subcomplex remaining;
  SimplicialComplex terminal;
};

// Removes a seeded uniform choice among the current free pairs until none is left.
GreedyCollapse collapse_greedy(const SimplicialComplex& c, std::uint64_t seed);

// Applies the steps to s in order. Returns the result, or nullopt as soon as
// a step is not a free pair of the current subcomplex.
std::optional<Subcomplex> replay_collapse(const SimplicialComplex& c, const Subcomplex& s, const CollapseSequence& seq);
std::optional<Subcomplex> replay_collapse(const SimplicialComplex& c, const CollapseSequence& seq);

// True when replay succeeds and leaves exactly one vertex.
bool sequence_reaches_point(const SimplicialComplex& c, const Subcomplex& s, const CollapseSequence& seq);

struct CollapseSearchOptions {
  int max_simplices = 120;
  std::uint64_t max_states = 2'000'000;
  // In dimension 2 a triangle removal never disables another one, and leaf
  // removals in a graph never disable each other, so branching on one
  // available move of the lowest pending kind loses nothing. Turning this off
  // explores every interleaving (kept for cross-checking).
  bool prune_commuting_moves = true;
};

struct CollapsibilityResult {
  bool collapsible = false;
  std::optional<CollapseSequence> sequence;  // ends at a single vertex when collapsible
  std::uint64_t states_explored = 0;
};

// Exact backtracking over collapse sequences with a memo of dead-end states.
// Throws BudgetExceeded above max_simplices or max_states.
CollapsibilityResult is_collapsible(const SimplicialComplex& c, const CollapseSearchOptions& opts = {});
CollapsibilityResult is_collapsible(const SimplicialComplex& c, const Subcomplex& s,
                                    const CollapseSearchOptions& opts = {});

// Exact linear-time test: peel triangles through free edges, then check that
// what is left is a tree. Reusable scratch space makes repeated queries on
// subcomplexes of one complex cheap.
class PeelingTester {
 public:
  explicit PeelingTester(const SimplicialComplex& c);

  bool collapsible(const Subcomplex& s);
  // Sequence to a single vertex, or nullopt when s is not collapsible.
  std::optional<CollapseSequence> sequence(const Subcomplex& s);

 private:
  bool run(const Subcomplex& s, CollapseSequence* out);

  const SimplicialComplex* c_;
  std::vector<int> cof_;
  std::vector<char> tri_alive_;
  std::vector<char> edge_alive_;
  std::vector<int> queue_;
  std::vector<int> parent_;
  std::vector<int> vdeg_;
};

}  // namespace hatsplit
