#pragma once

// Simplicial models of the presentation complex: a subdivided cone on the
// boundary polygon, glued to a subdivision of the target graph.

#include <vector>

#include "hatsplit/complex.hpp"
#include "hatsplit/word_model.hpp"

namespace hatsplit {

struct QuotientMap {
  // The disk before gluing, and its boundary cycle as disk vertex ids.
  // boundary[j * segments_per_letter + t] is point t of letter j's arc.
  SimplicialComplex disk;
  std::vector<Vertex> boundary;
  int segments_per_letter = 0;
  int subdivision_rounds = 0;
  // Disk vertex -> complex vertex.
  std::vector<Vertex> image;
};

struct Triangulation {
  SimplicialComplex complex;
  QuotientMap quotient;
};

// Complex vertex ids: target vertices first, then the interior subdivision
// points of each target edge (edge-major, in traversal order), then disk
// interior vertices. Target edges absent from the word are still subdivided
// and included as extra edges. Throws PreconditionViolation for k < 3.
Triangulation triangulate(const Presentation& p, int k);

// Complex vertex of point t (0..s) on target edge e subdivided into s segments.
Vertex target_point(const TargetGraph& g, int segments, int edge, int t);

}  // namespace hatsplit
