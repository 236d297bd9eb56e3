// Randomized positive cover search for complexes past the exhaustive limit.
//
// Pieces are grown one simplex at a time under a rule that keeps them
// collapsible: a triangle may join when it meets the piece in a vertex, an
// edge, or a path of two edges; a leftover edge may join when exactly one of
// its endpoints is already there. Collapsible pieces satisfy every predicate,
// so the same growth serves all three.

#include <algorithm>
#include <deque>
#include <limits>

#include "hatsplit/rng.hpp"
#include "hatsplit/split_search.hpp"

namespace hatsplit {
namespace {

struct Piece {
  std::vector<char> tri;
  std::vector<char> edge;
  std::vector<char> vert;
  std::vector<char> gen;  // by generator position
  int generators = 0;

  explicit Piece(const SimplicialComplex& c, int n)
      : tri(static_cast<std::size_t>(c.num_triangles()), 0),
        edge(static_cast<std::size_t>(c.num_edges()), 0),
        vert(static_cast<std::size_t>(c.num_vertices()), 0),
        gen(static_cast<std::size_t>(n), 0) {}

  [[nodiscard]] bool empty() const { return generators == 0; }
};

class Grower {
 public:
  Grower(const SimplicialComplex& c, const Universe& u) : c_(c), u_(u) {}

  // Whether generator g can join p without losing collapsibility.
  [[nodiscard]] bool addable(const Piece& p, int g, int* shared_edges) const {
    const SimplexRef s = u_.generators[static_cast<std::size_t>(g)];
    if (p.gen[static_cast<std::size_t>(g)]) return false;
    if (p.empty()) {
      *shared_edges = 0;
      return true;
    }
    if (s.dim == 2) {
      int vin = 0, ein = 0;
      for (Vertex v : c_.triangles()[static_cast<std::size_t>(s.index)].vertices()) vin += p.vert[static_cast<std::size_t>(v)];
      for (int e : c_.triangle_edges(s.index)) ein += p.edge[static_cast<std::size_t>(e)];
      *shared_edges = ein;
      return (vin == 1 && ein == 0) || (vin == 2 && ein == 1) || (vin == 3 && ein == 2);
    }
    if (s.dim == 1) {
      const Edge& e = c_.edges()[static_cast<std::size_t>(s.index)];
      *shared_edges = 0;
      return p.vert[static_cast<std::size_t>(e.a)] + p.vert[static_cast<std::size_t>(e.b)] == 1;
    }
    return false;  // an isolated vertex only ever forms its own piece
  }

  void add(Piece& p, int g) const {
    const SimplexRef s = u_.generators[static_cast<std::size_t>(g)];
    p.gen[static_cast<std::size_t>(g)] = 1;
    ++p.generators;
    auto add_edge = [&](int e) {
      p.edge[static_cast<std::size_t>(e)] = 1;
      const Edge& ed = c_.edges()[static_cast<std::size_t>(e)];
      p.vert[static_cast<std::size_t>(ed.a)] = 1;
      p.vert[static_cast<std::size_t>(ed.b)] = 1;
    };
    if (s.dim == 2) {
      p.tri[static_cast<std::size_t>(s.index)] = 1;
      for (int e : c_.triangle_edges(s.index)) add_edge(e);
    } else if (s.dim == 1) {
      add_edge(s.index);
    } else {
      p.vert[static_cast<std::size_t>(s.index)] = 1;
    }
  }

  // Generators sharing a vertex with generator g.
  [[nodiscard]] std::vector<int> neighbours(int g) const {
    std::vector<int> out;
    const SimplexRef s = u_.generators[static_cast<std::size_t>(g)];
    std::vector<Vertex> vs;
    if (s.dim == 2) {
      const auto t = c_.triangles()[static_cast<std::size_t>(s.index)].vertices();
      vs.assign(t.begin(), t.end());
    } else if (s.dim == 1) {
      const Edge& e = c_.edges()[static_cast<std::size_t>(s.index)];
      vs = {e.a, e.b};
    } else {
      vs = {s.index};
    }
    for (Vertex v : vs) {
      for (int e : c_.vertex_cofaces(v)) {
        const auto& cof = c_.edge_cofaces(e);
        if (cof.empty()) {
          out.push_back(edge_gen(e));
        } else {
          out.insert(out.end(), cof.begin(), cof.end());  // triangle index == generator position
        }
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    std::erase(out, g);
    return out;
  }

 private:
  [[nodiscard]] int edge_gen(int e) const {
    for (int i = c_.num_triangles(); i < u_.size(); ++i) {
      if (u_.generators[static_cast<std::size_t>(i)].dim == 1 && u_.generators[static_cast<std::size_t>(i)].index == e) return i;
    }
    return -1;
  }

  const SimplicialComplex& c_;
  const Universe& u_;
};

// Generator adjacency (shared vertex) for distance queries.
std::vector<std::vector<int>> adjacency(const Grower& g, int n) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) adj[static_cast<std::size_t>(i)] = g.neighbours(i);
  return adj;
}

class Attempt {
 public:
  Attempt(const SimplicialComplex& c, const Universe& u, const std::vector<std::vector<int>>& adj, Rng& rng)
      : c_(c), u_(u), adj_(adj), grower_(c, u), rng_(rng), n_(u.size()), cover_(static_cast<std::size_t>(n_), 0) {}

  std::optional<std::vector<Piece>> run(int pieces) {
    std::vector<Piece> out;
    for (int i = 0; i < pieces; ++i) {
      const bool last = i + 1 == pieces;
      auto p = last ? grow_last() : grow_free(pieces - i);
      if (!p) return std::nullopt;
      for (int g = 0; g < n_; ++g) cover_[static_cast<std::size_t>(g)] += p->gen[static_cast<std::size_t>(g)];
      out.push_back(std::move(*p));
      if (std::all_of(cover_.begin(), cover_.end(), [](int x) { return x > 0; }) && !last) {
        // Already covered; let the remaining pieces be single generators.
        for (int j = i + 1; j < pieces; ++j) {
          Piece extra(c_, n_);
          grower_.add(extra, rng_.below(n_));
          out.push_back(std::move(extra));
        }
        return out;
      }
    }
    return out;
  }

 private:
  [[nodiscard]] bool uncovered(int g) const { return cover_[static_cast<std::size_t>(g)] == 0; }

  int random_uncovered() {
    std::vector<int> pool;
    for (int g = 0; g < n_; ++g) {
      if (uncovered(g)) pool.push_back(g);
    }
    return pool.empty() ? -1 : pool[static_cast<std::size_t>(rng_.below(static_cast<int>(pool.size())))];
  }

  // Grows over uncovered generators up to a random share of what is left.
  std::optional<Piece> grow_free(int pieces_left) {
    Piece p(c_, n_);
    const int start = random_uncovered();
    if (start < 0) return std::nullopt;
    int left = 0;
    for (int g = 0; g < n_; ++g) left += uncovered(g) ? 1 : 0;
    const int lo = std::max(1, left / pieces_left);
    const int cap = lo + rng_.below(std::max(1, left - lo + 1));
    const int compact = rng_.below(3);  // weight for shared edges
    grower_.add(p, start);
    std::vector<int> frontier = adj_[static_cast<std::size_t>(start)];
    while (p.generators < cap) {
      int best = -1;
      std::uint64_t best_score = 0;
      for (int g : frontier) {
        int shared = 0;
        if (!uncovered(g) || !grower_.addable(p, g, &shared)) continue;
        const std::uint64_t score = (static_cast<std::uint64_t>(shared * compact) << 32) | (rng_.next() >> 32);
        if (best < 0 || score > best_score) {
          best = g;
          best_score = score;
        }
      }
      if (best < 0) break;
      grower_.add(p, best);
      extend_frontier(frontier, p, best);
    }
    if (p.generators == n_) return std::nullopt;
    return p;
  }

  // Must absorb every uncovered generator; may pass through covered ones.
  std::optional<Piece> grow_last() {
    Piece p(c_, n_);
    const int start = random_uncovered();
    if (start < 0) return std::nullopt;
    grower_.add(p, start);
    std::vector<int> frontier = adj_[static_cast<std::size_t>(start)];
    auto remaining = [&] {
      int k = 0;
      for (int g = 0; g < n_; ++g) k += (uncovered(g) && !p.gen[static_cast<std::size_t>(g)]) ? 1 : 0;
      return k;
    };
    while (remaining() > 0) {
      int best = -1;
      std::uint64_t best_score = 0;
      for (int g : frontier) {
        int shared = 0;
        if (!uncovered(g) || !grower_.addable(p, g, &shared)) continue;
        const std::uint64_t score = (static_cast<std::uint64_t>(shared) << 32) | (rng_.next() >> 32);
        if (best < 0 || score > best_score) {
          best = g;
          best_score = score;
        }
      }
      if (best < 0) best = connector(p, frontier);
      if (best < 0) return std::nullopt;
      grower_.add(p, best);
      extend_frontier(frontier, p, best);
      if (p.generators == n_) return std::nullopt;
    }
    return p;
  }

  // A covered generator that brings the piece closer to what is still uncovered.
  int connector(const Piece& p, const std::vector<int>& frontier) {
    const int inf = std::numeric_limits<int>::max();
    std::vector<int> dist(static_cast<std::size_t>(n_), inf);
    std::deque<int> queue;
    for (int g = 0; g < n_; ++g) {
      if (uncovered(g) && !p.gen[static_cast<std::size_t>(g)]) {
        dist[static_cast<std::size_t>(g)] = 0;
        queue.push_back(g);
      }
    }
    while (!queue.empty()) {
      const int g = queue.front();
      queue.pop_front();
      for (int h : adj_[static_cast<std::size_t>(g)]) {
        if (p.gen[static_cast<std::size_t>(h)] || dist[static_cast<std::size_t>(h)] != inf) continue;
        dist[static_cast<std::size_t>(h)] = dist[static_cast<std::size_t>(g)] + 1;
        queue.push_back(h);
      }
    }
    int best = -1;
    std::uint64_t best_score = 0;
    for (int g : frontier) {
      int shared = 0;
      if (dist[static_cast<std::size_t>(g)] == inf || !grower_.addable(p, g, &shared)) continue;
      const auto d = static_cast<std::uint64_t>(dist[static_cast<std::size_t>(g)]);
      const std::uint64_t score = ((1ULL << 20) - d) << 40 | static_cast<std::uint64_t>(shared) << 32 | (rng_.next() >> 32);
      if (best < 0 || score > best_score) {
        best = g;
        best_score = score;
      }
    }
    return best;
  }

  void extend_frontier(std::vector<int>& frontier, const Piece& p, int added) {
    const auto& more = adj_[static_cast<std::size_t>(added)];
    frontier.insert(frontier.end(), more.begin(), more.end());
    std::erase_if(frontier, [&](int g) { return p.gen[static_cast<std::size_t>(g)] != 0; });
    std::sort(frontier.begin(), frontier.end());
    frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());
  }

  const SimplicialComplex& c_;
  const Universe& u_;
  const std::vector<std::vector<int>>& adj_;
  Grower grower_;
  Rng& rng_;
  int n_;
  std::vector<int> cover_;
};

Subcomplex to_subcomplex(const Piece& p) { return Subcomplex{p.vert, p.edge, p.tri}; }

Generators generators_of(const Universe& u, const Piece& p) {
  Generators g;
  for (int i = 0; i < u.size(); ++i) {
    if (!p.gen[static_cast<std::size_t>(i)]) continue;
    const auto& s = u.generators[static_cast<std::size_t>(i)];
    (s.dim == 2 ? g.triangles : s.dim == 1 ? g.edges : g.vertices).push_back(s.index);
  }
  return g;
}

std::optional<SplitCertificate> finish(const SimplicialComplex& c, const CoverQuery& q, int round,
                                       const std::vector<Subcomplex>& pieces, const std::vector<Generators>& gens) {
  for (const auto& s : pieces) {
    if (!is_proper(c, s) || !satisfies(c, s, q.predicate)) return std::nullopt;
  }
  Subcomplex all = Subcomplex::none(c);
  for (const auto& s : pieces) all = unite(all, s);
  if (all != Subcomplex::all(c)) return std::nullopt;
  if (q.intersection && !satisfies(c, intersect(pieces[0], pieces[1]), *q.intersection)) return std::nullopt;
  SplitCertificate cert;
  cert.subdivision_rounds = round;
  cert.predicate = q.predicate;
  cert.intersection = q.intersection;
  cert.pieces = gens;
  for (const auto& s : pieces) cert.evidence.push_back(evidence_for(c, s, q.predicate));
  if (q.intersection) cert.intersection_evidence = evidence_for(c, intersect(pieces[0], pieces[1]), *q.intersection);
  return cert;
}

// One small piece (a single maximal simplex or a vertex star) against the rest.
std::optional<SplitCertificate> small_complement_cover(const SimplicialComplex& c, const CoverQuery& q, int round,
                                                       std::uint64_t& examined) {
  const Universe u = Universe::of(c);
  const int n = u.size();
  std::vector<std::vector<int>> smalls;
  for (int g = 0; g < n; ++g) smalls.push_back({g});
  for (Vertex v = 0; v < c.num_vertices(); ++v) {
    std::vector<int> star;
    for (int e : c.vertex_cofaces(v)) {
      for (int t : c.edge_cofaces(e)) star.push_back(t);
    }
    std::sort(star.begin(), star.end());
    star.erase(std::unique(star.begin(), star.end()), star.end());
    if (star.size() > 1) smalls.push_back(std::move(star));
  }
  for (const auto& small : smalls) {
    ++examined;
    std::vector<char> in_small(static_cast<std::size_t>(n), 0);
    for (int g : small) in_small[static_cast<std::size_t>(g)] = 1;
    Generators gb, ga;
    for (int g = 0; g < n; ++g) {
      const auto& s = u.generators[static_cast<std::size_t>(g)];
      auto& target = in_small[static_cast<std::size_t>(g)] ? gb : ga;
      (s.dim == 2 ? target.triangles : s.dim == 1 ? target.edges : target.vertices).push_back(s.index);
    }
    std::vector<Generators> gens = {ga, gb};
    std::vector<Subcomplex> pieces;
    for (const auto& g : gens) pieces.push_back(closure(c, g.triangles, g.edges, g.vertices));
    if (q.pieces == 3) {
      // A single triangle (or other generator) of A as a third piece.
      Generators gc;
      const auto& s = u.generators[static_cast<std::size_t>(small[0] == 0 ? 1 : 0)];
      (s.dim == 2 ? gc.triangles : s.dim == 1 ? gc.edges : gc.vertices).push_back(s.index);
      pieces.push_back(closure(c, gc.triangles, gc.edges, gc.vertices));
      gens.push_back(gc);
    }
    if (auto cert = finish(c, q, round, pieces, gens)) return cert;
  }
  return std::nullopt;
}

}  // namespace

std::optional<SplitCertificate> heuristic_cover(const SimplicialComplex& c, const CoverQuery& q, int round,
                                                std::uint64_t& examined) {
  if (q.predicate != Predicate::Collapsible && !q.intersection) {
    if (auto cert = small_complement_cover(c, q, round, examined)) return cert;
  }
  const Universe u = Universe::of(c);
  if (u.size() < 2) return std::nullopt;
  const Grower grower(c, u);
  const auto adj = adjacency(grower, u.size());
  for (int attempt = 0; attempt < q.heuristic_attempts; ++attempt) {
    ++examined;
    Rng rng(q.seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(round) * 0x100000001B3ULL +
            static_cast<std::uint64_t>(attempt));
    Attempt a(c, u, adj, rng);
    auto grown = a.run(q.pieces);
    if (!grown) continue;
    std::vector<Subcomplex> pieces;
    std::vector<Generators> gens;
    for (const auto& p : *grown) {
      pieces.push_back(to_subcomplex(p));
      gens.push_back(generators_of(u, p));
    }
    if (auto cert = finish(c, q, round, pieces, gens)) return cert;
  }
  return std::nullopt;
}

}  // namespace hatsplit
