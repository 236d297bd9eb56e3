#include <algorithm>
#include <numeric>

#include "hatsplit/errors.hpp"
#include "hatsplit/multigraph.hpp"
#include "hatsplit/rng.hpp"

namespace hatsplit {
namespace {

std::string vertex_name(int i) { return "v" + std::to_string(i); }

// Uniform labelled tree on n >= 2 vertices from a random Pruefer sequence.
std::vector<std::pair<int, int>> random_tree(int n, Rng& rng) {
  if (n == 2) return {{0, 1}};
  std::vector<int> seq(static_cast<std::size_t>(n - 2));
  for (auto& x : seq) x = rng.below(n);
  std::vector<int> deg(static_cast<std::size_t>(n), 1);
  for (int x : seq) ++deg[static_cast<std::size_t>(x)];
  std::vector<std::pair<int, int>> edges;
  for (int x : seq) {
    int leaf = 0;
    while (deg[static_cast<std::size_t>(leaf)] != 1) ++leaf;
    edges.emplace_back(leaf, x);
    --deg[static_cast<std::size_t>(leaf)];
    --deg[static_cast<std::size_t>(x)];
  }
  std::vector<int> last;
  for (int v = 0; v < n; ++v) {
    if (deg[static_cast<std::size_t>(v)] == 1) last.push_back(v);
  }
  edges.emplace_back(last[0], last[1]);
  return edges;
}

Multigraph lemma1_instance(int size, Rng& rng) {
  const int max_trees = std::min(3, size / 2);
  const int trees = 1 + rng.below(max_trees);
  // Split `size` into `trees` parts of at least 2.
  std::vector<int> parts(static_cast<std::size_t>(trees), 2);
  for (int extra = size - 2 * trees; extra > 0; --extra) ++parts[static_cast<std::size_t>(rng.below(trees))];

  Multigraph forest;
  int offset = 0;
  for (int n : parts) {
    for (int i = 0; i < n; ++i) forest.add_vertex(vertex_name(offset + i));
    for (auto [u, v] : random_tree(n, rng)) forest.add_edge(offset + u, offset + v);
    offset += n;
  }
  return consolidate(forest).graph;
}

Multigraph lemma2_instance(int size, Rng& rng) {
  std::vector<int> stubs;
  for (int v = 0; v < size; ++v) {
    const int d = 3 + (rng.below(4) == 0 ? rng.below(3) : 0);
    for (int i = 0; i < d; ++i) stubs.push_back(v);
  }
  if (stubs.size() % 2) stubs.push_back(rng.below(size));
  rng.shuffle(stubs);
  Multigraph g;
  for (int v = 0; v < size; ++v) g.add_vertex(vertex_name(v));
  for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) g.add_edge(stubs[i], stubs[i + 1]);
  return g;
}

// Base graph with minimum degree 2: blobs (a cycle, optionally with chords)
// linked by a random tree of bridges.
std::vector<std::pair<int, int>> prop4_base(int n, Rng& rng) {
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);
  std::vector<std::vector<int>> blobs;
  for (std::size_t i = 0; i < order.size();) {
    const std::size_t len = std::min(order.size() - i, static_cast<std::size_t>(1 + rng.below(5)));
    blobs.emplace_back(order.begin() + static_cast<std::ptrdiff_t>(i), order.begin() + static_cast<std::ptrdiff_t>(i + len));
    i += len;
  }
  std::vector<std::pair<int, int>> edges;
  for (const auto& b : blobs) {
    const int len = static_cast<int>(b.size());
    for (int i = 0; i < len; ++i) edges.emplace_back(b[static_cast<std::size_t>(i)], b[static_cast<std::size_t>((i + 1) % len)]);
    const int chords = rng.below(3) == 0 ? rng.below(len + 1) : 0;
    for (int c = 0; c < chords; ++c) {
      edges.emplace_back(b[static_cast<std::size_t>(rng.below(len))], b[static_cast<std::size_t>(rng.below(len))]);
    }
  }
  for (std::size_t k = 1; k < blobs.size(); ++k) {
    const auto& from = blobs[static_cast<std::size_t>(rng.below(static_cast<int>(k)))];
    const auto& to = blobs[k];
    edges.emplace_back(from[static_cast<std::size_t>(rng.below(static_cast<int>(from.size())))],
                       to[static_cast<std::size_t>(rng.below(static_cast<int>(to.size())))]);
  }
  return edges;
}

RandomInstance prop4_instance(int size, Rng& rng) {
  const int half = size / 2;
  const auto base = prop4_base(half, rng);
  RandomInstance out;
  for (int v = 0; v < size; ++v) out.graph.add_vertex(vertex_name(v));
  for (auto [u, v] : base) {
    out.graph.add_edge(u, v);
    out.graph.add_edge(u + half, v + half);
  }
  // Cross edges in alpha-symmetric pairs {u, w'} and {u', w}.
  const int cross = rng.below(2) == 0 ? rng.below(half + 1) : 0;
  for (int i = 0; i < cross; ++i) {
    const int u = rng.below(half);
    const int w = rng.below(half);
    out.graph.add_edge(u, w + half);
    out.graph.add_edge(u + half, w);
  }
  VertexInvolution alpha;
  alpha.pairing.resize(static_cast<std::size_t>(size));
  for (int v = 0; v < half; ++v) {
    alpha.pairing[static_cast<std::size_t>(v)] = v + half;
    alpha.pairing[static_cast<std::size_t>(v + half)] = v;
  }
  out.alpha = std::move(alpha);
  return out;
}

}  // namespace

RandomInstance random_instance(InstanceKind kind, int size, std::uint64_t seed) {
  if (size < 2) throw Error(ErrorCode::SizeTooSmall, "size must be at least 2");
  Rng rng(seed);
  switch (kind) {
    case InstanceKind::Lemma1: return {lemma1_instance(size, rng), std::nullopt};
    case InstanceKind::Lemma2: return {lemma2_instance(size, rng), std::nullopt};
    case InstanceKind::Prop4:
      if (size % 2) throw Error(ErrorCode::SizeTooSmall, "prop4 instances need an even size");
      return prop4_instance(size, rng);
  }
  throw Error(ErrorCode::InvalidQuery, "unknown instance kind");
}

}  // namespace hatsplit
