#include "hatsplit/word_model.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "hatsplit/errors.hpp"

namespace hatsplit {

TargetGraph::TargetGraph(std::vector<std::string> vertices, std::vector<TargetEdge> edges, int wedge)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), wedge_(wedge) {
  if (vertices_.empty()) throw Error(ErrorCode::InvalidTarget, "target graph needs at least one vertex");
  const int nv = num_vertices();
  if (std::set<std::string>(vertices_.begin(), vertices_.end()).size() != vertices_.size()) {
    throw Error(ErrorCode::InvalidTarget, "duplicate vertex label");
  }
  std::set<std::string> labels;
  for (const auto& e : edges_) {
    if (e.label.empty()) throw Error(ErrorCode::InvalidTarget, "empty edge label");
    if (!labels.insert(e.label).second) throw Error(ErrorCode::InvalidTarget, "duplicate edge label " + e.label);
    if (e.tail < 0 || e.tail >= nv || e.head < 0 || e.head >= nv) {
      throw Error(ErrorCode::InvalidTarget, "edge " + e.label + " has an undeclared endpoint");
    }
  }
  if (wedge_ < 0 || wedge_ >= nv) throw Error(ErrorCode::InvalidTarget, "wedge vertex is not declared");
}

TargetGraph TargetGraph::rose(std::vector<std::string> labels) {
  std::vector<TargetEdge> edges;
  edges.reserve(labels.size());
  for (auto& l : labels) edges.push_back({std::move(l), 0, 0});
  return TargetGraph({"v"}, std::move(edges), 0);
}

bool TargetGraph::is_rose() const noexcept {
  return vertices_.size() == 1;  // every edge is then a loop at the wedge
}

std::optional<int> TargetGraph::find_edge(std::string_view label) const {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].label == label) return static_cast<int>(i);
  }
  return std::nullopt;
}

AttachingWord::AttachingWord(std::vector<OrientedLetter> letters) {
  if (letters.empty()) throw Error(ErrorCode::EmptyWord, "attaching word has no letters");
  const std::size_t m = letters.size();
  std::size_t best = 0;
  for (std::size_t r = 1; r < m; ++r) {
    for (std::size_t i = 0; i < m; ++i) {
      const auto& x = letters[(r + i) % m];
      const auto& y = letters[(best + i) % m];
      if (x == y) continue;
      if (x < y) best = r;
      break;
    }
  }
  std::rotate(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(best), letters.end());
  letters_ = std::move(letters);
}

AttachingWord AttachingWord::inverted() const {
  std::vector<OrientedLetter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
  return AttachingWord(std::move(out));
}

namespace {

int letter_tail(const TargetGraph& g, const OrientedLetter& l) {
  const auto& e = g.edges()[static_cast<std::size_t>(l.edge)];
  return l.direction == Direction::Forward ? e.tail : e.head;
}

int letter_head(const TargetGraph& g, const OrientedLetter& l) {
  const auto& e = g.edges()[static_cast<std::size_t>(l.edge)];
  return l.direction == Direction::Forward ? e.head : e.tail;
}

}  // namespace

Presentation::Presentation(TargetGraph target, AttachingWord word) : target_(std::move(target)), word_(std::move(word)) {
  const int m = word_.length();
  for (int j = 0; j < m; ++j) {
    const auto& l = word_[j];
    if (l.edge < 0 || l.edge >= target_.num_edges()) {
      throw Error(ErrorCode::UnknownLetter, "letter refers to edge index " + std::to_string(l.edge));
    }
  }
  for (int j = 0; j < m; ++j) {
    if (letter_head(target_, word_[j]) != letter_tail(target_, word_[(j + 1) % m])) {
      throw Error(ErrorCode::NotClosedPath, "letters " + std::to_string(j + 1) + " and " +
                                                std::to_string((j + 1) % m + 1) + " do not meet in the target");
    }
  }
}

std::string Presentation::to_string() const {
  std::string out;
  for (const auto& l : word_.letters()) {
    std::string label = target_.edges()[static_cast<std::size_t>(l.edge)].label;
    if (l.direction == Direction::Reverse) {
      for (auto& ch : label) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    }
    out += label;
  }
  return out;
}

Presentation parse_word(std::string_view text, const std::optional<TargetGraph>& target) {
  std::vector<char> chars;
  for (char ch : text) {
    const auto u = static_cast<unsigned char>(ch);
    if (std::isspace(u)) continue;
    if (!std::isalpha(u) || u > 127) {
      throw Error(ErrorCode::UnknownLetter, std::string("'") + ch + "' is not a letter");
    }
    chars.push_back(ch);
  }
  if (chars.empty()) throw Error(ErrorCode::EmptyWord, "word has no letters");

  TargetGraph g = [&] {
    if (target) return *target;
    std::set<std::string> labels;
    for (char ch : chars) labels.insert(std::string(1, static_cast<char>(std::tolower(static_cast<unsigned char>(ch)))));
    return TargetGraph::rose({labels.begin(), labels.end()});
  }();

  std::vector<OrientedLetter> letters;
  letters.reserve(chars.size());
  for (char ch : chars) {
    const auto u = static_cast<unsigned char>(ch);
    const std::string label(1, static_cast<char>(std::tolower(u)));
    auto edge = g.find_edge(label);
    if (!edge) throw Error(ErrorCode::UnknownLetter, "no target edge labelled " + label);
    letters.push_back({*edge, std::isupper(u) ? Direction::Reverse : Direction::Forward});
  }
  return Presentation(std::move(g), AttachingWord(std::move(letters)));
}

std::vector<int> occurrence_counts(const Presentation& p) {
  std::vector<int> counts(static_cast<std::size_t>(p.target().num_edges()), 0);
  for (const auto& l : p.word().letters()) ++counts[static_cast<std::size_t>(l.edge)];
  return counts;
}

std::vector<EdgeStatus> edge_status(const Presentation& p) {
  std::vector<EdgeStatus> out;
  for (int c : occurrence_counts(p)) {
    const auto kind = c == 0 ? EdgeStatus::Kind::Naked : c == 1 ? EdgeStatus::Kind::Free : EdgeStatus::Kind::Unexposed;
    out.push_back({kind, c});
  }
  return out;
}

bool is_unexposed(const Presentation& p) {
  const auto counts = occurrence_counts(p);
  return std::all_of(counts.begin(), counts.end(), [](int c) { return c >= 2; });
}

std::vector<long long> exponent_vector(const Presentation& p) {
  std::vector<long long> e(static_cast<std::size_t>(p.target().num_edges()), 0);
  for (const auto& l : p.word().letters()) e[static_cast<std::size_t>(l.edge)] += l.direction == Direction::Forward ? 1 : -1;
  return e;
}

namespace {

void require_rose(const Presentation& p, const char* op) {
  if (!p.target().is_rose()) throw Error(ErrorCode::NonRoseTarget, std::string(op) + " needs a rose target");
}

}  // namespace

HomologySummary abelianized_h1(const Presentation& p) {
  require_rose(p, "abelianized_h1");
  const auto e = exponent_vector(p);
  const int n = p.target().num_edges();
  long long d = 0;
  for (long long x : e) d = std::gcd(d, x < 0 ? -x : x);
  HomologySummary h;
  h.betti0 = 1;
  if (d == 0) {
    h.betti1 = n;
    h.betti2 = 1;
  } else {
    h.betti1 = n - 1;
    h.betti2 = 0;
    if (d > 1) h.torsion1.push_back(Integer(d));
  }
  return h;
}

std::string_view verdict_name(Classification::Verdict v) noexcept {
  switch (v) {
    case Classification::Verdict::FinitelyUnsplittable: return "finitely-unsplittable";
    case Classification::Verdict::ExceptionalSphereTwoPoints: return "exceptional-sphere-two-points";
    case Classification::Verdict::SplittableFreeEdge: return "splittable-free-edge";
    case Classification::Verdict::OutsideTheoremNakedEdge: return "outside-theorem-naked-edge";
  }
  return "unknown";
}

Classification classify(const Presentation& p) {
  require_rose(p, "classify");
  const auto counts = occurrence_counts(p);
  const auto e = exponent_vector(p);
  Classification c;
  c.circles = p.target().num_edges();
  c.word_length = p.length();
  c.exponent_sum = std::accumulate(e.begin(), e.end(), 0LL);

  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] == 0) c.witness_edges.push_back(static_cast<int>(i));
  }
  if (!c.witness_edges.empty()) {
    c.verdict = Classification::Verdict::OutsideTheoremNakedEdge;
    return c;
  }
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] == 1) c.witness_edges.push_back(static_cast<int>(i));
  }
  if (!c.witness_edges.empty()) {
    c.verdict = Classification::Verdict::SplittableFreeEdge;
    return c;
  }
  c.verdict = (c.circles == 1 && c.word_length == 2 && c.exponent_sum == 0)
                  ? Classification::Verdict::ExceptionalSphereTwoPoints
                  : Classification::Verdict::FinitelyUnsplittable;
  return c;
}

std::string classification_reason(const Presentation& p, const Classification& c) {
  auto labels = [&] {
    std::string out;
    for (std::size_t i = 0; i < c.witness_edges.size(); ++i) {
      out += (i ? "," : "") + p.target().edges()[static_cast<std::size_t>(c.witness_edges[i])].label;
    }
    return out;
  };
  switch (c.verdict) {
    case Classification::Verdict::FinitelyUnsplittable: return "unexposed, not exceptional";
    case Classification::Verdict::ExceptionalSphereTwoPoints: return "unexposed, n=1, m=2, exponent sum 0";
    case Classification::Verdict::SplittableFreeEdge: return "free edge " + labels();
    case Classification::Verdict::OutsideTheoremNakedEdge: return "naked edge " + labels();
  }
  return {};
}

bool classification_evidence_holds(const Presentation& p, const Classification& c) {
  if (!p.target().is_rose()) return false;
  const auto counts = occurrence_counts(p);
  const auto e = exponent_vector(p);
  if (c.circles != p.target().num_edges() || c.word_length != p.length() ||
      c.exponent_sum != std::accumulate(e.begin(), e.end(), 0LL)) {
    return false;
  }
  auto edges_with = [&](int k) {
    std::vector<int> out;
    for (std::size_t i = 0; i < counts.size(); ++i) {
      if (counts[i] == k) out.push_back(static_cast<int>(i));
    }
    return out;
  };
  const auto naked = edges_with(0);
  const auto free = edges_with(1);
  switch (c.verdict) {
    case Classification::Verdict::OutsideTheoremNakedEdge:
      return !naked.empty() && c.witness_edges == naked;
    case Classification::Verdict::SplittableFreeEdge:
      return naked.empty() && !free.empty() && c.witness_edges == free;
    case Classification::Verdict::ExceptionalSphereTwoPoints:
      return naked.empty() && free.empty() && c.circles == 1 && c.word_length == 2 && c.exponent_sum == 0;
    case Classification::Verdict::FinitelyUnsplittable:
      return naked.empty() && free.empty() && !(c.circles == 1 && c.word_length == 2 && c.exponent_sum == 0);
  }
  return false;
}

int euler_characteristic_word(const Presentation& p) {
  return p.target().num_vertices() - p.target().num_edges() + 1;
}

}  // namespace hatsplit
