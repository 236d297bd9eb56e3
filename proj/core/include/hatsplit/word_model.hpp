#pragma once

// Taut one-relator presentation complexes as cyclic words over a target graph.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hatsplit/homology.hpp"

namespace hatsplit {

struct TargetEdge {
  std::string label;
  int tail = 0;
  int head = 0;
  bool operator==(const TargetEdge&) const = default;
};

// A finite graph the disk boundary is attached to. The rose (one vertex, n
// loops) is the case the classification theorem speaks about; general targets
// exist for two-singular-value complexes such as the Jester's hat.
class TargetGraph {
 public:
  TargetGraph(std::vector<std::string> vertices, std::vector<TargetEdge> edges, int wedge);

  // Rose on the given edge labels, kept in the order supplied.
  static TargetGraph rose(std::vector<std::string> labels);

  [[nodiscard]] const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  [[nodiscard]] const std::vector<TargetEdge>& edges() const noexcept { return edges_; }
  [[nodiscard]] int wedge() const noexcept { return wedge_; }
  [[nodiscard]] int num_vertices() const noexcept { return static_cast<int>(vertices_.size()); }
  [[nodiscard]] int num_edges() const noexcept { return static_cast<int>(edges_.size()); }
  [[nodiscard]] bool is_rose() const noexcept;
  [[nodiscard]] std::optional<int> find_edge(std::string_view label) const;

  bool operator==(const TargetGraph&) const = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<TargetEdge> edges_;
  int wedge_ = 0;
};

enum class Direction : std::uint8_t { Forward = 0, Reverse = 1 };

// Ordered by (edge, direction) with forward before reverse, which is the
// order used to pick the canonical rotation.
struct OrientedLetter {
  int edge = 0;
  Direction direction = Direction::Forward;

  [[nodiscard]] OrientedLetter inverse() const noexcept {
    return {edge, direction == Direction::Forward ? Direction::Reverse : Direction::Forward};
  }
  auto operator<=>(const OrientedLetter&) const = default;
};

// Nonempty cyclic word, stored as its lexicographically least rotation.
class AttachingWord {
 public:
  explicit AttachingWord(std::vector<OrientedLetter> letters);

  [[nodiscard]] const std::vector<OrientedLetter>& letters() const noexcept { return letters_; }
  [[nodiscard]] int length() const noexcept { return static_cast<int>(letters_.size()); }
  [[nodiscard]] const OrientedLetter& operator[](int i) const { return letters_[static_cast<std::size_t>(i)]; }

  // The boundary read with the opposite orientation.
  [[nodiscard]] AttachingWord inverted() const;

  bool operator==(const AttachingWord&) const = default;

 private:
  std::vector<OrientedLetter> letters_;
};

class Presentation {
 public:
  Presentation(TargetGraph target, AttachingWord word);

  [[nodiscard]] const TargetGraph& target() const noexcept { return target_; }
  [[nodiscard]] const AttachingWord& word() const noexcept { return word_; }
  // Number of letters, i.e. |f^-1(v)| for a rose.
  [[nodiscard]] int length() const noexcept { return word_.length(); }

  [[nodiscard]] std::string to_string() const;

  bool operator==(const Presentation&) const = default;

 private:
  TargetGraph target_;
  AttachingWord word_;
};

// Lowercase letters traverse an edge forward, uppercase in reverse; whitespace
// is ignored. Without a target the rose on the letters used is inferred.
Presentation parse_word(std::string_view text, const std::optional<TargetGraph>& target = std::nullopt);

struct EdgeStatus {
  enum class Kind { Naked, Free, Unexposed };
  Kind kind = Kind::Naked;
  int count = 0;
  bool operator==(const EdgeStatus&) const = default;
};

// Indexed by target edge.
std::vector<int> occurrence_counts(const Presentation& p);
std::vector<EdgeStatus> edge_status(const Presentation& p);
bool is_unexposed(const Presentation& p);
std::vector<long long> exponent_vector(const Presentation& p);

// H1 of the rose complex read off the relator's abelianization.
HomologySummary abelianized_h1(const Presentation& p);

struct Classification {
  enum class Verdict {
    FinitelyUnsplittable,
    ExceptionalSphereTwoPoints,
    SplittableFreeEdge,
    OutsideTheoremNakedEdge,
  };

  Verdict verdict = Verdict::FinitelyUnsplittable;
  // Naked edges for OutsideTheoremNakedEdge, free edges for SplittableFreeEdge.
  std::vector<int> witness_edges;
  int circles = 0;       // n
  int word_length = 0;   // m
  long long exponent_sum = 0;

  bool operator==(const Classification&) const = default;
};

std::string_view verdict_name(Classification::Verdict v) noexcept;
std::string classification_reason(const Presentation& p, const Classification& c);

Classification classify(const Presentation& p);

// Re-derives the verdict preconditions from the word alone.
bool classification_evidence_holds(const Presentation& p, const Classification& c);

// |V(J)| - |E(J)| + 1, the cell count of the presentation complex.
int euler_characteristic_word(const Presentation& p);

}  // namespace hatsplit
