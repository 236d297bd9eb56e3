#pragma once

// Covers of a complex by two or three proper subcomplexes with a homological
// or collapsibility predicate, with independently checkable certificates.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hatsplit/collapse.hpp"
#include "hatsplit/complex.hpp"
#include "hatsplit/homology.hpp"
#include "hatsplit/multigraph.hpp"

namespace hatsplit {

enum class Predicate { FiniteH1, TrivialH1, Collapsible };

std::string_view predicate_name(Predicate p) noexcept;  // finite-h1, trivial-h1, collapsible
std::optional<Predicate> parse_predicate(std::string_view name);

struct CoverQuery {
  int pieces = 2;
  Predicate predicate = Predicate::FiniteH1;
  // Only with pieces == 2.
  std::optional<Predicate> intersection;
  // Barycentric subdivision rounds tried after the input itself fails.
  int max_subdiv = 0;
  std::uint64_t seed = 0;
  int threads = 1;
  // Complexes with more maximal simplices than this are searched heuristically.
  int exhaustive_limit = 25;
  // Cap on candidate pieces examined in the pair and triple scans.
  std::uint64_t budget = 1ULL << 34;
  // Randomized growth attempts per subdivision round in heuristic mode.
  int heuristic_attempts = 4000;
};

void validate(const CoverQuery& q);

// Maximal simplices of c. Every subcomplex the search considers is the
// closure of a subset of these, encoded as a bit mask over this list.
struct Universe {
  std::vector<SimplexRef> generators;  // triangles, then leftover edges, then isolated vertices

  static Universe of(const SimplicialComplex& c);
  [[nodiscard]] int size() const noexcept { return static_cast<int>(generators.size()); }
  [[nodiscard]] Subcomplex closure_of(const SimplicialComplex& c, std::uint64_t mask) const;
  [[nodiscard]] Generators generators_of(std::uint64_t mask) const;
};

// Evidence that one subcomplex satisfies a predicate.
struct PieceEvidence {
  std::optional<HomologySummary> homology;
  std::optional<CollapseSequence> collapse;
  bool operator==(const PieceEvidence&) const = default;
};

bool satisfies(const SimplicialComplex& c, const Subcomplex& s, Predicate p);
// Throws InvariantViolation when s does not satisfy p.
PieceEvidence evidence_for(const SimplicialComplex& c, const Subcomplex& s, Predicate p);

class GoodSubcomplexIndex {
 public:
  GoodSubcomplexIndex(const SimplicialComplex& c, Universe u, Predicate p, std::vector<std::uint64_t> masks);

  [[nodiscard]] const Universe& universe() const noexcept { return universe_; }
  [[nodiscard]] Predicate predicate() const noexcept { return predicate_; }
  [[nodiscard]] std::uint64_t full_mask() const noexcept { return full_; }
  // Proper, nonempty, predicate-satisfying generator masks in ascending order.
  [[nodiscard]] const std::vector<std::uint64_t>& masks() const noexcept { return masks_; }
  [[nodiscard]] std::size_t size() const noexcept { return masks_.size(); }
  [[nodiscard]] bool contains(std::uint64_t mask) const;
  // Leftover-simplex generators (edges and vertices outside triangles) in entry i.
  [[nodiscard]] Generators generators(std::size_t i) const { return universe_.generators_of(masks_[i]); }
  // Computed on request from the stored complex.
  [[nodiscard]] PieceEvidence evidence(std::size_t i) const;

 private:
  const SimplicialComplex* complex_;
  Universe universe_;
  Predicate predicate_;
  std::uint64_t full_ = 0;
  std::vector<std::uint64_t> masks_;
};

// Every proper nonempty closure of a generator subset satisfying p. Throws
// BudgetExceeded when 2^generators exceeds budget or 2^31.
GoodSubcomplexIndex enumerate_good(const SimplicialComplex& c, Predicate p, std::uint64_t budget = 1ULL << 31,
                                   int threads = 1);

struct SplitCertificate {
  // Number of barycentric subdivisions applied to the input before the pieces
  // were chosen; piece indices refer to that subdivision.
  int subdivision_rounds = 0;
  Predicate predicate = Predicate::FiniteH1;
  std::optional<Predicate> intersection;
  // Each piece is the closure of its generators.
  std::vector<Generators> pieces;
  std::vector<PieceEvidence> evidence;
  std::optional<PieceEvidence> intersection_evidence;
};

struct SearchReport {
  bool exhausted = false;
  std::string mode;  // "exhaustive" or "heuristic"
  int generators = 0;
  int subdivision_rounds = 0;  // rounds searched
  std::uint64_t candidates_examined = 0;
  std::uint64_t good_subcomplexes = 0;
  std::int64_t wall_time_us = 0;
  std::uint64_t seed = 0;
};

struct CoverResult {
  std::optional<SplitCertificate> certificate;
  SearchReport report;
};

// Exhaustive over generator subsets when the complex has at most
// exhaustive_limit maximal simplices; otherwise a seeded heuristic whose
// negative answer carries exhausted = false. Positive answers are verified
// before they are returned.
CoverResult find_cover(const SimplicialComplex& c, const CoverQuery& q);

// Recomputes closures, coverage, properness and every predicate. Throws
// DanglingReference for simplex indices outside the (subdivided) complex.
bool verify_certificate(const SimplicialComplex& c, const SplitCertificate& cert);

// The complex after `rounds` barycentric subdivisions.
SimplicialComplex subdivide(const SimplicialComplex& c, int rounds);

// Reference answer by trying every assignment of each maximal simplex to A,
// B, or both (3^n). Only for tiny inputs; throws BudgetExceeded above 16 generators.
bool brute_force_two_cover_exists(const SimplicialComplex& c, Predicate p);

// Randomized positive search used beyond the exhaustive limit.
std::optional<SplitCertificate> heuristic_cover(const SimplicialComplex& c, const CoverQuery& q, int round,
                                                std::uint64_t& examined);

// --- tree of disks ------------------------------------------------------------

struct TreeOfDisks {
  // Vertices "E<i>" for components of A n J, then "F<j>" for components of
  // A minus the marked simplices. One edge per component of cl(F) n J.
  Multigraph graph;
  bool is_tree = false;
  int j_components = 0;
  int disk_components = 0;
};

// Throws MissingMarks if c carries no J marks.
TreeOfDisks tree_of_disks(const SimplicialComplex& c, const Subcomplex& a);

}  // namespace hatsplit
