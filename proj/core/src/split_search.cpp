#include "hatsplit/split_search.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <thread>

#include "hatsplit/errors.hpp"

namespace hatsplit {

std::string_view predicate_name(Predicate p) noexcept {
  switch (p) {
    case Predicate::FiniteH1: return "finite-h1";
    case Predicate::TrivialH1: return "trivial-h1";
    case Predicate::Collapsible: return "collapsible";
  }
  return "unknown";
}

std::optional<Predicate> parse_predicate(std::string_view name) {
  if (name == "finite-h1") return Predicate::FiniteH1;
  if (name == "trivial-h1") return Predicate::TrivialH1;
  if (name == "collapsible") return Predicate::Collapsible;
  return std::nullopt;
}

void validate(const CoverQuery& q) {
  if (q.pieces != 2 && q.pieces != 3) throw Error(ErrorCode::InvalidQuery, "pieces must be 2 or 3");
  if (q.intersection && q.pieces != 2) throw Error(ErrorCode::InvalidQuery, "an intersection predicate needs exactly 2 pieces");
  if (q.max_subdiv < 0) throw Error(ErrorCode::InvalidQuery, "max-subdiv must be nonnegative");
  if (q.threads < 1) throw Error(ErrorCode::InvalidQuery, "threads must be positive");
  if (q.exhaustive_limit < 0 || q.exhaustive_limit > 31) throw Error(ErrorCode::InvalidQuery, "exhaustive limit must be in 0..31");
}

Universe Universe::of(const SimplicialComplex& c) {
  Universe u;
  for (int t = 0; t < c.num_triangles(); ++t) u.generators.push_back({2, t});
  for (int e : c.leftover_edges()) u.generators.push_back({1, e});
  for (int v : c.isolated_vertices()) u.generators.push_back({0, v});
  return u;
}

Generators Universe::generators_of(std::uint64_t mask) const {
  Generators g;
  for (int i = 0; i < size(); ++i) {
    if (!((mask >> i) & 1U)) continue;
    const auto& s = generators[static_cast<std::size_t>(i)];
    (s.dim == 2 ? g.triangles : s.dim == 1 ? g.edges : g.vertices).push_back(s.index);
  }
  return g;
}

Subcomplex Universe::closure_of(const SimplicialComplex& c, std::uint64_t mask) const {
  const Generators g = generators_of(mask);
  return closure(c, g.triangles, g.edges, g.vertices);
}

bool satisfies(const SimplicialComplex& c, const Subcomplex& s, Predicate p) {
  if (s.simplex_count() == 0) return false;
  switch (p) {
    case Predicate::FiniteH1: return homology(c, s).h1_finite();
    case Predicate::TrivialH1: return homology(c, s).h1_trivial();
    case Predicate::Collapsible: return PeelingTester(c).collapsible(s);
  }
  return false;
}

PieceEvidence evidence_for(const SimplicialComplex& c, const Subcomplex& s, Predicate p) {
  PieceEvidence ev;
  if (p == Predicate::Collapsible) {
    ev.collapse = PeelingTester(c).sequence(s);
    if (!ev.collapse) throw InvariantViolation("evidence requested for a non-collapsible piece");
  } else {
    ev.homology = homology(c, s);
    if (!(p == Predicate::FiniteH1 ? ev.homology->h1_finite() : ev.homology->h1_trivial())) {
      throw InvariantViolation("evidence requested for a piece failing its homology predicate");
    }
  }
  return ev;
}

// --- enumeration ----------------------------------------------------------------

namespace {

// Evaluates the predicate on closures of generator masks, reusing scratch space.
class MaskEvaluator {
 public:
  MaskEvaluator(const SimplicialComplex& c, const Universe& u, Predicate p)
      : c_(c), u_(u), p_(p), tester_(c), scratch_(Subcomplex::none(c)) {}

  bool operator()(std::uint64_t mask) {
    std::fill(scratch_.vertices.begin(), scratch_.vertices.end(), 0);
    std::fill(scratch_.edges.begin(), scratch_.edges.end(), 0);
    std::fill(scratch_.triangles.begin(), scratch_.triangles.end(), 0);
    int nv = 0, ne = 0, nt = 0;
    auto add_vertex = [&](Vertex v) {
      auto& slot = scratch_.vertices[static_cast<std::size_t>(v)];
      nv += slot ? 0 : 1;
      slot = 1;
    };
    auto add_edge = [&](int e) {
      auto& slot = scratch_.edges[static_cast<std::size_t>(e)];
      if (slot) return;
      slot = 1;
      ++ne;
      const Edge& ed = c_.edges()[static_cast<std::size_t>(e)];
      add_vertex(ed.a);
      add_vertex(ed.b);
    };
    for (std::uint64_t m = mask; m; m &= m - 1) {
      const auto& g = u_.generators[static_cast<std::size_t>(std::countr_zero(m))];
      if (g.dim == 2) {
        scratch_.triangles[static_cast<std::size_t>(g.index)] = 1;
        ++nt;
        for (int e : c_.triangle_edges(g.index)) add_edge(e);
      } else if (g.dim == 1) {
        add_edge(g.index);
      } else {
        add_vertex(g.index);
      }
    }
    if (nv == 0) return false;
    switch (p_) {
      case Predicate::Collapsible:
        if (nv - ne + nt != 1) return false;
        return tester_.collapsible(scratch_);
      case Predicate::FiniteH1: return homology(c_, scratch_).h1_finite();
      case Predicate::TrivialH1: return homology(c_, scratch_).h1_trivial();
    }
    return false;
  }

 private:
  const SimplicialComplex& c_;
  const Universe& u_;
  Predicate p_;
  PeelingTester tester_;
  Subcomplex scratch_;
};

constexpr int kMaxExhaustiveBits = 31;

std::vector<std::uint8_t> good_table(const SimplicialComplex& c, const Universe& u, Predicate p, int threads) {
  const int n = u.size();
  const std::uint64_t total = 1ULL << n;
  const std::uint64_t full = total - 1;
  std::vector<std::uint8_t> good(total, 0);
  const auto workers = static_cast<std::uint64_t>(std::max(1, threads));
  auto work = [&](std::uint64_t lo, std::uint64_t hi) {
    MaskEvaluator eval(c, u, p);
    for (std::uint64_t m = lo; m < hi; ++m) {
      if (m != 0 && m != full) good[m] = eval(m) ? 1 : 0;
    }
  };
  if (workers == 1 || total < 4096) {
    work(0, total);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (total + workers - 1) / workers;
    for (std::uint64_t w = 0; w < workers; ++w) {
      pool.emplace_back(work, std::min(total, w * chunk), std::min(total, (w + 1) * chunk));
    }
    for (auto& t : pool) t.join();
  }
  return good;
}

void check_enumerable(int n, std::uint64_t budget) {
  if (n > kMaxExhaustiveBits || (1ULL << n) > budget) {
    throw Error(ErrorCode::BudgetExceeded, std::to_string(n) + " maximal simplices exceed the exhaustive enumeration budget");
  }
}

}  // namespace

GoodSubcomplexIndex::GoodSubcomplexIndex(const SimplicialComplex& c, Universe u, Predicate p, std::vector<std::uint64_t> masks)
    : complex_(&c), universe_(std::move(u)), predicate_(p), masks_(std::move(masks)) {
  const int n = universe_.size();
  full_ = n >= 64 ? ~0ULL : (1ULL << n) - 1;
}

bool GoodSubcomplexIndex::contains(std::uint64_t mask) const { return std::binary_search(masks_.begin(), masks_.end(), mask); }

PieceEvidence GoodSubcomplexIndex::evidence(std::size_t i) const {
  return evidence_for(*complex_, universe_.closure_of(*complex_, masks_[i]), predicate_);
}

GoodSubcomplexIndex enumerate_good(const SimplicialComplex& c, Predicate p, std::uint64_t budget, int threads) {
  Universe u = Universe::of(c);
  check_enumerable(u.size(), budget);
  const auto good = good_table(c, u, p, threads);
  std::vector<std::uint64_t> masks;
  for (std::uint64_t m = 0; m < good.size(); ++m) {
    if (good[m]) masks.push_back(m);
  }
  return GoodSubcomplexIndex(c, std::move(u), p, std::move(masks));
}

// --- exhaustive cover search ------------------------------------------------------

namespace {

struct MaskCover {
  std::vector<std::uint64_t> pieces;
};

// sup[M] = some good mask contains M.
std::vector<std::uint8_t> superset_table(const std::vector<std::uint8_t>& good, int n) {
  std::vector<std::uint8_t> sup = good;
  for (int b = 0; b < n; ++b) {
    const std::uint64_t bit = 1ULL << b;
    for (std::uint64_t m = 0; m < sup.size(); ++m) {
      if (!(m & bit) && sup[m | bit]) sup[m] = 1;
    }
  }
  return sup;
}

// Smallest-step descent from a mask with a good superset to a good superset
// that only adds bits from `pool`.
std::uint64_t descend(const std::vector<std::uint8_t>& good, const std::vector<std::uint8_t>& sup, std::uint64_t need,
                      std::uint64_t pool) {
  std::uint64_t b = need;
  while (!good[b]) {
    bool moved = false;
    for (std::uint64_t rest = pool & ~b; rest; rest &= rest - 1) {
      const std::uint64_t bit = rest & (~rest + 1);
      if (sup[b | bit]) {
        b |= bit;
        moved = true;
        break;
      }
    }
    if (!moved) throw InvariantViolation("superset table inconsistent");
  }
  return b;
}

struct ExhaustiveOutcome {
  std::optional<MaskCover> cover;
  bool complete = true;
  std::uint64_t examined = 0;
  std::uint64_t good_count = 0;
};

ExhaustiveOutcome exhaustive_cover(const SimplicialComplex& c, const Universe& u, const CoverQuery& q) {
  const int n = u.size();
  const std::uint64_t full = (1ULL << n) - 1;
  ExhaustiveOutcome out;
  const auto good = good_table(c, u, q.predicate, q.threads);
  std::vector<std::uint64_t> list;
  for (std::uint64_t m = 0; m < good.size(); ++m) {
    if (good[m]) list.push_back(m);
  }
  out.good_count = list.size();
  const auto sup = superset_table(good, n);

  if (q.pieces == 2 && !q.intersection) {
    for (std::uint64_t a : list) {
      ++out.examined;
      const std::uint64_t need = full & ~a;
      if (!sup[need]) continue;
      out.cover = MaskCover{{a, descend(good, sup, need, a)}};
      return out;
    }
    return out;
  }

  if (q.pieces == 2) {
    auto meets = [&](std::uint64_t a, std::uint64_t b) {
      ++out.examined;
      const Subcomplex both = intersect(u.closure_of(c, a), u.closure_of(c, b));
      return satisfies(c, both, *q.intersection);
    };
    // Partitions first, then pieces that overlap in triangles.
    for (std::uint64_t a : list) {
      const std::uint64_t b = full & ~a;
      if (a < b && good[b] && meets(a, b)) {
        out.cover = MaskCover{{a, b}};
        return out;
      }
    }
    for (std::uint64_t a : list) {
      const std::uint64_t need = full & ~a;
      if (!sup[need]) continue;
      for (std::uint64_t x = a; x; x = (x - 1) & a) {
        const std::uint64_t b = need | x;
        if (b == full || !good[b]) continue;
        if (out.examined >= q.budget) {
          out.complete = false;
          return out;
        }
        if (meets(a, b)) {
          out.cover = MaskCover{{a, b}};
          return out;
        }
      }
    }
    return out;
  }

  // Three pieces: A holds generator 0, B holds the lowest generator A misses.
  std::vector<std::vector<std::uint64_t>> with_bit(static_cast<std::size_t>(n));
  for (std::uint64_t m : list) {
    for (std::uint64_t r = m; r; r &= r - 1) with_bit[static_cast<std::size_t>(std::countr_zero(r))].push_back(m);
  }
  for (std::uint64_t a : list) {
    if (!(a & 1U)) continue;
    const std::uint64_t need1 = full & ~a;
    const int b1 = std::countr_zero(need1);
    for (std::uint64_t b : with_bit[static_cast<std::size_t>(b1)]) {
      if (++out.examined > q.budget) {
        out.complete = false;
        return out;
      }
      const std::uint64_t need2 = need1 & ~b;
      if (need2 == 0) {
        // Already a two-piece cover; any third good piece completes it.
        for (std::uint64_t cpiece : list) {
          if (cpiece != a && cpiece != b) {
            out.cover = MaskCover{{a, b, cpiece}};
            return out;
          }
        }
        continue;
      }
      if (!sup[need2]) continue;
      out.cover = MaskCover{{a, b, descend(good, sup, need2, full & ~need2)}};
      return out;
    }
  }
  return out;
}

SplitCertificate certificate_from_masks(const SimplicialComplex& c, const Universe& u, const CoverQuery& q, int round,
                                        const MaskCover& cover) {
  SplitCertificate cert;
  cert.subdivision_rounds = round;
  cert.predicate = q.predicate;
  cert.intersection = q.intersection;
  std::vector<Subcomplex> closures;
  for (std::uint64_t m : cover.pieces) {
    cert.pieces.push_back(u.generators_of(m));
    closures.push_back(u.closure_of(c, m));
    cert.evidence.push_back(evidence_for(c, closures.back(), q.predicate));
  }
  if (q.intersection) cert.intersection_evidence = evidence_for(c, intersect(closures[0], closures[1]), *q.intersection);
  return cert;
}

}  // namespace

SimplicialComplex subdivide(const SimplicialComplex& c, int rounds) {
  SimplicialComplex out = c;
  for (int r = 0; r < rounds; ++r) out = barycentric_subdivision(out).complex;
  return out;
}

CoverResult find_cover(const SimplicialComplex& c, const CoverQuery& q) {
  validate(q);
  const auto started = std::chrono::steady_clock::now();
  CoverResult result;
  result.report.seed = q.seed;
  result.report.exhausted = true;
  SimplicialComplex current = c;
  for (int round = 0; round <= q.max_subdiv; ++round) {
    if (round > 0) current = barycentric_subdivision(current).complex;
    const Universe u = Universe::of(current);
    result.report.subdivision_rounds = round;
    result.report.generators = u.size();
    std::optional<SplitCertificate> cert;
    if (u.size() <= q.exhaustive_limit && (1ULL << u.size()) <= q.budget) {
      result.report.mode = "exhaustive";
      const auto outcome = exhaustive_cover(current, u, q);
      result.report.candidates_examined += outcome.examined;
      result.report.good_subcomplexes += outcome.good_count;
      if (!outcome.complete) result.report.exhausted = false;
      if (outcome.cover) cert = certificate_from_masks(current, u, q, round, *outcome.cover);
    } else {
      result.report.mode = "heuristic";
      result.report.exhausted = false;
      std::uint64_t examined = 0;
      cert = heuristic_cover(current, q, round, examined);
      result.report.candidates_examined += examined;
    }
    if (cert) {
      if (!verify_certificate(c, *cert)) throw InvariantViolation("search produced a certificate that does not verify");
      result.certificate = std::move(cert);
      break;
    }
  }
  result.report.wall_time_us =
      std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - started).count();
  return result;
}

// --- verification ---------------------------------------------------------------

namespace {

bool check_evidence(const SimplicialComplex& c, const Subcomplex& s, Predicate p, const PieceEvidence& ev) {
  if (s.simplex_count() == 0) return false;
  if (p == Predicate::Collapsible) return ev.collapse && sequence_reaches_point(c, s, *ev.collapse);
  const HomologySummary h = homology(c, s);
  if (ev.homology && *ev.homology != h) return false;
  return p == Predicate::FiniteH1 ? h.h1_finite() : h.h1_trivial();
}

void check_refs(const SimplicialComplex& c, const Generators& g) {
  auto bad = [](int i, int n) { return i < 0 || i >= n; };
  for (int t : g.triangles) {
    if (bad(t, c.num_triangles())) throw Error(ErrorCode::DanglingReference, "triangle " + std::to_string(t));
  }
  for (int e : g.edges) {
    if (bad(e, c.num_edges())) throw Error(ErrorCode::DanglingReference, "edge " + std::to_string(e));
  }
  for (int v : g.vertices) {
    if (bad(v, c.num_vertices())) throw Error(ErrorCode::DanglingReference, "vertex " + std::to_string(v));
  }
}

}  // namespace

bool verify_certificate(const SimplicialComplex& input, const SplitCertificate& cert) {
  if (cert.subdivision_rounds < 0) return false;
  const SimplicialComplex c = subdivide(input, cert.subdivision_rounds);
  if (cert.pieces.size() < 2 || cert.pieces.size() > 3 || cert.evidence.size() != cert.pieces.size()) return false;
  if (cert.intersection && cert.pieces.size() != 2) return false;
  Subcomplex covered = Subcomplex::none(c);
  std::vector<Subcomplex> closures;
  for (std::size_t i = 0; i < cert.pieces.size(); ++i) {
    check_refs(c, cert.pieces[i]);
    Subcomplex s = closure(c, cert.pieces[i].triangles, cert.pieces[i].edges, cert.pieces[i].vertices);
    if (!is_proper(c, s)) return false;
    if (!check_evidence(c, s, cert.predicate, cert.evidence[i])) return false;
    covered = unite(covered, s);
    closures.push_back(std::move(s));
  }
  if (covered != Subcomplex::all(c)) return false;
  if (cert.intersection) {
    if (!cert.intersection_evidence) return false;
    if (!check_evidence(c, intersect(closures[0], closures[1]), *cert.intersection, *cert.intersection_evidence)) {
      return false;
    }
  }
  return true;
}

bool brute_force_two_cover_exists(const SimplicialComplex& c, Predicate p) {
  const Universe u = Universe::of(c);
  const int n = u.size();
  if (n > 16) throw Error(ErrorCode::BudgetExceeded, "3^n oracle limited to 16 generators");
  const std::uint64_t full = (1ULL << n) - 1;
  std::uint64_t assignments = 1;
  for (int i = 0; i < n; ++i) assignments *= 3;
  // Memoized per closure so the 3^n loop stays cheap.
  std::vector<std::int8_t> memo(static_cast<std::size_t>(full) + 1, -1);
  auto ok = [&](std::uint64_t m) {
    auto& slot = memo[static_cast<std::size_t>(m)];
    if (slot < 0) slot = satisfies(c, u.closure_of(c, m), p) ? 1 : 0;
    return slot == 1;
  };
  for (std::uint64_t code = 0; code < assignments; ++code) {
    std::uint64_t a = 0, b = 0, x = code;
    for (int i = 0; i < n; ++i, x /= 3) {
      const auto d = x % 3;  // 0: A, 1: B, 2: both
      if (d != 1) a |= 1ULL << i;
      if (d != 0) b |= 1ULL << i;
    }
    if (a == full || b == full || a == 0 || b == 0) continue;
    if (ok(a) && ok(b)) return true;
  }
  return false;
}

}  // namespace hatsplit
