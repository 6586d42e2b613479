#pragma once

// Exhaustive enumeration of small topologies and a ring catalog sweep,
// searching the (ring × topology) grid for class-separating structures and
// reverse-inclusion counterexamples. Brute force over subset families is
// feasible up to 4 points (2^16 candidate families) and is preferred here
// for auditability.

#include "ringtop/theorems.hpp"

namespace ringtop {

inline constexpr int kMaxEnumerationPoints = 4;

/// Every topology on n labeled points ("x0".."x{n-1}"), each exactly once,
/// in canonical order. Throws InputError unless 1 <= n <= 4.
std::vector<Topology> enumerate_topologies(int n);
std::size_t count_topologies(int n);

/// Catalog rings of the given order: cyclic, direct products of cyclics, and
/// the bundled example34 ring at order 4. With brute_force (order <= 4), adds
/// every bilinear multiplication over each abelian group of that order,
/// validated and deduplicated by table identity.
std::vector<FiniteRing> ring_pool(int order, bool brute_force = false);

struct SearchGoal {
  enum class Kind { Separating, ConverseCounterexample, Census };

  Kind kind = Kind::Census;
  FamilyKind weaker = FamilyKind::Beta;    // Separating: class that must fail
  FamilyKind stronger = FamilyKind::EStar; // Separating: class that must hold
  std::string check_id;                    // ConverseCounterexample

  /// Requires a strict hierarchy direction among {open, beta, estar}.
  static SearchGoal separating(FamilyKind weaker, FamilyKind stronger);
  static SearchGoal converse_counterexample(std::string check_id);
  static SearchGoal census();

  /// CLI grammar: "separating:K1,K2" | "converse:ID" | "census".
  static SearchGoal parse(std::string_view text);

  std::string describe() const;
};

struct SearchOptions {
  int max_points = kMaxEnumerationPoints;
  int max_order = kMaxEnumerationPoints;
  bool brute_force_rings = false;
  DeltaClosureMode mode = DeltaClosureMode::Standard;
  unsigned threads = 0;  // 0 = hardware concurrency
};

struct SearchHit {
  TopoRingStructure structure;
  Classification classification;
  std::optional<CheckReport> report;  // converse-counterexample evidence
  bool operator==(const SearchHit&) const = default;
};

/// All structures matching the goal, in a deterministic order independent of
/// the thread count. Structures pair each pool ring with each enumerated
/// topology of the same carrier size, reinterpreted over the ring's labels.
std::vector<SearchHit> search(const SearchGoal& goal, const SearchOptions& options);

}  // namespace ringtop
