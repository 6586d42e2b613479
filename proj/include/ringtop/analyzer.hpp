#pragma once

// Classification of a (ring, topology) pair against the family-parameterized
// continuity conditions: for the chosen family F, addition, negation and
// multiplication must admit F-neighborhood witnesses inside every open
// target. F = open gives the classical topological ring, F = beta and
// F = estar the generalized classes.
//
// The witness search is pruned to inclusion-minimal family members at each
// anchor point: the set images are monotone in U and V, so any witness
// dominates a minimal one. Witnesses are canonical (first in ascending
// sweep order) and re-checkable against the raw, unpruned definition.

#include <array>
#include <span>

#include "ringtop/operators.hpp"
#include "ringtop/ring.hpp"

namespace ringtop {

struct TopoRingStructure {
  FiniteRing ring;
  Topology topology;

  /// Throws InputError unless ring and topology share the same carrier.
  static TopoRingStructure make(FiniteRing ring, Topology topology);

  const GroundSet& ground() const { return ring.ground(); }
  bool operator==(const TopoRingStructure&) const = default;
};

enum class CheckStatus { Pass, Fail, HypothesisNotSatisfied };
std::string_view to_string(CheckStatus status);

// Named quantifier instantiation demonstrating a failure (or, for existence
// checks, a success). Slots keep the original variable roles so a report can
// be replayed without re-running the search.
struct Witness {
  std::vector<std::pair<std::string, int>> points;
  std::vector<std::pair<std::string, Mask>> sets;

  std::optional<int> point(std::string_view name) const;
  std::optional<Mask> set(std::string_view name) const;
  bool operator==(const Witness&) const = default;
};

struct CheckReport {
  std::string id;
  CheckStatus status = CheckStatus::Pass;
  std::optional<Witness> witness;
  FamilyKind kind = FamilyKind::EStar;
  DeltaClosureMode mode = DeltaClosureMode::Standard;
  std::string variant;  // "", "as-stated", or "as-proved"
  std::string note;
  bool operator==(const CheckReport&) const = default;
};

enum class RingCondition { Addition, Negation, Multiplication };
std::string_view to_string(RingCondition condition);

CheckReport check_condition(const TopoRingStructure& s, const OperatorTable& ops,
                            FamilyKind kind, RingCondition condition);
CheckReport check_condition_add(const TopoRingStructure& s, FamilyKind kind,
                                DeltaClosureMode mode = DeltaClosureMode::Standard);
CheckReport check_condition_neg(const TopoRingStructure& s, FamilyKind kind,
                                DeltaClosureMode mode = DeltaClosureMode::Standard);
CheckReport check_condition_mul(const TopoRingStructure& s, FamilyKind kind,
                                DeltaClosureMode mode = DeltaClosureMode::Standard);

struct KindClassification {
  FamilyKind kind = FamilyKind::Open;
  bool satisfied = false;
  std::array<CheckReport, 3> conditions;  // addition, negation, multiplication
  bool operator==(const KindClassification&) const = default;
};

struct Classification {
  DeltaClosureMode mode = DeltaClosureMode::Standard;
  std::vector<KindClassification> kinds;  // open, beta, estar

  bool satisfies(FamilyKind kind) const;
  const KindClassification& result(FamilyKind kind) const;
  bool operator==(const Classification&) const = default;
};

Classification classify(const TopoRingStructure& s,
                        DeltaClosureMode mode = DeltaClosureMode::Standard);
Classification classify(const TopoRingStructure& s, const OperatorTable& ops);

/// Replays a recorded condition failure against the raw definition: scans the
/// full family with no pruning and confirms that no admissible witness pair
/// exists inside the recorded open set. Returns true when the failure is
/// genuine.
bool replay_condition_failure(const TopoRingStructure& s, FamilyKind kind,
                              RingCondition condition, const Witness& witness,
                              DeltaClosureMode mode = DeltaClosureMode::Standard);

// Function plumbing: maps are element-index tables over the source carrier.
Mask image(std::span<const int> f, Mask a);
Mask preimage(std::span<const int> f, Mask b, int source_size);

/// Preimage formulation: every open of the target pulls back into the
/// source's kind-family.
bool is_gen_continuous_preimage(std::span<const int> f, const OperatorTable& source,
                                const Topology& target, FamilyKind kind);
bool is_gen_continuous_preimage(std::span<const int> f, const Topology& source,
                                const Topology& target, FamilyKind kind,
                                DeltaClosureMode mode = DeltaClosureMode::Standard);

/// Pointwise formulation: every point has a kind-family neighborhood mapping
/// into each open neighborhood of its image.
bool is_gen_continuous_pointwise(std::span<const int> f, const OperatorTable& source,
                                 const Topology& target, FamilyKind kind);
bool is_gen_continuous_pointwise(std::span<const int> f, const Topology& source,
                                 const Topology& target, FamilyKind kind,
                                 DeltaClosureMode mode = DeltaClosureMode::Standard);

bool is_continuous_at(std::span<const int> f, const Topology& source,
                      const Topology& target, int x);

}  // namespace ringtop
