#pragma once

// The generalized open-set families over a finite topology: regular
// open/closed, δ-interior and δ-closure, and the alpha/semi/pre/beta/e*
// families, together with family-generic interior and closure operators.
//
// OperatorTable memoizes interior/closure/δ tables over all 2^n subsets and
// computes each family by a full predicate sweep; correctness over speed at
// this scale.

#include <array>
#include <memory>
#include <mutex>
#include <optional>

#include "ringtop/space.hpp"

namespace ringtop {

enum class FamilyKind {
  Open,
  Closed,
  RegularOpen,
  RegularClosed,
  DeltaOpen,
  DeltaClosed,
  Alpha,
  Semi,
  Pre,
  Beta,
  EStar,
  EStarClosed,
};

inline constexpr std::array<FamilyKind, 12> kAllFamilyKinds{
    FamilyKind::Open,      FamilyKind::Closed,      FamilyKind::RegularOpen,
    FamilyKind::RegularClosed, FamilyKind::DeltaOpen, FamilyKind::DeltaClosed,
    FamilyKind::Alpha,     FamilyKind::Semi,        FamilyKind::Pre,
    FamilyKind::Beta,      FamilyKind::EStar,       FamilyKind::EStarClosed,
};

std::string_view to_string(FamilyKind kind);
std::optional<FamilyKind> parse_family_kind(std::string_view text);

// Two computation routes for δ-closure:
//   Standard     — closure in the semiregularization: the intersection of
//                  all δ-closed supersets (δ-open = union of regular opens).
//   PaperLiteral — the intersection of all regular-closed supersets.
// Every δ-closed set is an intersection of regular-closed sets, so the two
// routes compute the same operator; keeping both gives a built-in
// cross-check, and reports echo the active route.
enum class DeltaClosureMode { Standard, PaperLiteral };

std::string_view to_string(DeltaClosureMode mode);
std::optional<DeltaClosureMode> parse_delta_mode(std::string_view text);

class OperatorTable {
 public:
  explicit OperatorTable(Topology topology,
                         DeltaClosureMode mode = DeltaClosureMode::Standard);

  const Topology& topology() const { return topology_; }
  DeltaClosureMode delta_mode() const { return mode_; }
  int carrier_size() const { return topology_.carrier_size(); }
  Mask full() const { return topology_.full(); }

  Mask interior(Mask a) const { return interior_[a]; }
  Mask closure(Mask a) const { return closure_[a]; }
  Mask delta_interior(Mask a) const { return delta_interior_[a]; }
  Mask delta_closure(Mask a) const { return delta_closure(a, mode_); }
  Mask delta_closure(Mask a, DeltaClosureMode mode) const;

  bool is_open(Mask a) const { return open_bitmap_[a] != 0; }
  bool is_regular_open(Mask a) const { return a == interior_[closure_[a]]; }
  bool is_regular_closed(Mask a) const { return a == closure_[interior_[a]]; }

  bool in_family(FamilyKind kind, Mask a) const;

  /// All subsets satisfying the kind's predicate, ascending by mask.
  const std::vector<Mask>& family(FamilyKind kind) const;

  /// Inclusion-minimal family members containing the given point. Sound and
  /// complete for witness search in antitone conditions: any member through
  /// which a condition holds dominates a minimal member that also works.
  const std::vector<Mask>& minimal_members_at(FamilyKind kind, int point) const;

  /// Union of kind-family members contained in a.
  Mask gen_interior(FamilyKind kind, Mask a) const;

  /// Intersection of kind-closed sets (complements of family members)
  /// containing a.
  Mask gen_closure(FamilyKind kind, Mask a) const;

 private:
  struct FamilyData {
    std::vector<char> bitmap;                    // indexed by mask
    std::vector<Mask> members;                   // ascending
    std::vector<std::vector<Mask>> minimal_at;   // per point, filled lazily
    bool minimal_ready = false;
  };

  bool family_predicate(FamilyKind kind, Mask a) const;
  const FamilyData& family_data(FamilyKind kind) const;

  Topology topology_;
  DeltaClosureMode mode_;
  std::vector<char> open_bitmap_;
  std::vector<Mask> interior_;
  std::vector<Mask> closure_;
  std::vector<Mask> delta_interior_;
  std::vector<Mask> delta_closure_standard_;
  std::vector<Mask> delta_closure_literal_;

  mutable std::mutex cache_mutex_;
  mutable std::array<std::unique_ptr<FamilyData>, kAllFamilyKinds.size()> families_;
};

// Single-shot conveniences; each builds a fresh table, so prefer holding an
// OperatorTable in loops.
bool is_regular_open(const Topology& topology, Mask a);
std::vector<Mask> regular_open_family(const Topology& topology);
std::vector<Mask> regular_closed_family(const Topology& topology);
Mask delta_interior(const Topology& topology, Mask a);
Mask delta_closure(const Topology& topology, Mask a,
                   DeltaClosureMode mode = DeltaClosureMode::Standard);
std::vector<Mask> family(const Topology& topology, FamilyKind kind,
                         DeltaClosureMode mode = DeltaClosureMode::Standard);
Mask gen_interior(const Topology& topology, FamilyKind kind, Mask a,
                  DeltaClosureMode mode = DeltaClosureMode::Standard);
Mask gen_closure(const Topology& topology, FamilyKind kind, Mask a,
                 DeltaClosureMode mode = DeltaClosureMode::Standard);

}  // namespace ringtop
