#include "ringtop/operators.hpp"

#include <algorithm>
#include <bit>

namespace ringtop {

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Open: return "open";
    case FamilyKind::Closed: return "closed";
    case FamilyKind::RegularOpen: return "regular-open";
    case FamilyKind::RegularClosed: return "regular-closed";
    case FamilyKind::DeltaOpen: return "delta-open";
    case FamilyKind::DeltaClosed: return "delta-closed";
    case FamilyKind::Alpha: return "alpha";
    case FamilyKind::Semi: return "semi";
    case FamilyKind::Pre: return "pre";
    case FamilyKind::Beta: return "beta";
    case FamilyKind::EStar: return "estar";
    case FamilyKind::EStarClosed: return "estar-closed";
  }
  return "?";
}

std::optional<FamilyKind> parse_family_kind(std::string_view text) {
  for (FamilyKind kind : kAllFamilyKinds) {
    if (text == to_string(kind)) return kind;
  }
  return std::nullopt;
}

std::string_view to_string(DeltaClosureMode mode) {
  return mode == DeltaClosureMode::Standard ? "standard" : "paper-literal";
}

std::optional<DeltaClosureMode> parse_delta_mode(std::string_view text) {
  if (text == "standard") return DeltaClosureMode::Standard;
  if (text == "paper-literal") return DeltaClosureMode::PaperLiteral;
  return std::nullopt;
}

OperatorTable::OperatorTable(Topology topology, DeltaClosureMode mode)
    : topology_(std::move(topology)), mode_(mode) {
  const Mask full = topology_.full();
  const std::size_t count = std::size_t{full} + 1;

  open_bitmap_.assign(count, 0);
  for (Mask open : topology_.opens()) open_bitmap_[open] = 1;

  interior_.resize(count);
  closure_.resize(count);
  for (Mask a = 0; a <= full; ++a) {
    Mask inside = 0;
    Mask outside = full;
    for (Mask open : topology_.opens()) {
      if (mask_subset(open, a)) inside |= open;
      Mask closed = full & ~open;
      if (mask_subset(a, closed)) outside &= closed;
    }
    interior_[a] = inside;
    closure_[a] = outside;
  }

  std::vector<Mask> regular_opens;
  std::vector<Mask> regular_closeds;
  for (Mask a = 0; a <= full; ++a) {
    if (a == interior_[closure_[a]]) regular_opens.push_back(a);
    if (a == closure_[interior_[a]]) regular_closeds.push_back(a);
  }

  delta_interior_.resize(count);
  for (Mask a = 0; a <= full; ++a) {
    Mask inside = 0;
    for (Mask ro : regular_opens) {
      if (mask_subset(ro, a)) inside |= ro;
    }
    delta_interior_[a] = inside;
  }

  // δ-closed sets are the complements of δ-open sets (A = δ-int(A)).
  std::vector<Mask> delta_closeds;
  for (Mask a = 0; a <= full; ++a) {
    if (a == delta_interior_[a]) delta_closeds.push_back(full & ~a);
  }

  delta_closure_standard_.resize(count);
  delta_closure_literal_.resize(count);
  for (Mask a = 0; a <= full; ++a) {
    Mask standard = full;
    for (Mask dc : delta_closeds) {
      if (mask_subset(a, dc)) standard &= dc;
    }
    Mask literal = full;
    for (Mask rc : regular_closeds) {
      if (mask_subset(a, rc)) literal &= rc;
    }
    delta_closure_standard_[a] = standard;
    delta_closure_literal_[a] = literal;
  }
}

Mask OperatorTable::delta_closure(Mask a, DeltaClosureMode mode) const {
  return mode == DeltaClosureMode::Standard ? delta_closure_standard_[a]
                                            : delta_closure_literal_[a];
}

bool OperatorTable::family_predicate(FamilyKind kind, Mask a) const {
  const Mask full = topology_.full();
  switch (kind) {
    case FamilyKind::Open: return is_open(a);
    case FamilyKind::Closed: return is_open(full & ~a);
    case FamilyKind::RegularOpen: return is_regular_open(a);
    case FamilyKind::RegularClosed: return is_regular_closed(a);
    case FamilyKind::DeltaOpen: return a == delta_interior_[a];
    case FamilyKind::DeltaClosed: return (full & ~a) == delta_interior_[full & ~a];
    case FamilyKind::Alpha: return mask_subset(a, interior_[closure_[interior_[a]]]);
    case FamilyKind::Semi: return mask_subset(a, closure_[interior_[a]]);
    case FamilyKind::Pre: return mask_subset(a, interior_[closure_[a]]);
    case FamilyKind::Beta: return mask_subset(a, closure_[interior_[closure_[a]]]);
    case FamilyKind::EStar: return mask_subset(a, closure_[interior_[delta_closure(a)]]);
    case FamilyKind::EStarClosed: return family_predicate(FamilyKind::EStar, full & ~a);
  }
  return false;
}

bool OperatorTable::in_family(FamilyKind kind, Mask a) const {
  return family_data(kind).bitmap[a] != 0;
}

const std::vector<Mask>& OperatorTable::family(FamilyKind kind) const {
  return family_data(kind).members;
}

const OperatorTable::FamilyData& OperatorTable::family_data(FamilyKind kind) const {
  const auto slot = static_cast<std::size_t>(kind);
  std::lock_guard<std::mutex> lock(cache_mutex_);
  if (!families_[slot]) {
    auto data = std::make_unique<FamilyData>();
    const Mask full = topology_.full();
    data->bitmap.assign(std::size_t{full} + 1, 0);
    for (Mask a = 0; a <= full; ++a) {
      if (family_predicate(kind, a)) {
        data->bitmap[a] = 1;
        data->members.push_back(a);
      }
    }
    families_[slot] = std::move(data);
  }
  return *families_[slot];
}

const std::vector<Mask>& OperatorTable::minimal_members_at(FamilyKind kind,
                                                           int point) const {
  auto& data = const_cast<FamilyData&>(family_data(kind));
  std::lock_guard<std::mutex> lock(cache_mutex_);
  if (!data.minimal_ready) {
    data.minimal_at.assign(static_cast<std::size_t>(carrier_size()), {});
    for (int x = 0; x < carrier_size(); ++x) {
      std::vector<Mask> containing;
      for (Mask member : data.members) {
        if (mask_contains(member, x)) containing.push_back(member);
      }
      // Popcount-ascending scan: any proper member-subset of a candidate has
      // fewer bits and so was already kept, which makes the filter complete.
      std::stable_sort(containing.begin(), containing.end(), [](Mask a, Mask b) {
        return std::popcount(a) < std::popcount(b);
      });
      std::vector<Mask>& minimal = data.minimal_at[static_cast<std::size_t>(x)];
      for (Mask candidate : containing) {
        bool dominated = false;
        for (Mask kept : minimal) {
          if (mask_subset(kept, candidate)) {
            dominated = true;
            break;
          }
        }
        if (!dominated) minimal.push_back(candidate);
      }
      std::sort(minimal.begin(), minimal.end());
    }
    data.minimal_ready = true;
  }
  return data.minimal_at[static_cast<std::size_t>(point)];
}

Mask OperatorTable::gen_interior(FamilyKind kind, Mask a) const {
  Mask acc = 0;
  for (Mask member : family(kind)) {
    if (mask_subset(member, a)) acc |= member;
  }
  return acc;
}

Mask OperatorTable::gen_closure(FamilyKind kind, Mask a) const {
  const Mask full = topology_.full();
  Mask acc = full;
  for (Mask member : family(kind)) {
    Mask kind_closed = full & ~member;
    if (mask_subset(a, kind_closed)) acc &= kind_closed;
  }
  return acc;
}

bool is_regular_open(const Topology& topology, Mask a) {
  return OperatorTable(topology).is_regular_open(a);
}

std::vector<Mask> regular_open_family(const Topology& topology) {
  return OperatorTable(topology).family(FamilyKind::RegularOpen);
}

std::vector<Mask> regular_closed_family(const Topology& topology) {
  return OperatorTable(topology).family(FamilyKind::RegularClosed);
}

Mask delta_interior(const Topology& topology, Mask a) {
  return OperatorTable(topology).delta_interior(a);
}

Mask delta_closure(const Topology& topology, Mask a, DeltaClosureMode mode) {
  return OperatorTable(topology, mode).delta_closure(a);
}

std::vector<Mask> family(const Topology& topology, FamilyKind kind,
                         DeltaClosureMode mode) {
  return OperatorTable(topology, mode).family(kind);
}

Mask gen_interior(const Topology& topology, FamilyKind kind, Mask a,
                  DeltaClosureMode mode) {
  return OperatorTable(topology, mode).gen_interior(kind, a);
}

Mask gen_closure(const Topology& topology, FamilyKind kind, Mask a,
                 DeltaClosureMode mode) {
  return OperatorTable(topology, mode).gen_closure(kind, a);
}

}  // namespace ringtop
