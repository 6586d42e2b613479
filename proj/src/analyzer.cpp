#include "ringtop/analyzer.hpp"

#include <algorithm>

namespace ringtop {

TopoRingStructure TopoRingStructure::make(FiniteRing ring, Topology topology) {
  if (!(ring.ground() == topology.ground())) {
    throw InputError("ring and topology must share the same carrier labels");
  }
  return TopoRingStructure{std::move(ring), std::move(topology)};
}

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::HypothesisNotSatisfied: return "hypothesis-not-satisfied";
  }
  return "?";
}

std::string_view to_string(RingCondition condition) {
  switch (condition) {
    case RingCondition::Addition: return "cond-add";
    case RingCondition::Negation: return "cond-neg";
    case RingCondition::Multiplication: return "cond-mul";
  }
  return "?";
}

std::optional<int> Witness::point(std::string_view name) const {
  for (const auto& [slot, value] : points) {
    if (slot == name) return value;
  }
  return std::nullopt;
}

std::optional<Mask> Witness::set(std::string_view name) const {
  for (const auto& [slot, value] : sets) {
    if (slot == name) return value;
  }
  return std::nullopt;
}

namespace {

// ∃U ∈ F(x), V ∈ F(y): image(U, V) ⊆ W, searched over inclusion-minimal
// members only. Complete because the set images are monotone in U and V.
template <typename Image>
bool pair_witness_exists(const OperatorTable& ops, FamilyKind kind, int x, int y,
                         Mask w, Image image) {
  for (Mask u : ops.minimal_members_at(kind, x)) {
    for (Mask v : ops.minimal_members_at(kind, y)) {
      if (mask_subset(image(u, v), w)) return true;
    }
  }
  return false;
}

CheckReport make_condition_report(const OperatorTable& ops, FamilyKind kind,
                                  RingCondition condition) {
  CheckReport report;
  report.id = std::string(to_string(condition));
  report.kind = kind;
  report.mode = ops.delta_mode();
  return report;
}

}  // namespace

CheckReport check_condition(const TopoRingStructure& s, const OperatorTable& ops,
                            FamilyKind kind, RingCondition condition) {
  const FiniteRing& ring = s.ring;
  const int n = ring.size();
  CheckReport report = make_condition_report(ops, kind, condition);

  if (condition == RingCondition::Negation) {
    for (int x = 0; x < n; ++x) {
      const int target = ring.neg(x);
      for (Mask v : s.topology.opens()) {
        if (!mask_contains(v, target)) continue;
        bool found = false;
        for (Mask u : ops.minimal_members_at(kind, x)) {
          if (mask_subset(ring.set_neg(u), v)) {
            found = true;
            break;
          }
        }
        if (!found) {
          report.status = CheckStatus::Fail;
          report.witness = Witness{{{"x", x}}, {{"V", v}}};
          return report;
        }
      }
    }
    return report;
  }

  const bool additive = condition == RingCondition::Addition;
  auto image = [&ring, additive](Mask u, Mask v) {
    return additive ? ring.set_add(u, v) : ring.set_mul(u, v);
  };
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const int target = additive ? ring.add(x, y) : ring.mul(x, y);
      for (Mask w : s.topology.opens()) {
        if (!mask_contains(w, target)) continue;
        if (!pair_witness_exists(ops, kind, x, y, w, image)) {
          report.status = CheckStatus::Fail;
          report.witness = Witness{{{"x", x}, {"y", y}}, {{"W", w}}};
          return report;
        }
      }
    }
  }
  return report;
}

CheckReport check_condition_add(const TopoRingStructure& s, FamilyKind kind,
                                DeltaClosureMode mode) {
  OperatorTable ops(s.topology, mode);
  return check_condition(s, ops, kind, RingCondition::Addition);
}

CheckReport check_condition_neg(const TopoRingStructure& s, FamilyKind kind,
                                DeltaClosureMode mode) {
  OperatorTable ops(s.topology, mode);
  return check_condition(s, ops, kind, RingCondition::Negation);
}

CheckReport check_condition_mul(const TopoRingStructure& s, FamilyKind kind,
                                DeltaClosureMode mode) {
  OperatorTable ops(s.topology, mode);
  return check_condition(s, ops, kind, RingCondition::Multiplication);
}

bool Classification::satisfies(FamilyKind kind) const {
  return result(kind).satisfied;
}

const KindClassification& Classification::result(FamilyKind kind) const {
  for (const auto& entry : kinds) {
    if (entry.kind == kind) return entry;
  }
  throw InputError("classification does not cover family kind \"" +
                   std::string(to_string(kind)) + "\"");
}

Classification classify(const TopoRingStructure& s, DeltaClosureMode mode) {
  OperatorTable ops(s.topology, mode);
  return classify(s, ops);
}

Classification classify(const TopoRingStructure& s, const OperatorTable& ops) {
  Classification out;
  out.mode = ops.delta_mode();
  for (FamilyKind kind : {FamilyKind::Open, FamilyKind::Beta, FamilyKind::EStar}) {
    KindClassification entry;
    entry.kind = kind;
    entry.conditions = {
        check_condition(s, ops, kind, RingCondition::Addition),
        check_condition(s, ops, kind, RingCondition::Negation),
        check_condition(s, ops, kind, RingCondition::Multiplication),
    };
    entry.satisfied = std::all_of(
        entry.conditions.begin(), entry.conditions.end(),
        [](const CheckReport& r) { return r.status == CheckStatus::Pass; });
    out.kinds.push_back(std::move(entry));
  }
  return out;
}

bool replay_condition_failure(const TopoRingStructure& s, FamilyKind kind,
                              RingCondition condition, const Witness& witness,
                              DeltaClosureMode mode) {
  OperatorTable ops(s.topology, mode);
  const FiniteRing& ring = s.ring;
  const auto& members = ops.family(kind);

  if (condition == RingCondition::Negation) {
    auto x = witness.point("x");
    auto v = witness.set("V");
    if (!x || !v) return false;
    if (!s.topology.is_open(*v) || !mask_contains(*v, ring.neg(*x))) return false;
    for (Mask u : members) {
      if (mask_contains(u, *x) && mask_subset(ring.set_neg(u), *v)) return false;
    }
    return true;
  }

  auto x = witness.point("x");
  auto y = witness.point("y");
  auto w = witness.set("W");
  if (!x || !y || !w) return false;
  const bool additive = condition == RingCondition::Addition;
  const int target = additive ? ring.add(*x, *y) : ring.mul(*x, *y);
  if (!s.topology.is_open(*w) || !mask_contains(*w, target)) return false;
  for (Mask u : members) {
    if (!mask_contains(u, *x)) continue;
    for (Mask v : members) {
      if (!mask_contains(v, *y)) continue;
      Mask img = additive ? ring.set_add(u, v) : ring.set_mul(u, v);
      if (mask_subset(img, *w)) return false;
    }
  }
  return true;
}

Mask image(std::span<const int> f, Mask a) {
  Mask out = 0;
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (mask_contains(a, static_cast<int>(x))) out |= mask_bit(f[x]);
  }
  return out;
}

Mask preimage(std::span<const int> f, Mask b, int source_size) {
  Mask out = 0;
  for (int x = 0; x < source_size; ++x) {
    if (mask_contains(b, f[static_cast<std::size_t>(x)])) out |= mask_bit(x);
  }
  return out;
}

bool is_gen_continuous_preimage(std::span<const int> f, const OperatorTable& source,
                                const Topology& target, FamilyKind kind) {
  for (Mask v : target.opens()) {
    if (!source.in_family(kind, preimage(f, v, source.carrier_size()))) return false;
  }
  return true;
}

bool is_gen_continuous_preimage(std::span<const int> f, const Topology& source,
                                const Topology& target, FamilyKind kind,
                                DeltaClosureMode mode) {
  OperatorTable ops(source, mode);
  return is_gen_continuous_preimage(f, ops, target, kind);
}

bool is_gen_continuous_pointwise(std::span<const int> f, const OperatorTable& source,
                                 const Topology& target, FamilyKind kind) {
  for (int x = 0; x < source.carrier_size(); ++x) {
    const int fx = f[static_cast<std::size_t>(x)];
    for (Mask v : target.opens()) {
      if (!mask_contains(v, fx)) continue;
      bool found = false;
      for (Mask u : source.minimal_members_at(kind, x)) {
        if (mask_subset(image(f, u), v)) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

bool is_gen_continuous_pointwise(std::span<const int> f, const Topology& source,
                                 const Topology& target, FamilyKind kind,
                                 DeltaClosureMode mode) {
  OperatorTable ops(source, mode);
  return is_gen_continuous_pointwise(f, ops, target, kind);
}

bool is_continuous_at(std::span<const int> f, const Topology& source,
                      const Topology& target, int x) {
  const int fx = f[static_cast<std::size_t>(x)];
  for (Mask v : target.opens()) {
    if (!mask_contains(v, fx)) continue;
    bool found = false;
    for (Mask u : source.opens()) {
      if (mask_contains(u, x) && mask_subset(image(f, u), v)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace ringtop
