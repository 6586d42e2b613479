#include "ringtop/theorems.hpp"

#include <functional>

namespace ringtop {

std::string_view to_string(Variant variant) {
  return variant == Variant::AsStated ? "as-stated" : "as-proved";
}

std::optional<VariantSelection> parse_variant_selection(std::string_view text) {
  if (text == "as-stated") return VariantSelection::AsStated;
  if (text == "as-proved") return VariantSelection::AsProved;
  if (text == "both") return VariantSelection::Both;
  return std::nullopt;
}

namespace {

struct Ctx {
  const TopoRingStructure& s;
  const OperatorTable& ops;
  const FiniteRing& ring;
  Mask full;
  std::vector<int> units;
  const HomSection* hom;
};

struct Outcome {
  std::optional<Witness> witness;
  std::string hypothesis_failure;  // nonempty -> hypothesis-not-satisfied
};

using CheckFn = std::function<Outcome(const Ctx&, Variant)>;

struct EntryImpl {
  TheoremEntry meta;
  CheckFn run;
};

constexpr FamilyKind kE = FamilyKind::EStar;
constexpr FamilyKind kEC = FamilyKind::EStarClosed;

Witness inclusion_witness(Mask a, Mask lhs, Mask rhs) {
  return Witness{{}, {{"A", a}, {"lhs", lhs}, {"rhs", rhs}}};
}

Witness inclusion_witness(Mask a, int point, const char* point_name, Mask lhs, Mask rhs) {
  return Witness{{{point_name, point}}, {{"A", a}, {"lhs", lhs}, {"rhs", rhs}}};
}

// Membership sweeps over the open (or closed) family, optionally paired with
// an element quantifier. `map` produces the set whose family membership is
// claimed.
template <typename Map>
Outcome member_sweep(const Ctx& c, bool over_closed, FamilyKind target, Map map) {
  const std::vector<Mask> base =
      over_closed ? c.s.topology.closed_family() : c.s.topology.opens();
  for (Mask a : base) {
    Mask m = map(a);
    if (!c.ops.in_family(target, m)) {
      return {Witness{{}, {{"A", a}, {"image", m}}}, ""};
    }
  }
  return {};
}

template <typename Map>
Outcome member_sweep_with_point(const Ctx& c, bool over_closed, FamilyKind target,
                                const std::vector<int>& points, const char* point_name,
                                Map map) {
  const std::vector<Mask> base =
      over_closed ? c.s.topology.closed_family() : c.s.topology.opens();
  for (Mask a : base) {
    for (int p : points) {
      Mask m = map(a, p);
      if (!c.ops.in_family(target, m)) {
        return {Witness{{{point_name, p}}, {{"A", a}, {"image", m}}}, ""};
      }
    }
  }
  return {};
}

// Inclusion sweeps over every subset, optionally paired with an element
// quantifier. `sides` produces (lhs, rhs); the claim is lhs ⊆ rhs.
template <typename Sides>
Outcome inclusion_sweep(const Ctx& c, Sides sides) {
  for (Mask a = 0; a <= c.full; ++a) {
    auto [lhs, rhs] = sides(a);
    if (!mask_subset(lhs, rhs)) return {inclusion_witness(a, lhs, rhs), ""};
  }
  return {};
}

template <typename Sides>
Outcome inclusion_sweep_with_point(const Ctx& c, const std::vector<int>& points,
                                   const char* point_name, Sides sides) {
  for (Mask a = 0; a <= c.full; ++a) {
    for (int p : points) {
      auto [lhs, rhs] = sides(a, p);
      if (!mask_subset(lhs, rhs)) {
        return {inclusion_witness(a, p, point_name, lhs, rhs), ""};
      }
    }
  }
  return {};
}

std::vector<int> all_elements(const Ctx& c) {
  std::vector<int> out;
  for (int i = 0; i < c.ring.size(); ++i) out.push_back(i);
  return out;
}

// e*-continuity of an element-indexed function family, preimage form.
template <typename MakeMap>
Outcome continuity_sweep(const Ctx& c, const std::vector<int>& points,
                         const char* point_name, MakeMap make_map) {
  const int n = c.ring.size();
  std::vector<int> f(static_cast<std::size_t>(n));
  for (int p : points) {
    for (int y = 0; y < n; ++y) f[static_cast<std::size_t>(y)] = make_map(p, y);
    for (Mask v : c.s.topology.opens()) {
      Mask pre = preimage(f, v, n);
      if (!c.ops.in_family(kE, pre)) {
        return {Witness{{{point_name, p}}, {{"V", v}, {"preimage", pre}}}, ""};
      }
    }
  }
  return {};
}

Outcome check_t4_14(const Ctx& c, Variant) {
  if (c.hom == nullptr) {
    return {std::nullopt, "no ring homomorphism supplied (add a hom section)"};
  }
  const auto& map = c.hom->map;
  const TopoRingStructure& target = c.hom->target;
  if (auto violation = hom_violation(map, c.ring, target.ring)) {
    return {std::nullopt,
            "map is not a ring homomorphism: " + violation->op + " not preserved at (" +
                c.ring.ground().label(violation->x) + ", " +
                c.ring.ground().label(violation->y) + ")"};
  }
  Classification target_cls = classify(target, c.ops.delta_mode());
  if (!target_cls.satisfies(FamilyKind::Open)) {
    return {std::nullopt, "target structure is not a topological ring"};
  }
  if (!is_continuous_at(map, c.s.topology, target.topology, c.ring.zero())) {
    return {std::nullopt, "map is not continuous at the additive identity"};
  }
  for (Mask v : target.topology.opens()) {
    Mask pre = preimage(map, v, c.ring.size());
    if (!c.ops.in_family(kE, pre)) {
      return {Witness{{}, {{"V", v}, {"preimage", pre}}}, ""};
    }
  }
  return {};
}

std::vector<EntryImpl> build_registry() {
  std::vector<EntryImpl> entries;
  auto add = [&entries](std::string id, std::string claim, TheoremHypothesis hyp,
                        bool divergent, bool existential, CheckFn run) {
    entries.push_back(
        {TheoremEntry{std::move(id), std::move(claim), hyp, divergent, existential},
         std::move(run)});
  };
  const auto ring_hyp = TheoremHypothesis::EStarRing;
  const auto unity_hyp = TheoremHypothesis::EStarRingWithUnity;

  add("T3.4a", "-A is e*-open for every open A", ring_hyp, false, false,
      [](const Ctx& c, Variant) {
        return member_sweep(c, false, kE, [&c](Mask a) { return c.ring.set_neg(a); });
      });
  add("T3.4b", "x+A is e*-open for every open A and every x", ring_hyp, false, false,
      [](const Ctx& c, Variant) {
        return member_sweep_with_point(
            c, false, kE, all_elements(c), "x",
            [&c](Mask a, int x) { return c.ring.translate(x, a); });
      });
  add("C3.5a", "-A ⊆ cl(int(δ-cl(-A))) for every open A", ring_hyp, false, false,
      [](const Ctx& c, Variant) -> Outcome {
        for (Mask a : c.s.topology.opens()) {
          Mask m = c.ring.set_neg(a);
          Mask rhs = c.ops.closure(c.ops.interior(c.ops.delta_closure(m)));
          if (!mask_subset(m, rhs)) return {inclusion_witness(a, m, rhs), ""};
        }
        return {};
      });
  add("C3.5b", "x+A ⊆ cl(int(δ-cl(x+A))) for every open A and every x", ring_hyp, false,
      false, [](const Ctx& c, Variant) -> Outcome {
        for (Mask a : c.s.topology.opens()) {
          for (int x = 0; x < c.ring.size(); ++x) {
            Mask m = c.ring.translate(x, a);
            Mask rhs = c.ops.closure(c.ops.interior(c.ops.delta_closure(m)));
            if (!mask_subset(m, rhs)) {
              return {inclusion_witness(a, x, "x", m, rhs), ""};
            }
          }
        }
        return {};
      });
  add("T3.6a", "-A is e*-closed for every closed A", ring_hyp, false, false,
      [](const Ctx& c, Variant) {
        return member_sweep(c, true, kEC, [&c](Mask a) { return c.ring.set_neg(a); });
      });
  add("T3.6b", "x+A is e*-closed for every closed A and every x", ring_hyp, false, false,
      [](const Ctx& c, Variant) {
        return member_sweep_with_point(
            c, true, kEC, all_elements(c), "x",
            [&c](Mask a, int x) { return c.ring.translate(x, a); });
      });
  // The stated corollary uses int(cl(int(·))), the beta-closed dual; the
  // e*-closed membership established by T3.6 dualizes to int(cl(δ-int(·))).
  // The stated reading is refutable (the bundled fixture refutes the (b)
  // form), so both readings are first-class variants.
  add("C3.7a", "int(cl(int(-A))) ⊆ -A [stated] / int(cl(δ-int(-A))) ⊆ -A [proved]",
      ring_hyp, true, false, [](const Ctx& c, Variant variant) -> Outcome {
        for (Mask a : c.s.topology.closed_family()) {
          Mask m = c.ring.set_neg(a);
          Mask inner = variant == Variant::AsProved ? c.ops.delta_interior(m)
                                                    : c.ops.interior(m);
          Mask lhs = c.ops.interior(c.ops.closure(inner));
          if (!mask_subset(lhs, m)) return {inclusion_witness(a, lhs, m), ""};
        }
        return {};
      });
  add("C3.7b",
      "int(cl(int(x+A))) ⊆ x+A [stated] / int(cl(δ-int(x+A))) ⊆ x+A [proved]",
      ring_hyp, true, false, [](const Ctx& c, Variant variant) -> Outcome {
        for (Mask a : c.s.topology.closed_family()) {
          for (int x = 0; x < c.ring.size(); ++x) {
            Mask m = c.ring.translate(x, a);
            Mask inner = variant == Variant::AsProved ? c.ops.delta_interior(m)
                                                      : c.ops.interior(m);
            Mask lhs = c.ops.interior(c.ops.closure(inner));
            if (!mask_subset(lhs, m)) return {inclusion_witness(a, x, "x", lhs, m), ""};
          }
        }
        return {};
      });
  add("T4.1a", "y ↦ x+y is e*-continuous for every x", ring_hyp, false, false,
      [](const Ctx& c, Variant) {
        return continuity_sweep(c, all_elements(c), "x",
                                [&c](int x, int y) { return c.ring.add(x, y); });
      });
  add("T4.1b", "x ↦ -x is e*-continuous", ring_hyp, false, false,
      [](const Ctx& c, Variant) -> Outcome {
        const int n = c.ring.size();
        std::vector<int> f(static_cast<std::size_t>(n));
        for (int y = 0; y < n; ++y) f[static_cast<std::size_t>(y)] = c.ring.neg(y);
        for (Mask v : c.s.topology.opens()) {
          Mask pre = preimage(f, v, n);
          if (!c.ops.in_family(kE, pre)) {
            return {Witness{{}, {{"V", v}, {"preimage", pre}}}, ""};
          }
        }
        return {};
      });
  add("T4.3a", "Ar is e*-open for every open A and every unit r", unity_hyp, false,
      false, [](const Ctx& c, Variant) {
        return member_sweep_with_point(
            c, false, kE, c.units, "r",
            [&c](Mask a, int r) { return c.ring.scale_right(a, r); });
      });
  add("T4.3b", "rA is e*-open for every open A and every unit r", unity_hyp, false,
      false, [](const Ctx& c, Variant) {
        return member_sweep_with_point(
            c, false, kE, c.units, "r",
            [&c](Mask a, int r) { return c.ring.scale_left(r, a); });
      });
  add("T4.4a", "Ar is e*-closed for every closed A and every unit r", unity_hyp, false,
      false, [](const Ctx& c, Variant) {
        return member_sweep_with_point(
            c, true, kEC, c.units, "r",
            [&c](Mask a, int r) { return c.ring.scale_right(a, r); });
      });
  add("T4.4b", "rA is e*-closed for every closed A and every unit r", unity_hyp, false,
      false, [](const Ctx& c, Variant) {
        return member_sweep_with_point(
            c, true, kEC, c.units, "r",
            [&c](Mask a, int r) { return c.ring.scale_left(r, a); });
      });
  add("T4.5a", "r·e*-cl(A) ⊆ cl(rA) for every A and every r", unity_hyp, false, false,
      [](const Ctx& c, Variant) {
        return inclusion_sweep_with_point(c, all_elements(c), "r", [&c](Mask a, int r) {
          Mask lhs = c.ring.scale_left(r, c.ops.gen_closure(kE, a));
          Mask rhs = c.ops.closure(c.ring.scale_left(r, a));
          return std::pair{lhs, rhs};
        });
      });
  add("T4.5b", "int(rA) ⊆ r·e*-int(A) for every A and every r", unity_hyp, false, false,
      [](const Ctx& c, Variant) {
        return inclusion_sweep_with_point(c, all_elements(c), "r", [&c](Mask a, int r) {
          Mask lhs = c.ops.interior(c.ring.scale_left(r, a));
          Mask rhs = c.ring.scale_left(r, c.ops.gen_interior(kE, a));
          return std::pair{lhs, rhs};
        });
      });
  add("T4.5c", "r·int(A) ⊆ e*-int(A) [stated] / e*-int(rA) [proved] for every unit r",
      unity_hyp, true, false, [](const Ctx& c, Variant variant) {
        return inclusion_sweep_with_point(
            c, c.units, "r", [&c, variant](Mask a, int r) {
              Mask lhs = c.ring.scale_left(r, c.ops.interior(a));
              Mask rhs = variant == Variant::AsProved
                             ? c.ops.gen_interior(kE, c.ring.scale_left(r, a))
                             : c.ops.gen_interior(kE, a);
              return std::pair{lhs, rhs};
            });
      });
  add("T4.5d", "e*-cl(rA) ⊆ r·cl(A) for every A and every unit r", unity_hyp, false,
      false, [](const Ctx& c, Variant) {
        return inclusion_sweep_with_point(c, c.units, "r", [&c](Mask a, int r) {
          Mask lhs = c.ops.gen_closure(kE, c.ring.scale_left(r, a));
          Mask rhs = c.ring.scale_left(r, c.ops.closure(a));
          return std::pair{lhs, rhs};
        });
      });
  add("T4.6", "x ↦ rx is e*-continuous for every unit r", unity_hyp, false, false,
      [](const Ctx& c, Variant) {
        return continuity_sweep(c, c.units, "r",
                                [&c](int r, int y) { return c.ring.mul(r, y); });
      });
  add("T4.7a", "x + e*-cl(A) ⊆ cl(x+A)", ring_hyp, false, false,
      [](const Ctx& c, Variant) {
        return inclusion_sweep_with_point(c, all_elements(c), "x", [&c](Mask a, int x) {
          return std::pair{c.ring.translate(x, c.ops.gen_closure(kE, a)),
                           c.ops.closure(c.ring.translate(x, a))};
        });
      });
  add("T4.7b", "e*-cl(x+A) ⊆ x + cl(A)", ring_hyp, false, false,
      [](const Ctx& c, Variant) {
        return inclusion_sweep_with_point(c, all_elements(c), "x", [&c](Mask a, int x) {
          return std::pair{c.ops.gen_closure(kE, c.ring.translate(x, a)),
                           c.ring.translate(x, c.ops.closure(a))};
        });
      });
  add("T4.7c", "x + int(A) ⊆ e*-int(x+A)", ring_hyp, false, false,
      [](const Ctx& c, Variant) {
        return inclusion_sweep_with_point(c, all_elements(c), "x", [&c](Mask a, int x) {
          return std::pair{c.ring.translate(x, c.ops.interior(a)),
                           c.ops.gen_interior(kE, c.ring.translate(x, a))};
        });
      });
  add("T4.7d", "int(x+A) ⊆ x + e*-int(A)", ring_hyp, false, false,
      [](const Ctx& c, Variant) {
        return inclusion_sweep_with_point(c, all_elements(c), "x", [&c](Mask a, int x) {
          return std::pair{c.ops.interior(c.ring.translate(x, a)),
                           c.ring.translate(x, c.ops.gen_interior(kE, a))};
        });
      });
  add("T4.8a", "-e*-cl(A) ⊆ cl(-A)", ring_hyp, false, false,
      [](const Ctx& c, Variant) {
        return inclusion_sweep(c, [&c](Mask a) {
          return std::pair{c.ring.set_neg(c.ops.gen_closure(kE, a)),
                           c.ops.closure(c.ring.set_neg(a))};
        });
      });
  add("T4.8b", "e*-cl(-A) ⊆ -cl(A)", ring_hyp, false, false,
      [](const Ctx& c, Variant) {
        return inclusion_sweep(c, [&c](Mask a) {
          return std::pair{c.ops.gen_closure(kE, c.ring.set_neg(a)),
                           c.ring.set_neg(c.ops.closure(a))};
        });
      });
  add("T4.8c", "-int(A) ⊆ e*-int(-A)", ring_hyp, false, false,
      [](const Ctx& c, Variant) {
        return inclusion_sweep(c, [&c](Mask a) {
          return std::pair{c.ring.set_neg(c.ops.interior(a)),
                           c.ops.gen_interior(kE, c.ring.set_neg(a))};
        });
      });
  add("T4.8d", "int(-A) ⊆ -e*-int(A)", ring_hyp, false, false,
      [](const Ctx& c, Variant) {
        return inclusion_sweep(c, [&c](Mask a) {
          return std::pair{c.ops.interior(c.ring.set_neg(a)),
                           c.ring.set_neg(c.ops.gen_interior(kE, a))};
        });
      });
  add("T4.9a", "x + int(cl(δ-int(A))) ⊆ cl(x+A)", ring_hyp, false, false,
      [](const Ctx& c, Variant) {
        return inclusion_sweep_with_point(c, all_elements(c), "x", [&c](Mask a, int x) {
          Mask lhs = c.ring.translate(x, c.ops.interior(c.ops.closure(c.ops.delta_interior(a))));
          return std::pair{lhs, c.ops.closure(c.ring.translate(x, a))};
        });
      });
  add("T4.9b", "int(cl(δ-int(x+A))) ⊆ x + cl(A)", ring_hyp, false, false,
      [](const Ctx& c, Variant) {
        return inclusion_sweep_with_point(c, all_elements(c), "x", [&c](Mask a, int x) {
          Mask xa = c.ring.translate(x, a);
          Mask lhs = c.ops.interior(c.ops.closure(c.ops.delta_interior(xa)));
          return std::pair{lhs, c.ring.translate(x, c.ops.closure(a))};
        });
      });
  add("T4.9c", "x + int(A) ⊆ cl(int(δ-cl(x+A)))", ring_hyp, false, false,
      [](const Ctx& c, Variant) {
        return inclusion_sweep_with_point(c, all_elements(c), "x", [&c](Mask a, int x) {
          Mask xa = c.ring.translate(x, a);
          return std::pair{c.ring.translate(x, c.ops.interior(a)),
                           c.ops.closure(c.ops.interior(c.ops.delta_closure(xa)))};
        });
      });
  add("T4.9d", "int(x+A) ⊆ x+cl(δ-cl(A)) [stated] / x+cl(int(δ-cl(A))) [proved]",
      ring_hyp, true, false, [](const Ctx& c, Variant variant) {
        return inclusion_sweep_with_point(
            c, all_elements(c), "x", [&c, variant](Mask a, int x) {
              Mask lhs = c.ops.interior(c.ring.translate(x, a));
              Mask core = variant == Variant::AsProved
                              ? c.ops.closure(c.ops.interior(c.ops.delta_closure(a)))
                              : c.ops.closure(c.ops.delta_closure(a));
              return std::pair{lhs, c.ring.translate(x, core)};
            });
      });
  add("T4.10a", "-int(cl(δ-int(A))) ⊆ cl(-A)", ring_hyp, false, false,
      [](const Ctx& c, Variant) {
        return inclusion_sweep(c, [&c](Mask a) {
          Mask lhs = c.ring.set_neg(c.ops.interior(c.ops.closure(c.ops.delta_interior(a))));
          return std::pair{lhs, c.ops.closure(c.ring.set_neg(a))};
        });
      });
  add("T4.10b", "int(cl(δ-int(-A))) ⊆ -cl(A)", ring_hyp, false, false,
      [](const Ctx& c, Variant) {
        return inclusion_sweep(c, [&c](Mask a) {
          Mask na = c.ring.set_neg(a);
          Mask lhs = c.ops.interior(c.ops.closure(c.ops.delta_interior(na)));
          return std::pair{lhs, c.ring.set_neg(c.ops.closure(a))};
        });
      });
  add("T4.10c", "-int(A) ⊆ cl(int(δ-cl(-A)))", ring_hyp, false, false,
      [](const Ctx& c, Variant) {
        return inclusion_sweep(c, [&c](Mask a) {
          Mask na = c.ring.set_neg(a);
          return std::pair{c.ring.set_neg(c.ops.interior(a)),
                           c.ops.closure(c.ops.interior(c.ops.delta_closure(na)))};
        });
      });
  add("T4.10d", "int(-A) ⊆ -cl(int(δ-cl(A)))", ring_hyp, false, false,
      [](const Ctx& c, Variant) {
        return inclusion_sweep(c, [&c](Mask a) {
          Mask rhs = c.ring.set_neg(c.ops.closure(c.ops.interior(c.ops.delta_closure(a))));
          return std::pair{c.ops.interior(c.ring.set_neg(a)), rhs};
        });
      });
  add("T4.11", "e*-cl(A) + e*-cl(B) ⊆ cl(A+B) for all A, B", ring_hyp, false, false,
      [](const Ctx& c, Variant) -> Outcome {
        std::vector<Mask> ecl(std::size_t{c.full} + 1);
        for (Mask a = 0; a <= c.full; ++a) ecl[a] = c.ops.gen_closure(kE, a);
        for (Mask a = 0; a <= c.full; ++a) {
          for (Mask b = 0; b <= c.full; ++b) {
            Mask lhs = c.ring.set_add(ecl[a], ecl[b]);
            Mask rhs = c.ops.closure(c.ring.set_add(a, b));
            if (!mask_subset(lhs, rhs)) {
              return {Witness{{}, {{"A", a}, {"B", b}, {"lhs", lhs}, {"rhs", rhs}}}, ""};
            }
          }
        }
        return {};
      });
  add("T4.11-converse",
      "the reverse inclusion cl(A+B) ⊆ e*-cl(A)+e*-cl(B) fails for some A, B",
      ring_hyp, false, true, [](const Ctx& c, Variant) -> Outcome {
        std::vector<Mask> ecl(std::size_t{c.full} + 1);
        for (Mask a = 0; a <= c.full; ++a) ecl[a] = c.ops.gen_closure(kE, a);
        for (Mask a = 0; a <= c.full; ++a) {
          for (Mask b = 0; b <= c.full; ++b) {
            Mask sum = c.ring.set_add(ecl[a], ecl[b]);
            Mask cl = c.ops.closure(c.ring.set_add(a, b));
            if (!mask_subset(cl, sum)) {
              return {Witness{{},
                              {{"A", a},
                               {"B", b},
                               {"cl(A+B)", cl},
                               {"e*-cl(A)+e*-cl(B)", sum}}},
                      ""};
            }
          }
        }
        return {};
      });
  add("T4.14",
      "a ring homomorphism into a topological ring, continuous at the additive "
      "identity, is e*-continuous",
      TheoremHypothesis::EStarRingWithHom, false, false, check_t4_14);

  return entries;
}

const std::vector<EntryImpl>& registry_impl() {
  static const std::vector<EntryImpl> entries = build_registry();
  return entries;
}

CheckReport run_entry(const EntryImpl& entry, const Ctx& ctx,
                      const Classification& classification, Variant variant) {
  CheckReport report;
  report.id = entry.meta.id;
  report.kind = kE;
  report.mode = ctx.ops.delta_mode();
  if (entry.meta.divergent) report.variant = std::string(to_string(variant));

  if (!classification.satisfies(kE)) {
    report.status = CheckStatus::HypothesisNotSatisfied;
    report.note = "structure is not an e*-topological ring";
    return report;
  }
  if (entry.meta.hypothesis == TheoremHypothesis::EStarRingWithUnity &&
      !ctx.ring.unity().has_value()) {
    report.status = CheckStatus::HypothesisNotSatisfied;
    report.note = "ring has no unity; every r ∈ R* clause is vacuously true (R* = ∅)";
    return report;
  }

  Outcome outcome = entry.run(ctx, variant);
  if (!outcome.hypothesis_failure.empty()) {
    report.status = CheckStatus::HypothesisNotSatisfied;
    report.note = outcome.hypothesis_failure;
    return report;
  }
  if (entry.meta.existential) {
    report.status = CheckStatus::Pass;
    report.witness = outcome.witness;
    report.note = outcome.witness
                      ? "counterexample found; the reverse inclusion fails at the "
                        "recorded pair"
                      : "no counterexample on this structure; the reverse inclusion "
                        "holds for every pair";
    return report;
  }
  if (outcome.witness) {
    report.status = CheckStatus::Fail;
    report.witness = outcome.witness;
  }
  return report;
}

}  // namespace

const std::vector<TheoremEntry>& theorem_registry() {
  static const std::vector<TheoremEntry> metas = [] {
    std::vector<TheoremEntry> out;
    for (const auto& entry : registry_impl()) out.push_back(entry.meta);
    return out;
  }();
  return metas;
}

const TheoremEntry* find_theorem(std::string_view id) {
  for (const auto& meta : theorem_registry()) {
    if (meta.id == id) return &meta;
  }
  return nullptr;
}

CheckReport run_check(std::string_view id, const TopoRingStructure& s, Variant variant,
                      const RunOptions& options) {
  for (const auto& entry : registry_impl()) {
    if (entry.meta.id != id) continue;
    OperatorTable ops(s.topology, options.mode);
    Classification classification = classify(s, ops);
    Ctx ctx{s, ops, s.ring, s.topology.full(), s.ring.unit_elements(), options.hom};
    return run_entry(entry, ctx, classification, variant);
  }
  throw InputError("unknown check id \"" + std::string(id) + "\"");
}

std::vector<CheckReport> run_all(const TopoRingStructure& s, VariantSelection selection,
                                 const RunOptions& options) {
  OperatorTable ops(s.topology, options.mode);
  Classification classification = classify(s, ops);
  Ctx ctx{s, ops, s.ring, s.topology.full(), s.ring.unit_elements(), options.hom};

  std::vector<CheckReport> reports;
  for (const auto& entry : registry_impl()) {
    if (entry.meta.divergent && selection == VariantSelection::Both) {
      reports.push_back(run_entry(entry, ctx, classification, Variant::AsStated));
      reports.push_back(run_entry(entry, ctx, classification, Variant::AsProved));
      continue;
    }
    Variant variant = selection == VariantSelection::AsStated ? Variant::AsStated
                                                              : Variant::AsProved;
    reports.push_back(run_entry(entry, ctx, classification, variant));
  }
  return reports;
}

SuiteSummary summarize(const std::vector<CheckReport>& reports) {
  SuiteSummary summary;
  for (const auto& report : reports) {
    switch (report.status) {
      case CheckStatus::Pass: ++summary.passed; break;
      case CheckStatus::Fail: ++summary.failed; break;
      case CheckStatus::HypothesisNotSatisfied: ++summary.hypothesis_not_satisfied; break;
    }
  }
  // Reclassify as-stated failures whose as-proved sibling passed.
  for (const auto& report : reports) {
    if (report.status != CheckStatus::Fail || report.variant != "as-stated") continue;
    for (const auto& sibling : reports) {
      if (sibling.id == report.id && sibling.variant == "as-proved" &&
          sibling.status == CheckStatus::Pass) {
        --summary.failed;
        ++summary.divergences;
        break;
      }
    }
  }
  return summary;
}

}  // namespace ringtop
