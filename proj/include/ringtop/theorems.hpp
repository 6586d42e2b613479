#pragma once

// A registry of executable checks, one per structural identity about
// e*-open sets in ring topologies: translation and negation images of open
// and closed sets, unit scaling, operator inclusion chains, and the
// homomorphism continuity transfer. Each check gates on its hypotheses and
// sweeps its quantifiers exhaustively over the finite structure.
//
// Check ids (T3.4a .. T4.14) are a stable public contract.
//
// Four entries carry a statement/proof mismatch and expose both readings as
// first-class variants:
//   C3.7a/b — stated with the beta-closed dual int(cl(int(·)));
//             proved via the e*-closed dual int(cl(δ-int(·)))
//   T4.5c   — stated: r·int(A) ⊆ e*-int(A);  proved: r·int(A) ⊆ e*-int(rA)
//   T4.9d   — stated: int(x+A) ⊆ x+cl(δ-cl(A));  proved: ... ⊆ x+cl(int(δ-cl(A)))

#include "ringtop/analyzer.hpp"

namespace ringtop {

enum class Variant { AsStated, AsProved };
enum class VariantSelection { AsStated, AsProved, Both };

std::string_view to_string(Variant variant);
std::optional<VariantSelection> parse_variant_selection(std::string_view text);

enum class TheoremHypothesis {
  EStarRing,           // structure classifies as an e*-topological ring
  EStarRingWithUnity,  // ... and the ring has a unity
  EStarRingWithHom,    // ... and a homomorphism into a topological ring is given
};

struct TheoremEntry {
  std::string id;
  std::string claim;
  TheoremHypothesis hypothesis = TheoremHypothesis::EStarRing;
  bool divergent = false;    // has distinct as-stated / as-proved readings
  bool existential = false;  // succeeds by exhibiting a witness
};

const std::vector<TheoremEntry>& theorem_registry();
const TheoremEntry* find_theorem(std::string_view id);  // nullptr when unknown

// Homomorphism payload for T4.14.
struct HomSection {
  TopoRingStructure target;
  std::vector<int> map;  // source index -> target index
  bool operator==(const HomSection&) const = default;
};

struct RunOptions {
  DeltaClosureMode mode = DeltaClosureMode::Standard;
  const HomSection* hom = nullptr;
};

/// Throws InputError on an unknown id. For an existential entry the report
/// status is always Pass; the witness records the found counterexample and
/// the note says when none exists on this structure.
CheckReport run_check(std::string_view id, const TopoRingStructure& s,
                      Variant variant = Variant::AsProved,
                      const RunOptions& options = {});

/// Executes every registry entry; with VariantSelection::Both, divergent
/// entries produce one report per variant.
std::vector<CheckReport> run_all(const TopoRingStructure& s,
                                 VariantSelection selection = VariantSelection::Both,
                                 const RunOptions& options = {});

// An as-stated failure whose as-proved sibling passes is counted as a
// divergence rather than a failure: it documents the statement/proof
// mismatch instead of refuting the result.
struct SuiteSummary {
  int passed = 0;
  int failed = 0;
  int hypothesis_not_satisfied = 0;
  int divergences = 0;
};

SuiteSummary summarize(const std::vector<CheckReport>& reports);

}  // namespace ringtop
