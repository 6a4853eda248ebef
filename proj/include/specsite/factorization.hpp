#pragma once

#include <optional>
#include <string>
#include <vector>

#include "specsite/theory.hpp"

namespace specsite {

/// A commuting square l;bottom = top;r asking for diagonal fillers
/// d: cod(l) -> dom(r) with d∘l = top and r∘d = bottom.
struct LiftingProblem {
  Homomorphism left;    // l: K -> K'
  Homomorphism right;   // r: X -> Y
  Homomorphism top;     // K -> X
  Homomorphism bottom;  // K' -> Y

  void validate() const;  // throws unless the square commutes
};

/// Certificate that a map is etale: the ordered pushout steps whose
/// composite reproduces it. Each step's attachment targets the middle
/// object produced by the previous steps.
struct EtaleWitness {
  std::vector<GeneratorInstance> steps;

  /// Recomputes the composite map from `from`; bit-exact replay.
  Homomorphism replay(const GeometrySpec& g, const AlgebraPtr& from) const;
};

/// Pushout of one generator instance; surjective generators use the
/// congruence-transport pushout, others defer to the geometry.
Homomorphism pushout_of_instance(const GeometrySpec& g,
                                 const GeneratorInstance& inst);

std::vector<Homomorphism> diagonal_fillers(const LiftingProblem& p,
                                           Budget& budget);

/// l ⊥ r: every commuting square from l to r has exactly one filler.
bool is_orthogonal(const Homomorphism& l, const Homomorphism& r,
                   Budget& budget);

struct Factorization {
  EtaleWitness etale;     // steps from dom(f)
  Homomorphism etale_map; // composite e: dom(f) -> middle
  AlgebraPtr middle;
  Homomorphism local;     // u: middle -> cod(f), passes the local test
};

/// (Etale, Local) factorization driven by the geometry's step rule.
Factorization factorize(const Homomorphism& f, const GeometrySpec& g);

struct SaturationReport {
  std::vector<std::string> violations;
  int checked = 0;
  bool pass() const { return violations.empty(); }
};

/// Checks the saturated-class axioms (iso containment, composition,
/// right-cancellation, pushout closure) for the geometry's generator
/// class over the sample, by brute force.
SaturationReport verify_saturated(const GeometrySpec& g,
                                  const std::vector<AlgebraPtr>& sample,
                                  Budget& budget);

/// The refinement lemma at finite scale: given a pushout square of a
/// generator k along a0 with corner map n: B -> D and a map a: K -> D,
/// search for a factorization a0 = a1∘a2 through an intermediate object
/// such that a factors through the intermediate pushout.
struct AnelSquare {
  Homomorphism k;       // K0 -> K0', in the generator class
  Homomorphism a0;      // K0 -> B
  Homomorphism corner;  // n: B -> D, the pushout of k along a0
  Homomorphism a;       // K -> D
};

bool anel_refinement_check(const GeometrySpec& g, const AnelSquare& sq,
                           Budget& budget,
                           const std::vector<AlgebraPtr>& extra_candidates = {});

}  // namespace specsite
