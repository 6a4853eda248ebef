#pragma once

#include <string>
#include <vector>

#include "specsite/theory.hpp"

namespace specsite::cring {

/// Finite commutative unital rings: add, mul, neg, one, zero.
SignaturePtr cring_signature();

AlgebraPtr zn(int n);                                 // Z/n
AlgebraPtr ring_product(const AlgebraPtr& r, const AlgebraPtr& s);

bool is_unit(const FiniteAlgebra& r, int a);

/// R[1/a] for a finite ring: the stable idempotent e of a, a^2, ...
/// gives R[1/a] = eR with the map x -> e*x. Cross-checkable against the
/// brute-force universal property (see tests).
std::pair<AlgebraPtr, Homomorphism> localization(const AlgebraPtr& r, int a);

/// Ideals as sorted element lists; prime ideals among them.
std::vector<std::vector<int>> ideals(const AlgebraPtr& r);
std::vector<std::vector<int>> prime_ideals(const AlgebraPtr& r);

/// Local ring test by the unique-maximal-ideal definition.
bool is_local_ring(const AlgebraPtr& r);

class CringTheory : public TheoryPlugin {
 public:
  std::string id() const override { return "cring"; }
  SignaturePtr signature() const override { return cring_signature(); }
  /// A documented sample family (cyclic rings and their products), not
  /// an exhaustive classification.
  std::vector<AlgebraPtr> enumerate_algebras(int max_size) const override;
};

/// Zariski-style geometry on finite commutative rings: generators are
/// the localizations R -> R[1/a], local maps reflect units, covers come
/// from finite families generating the unit ideal.
GeometryPtr ring_zariski_geometry();

}  // namespace specsite::cring
