#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "specsite/algebra.hpp"

namespace specsite {

/// One instance of an etale generator: a class map k: K -> K' together
/// with the attachment a: K -> B it is to be pushed out along.
struct GeneratorInstance {
  Homomorphism k;
  Homomorphism attach;
  std::string label;  // plugin-chosen, e.g. "theta(2,1)"
};

/// A generating cover family at an algebra: class maps k_i: B -> B_i,
/// attached along the identity of B.
struct CoverFamily {
  std::vector<Homomorphism> members;
  std::string label;
};

/// A plugin-proposed local form candidate, to be verified generically.
struct CandidatePoint {
  Homomorphism local_form;          // x: B -> A_x
  std::vector<int> filter;          // plugin presentation (e.g. filter elements)
  std::string label;
};

/// Signature, laws and enumeration for one finite-limit theory.
class TheoryPlugin {
 public:
  virtual ~TheoryPlugin() = default;
  virtual std::string id() const = 0;
  virtual SignaturePtr signature() const = 0;
  /// All algebras of the theory with size <= max_size, up to isomorphism,
  /// in a deterministic order. Used by the brute-force oracles.
  virtual std::vector<AlgebraPtr> enumerate_algebras(int max_size) const = 0;
};

using TheoryPtr = std::shared_ptr<const TheoryPlugin>;

/// The data of one geometry over a theory: etale generator schema,
/// factorization step rule, the syntactic local-map test and the cover
/// generator schema, plus the plugin's closed-form point oracles.
class GeometrySpec {
 public:
  virtual ~GeometrySpec() = default;

  virtual std::string id() const = 0;
  virtual const TheoryPlugin& theory() const = 0;

  /// All generator-class instances available at B (attach = id_B),
  /// canonical order.
  virtual std::vector<GeneratorInstance> generator_instances(
      const AlgebraPtr& b) const = 0;

  /// Membership test for the saturated class on finitely presented maps.
  virtual bool in_generator_class(const Homomorphism& n) const = 0;

  /// Step rule of the factorization engine: one generator instance at
  /// dom(u) witnessing that u is not yet local, or nullopt when u is.
  virtual std::optional<GeneratorInstance> local_step(
      const Homomorphism& u) const = 0;

  /// Syntactic local-map membership test.
  virtual bool local_map_test(const Homomorphism& u) const = 0;

  /// Generating cover families at B, deduplicated by generated sieve,
  /// canonical order. May be empty (a geometry with no topology).
  virtual std::vector<CoverFamily> cover_families(const AlgebraPtr& b) const = 0;

  /// Plugin-proposed local forms of B, canonical order.
  virtual std::vector<CandidatePoint> candidate_local_forms(
      const AlgebraPtr& b) const = 0;

  /// Closed-form stalk oracle at a candidate point, if the plugin has one.
  virtual std::optional<AlgebraPtr> stalk_closed_form(
      const AlgebraPtr& b, const CandidatePoint& p) const {
    (void)b;
    (void)p;
    return std::nullopt;
  }

  /// Small algebras whose generator instances the orthogonality oracle
  /// probes against (e.g. free-on-one-generator shapes).
  virtual std::vector<AlgebraPtr> orthogonality_probes() const = 0;
};

using GeometryPtr = std::shared_ptr<const GeometrySpec>;

/// Registry for `--theory`/`--geometry` CLI selection.
TheoryPtr find_theory(const std::string& theory_id);
GeometryPtr find_geometry(const std::string& theory_id,
                          const std::string& geometry_id);

}  // namespace specsite
