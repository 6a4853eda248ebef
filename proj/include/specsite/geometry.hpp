#pragma once

#include <string>
#include <vector>

#include "specsite/factorization.hpp"
#include "specsite/theory.hpp"

namespace specsite {

/// A cover of B obtained by pushing a generating cover along an
/// attachment hom; members carry their pushout provenance.
struct GeneralizedCover {
  AlgebraPtr base;
  std::vector<Homomorphism> members;  // n_i: B -> B_i
  std::string provenance;             // generating family label + attachment
};

/// All generalized covers of B up to sieve equality, canonical order.
std::vector<GeneralizedCover> generalized_covers(const AlgebraPtr& b,
                                                 const GeometrySpec& g,
                                                 Budget& budget);

/// Retraction criterion: the identity of A factors through some member
/// of every generalized cover under A.
bool is_local_object(const AlgebraPtr& a, const GeometrySpec& g,
                     Budget& budget);

/// Syntactic local-map test cross-checked against the brute-force
/// orthogonality oracle over the geometry's probe algebras. Throws
/// OracleDisagreement when the two disagree.
bool is_local_map(const Homomorphism& u, const GeometrySpec& g, Budget& budget);

/// Factorization with the verified postcondition that the middle object
/// is local whenever the codomain is. Throws AdmissibilityViolation
/// otherwise (carrying the failing cover).
Factorization admissible_factorize(const Homomorphism& f,
                                   const GeometrySpec& g, Budget& budget);

struct DiersStatus {
  bool u_local = false;        // lifting against localizing families
  bool retract_of_range = false;
  bool cone_injective = false;
  bool all_equal() const {
    return u_local == retract_of_range && retract_of_range == cone_injective;
  }
};

/// Three independent characterizations of U-locality (they must agree).
/// `sample` is the designated list of local objects within a size bound.
DiersStatus diers_local_status(const AlgebraPtr& a, const GeometrySpec& g,
                               const std::vector<AlgebraPtr>& sample,
                               Budget& budget);

/// Families of finitely presented etale maps under K jointly factoring
/// every local form of K, as index sets into the spectral-site objects.
struct LocalizingFamily {
  std::vector<int> member_objects;       // indices into the site objects
  std::vector<Homomorphism> members;     // the etale maps themselves
};

std::vector<LocalizingFamily> localizing_topology(const AlgebraPtr& k,
                                                  const GeometrySpec& g,
                                                  Budget& budget);

}  // namespace specsite
