#pragma once

#include <optional>
#include <string>
#include <vector>

#include "specsite/algebra.hpp"
#include "specsite/finite_site.hpp"

namespace specsite {

/// A presheaf on a finite site: finite-set valued (carriers 0..k-1) or
/// algebra valued. The restriction along an arrow a: x -> y maps P(y)
/// into P(x); algebra-valued restrictions must be homomorphisms.
struct Presheaf {
  SitePtr site;
  bool algebra_valued = false;
  std::vector<int> set_sizes;                 // set case, per object
  std::vector<AlgebraPtr> algebras;           // algebra case, per object
  std::vector<std::vector<int>> restriction;  // per arrow: P(dst) -> P(src)

  int value_size(int obj) const {
    return algebra_valued ? algebras[obj]->size() : set_sizes[obj];
  }

  /// Functoriality check; throws InputError on violations.
  void validate() const;

  /// Forgets algebra structure (values become bare sets).
  Presheaf underlying_sets() const;
};

/// Componentwise morphism of presheaves over the same site.
struct PresheafMorphism {
  std::vector<std::vector<int>> component;  // per object: P(obj) -> Q(obj)
};

struct SheafDefect {
  int object = -1;
  int cover_index = -1;
  std::string kind;  // "non-separated" or "non-glued"
};

struct SheafReport {
  std::vector<SheafDefect> defects;
  int covers_checked = 0;
  bool pass() const { return defects.empty(); }
};

/// Matching families over one cover of obj: tuples (s_i in P(x_i))
/// compatible on every span through the cover members.
std::vector<std::vector<int>> matching_families(const Presheaf& p, int obj,
                                                const std::vector<int>& family,
                                                Budget& budget);

/// Sheaf condition against every declared cover, with defect kinds.
SheafReport check_sheaf(const Presheaf& p, Budget& budget);

struct Sheafification {
  Presheaf sheaf;
  PresheafMorphism unit;  // P -> sheaf
};

/// Plus construction applied twice. Algebra-valued presheaves get their
/// operations induced componentwise on matching families.
Sheafification sheafify(const Presheaf& p, Budget& budget);

/// P ∘ F for a functor F between sites (into P's site).
Presheaf restrict_along(const Presheaf& p, const SiteFunctor& f);

/// Natural isomorphism search (objectwise bijections commuting with all
/// restrictions; algebra isos in the algebra-valued case).
bool presheaves_isomorphic(const Presheaf& p, const Presheaf& q);

}  // namespace specsite
