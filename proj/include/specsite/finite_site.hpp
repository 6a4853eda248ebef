#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "specsite/errors.hpp"

namespace specsite {

struct SiteArrow {
  int id = -1;
  int src = -1;
  int dst = -1;
};

/// A finite category with generating covering families. Covers of an
/// object are families of arrows into it; the family set is expected to
/// form a coverage (pullback covers exist up to refinement) and every
/// object carries the maximal cover {id}. Category laws are checked on
/// construction.
class FiniteSite {
 public:
  FiniteSite(int num_objects, std::vector<SiteArrow> arrows,
             std::vector<int> identities,
             std::map<std::pair<int, int>, int> composition,
             std::vector<std::vector<std::vector<int>>> covers);

  int num_objects() const { return num_objects_; }
  const std::vector<SiteArrow>& arrows() const { return arrows_; }
  const SiteArrow& arrow(int id) const { return arrows_[id]; }
  int identity(int obj) const { return identities_[obj]; }
  /// g∘f for f: x->y, g: y->z.
  int compose(int g, int f) const;
  const std::vector<std::vector<int>>& covers_of(int obj) const {
    return covers_[obj];
  }
  std::vector<int> arrows_into(int obj) const;

  /// Sieve on obj generated by a family of arrows into obj: all arrows
  /// h with h = f_i ∘ g for some member f_i and arrow g.
  std::vector<char> sieve_of(int obj, const std::vector<int>& family) const;

  /// fam1 refines fam2: every member of fam1 factors through a member
  /// of fam2.
  bool refines(int obj, const std::vector<int>& fam1,
               const std::vector<int>& fam2) const;

  /// A cover of src(g) refining the pullback of `family` (a cover of
  /// dst(g)) along g, searched among the declared covers (the identity
  /// cover first). nullopt when the coverage axiom fails here.
  std::optional<std::vector<int>> transport_cover(
      int g, const std::vector<int>& family) const;

  /// Returns a copy whose per-object cover sets are closed under
  /// pairwise common refinement (adding composite covers as needed), so
  /// the plus construction can take directed colimits.
  FiniteSite with_directed_covers(int max_new_covers = 512) const;

 private:
  void validate() const;

  int num_objects_;
  std::vector<SiteArrow> arrows_;
  std::vector<int> identities_;
  std::map<std::pair<int, int>, int> composition_;
  std::vector<std::vector<std::vector<int>>> covers_;
};

using SitePtr = std::shared_ptr<const FiniteSite>;

/// A functor between finite sites given by object/arrow tables.
/// Construction validates functoriality (throws NotAFunctor).
struct SiteFunctor {
  SitePtr src;
  SitePtr dst;
  std::vector<int> object_map;
  std::vector<int> arrow_map;

  SiteFunctor() = default;
  SiteFunctor(SitePtr s, SitePtr d, std::vector<int> omap,
              std::vector<int> amap);

  /// True when the image of every cover of src is covering in dst
  /// (its sieve contains a declared cover's sieve).
  bool preserves_covers() const;
};

/// Category-level isomorphism of sites matching covers (by sieve).
bool sites_isomorphic(const FiniteSite& a, const FiniteSite& b);

}  // namespace specsite
