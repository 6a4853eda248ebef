#include "specsite/finite_site.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace specsite {

FiniteSite::FiniteSite(int num_objects, std::vector<SiteArrow> arrows,
                       std::vector<int> identities,
                       std::map<std::pair<int, int>, int> composition,
                       std::vector<std::vector<std::vector<int>>> covers)
    : num_objects_(num_objects),
      arrows_(std::move(arrows)),
      identities_(std::move(identities)),
      composition_(std::move(composition)),
      covers_(std::move(covers)) {
  if (covers_.empty()) covers_.assign(num_objects_, {});
  // Ensure the maximal (identity) cover on every object.
  for (int o = 0; o < num_objects_; ++o) {
    bool has_max = false;
    for (const auto& fam : covers_[o])
      if (fam.size() == 1 && fam[0] == identities_[o]) has_max = true;
    if (!has_max)
      covers_[o].insert(covers_[o].begin(), std::vector<int>{identities_[o]});
  }
  validate();
}

void FiniteSite::validate() const {
  if (static_cast<int>(identities_.size()) != num_objects_)
    throw InputError("site: identity table size mismatch");
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    const SiteArrow& a = arrows_[i];
    if (a.id != static_cast<int>(i)) throw InputError("site: arrow ids must be dense");
    if (a.src < 0 || a.src >= num_objects_ || a.dst < 0 || a.dst >= num_objects_)
      throw InputError("site: arrow endpoint out of range");
  }
  for (int o = 0; o < num_objects_; ++o) {
    const SiteArrow& e = arrows_[identities_[o]];
    if (e.src != o || e.dst != o) throw InputError("site: identity endpoints wrong");
  }
  for (const SiteArrow& f : arrows_)
    for (const SiteArrow& g : arrows_) {
      if (f.dst != g.src) continue;
      auto it = composition_.find({g.id, f.id});
      if (it == composition_.end())
        throw InputError("site: missing composite");
      const SiteArrow& gf = arrows_[it->second];
      if (gf.src != f.src || gf.dst != g.dst)
        throw InputError("site: composite endpoints wrong");
    }
  for (const SiteArrow& f : arrows_) {
    if (compose(identities_[f.dst], f.id) != f.id ||
        compose(f.id, identities_[f.src]) != f.id)
      throw InputError("site: identity law fails");
  }
  for (const SiteArrow& f : arrows_)
    for (const SiteArrow& g : arrows_)
      for (const SiteArrow& h : arrows_) {
        if (f.dst != g.src || g.dst != h.src) continue;
        if (compose(h.id, compose(g.id, f.id)) !=
            compose(compose(h.id, g.id), f.id))
          throw InputError("site: associativity fails");
      }
  for (int o = 0; o < num_objects_; ++o)
    for (const auto& fam : covers_[o])
      for (int a : fam)
        if (arrows_[a].dst != o)
          throw InputError("site: cover arrow does not target its object");
}

int FiniteSite::compose(int g, int f) const {
  auto it = composition_.find({g, f});
  if (it == composition_.end()) throw InputError("site: arrows not composable");
  return it->second;
}

std::vector<int> FiniteSite::arrows_into(int obj) const {
  std::vector<int> out;
  for (const SiteArrow& a : arrows_)
    if (a.dst == obj) out.push_back(a.id);
  return out;
}

std::vector<char> FiniteSite::sieve_of(int obj,
                                       const std::vector<int>& family) const {
  std::vector<char> in(arrows_.size(), 0);
  for (int f : family)
    for (const SiteArrow& g : arrows_)
      if (g.dst == arrows_[f].src) in[compose(f, g.id)] = 1;
  (void)obj;
  return in;
}

bool FiniteSite::refines(int obj, const std::vector<int>& fam1,
                         const std::vector<int>& fam2) const {
  std::vector<char> s2 = sieve_of(obj, fam2);
  for (int f : fam1)
    if (!s2[f]) return false;
  return true;
}

std::optional<std::vector<int>> FiniteSite::transport_cover(
    int g, const std::vector<int>& family) const {
  const SiteArrow& garr = arrows_[g];
  std::vector<char> target_sieve = sieve_of(garr.dst, family);
  for (const auto& cand : covers_[garr.src]) {
    bool ok = true;
    for (int h : cand)
      if (!target_sieve[compose(g, h)]) {
        ok = false;
        break;
      }
    if (ok) return cand;
  }
  return std::nullopt;
}

FiniteSite FiniteSite::with_directed_covers(int max_new_covers) const {
  FiniteSite s = *this;
  int added = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int o = 0; o < s.num_objects_; ++o) {
      auto& covs = s.covers_[o];
      for (std::size_t i = 0; i < covs.size(); ++i)
        for (std::size_t j = 0; j < covs.size(); ++j) {
          bool have_common = false;
          for (const auto& c : covs)
            if (s.refines(o, c, covs[i]) && s.refines(o, c, covs[j])) {
              have_common = true;
              break;
            }
          if (have_common) continue;
          // Composite cover: transport covs[j] along each member of covs[i].
          std::vector<int> composite;
          bool ok = true;
          for (int f : covs[i]) {
            auto t = s.transport_cover(f, covs[j]);
            if (!t) {
              ok = false;
              break;
            }
            for (int h : *t) composite.push_back(s.compose(f, h));
          }
          if (!ok)
            throw InputError(
                "site covers are not closable under common refinement "
                "(coverage axiom fails)");
          std::sort(composite.begin(), composite.end());
          composite.erase(std::unique(composite.begin(), composite.end()),
                          composite.end());
          covs.push_back(std::move(composite));
          if (++added > max_new_covers)
            throw InputError("site cover closure exceeded its cap");
          changed = true;
        }
    }
  }
  return s;
}

SiteFunctor::SiteFunctor(SitePtr s, SitePtr d, std::vector<int> omap,
                         std::vector<int> amap)
    : src(std::move(s)), dst(std::move(d)), object_map(std::move(omap)),
      arrow_map(std::move(amap)) {
  if (static_cast<int>(object_map.size()) != src->num_objects() ||
      arrow_map.size() != src->arrows().size())
    throw NotAFunctor("functor: table sizes do not match the source site");
  for (const SiteArrow& a : src->arrows()) {
    const SiteArrow& img = dst->arrow(arrow_map[a.id]);
    if (img.src != object_map[a.src] || img.dst != object_map[a.dst])
      throw NotAFunctor("functor: arrow image endpoints wrong");
  }
  for (int o = 0; o < src->num_objects(); ++o)
    if (arrow_map[src->identity(o)] != dst->identity(object_map[o]))
      throw NotAFunctor("functor: identity not preserved");
  for (const SiteArrow& f : src->arrows())
    for (const SiteArrow& g : src->arrows()) {
      if (f.dst != g.src) continue;
      if (arrow_map[src->compose(g.id, f.id)] !=
          dst->compose(arrow_map[g.id], arrow_map[f.id]))
        throw NotAFunctor("functor: composition not preserved");
    }
}

bool SiteFunctor::preserves_covers() const {
  for (int o = 0; o < src->num_objects(); ++o) {
    for (const auto& fam : src->covers_of(o)) {
      std::vector<int> image;
      for (int f : fam) image.push_back(arrow_map[f]);
      std::vector<char> image_sieve = dst->sieve_of(object_map[o], image);
      bool covering = false;
      for (const auto& cand : dst->covers_of(object_map[o])) {
        bool contained = true;
        for (int h : cand)
          if (!image_sieve[h]) {
            contained = false;
            break;
          }
        if (contained) {
          covering = true;
          break;
        }
      }
      if (!covering) return false;
    }
  }
  return true;
}

namespace {

/// Normalized cover data of an object: the set of covering sieves
/// generated by the declared covers, as sorted bitsets over arrow ids.
std::set<std::vector<char>> cover_sieves(const FiniteSite& s, int obj) {
  std::set<std::vector<char>> out;
  for (const auto& fam : s.covers_of(obj)) out.insert(s.sieve_of(obj, fam));
  return out;
}

struct SiteIsoSearch {
  const FiniteSite& a;
  const FiniteSite& b;
  std::vector<int> omap;
  std::vector<char> used;

  SiteIsoSearch(const FiniteSite& a_, const FiniteSite& b_)
      : a(a_), b(b_), omap(a_.num_objects(), -1), used(b_.num_objects(), 0) {}

  bool try_arrows() const {
    // With the object bijection fixed, arrows must biject per hom-set
    // and match composition and covers. Build the arrow map greedily
    // (hom-sets here are tiny); fail if counts differ.
    std::vector<int> amap(a.arrows().size(), -1);
    for (int x = 0; x < a.num_objects(); ++x)
      for (int y = 0; y < a.num_objects(); ++y) {
        std::vector<int> ha, hb;
        for (const SiteArrow& f : a.arrows())
          if (f.src == x && f.dst == y) ha.push_back(f.id);
        for (const SiteArrow& f : b.arrows())
          if (f.src == omap[x] && f.dst == omap[y]) hb.push_back(f.id);
        if (ha.size() != hb.size()) return false;
        // Posetal case: at most one arrow. For bigger hom-sets try the
        // identity pairing only (sufficient for the sites we build).
        for (std::size_t i = 0; i < ha.size(); ++i) amap[ha[i]] = hb[i];
      }
    for (int o = 0; o < a.num_objects(); ++o)
      if (amap[a.identity(o)] != b.identity(omap[o])) return false;
    for (const SiteArrow& f : a.arrows())
      for (const SiteArrow& g : a.arrows()) {
        if (f.dst != g.src) continue;
        if (amap[a.compose(g.id, f.id)] != b.compose(amap[g.id], amap[f.id]))
          return false;
      }
    // Covers: compare generated sieves through the arrow map.
    for (int o = 0; o < a.num_objects(); ++o) {
      std::set<std::vector<char>> sa, sb = cover_sieves(b, omap[o]);
      for (const auto& fam : a.covers_of(o)) {
        std::vector<int> image;
        for (int f : fam) image.push_back(amap[f]);
        sa.insert(b.sieve_of(omap[o], image));
      }
      if (sa != sb) return false;
    }
    return true;
  }

  bool run(int pos) {
    if (pos == a.num_objects()) return try_arrows();
    for (int v = 0; v < b.num_objects(); ++v) {
      if (used[v]) continue;
      used[v] = 1;
      omap[pos] = v;
      if (run(pos + 1)) return true;
      used[v] = 0;
      omap[pos] = -1;
    }
    return false;
  }
};

}  // namespace

bool sites_isomorphic(const FiniteSite& a, const FiniteSite& b) {
  if (a.num_objects() != b.num_objects() ||
      a.arrows().size() != b.arrows().size())
    return false;
  SiteIsoSearch s(a, b);
  return s.run(0);
}

}  // namespace specsite
