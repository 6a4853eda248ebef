#include "specsite/theories/dlat.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace specsite::dlat {

namespace {

enum Op { kBot = 0, kJoin = 1, kMeet = 2, kTop = 3 };

std::optional<std::string> check_dlat_laws(const FiniteAlgebra& a) {
  int n = a.size();
  int b = a.constant(kBot), t = a.constant(kTop);
  auto mt = [&](int x, int y) { return a.apply2(kMeet, x, y); };
  auto jn = [&](int x, int y) { return a.apply2(kJoin, x, y); };
  for (int x = 0; x < n; ++x) {
    if (mt(x, x) != x) return "meet not idempotent at " + std::to_string(x);
    if (jn(x, x) != x) return "join not idempotent at " + std::to_string(x);
    if (mt(x, b) != b) return "bot not absorbing at " + std::to_string(x);
    if (jn(x, t) != t) return "top not absorbing at " + std::to_string(x);
    if (mt(x, t) != x) return "top not a meet unit at " + std::to_string(x);
    if (jn(x, b) != x) return "bot not a join unit at " + std::to_string(x);
    for (int y = 0; y < n; ++y) {
      if (mt(x, y) != mt(y, x)) return "meet not commutative";
      if (jn(x, y) != jn(y, x)) return "join not commutative";
      if (mt(x, jn(x, y)) != x) return "absorption x∧(x∨y) fails";
      if (jn(x, mt(x, y)) != x) return "absorption x∨(x∧y) fails";
      for (int z = 0; z < n; ++z) {
        if (mt(mt(x, y), z) != mt(x, mt(y, z))) return "meet not associative";
        if (jn(jn(x, y), z) != jn(x, jn(y, z))) return "join not associative";
        if (mt(x, jn(y, z)) != jn(mt(x, y), mt(x, z))) {
          std::ostringstream os;
          os << "not distributive at (" << x << "," << y << "," << z << ")";
          return os.str();
        }
      }
    }
  }
  return std::nullopt;
}

AlgebraPtr build(int n, const std::vector<std::vector<char>>& le,
                 bool check = true) {
  // Meet and join computed from the order; caller guarantees they exist.
  std::vector<int> meet_t(n * n), join_t(n * n);
  auto below = [&](int x, int y) { return le[x][y] != 0; };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int m = -1, j = -1;
      for (int z = 0; z < n; ++z) {
        if (below(z, x) && below(z, y) && (m < 0 || below(m, z))) m = z;
        if (below(x, z) && below(y, z) && (j < 0 || below(z, j))) j = z;
      }
      meet_t[x * n + y] = m;
      join_t[x * n + y] = j;
    }
  int b = 0, t = 0;
  for (int z = 0; z < n; ++z) {
    if (below(z, b)) b = z;
    if (below(t, z)) t = z;
  }
  return make_algebra(dlat_signature(), n,
                      {{b}, std::move(join_t), std::move(meet_t), {t}}, check);
}

}  // namespace

SignaturePtr dlat_signature() {
  static SignaturePtr sig = std::make_shared<const Signature>(
      "dlat",
      std::vector<Operation>{{"bot", 0}, {"join", 2}, {"meet", 2}, {"top", 0}},
      &check_dlat_laws);
  return sig;
}

AlgebraPtr chain(int n) {
  if (n < 1) throw InputError("chain needs n >= 1");
  std::vector<std::vector<char>> le(n, std::vector<char>(n, 0));
  for (int x = 0; x < n; ++x)
    for (int y = x; y < n; ++y) le[x][y] = 1;
  return build(n, le);
}

AlgebraPtr two_by_two() {
  // 0 < a=1, b=2 < 1=3.
  std::vector<std::vector<char>> le(4, std::vector<char>(4, 0));
  for (int x = 0; x < 4; ++x) le[x][x] = le[0][x] = le[x][3] = 1;
  return build(4, le);
}

AlgebraPtr diamond_m3_tables() {
  // 0 < a,b,c < 1 with a,b,c pairwise incomparable. Not distributive.
  int n = 5;
  std::vector<std::vector<char>> le(n, std::vector<char>(n, 0));
  for (int x = 0; x < n; ++x) le[x][x] = le[0][x] = le[x][4] = 1;
  return build(n, le, /*check=*/false);
}

AlgebraPtr pentagon_n5_tables() {
  // 0 < a < b < 1 and 0 < c < 1 with c incomparable to a,b.
  int n = 5;
  std::vector<std::vector<char>> le(n, std::vector<char>(n, 0));
  for (int x = 0; x < n; ++x) le[x][x] = le[0][x] = le[x][4] = 1;
  le[1][2] = 1;  // a < b
  return build(n, le, /*check=*/false);
}

bool leq(const FiniteAlgebra& d, int x, int y) {
  return d.apply2(kMeet, x, y) == x;
}
int bot(const FiniteAlgebra& d) { return d.constant(kBot); }
int top(const FiniteAlgebra& d) { return d.constant(kTop); }
int meet(const FiniteAlgebra& d, int x, int y) { return d.apply2(kMeet, x, y); }
int join(const FiniteAlgebra& d, int x, int y) { return d.apply2(kJoin, x, y); }

int meet_all(const FiniteAlgebra& d, const std::vector<int>& xs) {
  int m = top(d);
  for (int x : xs) m = meet(d, m, x);
  return m;
}

int join_all(const FiniteAlgebra& d, const std::vector<int>& xs) {
  int j = bot(d);
  for (int x : xs) j = join(d, x, j);
  return j;
}

namespace {

std::vector<std::vector<int>> subsets_where(
    const AlgebraPtr& d, const std::function<bool(const std::vector<int>&)>& ok) {
  int n = d->size();
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> els;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) els.push_back(i);
    if (ok(els)) out.push_back(std::move(els));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

bool is_filter(const FiniteAlgebra& d, const std::vector<int>& els) {
  std::vector<char> in(d.size(), 0);
  for (int e : els) in[e] = 1;
  if (!in[top(d)]) return false;
  if (in[bot(d)]) return false;  // proper
  for (int e : els) {
    for (int y = 0; y < d.size(); ++y)
      if (leq(d, e, y) && !in[y]) return false;  // upward closed
    for (int f : els)
      if (!in[meet(d, e, f)]) return false;  // meet closed
  }
  return true;
}

}  // namespace

std::vector<std::vector<int>> filters(const AlgebraPtr& d) {
  return subsets_where(d, [&](const std::vector<int>& els) {
    return !els.empty() && is_filter(*d, els);
  });
}

std::vector<std::vector<int>> prime_filters(const AlgebraPtr& d) {
  return subsets_where(d, [&](const std::vector<int>& els) {
    if (els.empty() || !is_filter(*d, els)) return false;
    std::vector<char> in(d->size(), 0);
    for (int e : els) in[e] = 1;
    for (int x = 0; x < d->size(); ++x)
      for (int y = 0; y < d->size(); ++y)
        if (in[join(*d, x, y)] && !in[x] && !in[y]) return false;
    return true;
  });
}

std::vector<std::vector<int>> prime_ideals(const AlgebraPtr& d) {
  return subsets_where(d, [&](const std::vector<int>& els) {
    if (els.empty()) return false;
    std::vector<char> in(d->size(), 0);
    for (int e : els) in[e] = 1;
    if (!in[bot(*d)] || in[top(*d)]) return false;
    for (int e : els) {
      for (int y = 0; y < d->size(); ++y)
        if (leq(*d, y, e) && !in[y]) return false;
      for (int f : els)
        if (!in[join(*d, e, f)]) return false;
    }
    for (int x = 0; x < d->size(); ++x)
      for (int y = 0; y < d->size(); ++y)
        if (in[meet(*d, x, y)] && !in[x] && !in[y]) return false;
    return true;
  });
}

std::vector<int> join_irreducibles(const AlgebraPtr& d) {
  std::vector<int> out;
  int n = d->size();
  for (int a = 0; a < n; ++a) {
    if (a == bot(*d)) continue;
    bool irr = true;
    for (int x = 0; x < n && irr; ++x)
      for (int y = 0; y < n && irr; ++y)
        if (join(*d, x, y) == a && x != a && y != a) irr = false;
    if (irr) out.push_back(a);
  }
  return out;
}

std::vector<int> meet_irreducibles(const AlgebraPtr& d) {
  std::vector<int> out;
  int n = d->size();
  for (int a = 0; a < n; ++a) {
    if (a == top(*d)) continue;
    bool irr = true;
    for (int x = 0; x < n && irr; ++x)
      for (int y = 0; y < n && irr; ++y)
        if (meet(*d, x, y) == a && x != a && y != a) irr = false;
    if (irr) out.push_back(a);
  }
  return out;
}

AlgebraPtr dual_lattice(const AlgebraPtr& d) {
  auto t = d->tables();
  std::swap(t[kJoin], t[kMeet]);
  std::swap(t[kBot], t[kTop]);
  return make_algebra(d->signature(), d->size(), std::move(t));
}

Congruence theta_top(const AlgebraPtr& d, int a) {
  return principal_congruence(d, a, top(*d));
}

Congruence theta_bot(const AlgebraPtr& d, int a) {
  return principal_congruence(d, a, bot(*d));
}

std::vector<Congruence> all_congruences(const AlgebraPtr& d) {
  // Enumerate partitions in restricted-growth form; keep the compatible
  // ones (operation tables respect the blocks).
  int n = d->size();
  std::vector<Congruence> out;
  std::vector<int> rg(n, 0);
  std::function<void(int, int)> rec = [&](int pos, int maxb) {
    if (pos == n) {
      Congruence c{d, rg};
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
              if (rg[x] != rg[y] || rg[u] != rg[v]) continue;
              if (rg[meet(*d, x, u)] != rg[meet(*d, y, v)]) return;
              if (rg[join(*d, x, u)] != rg[join(*d, y, v)]) return;
            }
      out.push_back(std::move(c));
      return;
    }
    for (int b = 0; b <= maxb + 1; ++b) {
      rg[pos] = b;
      rec(pos + 1, std::max(maxb, b));
    }
  };
  rg[0] = 0;
  rec(1, 0);
  return out;
}

Congruence theta_min(const AlgebraPtr& d, const std::vector<int>& filter) {
  int t = top(*d);
  // Route 1: meet of all congruences whose top class is exactly the filter.
  std::vector<char> in(d->size(), 0);
  for (int e : filter) in[e] = 1;
  int n = d->size();
  std::vector<std::vector<char>> related(n, std::vector<char>(n, 1));
  bool found = false;
  for (const Congruence& c : all_congruences(d)) {
    bool top_class_is_filter = true;
    for (int x = 0; x < n; ++x)
      if ((c.block[x] == c.block[t]) != (in[x] != 0)) top_class_is_filter = false;
    if (!top_class_is_filter) continue;
    found = true;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (c.block[x] != c.block[y]) related[x][y] = 0;
  }
  if (!found)
    throw InputError("theta_min: no congruence has the given filter as top class");
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (related[x][y]) pairs.emplace_back(x, y);
  Congruence route1 = congruence_from_pairs(d, pairs);

  // Route 2: join of the principal congruences theta(a,1), a in filter.
  Congruence route2{d, std::vector<int>(n, 0)};
  {
    std::vector<int> diag(n);
    std::iota(diag.begin(), diag.end(), 0);
    route2 = Congruence{d, diag};
    for (int a : filter) route2 = congruence_join(route2, theta_top(d, a));
  }
  if (!(route1 == route2))
    throw OracleDisagreement(
        "theta_min: congruence-meet route disagrees with principal-join route");
  return route1;
}

// ---------------------------------------------------------------------------
// Poset and lattice enumeration

std::vector<unsigned> downsets_of(const Poset& p) {
  std::vector<unsigned> out;
  for (unsigned mask = 0; mask < (1u << p.n); ++mask) {
    bool down = true;
    for (int x = 0; x < p.n && down; ++x) {
      if (!(mask & (1u << x))) continue;
      for (int y = 0; y < p.n; ++y)
        if (p.leq[y][x] && !(mask & (1u << y))) down = false;
    }
    if (down) out.push_back(mask);
  }
  std::sort(out.begin(), out.end(), [](unsigned a, unsigned b) {
    int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    if (pa != pb) return pa < pb;
    return a < b;
  });
  return out;
}

AlgebraPtr downset_lattice(const Poset& p) {
  auto ds = downsets_of(p);
  int n = static_cast<int>(ds.size());
  std::vector<std::vector<char>> le(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      le[i][j] = (ds[i] & ~ds[j]) == 0;  // subset inclusion
  return build(n, le);
}

bool posets_isomorphic(const Poset& a, const Poset& b) {
  if (a.n != b.n) return false;
  std::vector<int> perm(a.n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int x = 0; x < a.n && ok; ++x)
      for (int y = 0; y < a.n && ok; ++y)
        if (a.leq[x][y] != b.leq[perm[x]][perm[y]]) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::vector<Poset> enumerate_posets(int n) {
  std::vector<Poset> reps;
  if (n == 0) {
    reps.push_back(Poset{0, {}});
    return reps;
  }
  // Strict relations contained in the order i < j (every finite poset
  // admits such a labeling), then dedup up to isomorphism.
  int npairs = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  for (unsigned mask = 0; mask < (1u << npairs); ++mask) {
    Poset p;
    p.n = n;
    p.leq.assign(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i) p.leq[i][i] = 1;
    for (int k = 0; k < npairs; ++k)
      if (mask & (1u << k)) p.leq[pairs[k].first][pairs[k].second] = 1;
    bool transitive = true;
    for (int x = 0; x < n && transitive; ++x)
      for (int y = 0; y < n && transitive; ++y) {
        if (!p.leq[x][y]) continue;
        for (int z = 0; z < n; ++z)
          if (p.leq[y][z] && !p.leq[x][z]) {
            transitive = false;
            break;
          }
      }
    if (!transitive) continue;
    bool fresh = true;
    for (const Poset& q : reps)
      if (posets_isomorphic(p, q)) {
        fresh = false;
        break;
      }
    if (fresh) reps.push_back(std::move(p));
  }
  return reps;
}

std::vector<AlgebraPtr> enumerate_distributive_lattices(int max_size) {
  std::vector<AlgebraPtr> out;
  // A distributive lattice of size m is the downset lattice of its poset
  // of join-irreducibles; a poset with k elements has at least k+1
  // downsets, so posets up to max_size-1 elements suffice.
  for (int k = 0; k < max_size; ++k) {
    for (const Poset& p : enumerate_posets(k)) {
      if (static_cast<int>(downsets_of(p).size()) > max_size) continue;
      AlgebraPtr d = downset_lattice(p);
      bool fresh = true;
      for (const AlgebraPtr& e : out)
        if (find_isomorphism(d, e)) {
          fresh = false;
          break;
        }
      if (fresh) out.push_back(std::move(d));
    }
  }
  std::sort(out.begin(), out.end(), [](const AlgebraPtr& a, const AlgebraPtr& b) {
    if (a->size() != b->size()) return a->size() < b->size();
    return a->structure_key() < b->structure_key();
  });
  return out;
}

std::vector<AlgebraPtr> enumerate_distributive_lattices_direct(int max_size) {
  std::vector<AlgebraPtr> out;
  for (int n = 1; n <= max_size; ++n) {
    for (const Poset& p : enumerate_posets(n)) {
      // Lattice: all binary meets and joins exist.
      bool lattice = true;
      for (int x = 0; x < n && lattice; ++x)
        for (int y = 0; y < n && lattice; ++y) {
          int m = -1, j = -1;
          for (int z = 0; z < n; ++z) {
            if (p.leq[z][x] && p.leq[z][y]) {
              if (m < 0)
                m = z;
              else if (p.leq[m][z])
                m = z;
              else if (!p.leq[z][m])
                m = -2;
            }
            if (p.leq[x][z] && p.leq[y][z]) {
              if (j < 0)
                j = z;
              else if (p.leq[z][j])
                j = z;
              else if (!p.leq[j][z])
                j = -2;
            }
          }
          // Re-scan: the greatest lower bound must dominate every lower bound.
          if (m >= 0)
            for (int z = 0; z < n; ++z)
              if (p.leq[z][x] && p.leq[z][y] && !p.leq[z][m]) m = -2;
          if (j >= 0)
            for (int z = 0; z < n; ++z)
              if (p.leq[x][z] && p.leq[y][z] && !p.leq[j][z]) j = -2;
          if (m < 0 || j < 0) lattice = false;
        }
      if (!lattice) continue;
      AlgebraPtr d;
      try {
        d = build(n, p.leq, /*check=*/true);
      } catch (const InputError&) {
        continue;  // non-distributive
      }
      bool fresh = true;
      for (const AlgebraPtr& e : out)
        if (find_isomorphism(d, e)) {
          fresh = false;
          break;
        }
      if (fresh) out.push_back(std::move(d));
    }
  }
  std::sort(out.begin(), out.end(), [](const AlgebraPtr& a, const AlgebraPtr& b) {
    if (a->size() != b->size()) return a->size() < b->size();
    return a->structure_key() < b->structure_key();
  });
  return out;
}

// ---------------------------------------------------------------------------
// Geometries

namespace {

/// Antichains of d (pairwise incomparable subsets) whose join is the
/// given target element; the empty antichain qualifies when bot == top.
std::vector<std::vector<int>> antichains_with_join(const AlgebraPtr& d,
                                                   int target, bool dual) {
  auto le = [&](int x, int y) {
    return dual ? leq(*d, y, x) : leq(*d, x, y);
  };
  auto jn = [&](int x, int y) {
    return dual ? meet(*d, x, y) : join(*d, x, y);
  };
  int unit = dual ? top(*d) : bot(*d);
  int n = d->size();
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> els;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) els.push_back(i);
    bool anti = true;
    for (std::size_t i = 0; i < els.size() && anti; ++i)
      for (std::size_t j = 0; j < els.size(); ++j)
        if (i != j && le(els[i], els[j])) {
          anti = false;
          break;
        }
    if (!anti) continue;
    int j = unit;
    for (int e : els) j = jn(j, e);
    if (j == target) out.push_back(std::move(els));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

class DlatGeometry : public GeometrySpec {
 public:
  explicit DlatGeometry(bool cozariski) : co_(cozariski) {
    theory_ = std::make_shared<DlatTheory>();
  }

  std::string id() const override { return co_ ? "cozariski" : "zariski"; }
  const TheoryPlugin& theory() const override { return *theory_; }

  std::vector<GeneratorInstance> generator_instances(
      const AlgebraPtr& b) const override {
    std::vector<GeneratorInstance> out;
    for (int a = 0; a < b->size(); ++a) {
      Congruence th = co_ ? theta_bot(b, a) : theta_top(b, a);
      auto [q, proj] = quotient(b, th);
      GeneratorInstance gi;
      gi.k = proj;
      gi.attach = identity_hom(b);
      gi.label = (co_ ? "theta(" : "theta(") + std::to_string(a) +
                 (co_ ? ",0)" : ",1)");
      out.push_back(std::move(gi));
    }
    return out;
  }

  bool in_generator_class(const Homomorphism& n) const override {
    if (!check_homomorphism(n)) return false;
    if (!is_surjective(n)) return false;
    int unit = co_ ? bot(*n.cod) : top(*n.cod);
    std::vector<int> fiber;
    for (int x = 0; x < n.dom->size(); ++x)
      if (n.map[x] == unit) fiber.push_back(x);
    int a = co_ ? join_all(*n.dom, fiber) : meet_all(*n.dom, fiber);
    Congruence principal = co_ ? theta_bot(n.dom, a) : theta_top(n.dom, a);
    return kernel_congruence(n) == principal;
  }

  std::optional<GeneratorInstance> local_step(
      const Homomorphism& u) const override {
    int unit = co_ ? bot(*u.cod) : top(*u.cod);
    int own = co_ ? bot(*u.dom) : top(*u.dom);
    for (int x = 0; x < u.dom->size(); ++x) {
      if (x == own || u.map[x] != unit) continue;
      Congruence th = co_ ? theta_bot(u.dom, x) : theta_top(u.dom, x);
      auto [q, proj] = quotient(u.dom, th);
      GeneratorInstance gi;
      gi.k = proj;
      gi.attach = identity_hom(u.dom);
      gi.label = "theta(" + std::to_string(x) + (co_ ? ",0)" : ",1)");
      return gi;
    }
    return std::nullopt;
  }

  bool local_map_test(const Homomorphism& u) const override {
    int unit = co_ ? bot(*u.cod) : top(*u.cod);
    int own = co_ ? bot(*u.dom) : top(*u.dom);
    for (int x = 0; x < u.dom->size(); ++x)
      if ((u.map[x] == unit) != (x == own)) return false;
    return true;
  }

  std::vector<CoverFamily> cover_families(const AlgebraPtr& b) const override {
    std::vector<CoverFamily> out;
    int target = co_ ? bot(*b) : top(*b);
    for (const auto& anti : antichains_with_join(b, target, co_)) {
      CoverFamily fam;
      std::ostringstream lbl;
      lbl << (co_ ? "meet{" : "join{");
      for (int a : anti) {
        Congruence th = co_ ? theta_bot(b, a) : theta_top(b, a);
        fam.members.push_back(quotient(b, th).second);
        lbl << a << ",";
      }
      lbl << "}";
      fam.label = lbl.str();
      out.push_back(std::move(fam));
    }
    return out;
  }

  std::vector<CandidatePoint> candidate_local_forms(
      const AlgebraPtr& b) const override {
    std::vector<CandidatePoint> out;
    auto sets = co_ ? prime_ideals(b) : prime_filters(b);
    for (const auto& f : sets) {
      CandidatePoint p;
      p.filter = f;
      Congruence th = co_ ? theta_bot(b, meet_all_dual(b, f))
                          : theta_top(b, meet_all(*b, f));
      p.local_form = quotient(b, th).second;
      std::ostringstream lbl;
      lbl << (co_ ? "I={" : "F={");
      for (int e : f) lbl << e << ",";
      lbl << "}";
      p.label = lbl.str();
      out.push_back(std::move(p));
    }
    return out;
  }

  std::optional<AlgebraPtr> stalk_closed_form(
      const AlgebraPtr& b, const CandidatePoint& p) const override {
    if (co_) {
      Congruence th = theta_bot(b, meet_all_dual(b, p.filter));
      return quotient(b, th).first;
    }
    Congruence th = theta_min(b, p.filter);
    return quotient(b, th).first;
  }

  std::vector<AlgebraPtr> orthogonality_probes() const override {
    return {chain(2), chain(3), two_by_two()};
  }

 private:
  static int meet_all_dual(const AlgebraPtr& b, const std::vector<int>& xs) {
    return join_all(*b, xs);  // ideals are generated by their join
  }

  bool co_;
  std::shared_ptr<const TheoryPlugin> theory_;
};

}  // namespace

GeometryPtr zariski_geometry() {
  static GeometryPtr g = std::make_shared<const DlatGeometry>(false);
  return g;
}

GeometryPtr cozariski_geometry() {
  static GeometryPtr g = std::make_shared<const DlatGeometry>(true);
  return g;
}

}  // namespace specsite::dlat
