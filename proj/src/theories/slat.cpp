#include "specsite/theories/slat.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace specsite::slat {

namespace {

enum Op { kMeet = 0, kTop = 1 };

std::optional<std::string> check_slat_laws(const FiniteAlgebra& a) {
  int n = a.size();
  int t = a.constant(kTop);
  auto mt = [&](int x, int y) { return a.apply2(kMeet, x, y); };
  for (int x = 0; x < n; ++x) {
    if (mt(x, x) != x) return "meet not idempotent at " + std::to_string(x);
    if (mt(x, t) != x) return "top not a unit at " + std::to_string(x);
    for (int y = 0; y < n; ++y) {
      if (mt(x, y) != mt(y, x)) return "meet not commutative";
      for (int z = 0; z < n; ++z)
        if (mt(mt(x, y), z) != mt(x, mt(y, z))) return "meet not associative";
    }
  }
  return std::nullopt;
}

}  // namespace

SignaturePtr slat_signature() {
  static SignaturePtr sig = std::make_shared<const Signature>(
      "slat", std::vector<Operation>{{"meet", 2}, {"top", 0}},
      &check_slat_laws);
  return sig;
}

AlgebraPtr from_poset(const dlat::Poset& p) {
  int n = p.n;
  if (n < 1) throw InputError("semilattice needs at least one element");
  std::vector<int> meet_t(n * n, -1);
  int t = -1;
  for (int x = 0; x < n; ++x) {
    bool is_top = true;
    for (int y = 0; y < n; ++y)
      if (!p.leq[y][x]) is_top = false;
    if (is_top) t = x;
  }
  if (t < 0) throw InputError("poset has no top element");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int m = -1;
      for (int z = 0; z < n; ++z) {
        if (!p.leq[z][x] || !p.leq[z][y]) continue;
        if (m < 0 || p.leq[m][z]) m = z;
      }
      if (m < 0) throw InputError("poset pair has no lower bound");
      for (int z = 0; z < n; ++z)
        if (p.leq[z][x] && p.leq[z][y] && !p.leq[z][m])
          throw InputError("poset pair has no greatest lower bound");
      meet_t[x * n + y] = m;
    }
  return make_algebra(slat_signature(), n, {std::move(meet_t), {t}});
}

AlgebraPtr chain(int n) {
  dlat::Poset p;
  p.n = n;
  p.leq.assign(n, std::vector<char>(n, 0));
  for (int x = 0; x < n; ++x)
    for (int y = x; y < n; ++y) p.leq[x][y] = 1;
  return from_poset(p);
}

AlgebraPtr four_element_vee() {
  dlat::Poset p;
  p.n = 4;
  p.leq.assign(4, std::vector<char>(4, 0));
  for (int x = 0; x < 4; ++x) p.leq[x][x] = p.leq[0][x] = p.leq[x][3] = 1;
  return from_poset(p);
}

bool leq(const FiniteAlgebra& s, int x, int y) {
  return s.apply2(kMeet, x, y) == x;
}
int top(const FiniteAlgebra& s) { return s.constant(kTop); }

std::vector<std::vector<int>> filters(const AlgebraPtr& s) {
  int n = s->size();
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> els;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) els.push_back(i);
    bool ok = (mask >> top(*s)) & 1u;
    for (std::size_t i = 0; i < els.size() && ok; ++i) {
      for (int y = 0; y < n; ++y)
        if (leq(*s, els[i], y) && !(mask & (1u << y))) ok = false;
      for (std::size_t j = 0; j < els.size(); ++j)
        if (!(mask & (1u << s->apply2(kMeet, els[i], els[j])))) ok = false;
    }
    if (ok) out.push_back(std::move(els));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<AlgebraPtr> enumerate_semilattices(int max_size) {
  std::vector<AlgebraPtr> out;
  for (int n = 1; n <= max_size; ++n) {
    for (const dlat::Poset& p : dlat::enumerate_posets(n)) {
      AlgebraPtr s;
      try {
        s = from_poset(p);
      } catch (const InputError&) {
        continue;
      }
      bool fresh = true;
      for (const AlgebraPtr& e : out)
        if (find_isomorphism(s, e)) {
          fresh = false;
          break;
        }
      if (fresh) out.push_back(std::move(s));
    }
  }
  std::sort(out.begin(), out.end(), [](const AlgebraPtr& a, const AlgebraPtr& b) {
    if (a->size() != b->size()) return a->size() < b->size();
    return a->structure_key() < b->structure_key();
  });
  return out;
}

KofReport kof_reconstruction(const AlgebraPtr& s) {
  KofReport rep;
  rep.carrier_size = s->size();
  auto fs = filters(s);
  rep.num_points = static_cast<int>(fs.size());
  int np = rep.num_points;

  // Basic opens U_a = {F : a in F}, as point bitmasks.
  int n = s->size();
  std::vector<unsigned> basic(n, 0);
  for (int a = 0; a < n; ++a)
    for (int i = 0; i < np; ++i)
      if (std::find(fs[i].begin(), fs[i].end(), a) != fs[i].end())
        basic[a] |= (1u << i);

  // The topology: all unions of basic opens (finite space).
  std::set<unsigned> opens;
  opens.insert(0u);
  for (unsigned sub = 1; sub < (1u << n); ++sub) {
    unsigned u = 0;
    for (int a = 0; a < n; ++a)
      if (sub & (1u << a)) u |= basic[a];
    opens.insert(u);
  }
  rep.num_opens = static_cast<int>(opens.size());

  // Specialization preorder derived from the topology: x <= y iff every
  // open containing x contains y.
  std::vector<std::vector<char>> spec(np, std::vector<char>(np, 1));
  for (unsigned o : opens)
    for (int x = 0; x < np; ++x)
      for (int y = 0; y < np; ++y)
        if ((o & (1u << x)) && !(o & (1u << y))) spec[x][y] = 0;

  // Compact open filters: nonempty opens that are down-directed in the
  // specialization preorder (openness already makes them upsets; at
  // finite scale every open is compact).
  std::vector<unsigned> kof;
  for (unsigned o : opens) {
    if (o == 0) continue;
    bool directed = true;
    for (int x = 0; x < np && directed; ++x) {
      if (!(o & (1u << x))) continue;
      for (int y = 0; y < np && directed; ++y) {
        if (!(o & (1u << y))) continue;
        bool has_lower = false;
        for (int z = 0; z < np; ++z)
          if ((o & (1u << z)) && spec[z][x] && spec[z][y]) has_lower = true;
        if (!has_lower) directed = false;
      }
    }
    if (directed) kof.push_back(o);
  }
  rep.num_kof = static_cast<int>(kof.size());

  // a -> U_a must be a bijection onto KOF turning meet into intersection
  // and top into the whole space.
  bool iso = static_cast<int>(kof.size()) == n;
  std::vector<char> hit(kof.size(), 0);
  for (int a = 0; a < n && iso; ++a) {
    auto it = std::find(kof.begin(), kof.end(), basic[a]);
    if (it == kof.end()) {
      iso = false;
      break;
    }
    std::size_t idx = static_cast<std::size_t>(it - kof.begin());
    if (hit[idx]) iso = false;  // not injective
    hit[idx] = 1;
  }
  for (int a = 0; a < n && iso; ++a)
    for (int b = 0; b < n && iso; ++b)
      if ((basic[a] & basic[b]) != basic[s->apply2(kMeet, a, b)]) iso = false;
  unsigned full_space = (np >= 32) ? ~0u : ((1u << np) - 1u);
  if (iso && basic[top(*s)] != full_space) iso = false;
  rep.iso_found = iso;
  if (!rep.pass()) {
    std::ostringstream os;
    os << "points=" << rep.num_points << " carrier=" << rep.carrier_size
       << " kof=" << rep.num_kof << " iso=" << (iso ? "yes" : "no");
    rep.detail = os.str();
    throw ReconstructionFailure("kof_reconstruction failed: " + rep.detail);
  }
  return rep;
}

namespace {

class JmGeometry : public GeometrySpec {
 public:
  JmGeometry() : theory_(std::make_shared<SlatTheory>()) {}

  std::string id() const override { return "jm"; }
  const TheoryPlugin& theory() const override { return *theory_; }

  std::vector<GeneratorInstance> generator_instances(
      const AlgebraPtr& b) const override {
    std::vector<GeneratorInstance> out;
    for (int a = 0; a < b->size(); ++a) {
      Congruence th = principal_congruence(b, a, top(*b));
      GeneratorInstance gi;
      gi.k = quotient(b, th).second;
      gi.attach = identity_hom(b);
      gi.label = "theta(" + std::to_string(a) + ",1)";
      out.push_back(std::move(gi));
    }
    return out;
  }

  bool in_generator_class(const Homomorphism& n) const override {
    if (!check_homomorphism(n) || !is_surjective(n)) return false;
    std::vector<int> fiber;
    for (int x = 0; x < n.dom->size(); ++x)
      if (n.map[x] == top(*n.cod)) fiber.push_back(x);
    int a = top(*n.dom);
    for (int x : fiber) a = n.dom->apply2(kMeet, a, x);
    return kernel_congruence(n) == principal_congruence(n.dom, a, top(*n.dom));
  }

  std::optional<GeneratorInstance> local_step(
      const Homomorphism& u) const override {
    for (int x = 0; x < u.dom->size(); ++x) {
      if (x == top(*u.dom) || u.map[x] != top(*u.cod)) continue;
      Congruence th = principal_congruence(u.dom, x, top(*u.dom));
      GeneratorInstance gi;
      gi.k = quotient(u.dom, th).second;
      gi.attach = identity_hom(u.dom);
      gi.label = "theta(" + std::to_string(x) + ",1)";
      return gi;
    }
    return std::nullopt;
  }

  bool local_map_test(const Homomorphism& u) const override {
    for (int x = 0; x < u.dom->size(); ++x)
      if ((u.map[x] == top(*u.cod)) != (x == top(*u.dom))) return false;
    return true;
  }

  // No topology: every object is local.
  std::vector<CoverFamily> cover_families(const AlgebraPtr&) const override {
    return {};
  }

  std::vector<CandidatePoint> candidate_local_forms(
      const AlgebraPtr& b) const override {
    std::vector<CandidatePoint> out;
    for (const auto& f : filters(b)) {
      CandidatePoint p;
      p.filter = f;
      int a = top(*b);
      for (int x : f) a = b->apply2(kMeet, a, x);
      Congruence th = principal_congruence(b, a, top(*b));
      p.local_form = quotient(b, th).second;
      std::ostringstream lbl;
      lbl << "F={";
      for (int e : f) lbl << e << ",";
      lbl << "}";
      p.label = lbl.str();
      out.push_back(std::move(p));
    }
    return out;
  }

  std::optional<AlgebraPtr> stalk_closed_form(
      const AlgebraPtr& b, const CandidatePoint& p) const override {
    int a = top(*b);
    for (int x : p.filter) a = b->apply2(kMeet, a, x);
    return quotient(b, principal_congruence(b, a, top(*b))).first;
  }

  std::vector<AlgebraPtr> orthogonality_probes() const override {
    return {chain(2), four_element_vee()};
  }

 private:
  std::shared_ptr<const TheoryPlugin> theory_;
};

}  // namespace

GeometryPtr jm_geometry() {
  static GeometryPtr g = std::make_shared<const JmGeometry>();
  return g;
}

}  // namespace specsite::slat
