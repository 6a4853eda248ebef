#include "specsite/theories/cring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace specsite::cring {

namespace {

enum Op { kAdd = 0, kMul = 1, kNeg = 2, kOne = 3, kZero = 4 };

std::optional<std::string> check_cring_laws(const FiniteAlgebra& a) {
  int n = a.size();
  int zero = a.constant(kZero), one = a.constant(kOne);
  auto add = [&](int x, int y) { return a.apply2(kAdd, x, y); };
  auto mul = [&](int x, int y) { return a.apply2(kMul, x, y); };
  auto neg = [&](int x) { return a.apply(kNeg, {x}); };
  for (int x = 0; x < n; ++x) {
    if (add(x, zero) != x) return "zero not additive unit";
    if (add(x, neg(x)) != zero) return "negation fails";
    if (mul(x, one) != x) return "one not multiplicative unit";
    for (int y = 0; y < n; ++y) {
      if (add(x, y) != add(y, x)) return "addition not commutative";
      if (mul(x, y) != mul(y, x)) return "multiplication not commutative";
      for (int z = 0; z < n; ++z) {
        if (add(add(x, y), z) != add(x, add(y, z))) return "addition not associative";
        if (mul(mul(x, y), z) != mul(x, mul(y, z))) return "multiplication not associative";
        if (mul(x, add(y, z)) != add(mul(x, y), mul(x, z))) return "not distributive";
      }
    }
  }
  return std::nullopt;
}

}  // namespace

SignaturePtr cring_signature() {
  static SignaturePtr sig = std::make_shared<const Signature>(
      "cring",
      std::vector<Operation>{
          {"add", 2}, {"mul", 2}, {"neg", 1}, {"one", 0}, {"zero", 0}},
      &check_cring_laws);
  return sig;
}

AlgebraPtr zn(int n) {
  if (n < 1) throw InputError("zn needs n >= 1");
  std::vector<int> add(n * n), mul(n * n), neg(n);
  for (int x = 0; x < n; ++x) {
    neg[x] = (n - x) % n;
    for (int y = 0; y < n; ++y) {
      add[x * n + y] = (x + y) % n;
      mul[x * n + y] = (x * y) % n;
    }
  }
  return make_algebra(cring_signature(), n,
                      {std::move(add), std::move(mul), std::move(neg),
                       {1 % n}, {0}});
}

AlgebraPtr ring_product(const AlgebraPtr& r, const AlgebraPtr& s) {
  int nr = r->size(), ns = s->size(), n = nr * ns;
  auto pack = [&](int x, int y) { return x * ns + y; };
  std::vector<int> add(n * n), mul(n * n), neg(n);
  for (int x1 = 0; x1 < nr; ++x1)
    for (int y1 = 0; y1 < ns; ++y1) {
      int p = pack(x1, y1);
      neg[p] = pack(r->apply(kNeg, {x1}), s->apply(kNeg, {y1}));
      for (int x2 = 0; x2 < nr; ++x2)
        for (int y2 = 0; y2 < ns; ++y2) {
          int q = pack(x2, y2);
          add[p * n + q] = pack(r->apply2(kAdd, x1, x2), s->apply2(kAdd, y1, y2));
          mul[p * n + q] = pack(r->apply2(kMul, x1, x2), s->apply2(kMul, y1, y2));
        }
    }
  return make_algebra(cring_signature(), n,
                      {std::move(add), std::move(mul), std::move(neg),
                       {pack(r->constant(kOne), s->constant(kOne))},
                       {pack(r->constant(kZero), s->constant(kZero))}});
}

bool is_unit(const FiniteAlgebra& r, int a) {
  for (int x = 0; x < r.size(); ++x)
    if (r.apply2(kMul, a, x) == r.constant(kOne)) return true;
  return false;
}

std::pair<AlgebraPtr, Homomorphism> localization(const AlgebraPtr& r, int a) {
  // Powers of a stabilize on an idempotent e = a^k with a^k = a^{2k};
  // R[1/a] = eR.
  int n = r->size();
  std::vector<int> pow(2 * (n + 1) + 1);
  pow[0] = r->constant(kOne);
  for (std::size_t i = 1; i < pow.size(); ++i)
    pow[i] = r->apply2(kMul, pow[i - 1], a);
  int e = -1;
  for (int k = 1; 2 * k < static_cast<int>(pow.size()); ++k)
    if (pow[k] == pow[2 * k]) {
      e = pow[k];
      break;
    }
  if (e < 0) throw Error("localization: no stable idempotent found");
  std::vector<int> els;
  for (int x = 0; x < n; ++x) {
    int ex = r->apply2(kMul, e, x);
    if (std::find(els.begin(), els.end(), ex) == els.end()) els.push_back(ex);
  }
  std::sort(els.begin(), els.end());
  int m = static_cast<int>(els.size());
  auto idx = [&](int x) {
    return static_cast<int>(std::lower_bound(els.begin(), els.end(), x) -
                            els.begin());
  };
  std::vector<int> add(m * m), mul(m * m), neg(m);
  for (int i = 0; i < m; ++i) {
    neg[i] = idx(r->apply2(kMul, e, r->apply(kNeg, {els[i]})));
    for (int j = 0; j < m; ++j) {
      add[i * m + j] = idx(r->apply2(kAdd, els[i], els[j]));
      mul[i * m + j] = idx(r->apply2(kMul, els[i], els[j]));
    }
  }
  auto loc = make_algebra(cring_signature(), m,
                          {std::move(add), std::move(mul), std::move(neg),
                           {idx(e)}, {idx(r->constant(kZero))}});
  std::vector<int> map(n);
  for (int x = 0; x < n; ++x) map[x] = idx(r->apply2(kMul, e, x));
  return {loc, Homomorphism(r, loc, std::move(map))};
}

std::vector<std::vector<int>> ideals(const AlgebraPtr& r) {
  int n = r->size();
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    if (!(mask & (1u << r->constant(kZero)))) continue;
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      if (!(mask & (1u << x))) continue;
      for (int y = 0; y < n && ok; ++y) {
        if ((mask & (1u << y)) && !(mask & (1u << r->apply2(kAdd, x, y))))
          ok = false;
        if (!(mask & (1u << r->apply2(kMul, x, y)))) ok = false;
      }
    }
    if (!ok) continue;
    std::vector<int> els;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) els.push_back(i);
    out.push_back(std::move(els));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<std::vector<int>> prime_ideals(const AlgebraPtr& r) {
  std::vector<std::vector<int>> out;
  int n = r->size();
  for (const auto& ideal : ideals(r)) {
    if (static_cast<int>(ideal.size()) == n) continue;  // proper
    std::vector<char> in(n, 0);
    for (int e : ideal) in[e] = 1;
    bool prime = true;
    for (int x = 0; x < n && prime; ++x)
      for (int y = 0; y < n; ++y)
        if (in[r->apply2(kMul, x, y)] && !in[x] && !in[y]) {
          prime = false;
          break;
        }
    if (prime) out.push_back(ideal);
  }
  return out;
}

bool is_local_ring(const AlgebraPtr& r) {
  // Unique maximal ideal <=> the non-units form an ideal (and the ring
  // is nonzero).
  if (r->size() == 1) return false;
  std::vector<int> nonunits;
  for (int x = 0; x < r->size(); ++x)
    if (!is_unit(*r, x)) nonunits.push_back(x);
  std::vector<char> in(r->size(), 0);
  for (int x : nonunits) in[x] = 1;
  for (int x : nonunits) {
    for (int y : nonunits)
      if (!in[r->apply2(kAdd, x, y)]) return false;
    for (int y = 0; y < r->size(); ++y)
      if (!in[r->apply2(kMul, x, y)]) return false;
  }
  return true;
}

std::vector<AlgebraPtr> CringTheory::enumerate_algebras(int max_size) const {
  std::vector<AlgebraPtr> out;
  for (int n = 1; n <= max_size; ++n) out.push_back(zn(n));
  for (int a = 2; a <= max_size; ++a)
    for (int b = a; b <= max_size; ++b)
      if (a * b <= max_size) out.push_back(ring_product(zn(a), zn(b)));
  std::vector<AlgebraPtr> dedup;
  for (const auto& r : out) {
    bool fresh = true;
    for (const auto& s : dedup)
      if (find_isomorphism(r, s)) {
        fresh = false;
        break;
      }
    if (fresh) dedup.push_back(r);
  }
  std::sort(dedup.begin(), dedup.end(),
            [](const AlgebraPtr& a, const AlgebraPtr& b) {
              if (a->size() != b->size()) return a->size() < b->size();
              return a->structure_key() < b->structure_key();
            });
  return dedup;
}

namespace {

class RingZariski : public GeometrySpec {
 public:
  RingZariski() : theory_(std::make_shared<CringTheory>()) {}

  std::string id() const override { return "ring-zariski"; }
  const TheoryPlugin& theory() const override { return *theory_; }

  std::vector<GeneratorInstance> generator_instances(
      const AlgebraPtr& b) const override {
    std::vector<GeneratorInstance> out;
    for (int a = 0; a < b->size(); ++a) {
      GeneratorInstance gi;
      gi.k = localization(b, a).second;
      gi.attach = identity_hom(b);
      gi.label = "invert(" + std::to_string(a) + ")";
      out.push_back(std::move(gi));
    }
    return out;
  }

  bool in_generator_class(const Homomorphism& n) const override {
    if (!check_homomorphism(n)) return false;
    for (int a = 0; a < n.dom->size(); ++a) {
      auto [loc, h] = localization(n.dom, a);
      if (h.cod->size() != n.cod->size()) continue;
      if (find_isomorphism_over_base(h, n)) return true;
    }
    return false;
  }

  std::optional<GeneratorInstance> local_step(
      const Homomorphism& u) const override {
    for (int a = 0; a < u.dom->size(); ++a) {
      if (is_unit(*u.dom, a) || !is_unit(*u.cod, u.map[a])) continue;
      GeneratorInstance gi;
      gi.k = localization(u.dom, a).second;
      gi.attach = identity_hom(u.dom);
      gi.label = "invert(" + std::to_string(a) + ")";
      return gi;
    }
    return std::nullopt;
  }

  bool local_map_test(const Homomorphism& u) const override {
    for (int a = 0; a < u.dom->size(); ++a)
      if (is_unit(*u.cod, u.map[a]) && !is_unit(*u.dom, a)) return false;
    return true;
  }

  std::vector<CoverFamily> cover_families(const AlgebraPtr& b) const override {
    // Families of localizations at {a_i} generating the unit ideal,
    // deduplicated by the induced idempotent set.
    int n = b->size();
    std::vector<CoverFamily> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> els;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) els.push_back(i);
      if (!generates_unit_ideal(b, els)) continue;
      CoverFamily fam;
      std::ostringstream lbl;
      lbl << "unit-ideal{";
      for (int a : els) {
        fam.members.push_back(localization(b, a).second);
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
    for (const auto& p : prime_ideals(b)) {
      // Localize at the multiplicative complement: invert the product of
      // all elements outside p.
      std::vector<char> in(b->size(), 0);
      for (int e : p) in[e] = 1;
      int prod = b->constant(kOne);
      for (int x = 0; x < b->size(); ++x)
        if (!in[x]) prod = b->apply2(kMul, prod, x);
      CandidatePoint cp;
      cp.filter = p;
      cp.local_form = localization(b, prod).second;
      std::ostringstream lbl;
      lbl << "p={";
      for (int e : p) lbl << e << ",";
      lbl << "}";
      cp.label = lbl.str();
      out.push_back(std::move(cp));
    }
    return out;
  }

  std::vector<AlgebraPtr> orthogonality_probes() const override {
    return {zn(2), zn(4)};
  }

 private:
  static bool generates_unit_ideal(const AlgebraPtr& b,
                                   const std::vector<int>& els) {
    // Smallest ideal containing els must contain 1: close under +, ring
    // multiples.
    std::vector<char> in(b->size(), 0);
    in[b->constant(kZero)] = 1;
    for (int e : els) in[e] = 1;
    bool changed = true;
    while (changed) {
      changed = false;
      for (int x = 0; x < b->size(); ++x) {
        if (!in[x]) continue;
        for (int y = 0; y < b->size(); ++y) {
          if (in[y] && !in[b->apply2(kAdd, x, y)]) {
            in[b->apply2(kAdd, x, y)] = 1;
            changed = true;
          }
          if (!in[b->apply2(kMul, x, y)]) {
            in[b->apply2(kMul, x, y)] = 1;
            changed = true;
          }
        }
      }
    }
    return in[b->constant(kOne)] != 0;
  }

  std::shared_ptr<const TheoryPlugin> theory_;
};

}  // namespace

GeometryPtr ring_zariski_geometry() {
  static GeometryPtr g = std::make_shared<const RingZariski>();
  return g;
}

}  // namespace specsite::cring
