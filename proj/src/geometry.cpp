#include "specsite/geometry.hpp"

#include <algorithm>
#include <sstream>

namespace specsite {

namespace {

/// Does f factor through n, i.e. is there h with h∘n = f?
bool factors_through(const Homomorphism& f, const Homomorphism& n,
                     Budget& budget) {
  if (*f.dom != *n.dom) return false;
  std::vector<int> pin(n.cod->size(), -1);
  for (int x = 0; x < n.dom->size(); ++x) {
    int v = n.map[x], w = f.map[x];
    if (pin[v] >= 0 && pin[v] != w) return false;
    pin[v] = w;
  }
  return !enumerate_homs_pinned(n.cod, f.cod, pin, budget).empty();
}

/// Sieve-level refinement: every member of fam1 factors through some
/// member of fam2.
bool family_refines(const std::vector<Homomorphism>& fam1,
                    const std::vector<Homomorphism>& fam2, Budget& budget) {
  for (const auto& m1 : fam1) {
    bool ok = false;
    for (const auto& m2 : fam2)
      if (factors_through(m1, m2, budget)) {
        ok = true;
        break;
      }
    if (!ok) return false;
  }
  return true;
}

std::string family_key(const std::vector<Homomorphism>& fam) {
  std::vector<std::string> keys;
  for (const auto& m : fam) {
    std::ostringstream os;
    os << m.cod->structure_key() << '#';
    for (int v : m.map) os << v << ',';
    keys.push_back(os.str());
  }
  std::sort(keys.begin(), keys.end());
  std::string out;
  for (auto& k : keys) out += k + ";";
  return out;
}

}  // namespace

std::vector<GeneralizedCover> generalized_covers(const AlgebraPtr& b,
                                                 const GeometrySpec& g,
                                                 Budget& budget) {
  std::vector<GeneralizedCover> raw;
  // Generating covers at B itself (attachment = identity).
  for (const auto& fam : g.cover_families(b)) {
    GeneralizedCover c;
    c.base = b;
    c.members = fam.members;
    c.provenance = fam.label + " @ id";
    raw.push_back(std::move(c));
  }
  // Covers pushed from the probe objects along every attachment.
  for (const AlgebraPtr& k : g.orthogonality_probes()) {
    if (!k->signature()->same_shape(*b->signature())) continue;
    auto fams = g.cover_families(k);
    if (fams.empty()) continue;
    for (const auto& a : enumerate_homs(k, b, budget)) {
      for (const auto& fam : fams) {
        GeneralizedCover c;
        c.base = b;
        bool ok = true;
        for (const auto& m : fam.members) {
          if (!is_surjective(m)) {
            ok = false;
            break;
          }
          c.members.push_back(pushout_surjection(m, a).first);
        }
        if (!ok) continue;
        std::ostringstream os;
        os << fam.label << " @ [";
        for (int v : a.map) os << v << ",";
        os << "]";
        c.provenance = os.str();
        raw.push_back(std::move(c));
      }
    }
  }
  // Normalize members: drop those factoring through another member
  // (keeps the generated sieve), then dedup families by mutual
  // refinement; canonical order by (size, member keys).
  std::vector<GeneralizedCover> out;
  for (auto& c : raw) {
    std::vector<Homomorphism> keep;
    for (std::size_t i = 0; i < c.members.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < c.members.size() && !redundant; ++j) {
        if (i == j) continue;
        if (factors_through(c.members[i], c.members[j], budget)) {
          // Mutual factoring: keep the earlier one only.
          if (factors_through(c.members[j], c.members[i], budget))
            redundant = j < i;
          else
            redundant = true;
        }
      }
      if (!redundant) keep.push_back(c.members[i]);
    }
    c.members = std::move(keep);
    bool dup = false;
    for (const auto& prev : out)
      if (family_refines(c.members, prev.members, budget) &&
          family_refines(prev.members, c.members, budget)) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(),
            [](const GeneralizedCover& x, const GeneralizedCover& y) {
              if (x.members.size() != y.members.size())
                return x.members.size() < y.members.size();
              return family_key(x.members) < family_key(y.members);
            });
  return out;
}

bool is_local_object(const AlgebraPtr& a, const GeometrySpec& g,
                     Budget& budget) {
  Homomorphism id = identity_hom(a);
  for (const auto& cover : generalized_covers(a, g, budget)) {
    bool lifted = false;
    for (const auto& n : cover.members)
      if (factors_through(id, n, budget)) {
        lifted = true;
        break;
      }
    if (!lifted) return false;
  }
  return true;
}

bool is_local_map(const Homomorphism& u, const GeometrySpec& g,
                  Budget& budget) {
  bool syntactic = g.local_map_test(u);
  bool oracle = true;
  std::string witness;
  auto probes = g.orthogonality_probes();
  probes.push_back(u.dom);
  probes.push_back(u.cod);
  for (const AlgebraPtr& p : probes) {
    for (const auto& inst : g.generator_instances(p)) {
      Homomorphism l = inst.k;
      if (!is_orthogonal(l, u, budget)) {
        oracle = false;
        witness = "generator " + inst.label + " at size " +
                  std::to_string(p->size());
        break;
      }
    }
    if (!oracle) break;
  }
  if (syntactic != oracle)
    throw OracleDisagreement(
        "is_local_map: syntactic test says " +
        std::string(syntactic ? "local" : "non-local") +
        " but the orthogonality oracle disagrees (" +
        (witness.empty() ? "all probes lift" : witness) + ")");
  return syntactic;
}

Factorization admissible_factorize(const Homomorphism& f,
                                   const GeometrySpec& g, Budget& budget) {
  if (!is_local_object(f.cod, g, budget))
    throw NotLocalInput("admissible_factorize: codomain is not local");
  Factorization fact = factorize(f, g);
  if (!is_local_object(fact.middle, g, budget)) {
    // Identify a failing cover for the witness.
    std::string which = "unknown";
    Homomorphism id = identity_hom(fact.middle);
    for (const auto& cover : generalized_covers(fact.middle, g, budget)) {
      bool lifted = false;
      for (const auto& n : cover.members)
        if (factors_through(id, n, budget)) lifted = true;
      if (!lifted) {
        which = cover.provenance;
        break;
      }
    }
    throw AdmissibilityViolation(
        "admissible_factorize: middle object is not local; failing cover: " +
        which);
  }
  return fact;
}

}  // namespace specsite
