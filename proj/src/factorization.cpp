#include "specsite/factorization.hpp"

#include <algorithm>
#include <sstream>

namespace specsite {

void LiftingProblem::validate() const {
  if (compose(right, top) != compose(bottom, left))
    throw InputError("lifting problem square does not commute");
}

Homomorphism pushout_of_instance(const GeometrySpec& g,
                                 const GeneratorInstance& inst) {
  (void)g;
  if (is_surjective(inst.k))
    return pushout_surjection(inst.k, inst.attach).first;
  throw InputError(
      "pushout of a non-surjective generator requires a theory plugin hook");
}

Homomorphism EtaleWitness::replay(const GeometrySpec& g,
                                  const AlgebraPtr& from) const {
  Homomorphism acc = identity_hom(from);
  for (const GeneratorInstance& st : steps) {
    if (*st.attach.cod != *acc.cod)
      throw InputError("witness step attachment does not target the middle");
    Homomorphism n = pushout_of_instance(g, st);
    acc = compose(n, acc);
  }
  return acc;
}

std::vector<Homomorphism> diagonal_fillers(const LiftingProblem& p,
                                           Budget& budget) {
  p.validate();
  // d: K' -> X is pinned on the image of l by d(l(x)) = top(x).
  std::vector<int> pin(p.left.cod->size(), -1);
  for (int x = 0; x < p.left.dom->size(); ++x) {
    int v = p.left.map[x], w = p.top.map[x];
    if (pin[v] >= 0 && pin[v] != w) return {};
    pin[v] = w;
  }
  std::vector<Homomorphism> out;
  for (auto& d : enumerate_homs_pinned(p.left.cod, p.right.dom, pin, budget))
    if (compose(p.right, d) == p.bottom) out.push_back(std::move(d));
  return out;
}

bool is_orthogonal(const Homomorphism& l, const Homomorphism& r,
                   Budget& budget) {
  for (const auto& top : enumerate_homs(l.dom, r.dom, budget)) {
    // Bottoms completing the square: pinned on the image of l.
    std::vector<int> pin(l.cod->size(), -1);
    bool feasible = true;
    for (int x = 0; x < l.dom->size(); ++x) {
      int v = l.map[x], w = r.map[top.map[x]];
      if (pin[v] >= 0 && pin[v] != w) {
        feasible = false;
        break;
      }
      pin[v] = w;
    }
    if (!feasible) continue;
    for (const auto& bottom : enumerate_homs_pinned(l.cod, r.cod, pin, budget)) {
      LiftingProblem sq{l, r, top, bottom};
      if (diagonal_fillers(sq, budget).size() != 1) return false;
    }
  }
  return true;
}

Factorization factorize(const Homomorphism& f, const GeometrySpec& g) {
  Factorization out;
  out.etale_map = identity_hom(f.dom);
  out.middle = f.dom;
  Homomorphism u = f;
  int guard = 4 * f.dom->size() + 8;
  while (auto inst = g.local_step(u)) {
    if (--guard < 0)
      throw StepRuleDiverged("factorize: step rule did not terminate");
    Homomorphism n = pushout_of_instance(g, *inst);
    if (is_surjective(n) && kernel_congruence(n).is_diagonal())
      throw StepRuleDiverged("factorize: step made no progress");
    // Factor u through the step: u = u' ∘ n.
    Homomorphism uprime;
    if (is_surjective(n)) {
      std::vector<int> m(n.cod->size(), -1);
      for (int x = 0; x < n.dom->size(); ++x) {
        if (m[n.map[x]] >= 0 && m[n.map[x]] != u.map[x])
          throw StepRuleDiverged("factorize: local part does not factor through step");
        m[n.map[x]] = u.map[x];
      }
      uprime = Homomorphism(n.cod, u.cod, std::move(m));
    } else {
      throw StepRuleDiverged("factorize: non-surjective step without plugin hook");
    }
    out.etale.steps.push_back(*inst);
    out.etale_map = compose(n, out.etale_map);
    out.middle = n.cod;
    u = uprime;
  }
  if (!g.local_map_test(u))
    throw StepRuleDiverged("factorize: step rule stopped on a non-local map");
  out.local = u;
  return out;
}

namespace {

std::string describe(const Homomorphism& h) {
  std::ostringstream os;
  os << h.dom->size() << "->" << h.cod->size() << " [";
  for (int v : h.map) os << v << ",";
  os << "]";
  return os.str();
}

}  // namespace

SaturationReport verify_saturated(const GeometrySpec& g,
                                  const std::vector<AlgebraPtr>& sample,
                                  Budget& budget) {
  SaturationReport rep;
  // Class maps reachable from the sample: one-step pushouts at each
  // sample algebra and, for composition checks, at their codomains.
  std::vector<Homomorphism> class_maps;
  for (const AlgebraPtr& a : sample)
    for (const auto& inst : g.generator_instances(a))
      class_maps.push_back(pushout_of_instance(g, inst));

  // Iso containment: every isomorphism between sample algebras is in
  // the class.
  for (const AlgebraPtr& a : sample)
    for (const AlgebraPtr& b : sample) {
      if (auto iso = find_isomorphism(a, b)) {
        ++rep.checked;
        if (!g.in_generator_class(*iso))
          rep.violations.push_back("iso not in class: " + describe(*iso));
      }
    }

  // Composition closure.
  for (const Homomorphism& n1 : class_maps)
    for (const auto& inst : g.generator_instances(n1.cod)) {
      Homomorphism n2 = pushout_of_instance(g, inst);
      ++rep.checked;
      budget.spend();
      if (!g.in_generator_class(compose(n2, n1)))
        rep.violations.push_back("composite not in class: " + describe(n1) +
                                 " then " + describe(n2));
    }

  // Right-cancellation: n2 = h ∘ n1 with n1, n2 in the class forces h in
  // the class.
  for (const Homomorphism& n1 : class_maps)
    for (const Homomorphism& n2 : class_maps) {
      if (*n1.dom != *n2.dom) continue;
      for (const auto& h : enumerate_homs(n1.cod, n2.cod, budget)) {
        if (!(compose(h, n1) == n2)) continue;
        ++rep.checked;
        if (!g.in_generator_class(h))
          rep.violations.push_back("right-cancellation fails on triangle: " +
                                   describe(n1) + ", " + describe(n2) +
                                   ", factor " + describe(h));
      }
    }

  // Pushout closure along arbitrary maps between sample algebras.
  for (const Homomorphism& n : class_maps)
    for (const AlgebraPtr& b : sample)
      for (const auto& h : enumerate_homs(n.dom, b, budget)) {
        if (!is_surjective(n)) continue;
        Homomorphism pushed = pushout_surjection(n, h).first;
        ++rep.checked;
        if (!g.in_generator_class(pushed))
          rep.violations.push_back("pushout not in class: " + describe(n) +
                                   " along " + describe(h));
      }
  return rep;
}

bool anel_refinement_check(const GeometrySpec& g, const AnelSquare& sq,
                           Budget& budget,
                           const std::vector<AlgebraPtr>& extra_candidates) {
  if (!g.in_generator_class(sq.k))
    throw InputError("anel_refinement_check: k is not a generator-class map");
  // Candidate intermediates, smallest first so nontrivial factorizations
  // are reported before the always-working K1 = B.
  std::vector<AlgebraPtr> candidates;
  candidates.push_back(sq.k.dom);
  for (const auto& c : extra_candidates) candidates.push_back(c);
  candidates.push_back(sq.a0.cod);
  for (const AlgebraPtr& k1 : candidates) {
    for (const auto& a2 : enumerate_homs(sq.k.dom, k1, budget)) {
      for (const auto& a1 : enumerate_homs(k1, sq.a0.cod, budget)) {
        if (!(compose(a1, a2) == sq.a0)) continue;
        // Intermediate pushout of k along a2, then its transport to D.
        if (!is_surjective(sq.k)) continue;
        auto [p_map, kp] = pushout_surjection(sq.k, a2);
        // p_map: K1 -> P. Push along a1 to land on the original corner.
        auto [corner2, connect] = pushout_surjection(p_map, a1);
        // corner2: B -> P', and the square's own corner must agree up to
        // iso over B; use that iso to transport the connecting map.
        auto iso = find_isomorphism_over_base(corner2, sq.corner);
        if (!iso) continue;
        // connect: P -> P'; map P -> D is iso ∘ connect.
        Homomorphism to_d = compose(*iso, connect);
        for (const auto& h : enumerate_homs(sq.a.dom, p_map.cod, budget))
          if (compose(to_d, h) == sq.a) return true;
      }
    }
  }
  return false;
}

}  // namespace specsite
