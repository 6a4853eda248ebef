#pragma once

#include <string>
#include <vector>

#include "specsite/theories/dlat.hpp"
#include "specsite/theory.hpp"

namespace specsite::slat {

/// Meet-semilattices with a top unit: operations meet, top.
SignaturePtr slat_signature();

AlgebraPtr chain(int n);
/// The four-element meet-semilattice {0, a, b, 1} with a∧b = 0.
AlgebraPtr four_element_vee();
/// Meet-semilattice reduct of the order (meets of the poset must exist).
AlgebraPtr from_poset(const dlat::Poset& p);

bool leq(const FiniteAlgebra& s, int x, int y);
int top(const FiniteAlgebra& s);

/// Filters: meet-closed upsets containing top. Not required proper
/// (there is no bottom in the signature); every finite filter is a
/// principal upset, so there are exactly |S| of them.
std::vector<std::vector<int>> filters(const AlgebraPtr& s);

/// All meet-semilattices with top of size <= max_size up to iso.
std::vector<AlgebraPtr> enumerate_semilattices(int max_size);

struct KofReport {
  int num_points = 0;
  int carrier_size = 0;
  int num_opens = 0;
  int num_kof = 0;        // compact open filters of the spectrum space
  bool iso_found = false; // a -> U_a is a meet-iso onto KOF
  std::string detail;
  bool pass() const { return iso_found && num_points == carrier_size; }
};

/// Builds the finite spectrum space of S (points = filters, opens
/// generated by the sets U_a = {F : a in F}), derives the
/// specialization preorder from the topology itself, computes the
/// compact open filters and checks that a -> U_a is a meet-semilattice
/// isomorphism onto them. Throws ReconstructionFailure when it is not.
KofReport kof_reconstruction(const AlgebraPtr& s);

class SlatTheory : public TheoryPlugin {
 public:
  std::string id() const override { return "slat"; }
  SignaturePtr signature() const override { return slat_signature(); }
  std::vector<AlgebraPtr> enumerate_algebras(int max_size) const override {
    return enumerate_semilattices(max_size);
  }
};

/// The Jipsen–Moshier geometry: 1-minimal quotients as generators,
/// top-reflecting maps as local maps, and no topology at all.
GeometryPtr jm_geometry();

}  // namespace specsite::slat
