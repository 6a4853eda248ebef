#pragma once

#include <optional>
#include <string>
#include <vector>

#include "specsite/theory.hpp"

namespace specsite::dlat {

/// Signature of bounded distributive lattices: bot, join, meet, top.
/// The law checker rejects non-lattices and non-distributive lattices
/// (M3, N5) with a named witness triple.
SignaturePtr dlat_signature();

// Constructors. Carriers are ordered so that element order extends the
// lattice order where natural (chains: 0 < 1 < ... < n-1).
AlgebraPtr chain(int n);
AlgebraPtr two_by_two();          // {0, a=1, b=2, 1=3}, a,b incomparable
AlgebraPtr diamond_m3_tables();   // not distributive; bypasses law check
AlgebraPtr pentagon_n5_tables();  // not distributive; bypasses law check

// Order helpers.
bool leq(const FiniteAlgebra& d, int x, int y);
int bot(const FiniteAlgebra& d);
int top(const FiniteAlgebra& d);
int meet(const FiniteAlgebra& d, int x, int y);
int join(const FiniteAlgebra& d, int x, int y);
int meet_all(const FiniteAlgebra& d, const std::vector<int>& xs);
int join_all(const FiniteAlgebra& d, const std::vector<int>& xs);

/// Proper filters (meet-closed upsets containing top, not containing
/// bot), as sorted element lists ordered by (size, elements).
std::vector<std::vector<int>> filters(const AlgebraPtr& d);
std::vector<std::vector<int>> prime_filters(const AlgebraPtr& d);
std::vector<std::vector<int>> prime_ideals(const AlgebraPtr& d);

std::vector<int> join_irreducibles(const AlgebraPtr& d);
std::vector<int> meet_irreducibles(const AlgebraPtr& d);

/// Order-dual lattice: meet/join and bot/top swapped, same carrier.
AlgebraPtr dual_lattice(const AlgebraPtr& d);

/// theta(a, 1): smallest congruence with a ~ top.
Congruence theta_top(const AlgebraPtr& d, int a);
/// theta(a, 0): smallest congruence with a ~ bot.
Congruence theta_bot(const AlgebraPtr& d, int a);

/// 1-minimal congruence at a filter F, computed two independent ways
/// (meet over all congruences whose top class is F, and join of the
/// principal theta(a,1) over a in F). Throws OracleDisagreement if the
/// two routes differ.
Congruence theta_min(const AlgebraPtr& d, const std::vector<int>& filter);

/// All congruences of d (every operation-compatible partition).
std::vector<Congruence> all_congruences(const AlgebraPtr& d);

/// All bounded distributive lattices with size <= max_size up to iso,
/// generated as downset lattices of small posets. Deterministic order.
std::vector<AlgebraPtr> enumerate_distributive_lattices(int max_size);

/// Independent generator: direct enumeration of all posets of size
/// <= max_size that happen to be distributive lattices. Used to
/// cross-validate the downset route and the known counts 1,1,1,2,3,5.
std::vector<AlgebraPtr> enumerate_distributive_lattices_direct(int max_size);

/// Poset utilities shared with slat and the Birkhoff oracle.
struct Poset {
  int n = 0;
  std::vector<std::vector<char>> leq;  // reflexive, antisymmetric, transitive
  bool operator==(const Poset& o) const { return n == o.n && leq == o.leq; }
};

std::vector<Poset> enumerate_posets(int n);          // size exactly n, up to iso
AlgebraPtr downset_lattice(const Poset& p);          // canonical element order
bool posets_isomorphic(const Poset& a, const Poset& b);

/// Downsets of p as bitmasks, in the canonical order used by
/// downset_lattice (by popcount, then numeric value).
std::vector<unsigned> downsets_of(const Poset& p);

class DlatTheory : public TheoryPlugin {
 public:
  std::string id() const override { return "dlat"; }
  SignaturePtr signature() const override { return dlat_signature(); }
  std::vector<AlgebraPtr> enumerate_algebras(int max_size) const override {
    return enumerate_distributive_lattices(max_size);
  }
};

/// Zariski geometry: generators are the principal 1-minimal quotients
/// D -> D/theta(a,1), local maps reflect the top element, covers are
/// antichain families with join 1.
GeometryPtr zariski_geometry();

/// coZariski geometry: 0-minimal quotients, 0-conservative local maps,
/// covers with meet 0.
GeometryPtr cozariski_geometry();

}  // namespace specsite::dlat
