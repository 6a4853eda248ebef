#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "specsite/errors.hpp"

namespace specsite {

class FiniteAlgebra;
using AlgebraPtr = std::shared_ptr<const FiniteAlgebra>;

struct Operation {
  std::string name;
  int arity = 0;
};

/// An operational signature plus the theory plugin's law checker.
/// The checker returns a human-readable witness for the first violated
/// law, or nullopt when the tables are a model.
class Signature {
 public:
  using LawChecker =
      std::function<std::optional<std::string>(const FiniteAlgebra&)>;

  Signature(std::string name, std::vector<Operation> ops, LawChecker laws);

  const std::string& name() const { return name_; }
  const std::vector<Operation>& operations() const { return ops_; }
  int operation_index(const std::string& op_name) const;
  std::optional<std::string> check_laws(const FiniteAlgebra& a) const;
  bool same_shape(const Signature& other) const;

 private:
  std::string name_;
  std::vector<Operation> ops_;
  LawChecker laws_;
};

using SignaturePtr = std::shared_ptr<const Signature>;

/// A finite algebra: carrier {0..n-1} with one total table per operation.
/// Tables are validated for range and against the plugin laws on
/// construction; values are immutable afterwards.
class FiniteAlgebra {
 public:
  /// `tables[i]` is the row-major table of operation i: for arity k the
  /// entry for arguments (x1..xk) sits at index x1*n^(k-1)+...+xk.
  FiniteAlgebra(SignaturePtr sig, int carrier_size,
                std::vector<std::vector<int>> tables, bool check_laws = true);

  const SignaturePtr& signature() const { return sig_; }
  int size() const { return n_; }
  const std::vector<std::vector<int>>& tables() const { return tables_; }

  int apply(int op, const std::vector<int>& args) const;
  int apply2(int op, int x, int y) const;  // binary fast path
  int constant(int op) const { return tables_[op][0]; }

  bool operator==(const FiniteAlgebra& other) const;
  bool operator!=(const FiniteAlgebra& other) const { return !(*this == other); }

  /// Deterministic structural key (signature name, size, tables).
  std::string structure_key() const;

 private:
  SignaturePtr sig_;
  int n_;
  std::vector<std::vector<int>> tables_;
};

AlgebraPtr make_algebra(SignaturePtr sig, int n,
                        std::vector<std::vector<int>> tables,
                        bool check_laws = true);

/// A total map between carriers. Construction checks totality/range
/// only; use check_homomorphism for the algebraic condition.
struct Homomorphism {
  AlgebraPtr dom;
  AlgebraPtr cod;
  std::vector<int> map;

  Homomorphism() = default;
  Homomorphism(AlgebraPtr d, AlgebraPtr c, std::vector<int> m);

  int operator()(int x) const { return map[x]; }
  bool operator==(const Homomorphism& o) const;
  bool operator!=(const Homomorphism& o) const { return !(*this == o); }
};

/// A congruence presented as a block id per carrier element. Blocks are
/// numbered by first occurrence, so the block of element 0 is 0.
struct Congruence {
  AlgebraPtr algebra;
  std::vector<int> block;

  int num_blocks() const;
  bool related(int a, int b) const { return block[a] == block[b]; }
  bool operator==(const Congruence& o) const;
  bool is_diagonal() const;

  /// Containment as relations: every pair related here is related in o.
  bool contained_in(const Congruence& o) const;
};

// ---------------------------------------------------------------------------
// Operations

Homomorphism identity_hom(const AlgebraPtr& a);
Homomorphism compose(const Homomorphism& g, const Homomorphism& f);  // g∘f

bool check_homomorphism(const Homomorphism& f);
bool is_surjective(const Homomorphism& f);
bool is_injective(const Homomorphism& f);
bool is_bijective_homomorphism(const Homomorphism& f);

/// Kernel of f as a congruence on dom(f) (blocks = fibers, canonical
/// numbering).
Congruence kernel_congruence(const Homomorphism& f);

/// All homomorphisms A -> B in lexicographic order of the map vector.
/// Deterministic; spends budget per visited search node.
std::vector<Homomorphism> enumerate_homs(const AlgebraPtr& a,
                                         const AlgebraPtr& b, Budget& budget);

/// Homs A -> B with prescribed images: `pin[i] >= 0` forces map[i].
std::vector<Homomorphism> enumerate_homs_pinned(const AlgebraPtr& a,
                                                const AlgebraPtr& b,
                                                const std::vector<int>& pin,
                                                Budget& budget);

/// Smallest congruence identifying a and b (fixpoint closure).
Congruence principal_congruence(const AlgebraPtr& a, int x, int y);

/// Smallest congruence containing all the given pairs.
Congruence congruence_from_pairs(const AlgebraPtr& a,
                                 const std::vector<std::pair<int, int>>& pairs);

/// Join of two congruences on the same algebra.
Congruence congruence_join(const Congruence& t1, const Congruence& t2);

/// Quotient algebra plus the canonical projection. Blocks are relabeled
/// so the block of the least element gets the least fresh id; equal
/// inputs give bit-identical outputs.
std::pair<AlgebraPtr, Homomorphism> quotient(const AlgebraPtr& a,
                                             const Congruence& theta);

/// Pushout of a surjection q: A↠A/θ along h: A→B. Returns
/// (q': B↠B/h*θ, h': A/θ→B/h*θ); throws NotSurjective otherwise.
std::pair<Homomorphism, Homomorphism> pushout_surjection(
    const Homomorphism& q, const Homomorphism& h);

/// First bijective homomorphism A→B in canonical order, if any.
std::optional<Homomorphism> find_isomorphism(const AlgebraPtr& a,
                                             const AlgebraPtr& b);

/// First iso phi: cod(n1)→cod(n2) with phi∘n1 = n2, if any. Both maps
/// must share their domain object.
std::optional<Homomorphism> find_isomorphism_over_base(const Homomorphism& n1,
                                                       const Homomorphism& n2);

}  // namespace specsite
