#include "specsite/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace specsite {

namespace {

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

Signature::Signature(std::string name, std::vector<Operation> ops,
                     LawChecker laws)
    : name_(std::move(name)), ops_(std::move(ops)), laws_(std::move(laws)) {
  for (std::size_t i = 0; i < ops_.size(); ++i) {
    if (ops_[i].arity < 0)
      throw InputError("negative arity for operation " + ops_[i].name);
    for (std::size_t j = i + 1; j < ops_.size(); ++j)
      if (ops_[i].name == ops_[j].name)
        throw InputError("duplicate operation name " + ops_[i].name);
  }
}

int Signature::operation_index(const std::string& op_name) const {
  for (std::size_t i = 0; i < ops_.size(); ++i)
    if (ops_[i].name == op_name) return static_cast<int>(i);
  throw InputError("unknown operation " + op_name);
}

std::optional<std::string> Signature::check_laws(const FiniteAlgebra& a) const {
  if (!laws_) return std::nullopt;
  return laws_(a);
}

bool Signature::same_shape(const Signature& other) const {
  if (ops_.size() != other.ops_.size()) return false;
  for (std::size_t i = 0; i < ops_.size(); ++i)
    if (ops_[i].name != other.ops_[i].name ||
        ops_[i].arity != other.ops_[i].arity)
      return false;
  return true;
}

FiniteAlgebra::FiniteAlgebra(SignaturePtr sig, int carrier_size,
                             std::vector<std::vector<int>> tables,
                             bool check_laws)
    : sig_(std::move(sig)), n_(carrier_size), tables_(std::move(tables)) {
  if (!sig_) throw InputError("algebra needs a signature");
  if (n_ < 1) throw InputError("carrier size must be >= 1");
  const auto& ops = sig_->operations();
  if (tables_.size() != ops.size())
    throw InputError("table count does not match signature");
  for (std::size_t i = 0; i < ops.size(); ++i) {
    auto want = ipow(n_, ops[i].arity);
    if (static_cast<std::int64_t>(tables_[i].size()) != want)
      throw InputError("table size mismatch for operation " + ops[i].name);
    for (int v : tables_[i])
      if (v < 0 || v >= n_)
        throw InputError("table entry out of range in operation " + ops[i].name);
  }
  if (check_laws) {
    if (auto witness = sig_->check_laws(*this))
      throw InputError("law check failed for " + sig_->name() + ": " + *witness);
  }
}

int FiniteAlgebra::apply(int op, const std::vector<int>& args) const {
  std::int64_t idx = 0;
  for (int a : args) idx = idx * n_ + a;
  return tables_[op][idx];
}

int FiniteAlgebra::apply2(int op, int x, int y) const {
  return tables_[op][static_cast<std::size_t>(x) * n_ + y];
}

bool FiniteAlgebra::operator==(const FiniteAlgebra& other) const {
  return n_ == other.n_ && sig_->name() == other.sig_->name() &&
         tables_ == other.tables_;
}

std::string FiniteAlgebra::structure_key() const {
  std::ostringstream os;
  os << sig_->name() << '|' << n_;
  for (const auto& t : tables_) {
    os << '|';
    for (int v : t) os << v << ',';
  }
  return os.str();
}

AlgebraPtr make_algebra(SignaturePtr sig, int n,
                        std::vector<std::vector<int>> tables, bool check_laws) {
  return std::make_shared<const FiniteAlgebra>(std::move(sig), n,
                                               std::move(tables), check_laws);
}

Homomorphism::Homomorphism(AlgebraPtr d, AlgebraPtr c, std::vector<int> m)
    : dom(std::move(d)), cod(std::move(c)), map(std::move(m)) {
  if (static_cast<int>(map.size()) != dom->size())
    throw InputError("homomorphism map is not total");
  for (int v : map)
    if (v < 0 || v >= cod->size())
      throw InputError("homomorphism map value out of range");
}

bool Homomorphism::operator==(const Homomorphism& o) const {
  return map == o.map && *dom == *o.dom && *cod == *o.cod;
}

int Congruence::num_blocks() const {
  int m = -1;
  for (int b : block) m = std::max(m, b);
  return m + 1;
}

bool Congruence::operator==(const Congruence& o) const {
  return block == o.block && *algebra == *o.algebra;
}

bool Congruence::is_diagonal() const {
  return num_blocks() == algebra->size();
}

bool Congruence::contained_in(const Congruence& o) const {
  int n = algebra->size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (block[a] == block[b] && o.block[a] != o.block[b]) return false;
  return true;
}

Homomorphism identity_hom(const AlgebraPtr& a) {
  std::vector<int> m(a->size());
  std::iota(m.begin(), m.end(), 0);
  return Homomorphism(a, a, std::move(m));
}

Homomorphism compose(const Homomorphism& g, const Homomorphism& f) {
  if (*f.cod != *g.dom) throw InputError("compose: middle objects differ");
  std::vector<int> m(f.map.size());
  for (std::size_t i = 0; i < f.map.size(); ++i) m[i] = g.map[f.map[i]];
  return Homomorphism(f.dom, g.cod, std::move(m));
}

bool check_homomorphism(const Homomorphism& f) {
  if (!f.dom->signature()->same_shape(*f.cod->signature()))
    throw SignatureMismatch("homomorphism endpoints have different signatures");
  const auto& ops = f.dom->signature()->operations();
  int n = f.dom->size();
  for (std::size_t op = 0; op < ops.size(); ++op) {
    int k = ops[op].arity;
    std::vector<int> args(k, 0), imgs(k, 0);
    std::int64_t total = ipow(n, k);
    for (std::int64_t t = 0; t < total; ++t) {
      std::int64_t rest = t;
      for (int i = k - 1; i >= 0; --i) {
        args[i] = static_cast<int>(rest % n);
        rest /= n;
      }
      for (int i = 0; i < k; ++i) imgs[i] = f.map[args[i]];
      if (f.map[f.dom->apply(static_cast<int>(op), args)] !=
          f.cod->apply(static_cast<int>(op), imgs))
        return false;
    }
  }
  return true;
}

bool is_surjective(const Homomorphism& f) {
  std::vector<char> hit(f.cod->size(), 0);
  for (int v : f.map) hit[v] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

bool is_injective(const Homomorphism& f) {
  std::vector<char> hit(f.cod->size(), 0);
  for (int v : f.map) {
    if (hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

bool is_bijective_homomorphism(const Homomorphism& f) {
  return f.dom->size() == f.cod->size() && is_injective(f) &&
         check_homomorphism(f);
}

Congruence kernel_congruence(const Homomorphism& f) {
  int n = f.dom->size();
  std::vector<int> block(n, -1);
  std::vector<int> seen(f.cod->size(), -1);
  int next = 0;
  for (int i = 0; i < n; ++i) {
    int v = f.map[i];
    if (seen[v] < 0) seen[v] = next++;
    block[i] = seen[v];
  }
  return Congruence{f.dom, std::move(block)};
}

namespace {

/// Backtracking hom search shared by the enumerators. Assigns images in
/// carrier order; after each assignment checks every operation tuple
/// whose arguments and result are all decided.
struct HomSearch {
  const FiniteAlgebra& a;
  const FiniteAlgebra& b;
  const std::vector<int>* pin = nullptr;
  Budget& budget;
  std::vector<int> map;
  std::vector<Homomorphism> out;
  AlgebraPtr ap, bp;

  HomSearch(const AlgebraPtr& a_, const AlgebraPtr& b_, Budget& bud)
      : a(*a_), b(*b_), budget(bud), map(a_->size(), -1), ap(a_), bp(b_) {}

  bool consistent_at(int last) {
    const auto& ops = a.signature()->operations();
    int n = a.size();
    for (std::size_t op = 0; op < ops.size(); ++op) {
      int k = ops[op].arity;
      std::vector<int> args(k, 0);
      std::int64_t total = ipow(n, k);
      for (std::int64_t t = 0; t < total; ++t) {
        std::int64_t rest = t;
        bool touches_last = (k == 0 && last == 0);
        bool ready = true;
        for (int i = k - 1; i >= 0; --i) {
          args[i] = static_cast<int>(rest % n);
          rest /= n;
          if (args[i] == last) touches_last = true;
          if (args[i] > last) ready = false;
        }
        int res = a.apply(static_cast<int>(op), args);
        if (res > last) ready = false;
        if (!ready || !(touches_last || res == last)) continue;
        std::vector<int> imgs(k);
        for (int i = 0; i < k; ++i) imgs[i] = map[args[i]];
        if (map[res] != b.apply(static_cast<int>(op), imgs)) return false;
      }
    }
    return true;
  }

  void run(int pos) {
    budget.spend();
    if (pos == a.size()) {
      out.emplace_back(ap, bp, map);
      return;
    }
    if (pin && (*pin)[pos] >= 0) {
      map[pos] = (*pin)[pos];
      if (consistent_at(pos)) run(pos + 1);
      map[pos] = -1;
      return;
    }
    for (int v = 0; v < b.size(); ++v) {
      map[pos] = v;
      if (consistent_at(pos)) run(pos + 1);
    }
    map[pos] = -1;
  }
};

}  // namespace

std::vector<Homomorphism> enumerate_homs(const AlgebraPtr& a,
                                         const AlgebraPtr& b, Budget& budget) {
  if (!a->signature()->same_shape(*b->signature()))
    throw SignatureMismatch("enumerate_homs: signatures differ");
  HomSearch s(a, b, budget);
  s.run(0);
  return std::move(s.out);
}

std::vector<Homomorphism> enumerate_homs_pinned(const AlgebraPtr& a,
                                                const AlgebraPtr& b,
                                                const std::vector<int>& pin,
                                                Budget& budget) {
  if (!a->signature()->same_shape(*b->signature()))
    throw SignatureMismatch("enumerate_homs_pinned: signatures differ");
  HomSearch s(a, b, budget);
  s.pin = &pin;
  s.run(0);
  return std::move(s.out);
}

namespace {

/// Union-find with canonical relabel into a Congruence.
struct Blocks {
  std::vector<int> parent;
  explicit Blocks(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (x > y) std::swap(x, y);
    parent[y] = x;
    return true;
  }
  Congruence to_congruence(const AlgebraPtr& a) {
    int n = static_cast<int>(parent.size());
    std::vector<int> block(n, -1);
    std::vector<int> label(n, -1);
    int next = 0;
    for (int i = 0; i < n; ++i) {
      int r = find(i);
      if (label[r] < 0) label[r] = next++;
      block[i] = label[r];
    }
    return Congruence{a, std::move(block)};
  }
};

/// Closes a union-find under compatibility with all operations.
void close_under_operations(const AlgebraPtr& a, Blocks& uf) {
  const auto& ops = a->signature()->operations();
  int n = a->size();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t op = 0; op < ops.size(); ++op) {
      int k = ops[op].arity;
      if (k == 0) continue;
      std::int64_t total = ipow(n, k);
      // Group tuples by their class vector; results in one group unite.
      std::vector<std::pair<std::vector<int>, int>> keyed;
      keyed.reserve(static_cast<std::size_t>(total));
      std::vector<int> args(k);
      for (std::int64_t t = 0; t < total; ++t) {
        std::int64_t rest = t;
        for (int i = k - 1; i >= 0; --i) {
          args[i] = static_cast<int>(rest % n);
          rest /= n;
        }
        std::vector<int> key(k);
        for (int i = 0; i < k; ++i) key[i] = uf.find(args[i]);
        keyed.emplace_back(std::move(key), a->apply(static_cast<int>(op), args));
      }
      std::sort(keyed.begin(), keyed.end());
      for (std::size_t i = 1; i < keyed.size(); ++i)
        if (keyed[i].first == keyed[i - 1].first)
          changed |= uf.unite(keyed[i].second, keyed[i - 1].second);
    }
  }
}

}  // namespace

Congruence principal_congruence(const AlgebraPtr& a, int x, int y) {
  if (x < 0 || x >= a->size() || y < 0 || y >= a->size())
    throw InputError("principal_congruence: element out of range");
  Blocks uf(a->size());
  uf.unite(x, y);
  close_under_operations(a, uf);
  return uf.to_congruence(a);
}

Congruence congruence_from_pairs(
    const AlgebraPtr& a, const std::vector<std::pair<int, int>>& pairs) {
  Blocks uf(a->size());
  for (auto [x, y] : pairs) uf.unite(x, y);
  close_under_operations(a, uf);
  return uf.to_congruence(a);
}

Congruence congruence_join(const Congruence& t1, const Congruence& t2) {
  if (*t1.algebra != *t2.algebra)
    throw InputError("congruence_join: different algebras");
  Blocks uf(t1.algebra->size());
  int n = t1.algebra->size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (t1.related(i, j) || t2.related(i, j)) uf.unite(i, j);
  close_under_operations(t1.algebra, uf);
  return uf.to_congruence(t1.algebra);
}

std::pair<AlgebraPtr, Homomorphism> quotient(const AlgebraPtr& a,
                                             const Congruence& theta) {
  if (*theta.algebra != *a) throw InputError("quotient: congruence on wrong algebra");
  int m = theta.num_blocks();
  int n = a->size();
  // Representative per block: the least element (block ids follow first
  // occurrence, so representatives are found in carrier order).
  std::vector<int> rep(m, -1);
  for (int i = 0; i < n; ++i)
    if (rep[theta.block[i]] < 0) rep[theta.block[i]] = i;
  const auto& ops = a->signature()->operations();
  std::vector<std::vector<int>> tables(ops.size());
  for (std::size_t op = 0; op < ops.size(); ++op) {
    int k = ops[op].arity;
    std::int64_t total = ipow(m, k);
    tables[op].resize(static_cast<std::size_t>(total));
    std::vector<int> args(k);
    for (std::int64_t t = 0; t < total; ++t) {
      std::int64_t rest = t;
      for (int i = k - 1; i >= 0; --i) {
        args[i] = rep[static_cast<int>(rest % m)];
        rest /= m;
      }
      tables[op][t] = theta.block[a->apply(static_cast<int>(op), args)];
    }
  }
  auto q = make_algebra(a->signature(), m, std::move(tables));
  return {q, Homomorphism(a, q, theta.block)};
}

std::pair<Homomorphism, Homomorphism> pushout_surjection(const Homomorphism& q,
                                                         const Homomorphism& h) {
  if (*q.dom != *h.dom) throw InputError("pushout_surjection: legs share no domain");
  if (!is_surjective(q)) throw NotSurjective("pushout_surjection: q is not surjective");
  // Transport the kernel of q along h and quotient the codomain of h.
  int n = q.dom->size();
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (q.map[i] == q.map[j]) pairs.emplace_back(h.map[i], h.map[j]);
  Congruence transported = congruence_from_pairs(h.cod, pairs);
  auto [corner, proj] = quotient(h.cod, transported);
  // Induced map A/θ -> B/h*θ through representatives of q.
  std::vector<int> section(q.cod->size(), -1);
  for (int i = 0; i < n; ++i)
    if (section[q.map[i]] < 0) section[q.map[i]] = i;
  std::vector<int> induced(q.cod->size());
  for (int b = 0; b < q.cod->size(); ++b)
    induced[b] = proj.map[h.map[section[b]]];
  return {proj, Homomorphism(q.cod, corner, std::move(induced))};
}

namespace {

/// Cheap per-element invariant used to prune isomorphism search: how an
/// element participates in each operation table.
std::vector<std::vector<int>> element_profiles(const FiniteAlgebra& a) {
  int n = a.size();
  const auto& ops = a.signature()->operations();
  std::vector<std::vector<int>> prof(n);
  for (int e = 0; e < n; ++e) {
    for (std::size_t op = 0; op < ops.size(); ++op) {
      int k = ops[op].arity;
      if (k == 0) {
        prof[e].push_back(a.constant(static_cast<int>(op)) == e ? 1 : 0);
        continue;
      }
      std::int64_t total = ipow(n, k);
      int as_result = 0, idempotent = 0;
      std::vector<int> args(k);
      for (std::int64_t t = 0; t < total; ++t) {
        std::int64_t rest = t;
        bool all_e = true;
        for (int i = k - 1; i >= 0; --i) {
          args[i] = static_cast<int>(rest % n);
          rest /= n;
          all_e = all_e && args[i] == e;
        }
        int r = a.apply(static_cast<int>(op), args);
        if (r == e) ++as_result;
        if (all_e && r == e) idempotent = 1;
      }
      prof[e].push_back(as_result);
      prof[e].push_back(idempotent);
    }
  }
  return prof;
}

struct IsoSearch {
  const FiniteAlgebra& a;
  const FiniteAlgebra& b;
  std::vector<std::vector<int>> pa, pb;
  std::vector<int> map;
  std::vector<char> used;

  IsoSearch(const FiniteAlgebra& a_, const FiniteAlgebra& b_)
      : a(a_), b(b_), pa(element_profiles(a_)), pb(element_profiles(b_)),
        map(a_.size(), -1), used(b_.size(), 0) {}

  bool consistent_at(int last) {
    const auto& ops = a.signature()->operations();
    int n = a.size();
    for (std::size_t op = 0; op < ops.size(); ++op) {
      int k = ops[op].arity;
      std::vector<int> args(k);
      std::int64_t total = ipow(n, k);
      for (std::int64_t t = 0; t < total; ++t) {
        std::int64_t rest = t;
        bool ready = true;
        for (int i = k - 1; i >= 0; --i) {
          args[i] = static_cast<int>(rest % n);
          rest /= n;
          if (args[i] > last) ready = false;
        }
        int res = a.apply(static_cast<int>(op), args);
        if (!ready || res > last) continue;
        std::vector<int> imgs(k);
        for (int i = 0; i < k; ++i) imgs[i] = map[args[i]];
        if (map[res] != b.apply(static_cast<int>(op), imgs)) return false;
      }
    }
    return true;
  }

  bool run(int pos) {
    if (pos == a.size()) return true;
    for (int v = 0; v < b.size(); ++v) {
      if (used[v] || pa[pos] != pb[v]) continue;
      used[v] = 1;
      map[pos] = v;
      if (consistent_at(pos) && run(pos + 1)) return true;
      used[v] = 0;
      map[pos] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<Homomorphism> find_isomorphism(const AlgebraPtr& a,
                                             const AlgebraPtr& b) {
  if (!a->signature()->same_shape(*b->signature())) return std::nullopt;
  if (a->size() != b->size()) return std::nullopt;
  IsoSearch s(*a, *b);
  if (!s.run(0)) return std::nullopt;
  return Homomorphism(a, b, s.map);
}

std::optional<Homomorphism> find_isomorphism_over_base(const Homomorphism& n1,
                                                       const Homomorphism& n2) {
  if (*n1.dom != *n2.dom) return std::nullopt;
  if (n1.cod->size() != n2.cod->size()) return std::nullopt;
  // phi is pinned on the image of n1; search the rest.
  std::vector<int> pin(n1.cod->size(), -1);
  for (int i = 0; i < n1.dom->size(); ++i) {
    int v = n1.map[i], w = n2.map[i];
    if (pin[v] >= 0 && pin[v] != w) return std::nullopt;
    pin[v] = w;
  }
  Budget local;  // bounded: carriers here are tiny
  for (auto& h : enumerate_homs_pinned(n1.cod, n2.cod, pin, local))
    if (is_bijective_homomorphism(h)) return h;
  return std::nullopt;
}

}  // namespace specsite
