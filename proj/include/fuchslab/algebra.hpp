#pragma once

// Finite-dimensional commutative GF(2) algebras given by structure constants:
// group algebras F2[G], fields F_{2^k}, products, ideals, quotients F2[G]/I,
// and unit groups.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fuchslab/error.hpp"
#include "fuchslab/gf2.hpp"
#include "fuchslab/groups.hpp"

namespace fuchslab {

using gf2::BitVector;

inline constexpr std::size_t kDefaultMaxUnitDim = 24;
/// Largest group algebra we are willing to materialize as a structure table.
inline constexpr std::size_t kMaxGroupAlgebraDim = 512;
/// Structure-constant axioms are verified at construction up to this dimension.
inline constexpr std::size_t kAxiomCheckDim = 64;

class Algebra {
 public:
  /// table[i * dim + j] is the product of basis elements i and j.
  Algebra(std::vector<std::string> labels, std::vector<BitVector> table, BitVector one,
          std::optional<GroupSpec> group = std::nullopt)
      : labels_(std::move(labels)), table_(std::move(table)), one_(std::move(one)), group_(std::move(group)) {
    const std::size_t n = labels_.size();
    if (n == 0) throw DomainError("algebra must have dimension >= 1");
    if (table_.size() != n * n) throw DomainError("multiplication table must be dim x dim");
    if (one_.size() != n) throw DomainError("identity vector has wrong length");
    for (const auto& v : table_) {
      if (v.size() != n) throw DomainError("table entry has wrong length");
    }
    if (n <= kAxiomCheckDim) check_axioms();
  }

  std::size_t dim() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const BitVector& one() const noexcept { return one_; }
  BitVector zero() const { return BitVector(dim()); }
  BitVector basis(std::size_t i) const { return BitVector::unit(dim(), i); }
  const BitVector& basis_product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }

  /// Set when this is the group algebra F2[G] with basis elements(G).
  const std::optional<GroupSpec>& group() const noexcept { return group_; }

  BitVector multiply(const BitVector& a, const BitVector& b) const {
    BitVector out(dim());
    a.for_each_set([&](std::size_t i) { b.for_each_set([&](std::size_t j) { out ^= basis_product(i, j); }); });
    return out;
  }

  BitVector power(BitVector a, std::uint64_t n) const {
    BitVector out = one_;
    while (n > 0) {
      if (n & 1U) out = multiply(out, a);
      n >>= 1;
      if (n > 0) a = multiply(a, a);
    }
    return out;
  }

  /// "g0 + g1*g2" style rendering using basis labels; "0" for zero.
  std::string format(const BitVector& v) const {
    std::string s;
    v.for_each_set([&](std::size_t i) {
      if (!s.empty()) s += " + ";
      s += labels_[i];
    });
    return s.empty() ? "0" : s;
  }

 private:
  void check_axioms() const {
    const std::size_t n = dim();
    for (std::size_t i = 0; i < n; ++i) {
      const BitVector bi = basis(i);
      if (multiply(one_, bi) != bi) throw DomainError("identity vector is not a multiplicative identity");
      for (std::size_t j = 0; j < n; ++j) {
        if (basis_product(i, j) != basis_product(j, i)) throw DomainError("algebra is not commutative");
        for (std::size_t k = 0; k < n; ++k) {
          if (multiply(basis_product(i, j), basis(k)) != multiply(bi, basis_product(j, k))) {
            throw DomainError("algebra is not associative");
          }
        }
      }
    }
  }

  std::vector<std::string> labels_;
  std::vector<BitVector> table_;
  BitVector one_;
  std::optional<GroupSpec> group_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Word-packed view of an algebra of dimension <= 64 for the hot loops.
class PackedAlgebra {
 public:
  explicit PackedAlgebra(const Algebra& a) : dim_(a.dim()), one_(a.one().word()) {
    if (dim_ > 64) throw BudgetExceeded("packed arithmetic needs dim <= 64");
    table_.resize(dim_ * dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t j = 0; j < dim_; ++j) table_[i * dim_ + j] = a.basis_product(i, j).word();
    }
  }

  std::size_t dim() const noexcept { return dim_; }
  std::uint64_t one() const noexcept { return one_; }

  std::uint64_t multiply(std::uint64_t a, std::uint64_t b) const noexcept {
    std::uint64_t out = 0;
    while (a != 0) {
      const auto i = static_cast<std::size_t>(std::countr_zero(a));
      a &= a - 1;
      const std::uint64_t* row = &table_[i * dim_];
      std::uint64_t rest = b;
      while (rest != 0) {
        out ^= row[std::countr_zero(rest)];
        rest &= rest - 1;
      }
    }
    return out;
  }

  std::uint64_t power(std::uint64_t a, std::uint64_t n) const noexcept {
    std::uint64_t out = one_;
    while (n > 0) {
      if (n & 1U) out = multiply(out, a);
      n >>= 1;
      if (n > 0) a = multiply(a, a);
    }
    return out;
  }

  /// Row j of the multiplication-by-basis-i matrix, i.e. b_i * b_j.
  std::uint64_t entry(std::size_t i, std::size_t j) const noexcept { return table_[i * dim_ + j]; }

 private:
  std::size_t dim_;
  std::uint64_t one_;
  std::vector<std::uint64_t> table_;
};

// ---------------------------------------------------------------------------
// Constructions

inline std::string element_label(const GroupSpec& g, const GroupElement& e) {
  std::string s;
  for (std::size_t i = 0; i < e.exponents.size(); ++i) {
    if (e.exponents[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "g" + std::to_string(i);
    if (e.exponents[i] > 1) s += "^" + std::to_string(e.exponents[i]);
  }
  (void)g;
  return s.empty() ? "1" : s;
}

inline AlgebraPtr group_algebra(const GroupSpec& g) {
  detail::require_enumerable(g, "group_algebra");
  const auto n = static_cast<std::size_t>(g.torsion_order());
  if (n > kMaxGroupAlgebraDim) {
    throw BudgetExceeded("group algebra of " + g.to_string() + " has dimension " + std::to_string(n) + " > " +
                         std::to_string(kMaxGroupAlgebraDim));
  }
  const auto elems = elements(g);
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& e : elems) labels.push_back(element_label(g, e));
  std::vector<BitVector> table;
  table.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) table.push_back(BitVector::unit(n, index_of(g, add(g, elems[i], elems[j]))));
  }
  return std::make_shared<const Algebra>(std::move(labels), std::move(table), BitVector::unit(n, 0), g);
}

/// Coefficient bits of the lexicographically first irreducible polynomial of
/// degree k over GF(2) (bit i = coefficient of t^i).
inline std::uint32_t first_irreducible(int k) {
  auto degree = [](std::uint32_t p) { return 31 - std::countl_zero(p); };
  auto rem = [&](std::uint32_t a, std::uint32_t b) {
    const int db = degree(b);
    while (a != 0 && degree(a) >= db) a ^= b << (degree(a) - db);
    return a;
  };
  for (std::uint32_t p = 1U << k; p < (2U << k); ++p) {
    bool irreducible = true;
    for (std::uint32_t q = 2; degree(q) <= k / 2 && irreducible; ++q) {
      if (rem(p, q) == 0) irreducible = false;
    }
    if (irreducible) return p;
  }
  throw DomainError("no irreducible polynomial found");
}

/// F_{2^k} with basis 1, t, ..., t^{k-1}.
inline AlgebraPtr field_algebra(int k) {
  if (k < 1 || k > 8) throw DomainError("field degree must be in [1, 8]");
  const std::uint32_t modulus = first_irreducible(k);
  const auto n = static_cast<std::size_t>(k);
  auto reduce = [&](std::uint32_t a) {
    for (int d = 2 * k - 2; d >= k; --d) {
      if ((a >> d) & 1U) a ^= modulus << (d - k);
    }
    return a;
  };
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(i == 0 ? "1" : i == 1 ? "t" : "t^" + std::to_string(i));
  std::vector<BitVector> table;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) table.push_back(BitVector::from_word(n, reduce(1U << (i + j))));
  }
  return std::make_shared<const Algebra>(std::move(labels), std::move(table), BitVector::unit(n, 0));
}

/// Direct product with componentwise multiplication; basis is the
/// concatenation of the factors' bases.
inline AlgebraPtr product_algebra(std::span<const AlgebraPtr> factors) {
  if (factors.empty()) throw DomainError("product of zero algebras");
  if (factors.size() == 1) return factors.front();
  std::size_t n = 0;
  for (const auto& f : factors) n += f->dim();
  std::vector<std::string> labels;
  std::vector<BitVector> table(n * n, BitVector(n));
  BitVector one(n);
  std::size_t offset = 0;
  for (std::size_t f = 0; f < factors.size(); ++f) {
    const Algebra& a = *factors[f];
    for (std::size_t i = 0; i < a.dim(); ++i) labels.push_back("[" + std::to_string(f) + "]" + a.labels()[i]);
    a.one().for_each_set([&](std::size_t i) { one.set(offset + i); });
    for (std::size_t i = 0; i < a.dim(); ++i) {
      for (std::size_t j = 0; j < a.dim(); ++j) {
        BitVector& cell = table[(offset + i) * n + offset + j];
        a.basis_product(i, j).for_each_set([&](std::size_t k) { cell.set(offset + k); });
      }
    }
    offset += a.dim();
  }
  return std::make_shared<const Algebra>(std::move(labels), std::move(table), std::move(one));
}

inline AlgebraPtr product_algebra(std::initializer_list<AlgebraPtr> factors) {
  return product_algebra(std::span<const AlgebraPtr>(factors.begin(), factors.size()));
}

/// Element of a product algebra assembled from per-factor components.
inline BitVector product_element(std::span<const AlgebraPtr> factors, std::span<const BitVector> parts) {
  std::size_t n = 0;
  for (const auto& f : factors) n += f->dim();
  BitVector out(n);
  std::size_t offset = 0;
  for (std::size_t f = 0; f < factors.size(); ++f) {
    parts[f].for_each_set([&](std::size_t i) { out.set(offset + i); });
    offset += factors[f]->dim();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Units

/// e is a unit iff multiplication by e is an invertible linear map.
inline bool is_unit(const Algebra& a, const BitVector& e) {
  std::vector<BitVector> columns;
  columns.reserve(a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j) columns.push_back(a.multiply(e, a.basis(j)));
  return gf2::rank(columns) == a.dim();
}

/// All invertible elements, ascending. Walks GF(2)^dim in Gray-code order so
/// each step updates the multiplication matrix by one basis matrix.
inline std::vector<BitVector> units(const Algebra& a, std::size_t max_dim = kDefaultMaxUnitDim) {
  const std::size_t n = a.dim();
  if (n > max_dim || n > 40) {
    throw BudgetExceeded("unit enumeration over 2^" + std::to_string(n) + " elements exceeds budget 2^" +
                         std::to_string(std::min<std::size_t>(max_dim, 40)));
  }
  const PackedAlgebra packed(a);
  std::vector<std::uint64_t> matrix(n, 0);
  std::vector<std::uint64_t> found;
  std::uint64_t element = 0;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t step = 1; step < total; ++step) {
    const auto bit = static_cast<std::size_t>(std::countr_zero(step));
    element ^= std::uint64_t{1} << bit;
    for (std::size_t j = 0; j < n; ++j) matrix[j] ^= packed.entry(bit, j);
    if (gf2::is_invertible(matrix, n)) found.push_back(element);
  }
  std::sort(found.begin(), found.end());
  std::vector<BitVector> out;
  out.reserve(found.size());
  for (auto w : found) out.push_back(BitVector::from_word(n, w));
  return out;
}

/// Independent path: e is a unit iff some f has e*f = f*e = 1.
inline std::vector<BitVector> units_by_inverse_search(const Algebra& a) {
  const std::size_t n = a.dim();
  if (n > 16) throw BudgetExceeded("inverse search is limited to dim <= 16");
  const PackedAlgebra packed(a);
  std::vector<BitVector> out;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t e = 0; e < total; ++e) {
    for (std::uint64_t f = 0; f < total; ++f) {
      if (packed.multiply(e, f) == packed.one() && packed.multiply(f, e) == packed.one()) {
        out.push_back(BitVector::from_word(n, e));
        break;
      }
    }
  }
  return out;
}

/// Multiplicative order of each unit.
inline std::vector<Order> unit_orders(const Algebra& a, std::span<const BitVector> unit_set) {
  const PackedAlgebra packed(a);
  const auto n = static_cast<std::uint64_t>(unit_set.size());
  const auto primes = factorize(static_cast<Order>(n));
  std::vector<Order> out;
  out.reserve(unit_set.size());
  for (const auto& u : unit_set) {
    const std::uint64_t w = u.word();
    if (packed.power(w, n) != packed.one()) throw DomainError("unit set is not a group under multiplication");
    std::uint64_t order = n;
    for (auto [p, e] : primes) {
      const auto q = static_cast<std::uint64_t>(p);
      while (order % q == 0 && packed.power(w, order / q) == packed.one()) order /= q;
    }
    out.push_back(static_cast<Order>(order));
  }
  return out;
}

/// Invariant factors of an abelian group from its element orders. For each
/// prime p the counts #{u : u^(p^k) = 1} = p^(sum_i min(k, e_i)) determine
/// the exponents e_i of the cyclic p-factors.
inline std::vector<Order> invariants_from_orders(std::span<const Order> orders) {
  const auto n = static_cast<Order>(orders.size());
  for (Order o : orders) {
    if (o < 1 || n % o != 0) throw DomainError("element orders do not come from an abelian group");
  }
  std::vector<Order> cyclic;
  for (auto [p, a] : factorize(n)) {
    std::vector<int> log_count(static_cast<std::size_t>(a) + 1, 0);
    Order pa = 1;
    for (int i = 0; i < a; ++i) pa *= p;
    Order pk = 1;
    for (int k = 0; k <= a; ++k) {
      const Order killed = std::count_if(orders.begin(), orders.end(), [&](Order o) {
        Order part = 1;
        while (o % p == 0) {
          o /= p;
          part *= p;
        }
        return pk % part == 0;
      });
      // Every p'-part occurs with each admissible p-part.
      Order c = killed;
      if (c % (n / pa) != 0) throw DomainError("element orders do not come from an abelian group");
      c /= n / pa;
      int lg = 0;
      while (c % p == 0) {
        c /= p;
        ++lg;
      }
      if (c != 1) throw DomainError("element orders do not come from an abelian group");
      log_count[static_cast<std::size_t>(k)] = lg;
      pk *= p;
    }
    // at_least[k] = number of cyclic p-factors of exponent >= k.
    std::vector<int> at_least(static_cast<std::size_t>(a) + 2, 0);
    for (int k = 1; k <= a; ++k) at_least[k] = log_count[k] - log_count[k - 1];
    Order pe = 1;
    for (int k = 1; k <= a; ++k) {
      pe *= p;
      const int exact = at_least[k] - at_least[k + 1];
      if (exact < 0) throw DomainError("element orders do not come from an abelian group");
      for (int i = 0; i < exact; ++i) cyclic.push_back(pe);
    }
  }
  const GroupSpec result = canonicalize(cyclic);
  if (result.torsion_order() != n) throw DomainError("element orders do not come from an abelian group");
  return result.finite_orders();
}

inline std::vector<Order> unit_group_invariants(const Algebra& a, std::span<const BitVector> unit_set) {
  const auto orders = unit_orders(a, unit_set);
  return invariants_from_orders(orders);
}

inline std::vector<Order> unit_group_invariants(const Algebra& a, std::size_t max_dim = kDefaultMaxUnitDim) {
  const auto u = units(a, max_dim);
  return unit_group_invariants(a, u);
}

/// Sum of coordinates: the ring map F2[G] -> F2 sending every g to 1.
inline bool augmentation(const GroupSpec& g, const BitVector& e) {
  if (static_cast<Order>(e.size()) != g.torsion_order()) throw DomainError("element is not in F2[G]");
  return (e.popcount() & 1U) != 0;
}

// ---------------------------------------------------------------------------
// Ideals

class Ideal {
 public:
  /// Wraps a subspace after checking it is closed under multiplication by
  /// every basis element of the ambient algebra.
  Ideal(AlgebraPtr ambient, gf2::Subspace basis) : ambient_(std::move(ambient)), basis_(std::move(basis)) {
    if (basis_.ambient_dim() != ambient_->dim()) throw DomainError("ideal basis has wrong ambient dimension");
    for (std::size_t i = 0; i < ambient_->dim(); ++i) {
      const BitVector bi = ambient_->basis(i);
      for (const auto& row : basis_.rows()) {
        if (!basis_.contains(ambient_->multiply(bi, row))) throw DomainError("subspace is not an ideal");
      }
    }
  }

  static Ideal zero(AlgebraPtr ambient) {
    const std::size_t n = ambient->dim();
    return Ideal(std::move(ambient), gf2::Subspace(n));
  }

  const Algebra& ambient() const noexcept { return *ambient_; }
  const AlgebraPtr& ambient_ptr() const noexcept { return ambient_; }
  const gf2::Subspace& subspace() const noexcept { return basis_; }
  const std::vector<BitVector>& rref_basis() const noexcept { return basis_.rows(); }
  std::size_t dim() const noexcept { return basis_.dim(); }

  bool contains(const BitVector& v) const { return basis_.contains(v); }
  BitVector reduce(const BitVector& v) const { return basis_.reduce(v); }
  bool is_whole_ring() const { return contains(ambient_->one()); }

  /// Same subspace of an algebra of the same dimension. Callers compare ideals
  /// of independently built copies of one algebra, so tables are not compared.
  friend bool operator==(const Ideal& a, const Ideal& b) { return a.basis_ == b.basis_; }

 private:
  AlgebraPtr ambient_;
  gf2::Subspace basis_;
};

/// Closure by repeated multiplication with the basis until nothing new appears.
inline Ideal ideal_span_fixed_point(AlgebraPtr a, std::span<const BitVector> generators) {
  gf2::Subspace s = gf2::Subspace::span(a->dim(), generators);
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<BitVector> rows = s.rows();
    for (std::size_t i = 0; i < a->dim(); ++i) {
      const BitVector bi = a->basis(i);
      for (const auto& row : rows) grew |= s.insert(a->multiply(bi, row));
    }
  }
  return Ideal(std::move(a), std::move(s));
}

/// Smallest ideal containing the generators. For a group algebra this is the
/// span of the G-orbit of the generators.
inline Ideal ideal_span(AlgebraPtr a, std::span<const BitVector> generators) {
  if (!a->group()) return ideal_span_fixed_point(std::move(a), generators);
  gf2::Subspace s(a->dim());
  for (const auto& v : generators) {
    if (v.size() != a->dim()) throw DomainError("generator has wrong length");
    if (s.contains(v)) continue;
    for (std::size_t g = 0; g < a->dim(); ++g) s.insert(a->multiply(a->basis(g), v));
  }
  return Ideal(std::move(a), std::move(s));
}

inline Ideal ideal_span(AlgebraPtr a, std::initializer_list<BitVector> generators) {
  return ideal_span(std::move(a), std::span<const BitVector>(generators.begin(), generators.size()));
}

/// I + (extra) for an ideal I of a group algebra.
inline Ideal ideal_extend(const Ideal& i, const BitVector& extra) {
  std::vector<BitVector> gens = i.rref_basis();
  gens.push_back(extra);
  return ideal_span(i.ambient_ptr(), gens);
}

// ---------------------------------------------------------------------------
// Quotients F2[G]/I

struct QuotientRing {
  GroupSpec group;
  Ideal ideal;
  AlgebraPtr algebra;
  /// Ambient coordinates kept as the quotient basis (the non-pivot columns).
  std::vector<std::size_t> free_columns;
  /// Image of each group element, in element-index order.
  std::vector<BitVector> group_image;
  /// Invertible elements of the quotient, ascending.
  std::vector<BitVector> units;
  /// Present iff g -> g + I is a bijection from G onto the unit group.
  std::optional<std::map<BitVector, GroupElement>> unit_to_group;

  BitVector project(const BitVector& ambient_vector) const {
    const BitVector r = ideal.reduce(ambient_vector);
    BitVector out(free_columns.size());
    for (std::size_t c = 0; c < free_columns.size(); ++c) {
      if (r.test(free_columns[c])) out.set(c);
    }
    return out;
  }

  std::size_t dim() const noexcept { return free_columns.size(); }
};

inline QuotientRing quotient(const GroupSpec& g, const Ideal& i, std::size_t max_unit_dim = kDefaultMaxUnitDim) {
  const Algebra& ambient = i.ambient();
  if (!ambient.group() || !(*ambient.group() == g)) {
    throw DomainError("ideal does not live in the group algebra of " + g.to_string());
  }
  if (i.is_whole_ring()) throw DomainError("ideal contains 1: the quotient is the zero ring");

  std::vector<std::size_t> free = i.subspace().free_columns();
  const std::size_t n = free.size();
  auto project = [&](const BitVector& v) {
    const BitVector r = i.reduce(v);
    BitVector out(n);
    for (std::size_t c = 0; c < n; ++c) {
      if (r.test(free[c])) out.set(c);
    }
    return out;
  };
  std::vector<std::string> labels;
  for (std::size_t c : free) labels.push_back(ambient.labels()[c]);
  std::vector<BitVector> table;
  table.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) table.push_back(project(ambient.basis_product(free[a], free[b])));
  }
  auto algebra = std::make_shared<const Algebra>(std::move(labels), std::move(table), project(ambient.one()));

  std::vector<BitVector> image;
  image.reserve(ambient.dim());
  for (std::size_t e = 0; e < ambient.dim(); ++e) image.push_back(project(ambient.basis(e)));

  auto unit_set = units(*algebra, max_unit_dim);

  std::optional<std::map<BitVector, GroupElement>> to_group;
  if (unit_set.size() == image.size()) {
    std::map<BitVector, GroupElement> m;
    for (std::size_t e = 0; e < image.size(); ++e) m.emplace(image[e], element_at(g, e));
    const bool bijective = m.size() == image.size() &&
                           std::all_of(unit_set.begin(), unit_set.end(), [&](const BitVector& u) { return m.count(u) != 0; });
    if (bijective) to_group = std::move(m);
  }

  return QuotientRing{g, i, std::move(algebra), std::move(free), std::move(image), std::move(unit_set),
                      std::move(to_group)};
}

// ---------------------------------------------------------------------------
// Presentations and subrings

/// Kernel of the ring map F2[G] -> target extending g_j -> images[j].
inline Ideal unit_embedding_kernel(AlgebraPtr group_alg, const Algebra& target, std::span<const BitVector> images) {
  if (!group_alg->group()) throw DomainError("unit_embedding_kernel needs a group algebra source");
  const GroupSpec& g = *group_alg->group();
  if (images.size() != g.rank()) throw DomainError("need one image per generator");
  std::vector<std::vector<BitVector>> powers(g.rank());
  for (std::size_t j = 0; j < g.rank(); ++j) {
    const Order d = g.finite_orders()[j];
    if (images[j].size() != target.dim()) throw DomainError("image has wrong length");
    if (!is_unit(target, images[j])) throw DomainError("image of generator " + std::to_string(j) + " is not a unit");
    if (target.power(images[j], static_cast<std::uint64_t>(d)) != target.one()) {
      throw DomainError("image of generator " + std::to_string(j) + " has order not dividing " + std::to_string(d));
    }
    powers[j].push_back(target.one());
    for (Order k = 1; k < d; ++k) powers[j].push_back(target.multiply(powers[j].back(), images[j]));
  }
  std::vector<BitVector> element_images;
  element_images.reserve(group_alg->dim());
  for (std::size_t idx = 0; idx < group_alg->dim(); ++idx) {
    const GroupElement e = element_at(g, idx);
    BitVector v = target.one();
    for (std::size_t j = 0; j < g.rank(); ++j) {
      if (e.exponents[j] != 0) v = target.multiply(v, powers[j][static_cast<std::size_t>(e.exponents[j])]);
    }
    element_images.push_back(std::move(v));
  }
  return Ideal(std::move(group_alg), gf2::kernel(target.dim(), element_images));
}

inline Ideal unit_embedding_kernel(const GroupSpec& g, const Algebra& target, std::span<const BitVector> images) {
  return unit_embedding_kernel(group_algebra(g), target, images);
}

/// F2[G]/ker for the map F2[G] -> target, i.e. the subring of target
/// generated by the images.
inline QuotientRing present(const GroupSpec& g, const Algebra& target, std::span<const BitVector> images,
                            std::size_t max_unit_dim = kDefaultMaxUnitDim) {
  return quotient(g, unit_embedding_kernel(g, target, images), max_unit_dim);
}

struct Subring {
  /// The subring as a subspace of the parent algebra.
  gf2::Subspace span;
  /// Structure constants with respect to span.rows().
  AlgebraPtr algebra;

  BitVector to_subring(const BitVector& parent_element) const { return span.coordinates(parent_element); }
};

/// Smallest subalgebra containing 1 and the subset.
inline Subring subring_generated(const Algebra& a, std::span<const BitVector> subset) {
  gf2::Subspace s(a.dim());
  s.insert(a.one());
  for (const auto& v : subset) s.insert(v);
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<BitVector> rows = s.rows();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = i; j < rows.size(); ++j) grew |= s.insert(a.multiply(rows[i], rows[j]));
    }
  }
  const std::size_t n = s.dim();
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("s" + std::to_string(i));
  std::vector<BitVector> table;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) table.push_back(s.coordinates(a.multiply(s.rows()[i], s.rows()[j])));
  }
  BitVector one = s.coordinates(a.one());
  auto algebra = std::make_shared<const Algebra>(std::move(labels), std::move(table), std::move(one));
  return Subring{std::move(s), std::move(algebra)};
}

}  // namespace fuchslab
