#pragma once

// Explicit ideals of F2[G] that realize W x H, the classification of fully
// realizable finitely generated abelian groups, witness rings, and bounded
// searches that collect finite evidence for the negative cases.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <regex>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fuchslab/algebra.hpp"
#include "fuchslab/endo.hpp"
#include "fuchslab/error.hpp"
#include "fuchslab/groups.hpp"

namespace fuchslab {

inline constexpr std::size_t kDefaultMaxIdealAmbient = 32;
inline constexpr std::size_t kDefaultMaxProductAmbient = 64;

// ---------------------------------------------------------------------------
// Classification

enum class Reason {
  kTorsionFree,             // THM11_TORSION_FREE
  kOdd,                     // THM11_ODD
  kTorsion,                 // THM11_TORSION
  kFinitelyGenerated,       // THM11_FG
  kC4QuotientObstruction,   // C4_QUOTIENT_OBSTRUCTION
  kC3SummandObstruction,    // C3_SUMMAND_OBSTRUCTION
  kPrimePowerBound,         // P_N_BOUND
  kNotRealizableChar2,      // NOT_REALIZABLE_CHAR2
};

inline std::string_view to_string(Reason r) {
  switch (r) {
    case Reason::kTorsionFree: return "THM11_TORSION_FREE";
    case Reason::kOdd: return "THM11_ODD";
    case Reason::kTorsion: return "THM11_TORSION";
    case Reason::kFinitelyGenerated: return "THM11_FG";
    case Reason::kC4QuotientObstruction: return "C4_QUOTIENT_OBSTRUCTION";
    case Reason::kC3SummandObstruction: return "C3_SUMMAND_OBSTRUCTION";
    case Reason::kPrimePowerBound: return "P_N_BOUND";
    case Reason::kNotRealizableChar2: return "NOT_REALIZABLE_CHAR2";
  }
  return "?";
}

inline std::string_view describe(Reason r) {
  switch (r) {
    case Reason::kTorsionFree: return "torsion-free groups are fully realized by their group algebra over F2";
    case Reason::kOdd: return "the only fully realizable groups of odd order are C1 and C3";
    case Reason::kTorsion: return "finite torsion groups are fully realizable exactly when of the form W x H, W elementary abelian 2, H <= C12";
    case Reason::kFinitelyGenerated: return "with n >= 1 infinite cyclic factors the torsion part must be elementary abelian 2";
    case Reason::kC4QuotientObstruction: return "A x C4 is not fully realizable when A has C4 as a quotient";
    case Reason::kC3SummandObstruction: return "A x C3 is not fully realizable when A has C3 as a quotient";
    case Reason::kPrimePowerBound: return "C_{p^n} is fully realizable only for p^n in {1, 2, 3, 4}";
    case Reason::kNotRealizableChar2: return "C_{2^k} with k >= 3 is not a unit group in characteristic 2";
  }
  return "";
}

struct ClassificationVerdict {
  GroupSpec group;
  bool fully_realizable = false;
  Reason reason = Reason::kTorsion;
  std::optional<std::string> recipe;
};

namespace detail {

/// Cyclic primary summands of the torsion part, as prime -> list of p^e.
inline std::map<Order, std::vector<Order>> primary_summands(const GroupSpec& g) {
  std::map<Order, std::vector<Order>> out;
  for (Order d : g.finite_orders()) {
    for (auto [p, e] : factorize(d)) {
      Order pe = 1;
      for (int k = 0; k < e; ++k) pe *= p;
      out[p].push_back(pe);
    }
  }
  return out;
}

}  // namespace detail

inline ClassificationVerdict classify(const GroupSpec& g) {
  ClassificationVerdict v;
  v.group = g;
  const auto primary = detail::primary_summands(g);
  const std::int64_t n = g.infinite_rank();

  auto count_of = [&](Order p, Order pe) -> std::int64_t {
    const auto it = primary.find(p);
    if (it == primary.end()) return 0;
    return std::count(it->second.begin(), it->second.end(), pe);
  };
  const auto twos = primary.count(2) ? primary.at(2) : std::vector<Order>{};
  const auto threes = primary.count(3) ? primary.at(3) : std::vector<Order>{};
  const std::int64_t c2 = count_of(2, 2);
  const std::int64_t c4 = count_of(2, 4);
  const std::int64_t c3 = count_of(3, 3);

  const bool big_two = std::any_of(twos.begin(), twos.end(), [](Order q) { return q >= 8; });
  bool odd_bad = c3 > 1 || static_cast<std::int64_t>(threes.size()) != c3;
  for (const auto& [p, powers] : primary) {
    if (p > 3) odd_bad = true;
  }

  if (g.finite_orders().empty()) {
    v.fully_realizable = true;
    if (n > 0) {
      v.reason = Reason::kTorsionFree;
      v.recipe = "symbolic:F2[Cinf^" + std::to_string(n) + "]";
    } else {
      v.reason = Reason::kOdd;
      v.recipe = "a24(rank=0,c4=false)";
    }
    return v;
  }

  // Fixed precedence among obstructions.
  if (big_two) {
    v.reason = Reason::kNotRealizableChar2;
    return v;
  }
  if (odd_bad) {
    v.reason = Reason::kOdd;
    return v;
  }
  if (c4 >= 2 || (c4 >= 1 && n >= 1)) {
    v.reason = Reason::kC4QuotientObstruction;
    return v;
  }
  if (c3 >= 1 && n >= 1) {
    v.reason = Reason::kC3SummandObstruction;
    return v;
  }

  v.fully_realizable = true;
  if (n >= 1) {
    v.reason = Reason::kFinitelyGenerated;
    v.recipe = "symbolic:F2[Cinf^" + std::to_string(n) + "] x a24(rank=" + std::to_string(c2) + ",c4=false)";
    return v;
  }
  v.reason = (c2 == 0 && c4 == 0) ? Reason::kOdd : Reason::kTorsion;
  const std::string params = "(rank=" + std::to_string(c2) + ",c4=" + (c4 ? "true" : "false") + ")";
  v.recipe = (c3 ? "a24xC3" : "a24") + params;
  return v;
}

// ---------------------------------------------------------------------------
// Explicit ideals

namespace detail {

inline void require_ambient(Order order, std::size_t max_ambient, const char* what) {
  if (order > static_cast<Order>(max_ambient)) {
    throw BudgetExceeded(std::string(what) + ": ambient dimension " + std::to_string(order) + " exceeds budget " +
                         std::to_string(max_ambient));
  }
}

inline GroupSpec two_group(std::size_t rank, bool with_c4) {
  std::vector<Order> orders(rank, 2);
  if (with_c4) orders.push_back(4);
  return canonicalize(orders);
}

/// x_J * y^r as a group element of C2^rank x C4 (y absent when !with_c4).
inline GroupElement monomial(const GroupSpec& g, std::uint64_t subset, Order r) {
  GroupElement e = identity(g);
  const std::size_t rank = g.rank() - ((!g.finite_orders().empty() && g.finite_orders().back() == 4) ? 1 : 0);
  for (std::size_t a = 0; a < rank; ++a) e.exponents[a] = (subset >> a) & 1U;
  if (rank < g.rank()) e.exponents.back() = r % 4;
  return e;
}

/// Sum of group elements as a vector of F2[G] (repeated terms cancel).
inline BitVector sum_of(const GroupSpec& g, std::initializer_list<GroupElement> terms) {
  BitVector v(static_cast<std::size_t>(g.torsion_order()));
  for (const auto& t : terms) v.flip(index_of(g, t));
  return v;
}

}  // namespace detail

/// Ideal of F2[C2^rank] generated by 1 + x_a + x_b + x_a x_b, a < b.
inline Ideal sumc2_ideal(std::size_t rank, std::size_t max_ambient = kDefaultMaxIdealAmbient) {
  if (rank >= 62) throw BudgetExceeded("sumc2_ideal: rank too large");
  detail::require_ambient(Order{1} << rank, max_ambient, "sumc2_ideal");
  const GroupSpec g = detail::two_group(rank, false);
  auto alg = group_algebra(g);
  std::vector<BitVector> gens;
  for (std::size_t a = 0; a < rank; ++a) {
    for (std::size_t b = a + 1; b < rank; ++b) {
      const GroupElement xa = detail::monomial(g, std::uint64_t{1} << a, 0);
      const GroupElement xb = detail::monomial(g, std::uint64_t{1} << b, 0);
      gens.push_back(detail::sum_of(g, {identity(g), xa, xb, add(g, xa, xb)}));
    }
  }
  return ideal_span(alg, gens);
}

/// The ideal W of F2[C2^rank x C4] (or F2[C2^rank]) generated by
///   x_J y^r + 1 + x_J + y^r,  1 + x_A + x_B + x_A x_B,  1 + y + y^2 + y^3.
inline Ideal a24_ideal(std::size_t rank, bool with_c4, std::size_t max_ambient = kDefaultMaxIdealAmbient) {
  if (rank >= 60) throw BudgetExceeded("a24_ideal: rank too large");
  detail::require_ambient((Order{1} << rank) * (with_c4 ? 4 : 1), max_ambient, "a24_ideal");
  const GroupSpec g = detail::two_group(rank, with_c4);
  auto alg = group_algebra(g);
  const GroupElement one = identity(g);
  const std::uint64_t subsets = std::uint64_t{1} << rank;
  std::vector<BitVector> gens;
  if (with_c4) {
    for (std::uint64_t j = 0; j < subsets; ++j) {
      for (Order r = 0; r < 4; ++r) {
        const GroupElement xj = detail::monomial(g, j, 0);
        const GroupElement yr = detail::monomial(g, 0, r);
        gens.push_back(detail::sum_of(g, {add(g, xj, yr), one, xj, yr}));
      }
    }
    const GroupElement y = detail::monomial(g, 0, 1);
    gens.push_back(detail::sum_of(g, {one, y, scale(g, y, 2), scale(g, y, 3)}));
  }
  for (std::uint64_t a = 0; a < subsets; ++a) {
    for (std::uint64_t b = a; b < subsets; ++b) {
      const GroupElement xa = detail::monomial(g, a, 0);
      const GroupElement xb = detail::monomial(g, b, 0);
      gens.push_back(detail::sum_of(g, {one, xa, xb, add(g, xa, xb)}));
    }
  }
  gf2::Subspace reduced = gf2::Subspace::span(alg->dim(), gens);
  return ideal_span(alg, reduced.rows());
}

/// The ideal generated by prod u_i + sum u_i + n + 1 over unit tuples of
/// length 1..max_length with at most one u_i of order 4.
inline Ideal star_ideal(std::size_t rank, bool with_c4, std::size_t max_length = 4,
                        std::size_t max_ambient = kDefaultMaxIdealAmbient) {
  if (max_length < 1 || max_length > 4) throw DomainError("star_ideal: tuple length must be in [1, 4]");
  if (rank >= 60) throw BudgetExceeded("star_ideal: rank too large");
  detail::require_ambient((Order{1} << rank) * (with_c4 ? 4 : 1), max_ambient, "star_ideal");
  const GroupSpec g = detail::two_group(rank, with_c4);
  auto alg = group_algebra(g);
  const std::size_t n = alg->dim();
  std::vector<Order> orders(n);
  for (std::size_t i = 0; i < n; ++i) orders[i] = element_order(g, element_at(g, i));

  gf2::Subspace gens(n);
  std::vector<std::size_t> tuple;
  std::function<void(std::size_t, int)> extend = [&](std::size_t start, int order4) {
    if (!tuple.empty()) {
      GroupElement prod = identity(g);
      BitVector v(n);
      for (std::size_t u : tuple) {
        prod = add(g, prod, element_at(g, u));
        v.flip(u);
      }
      v.flip(index_of(g, prod));
      if ((tuple.size() + 1) % 2 == 1) v.flip(0);
      gens.insert(v);
    }
    if (tuple.size() == max_length) return;
    for (std::size_t u = start; u < n; ++u) {
      const int next4 = order4 + (orders[u] == 4 ? 1 : 0);
      if (next4 > 1) continue;
      tuple.push_back(u);
      extend(u, next4);
      tuple.pop_back();
    }
  };
  extend(0, 0);
  return ideal_span(alg, gens.rows());
}

/// F2[G1 x ... x Gn] with its ideal generated by (1 + a)(1 + b), a in Gi,
/// b in Gj, i != j. The product is held in canonical form; embed() carries an
/// element of part i into it.
struct KgProduct {
  std::vector<GroupSpec> parts;
  CanonicalForm form;
  std::vector<std::size_t> offsets;  // first cyclic generator of each part
  Ideal ideal;

  GroupElement embed(std::size_t part, const GroupElement& e) const {
    const GroupSpec& g = form.spec;
    GroupElement out = identity(g);
    for (std::size_t j = 0; j < e.exponents.size(); ++j) {
      out = add(g, out, scale(g, form.generator_images[offsets[part] + j], e.exponents[j]));
    }
    return out;
  }
};

inline KgProduct kgproduct(std::span<const GroupSpec> parts, std::size_t max_ambient = kDefaultMaxProductAmbient) {
  std::vector<Order> orders;
  std::vector<std::size_t> offsets;
  Order total = 1;
  for (const auto& p : parts) {
    detail::require_finite(p, "kgproduct_ideal");
    offsets.push_back(orders.size());
    orders.insert(orders.end(), p.finite_orders().begin(), p.finite_orders().end());
    total = detail::checked_mul(total, p.torsion_order());
    detail::require_ambient(total, max_ambient, "kgproduct_ideal");
  }
  CanonicalForm form = canonical_form(orders);
  auto alg = group_algebra(form.spec);
  KgProduct out{std::vector<GroupSpec>(parts.begin(), parts.end()), std::move(form), std::move(offsets),
                Ideal::zero(alg)};
  const GroupSpec& g = out.form.spec;
  std::vector<std::vector<GroupElement>> embedded(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (const auto& e : elements(parts[i])) embedded[i].push_back(out.embed(i, e));
  }
  gf2::Subspace gens(alg->dim());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      for (const auto& a : embedded[i]) {
        for (const auto& b : embedded[j]) gens.insert(detail::sum_of(g, {identity(g), a, b, add(g, a, b)}));
      }
    }
  }
  out.ideal = ideal_span(alg, gens.rows());
  return out;
}

inline Ideal kgproduct_ideal(std::span<const GroupSpec> parts, std::size_t max_ambient = kDefaultMaxProductAmbient) {
  return kgproduct(parts, max_ambient).ideal;
}

/// ((x + 1)^j) in F2[C_{2^k}] for j = 0..2^k. Completeness is checked on the
/// spot: every principal ideal (e) must already be in the list, and every
/// ideal is a sum of principal ones.
inline std::vector<Ideal> chain_ring_ideals(int k) {
  if (k < 1 || k > 4) throw DomainError("chain_ring_ideals: k must be in [1, 4]");
  const GroupSpec g = cyclic(Order{1} << k);
  auto alg = group_algebra(g);
  const std::size_t n = alg->dim();
  const BitVector x_plus_1 = alg->one() ^ alg->basis(1);
  std::vector<Ideal> chain;
  BitVector power = alg->one();
  for (std::size_t j = 0; j <= n; ++j) {
    chain.push_back(ideal_span(alg, {power}));
    power = alg->multiply(power, x_plus_1);
  }
  for (std::uint64_t e = 1; e < (std::uint64_t{1} << n); ++e) {
    const Ideal principal = ideal_span(alg, {BitVector::from_word(n, e)});
    if (std::none_of(chain.begin(), chain.end(), [&](const Ideal& c) { return c == principal; })) {
      throw DomainError("F2[C_2^k] has an ideal outside the (x+1)-power chain");
    }
  }
  return chain;
}

// ---------------------------------------------------------------------------
// Recipes and witness rings

struct Recipe {
  enum class Kind { kA24, kA24xC3, kChain };
  Kind kind = Kind::kA24;
  std::size_t rank = 0;
  bool c4 = false;
  int k = 0;
  std::size_t j = 0;

  std::string to_string() const {
    switch (kind) {
      case Kind::kA24:
      case Kind::kA24xC3:
        return std::string(kind == Kind::kA24 ? "a24" : "a24xC3") + "(rank=" + std::to_string(rank) +
               ",c4=" + (c4 ? "true" : "false") + ")";
      case Kind::kChain:
        return "chain(k=" + std::to_string(k) + ",j=" + std::to_string(j) + ")";
    }
    return "";
  }

  /// The group whose unit-group realization this recipe builds.
  GroupSpec group() const {
    switch (kind) {
      case Kind::kA24: return detail::two_group(rank, c4);
      case Kind::kA24xC3: return product(detail::two_group(rank, c4), cyclic(3));
      case Kind::kChain: return cyclic(Order{1} << k);
    }
    return {};
  }
};

inline Recipe parse_recipe(std::string_view text) {
  static const std::regex a24(R"(^(a24|a24xC3)\(rank=(\d{1,3}),c4=(true|false)\)$)");
  static const std::regex chain(R"(^chain\(k=(\d{1,2}),j=(\d{1,3})\)$)");
  const std::string s(text);
  std::smatch m;
  Recipe r;
  if (std::regex_match(s, m, a24)) {
    r.kind = m[1] == "a24" ? Recipe::Kind::kA24 : Recipe::Kind::kA24xC3;
    r.rank = std::stoul(m[2]);
    r.c4 = m[3] == "true";
    return r;
  }
  if (std::regex_match(s, m, chain)) {
    r.kind = Recipe::Kind::kChain;
    r.k = std::stoi(m[1]);
    r.j = std::stoul(m[2]);
    if (r.k < 1 || r.k > 4) throw ParseError("chain recipe needs 1 <= k <= 4");
    if (r.j < 1 || r.j > (std::size_t{1} << r.k)) throw ParseError("chain recipe needs 1 <= j <= 2^k");
    return r;
  }
  throw ParseError("unknown ring recipe \"" + s + "\"");
}

struct ConstructionOptions {
  std::size_t max_ambient = kDefaultMaxIdealAmbient;
  std::size_t max_unit_dim = kDefaultMaxUnitDim;
};

inline QuotientRing build_recipe(const Recipe& r, const ConstructionOptions& opts = {}) {
  switch (r.kind) {
    case Recipe::Kind::kA24: {
      Ideal w = a24_ideal(r.rank, r.c4, opts.max_ambient);
      return quotient(r.group(), w, opts.max_unit_dim);
    }
    case Recipe::Kind::kChain: {
      const auto chain = chain_ring_ideals(r.k);
      return quotient(r.group(), chain.at(r.j), opts.max_unit_dim);
    }
    case Recipe::Kind::kA24xC3: {
      Recipe base_recipe = r;
      base_recipe.kind = Recipe::Kind::kA24;
      const QuotientRing base = build_recipe(base_recipe, opts);
      const GroupSpec c3 = cyclic(3);
      auto c3_alg = group_algebra(c3);
      const AlgebraPtr factors[] = {base.algebra, c3_alg};
      auto target = product_algebra(factors);

      // Product form P = C2^rank x C4^c x C3, generator images in the target.
      std::vector<Order> p_orders(r.rank, 2);
      if (r.c4) p_orders.push_back(4);
      p_orders.push_back(3);
      std::vector<BitVector> p_images;
      const GroupSpec& bg = base.group;
      for (std::size_t a = 0; a < bg.rank(); ++a) {
        GroupElement e = identity(bg);
        e.exponents[a] = 1;
        const BitVector parts[] = {base.group_image[index_of(bg, e)], c3_alg->one()};
        p_images.push_back(product_element(factors, parts));
      }
      {
        const BitVector parts[] = {base.algebra->one(), c3_alg->basis(1)};
        p_images.push_back(product_element(factors, parts));
      }
      // Transport to the canonical generators of G through the explicit
      // isomorphism P -> G.
      const CanonicalForm form = canonical_form(p_orders);
      const GroupSpec& g = form.spec;
      std::map<GroupElement, std::vector<Order>> preimage;
      std::vector<Order> digits(p_orders.size(), 0);
      const auto p_size = static_cast<std::size_t>(g.torsion_order());
      for (std::size_t idx = 0; idx < p_size; ++idx) {
        GroupElement image = identity(g);
        for (std::size_t j = 0; j < digits.size(); ++j) image = add(g, image, scale(g, form.generator_images[j], digits[j]));
        preimage.emplace(image, digits);
        for (std::size_t j = digits.size(); j-- > 0;) {
          if (++digits[j] < p_orders[j]) break;
          digits[j] = 0;
        }
      }
      std::vector<BitVector> images;
      for (std::size_t i = 0; i < g.rank(); ++i) {
        GroupElement gen = identity(g);
        gen.exponents[i] = 1;
        const auto& pre = preimage.at(gen);
        BitVector v = target->one();
        for (std::size_t j = 0; j < pre.size(); ++j) v = target->multiply(v, target->power(p_images[j], static_cast<std::uint64_t>(pre[j])));
        images.push_back(std::move(v));
      }
      return present(g, *target, images, opts.max_unit_dim);
    }
  }
  throw DomainError("unknown recipe kind");
}

struct Witness {
  Recipe recipe;
  QuotientRing ring;
};

inline Witness construct_witness(const GroupSpec& g, const ConstructionOptions& opts = {}) {
  const ClassificationVerdict v = classify(g);
  if (!v.fully_realizable) throw DomainError(g.to_string() + " is not fully realizable (" + std::string(to_string(v.reason)) + ")");
  if (!g.is_finite()) throw DomainError(g.to_string() + " has infinite factors; its witness is symbolic only");
  Recipe r = parse_recipe(*v.recipe);
  return Witness{r, build_recipe(r, opts)};
}

// ---------------------------------------------------------------------------
// Bounded searches

enum class SearchPool { kDefault, kChain, kEmbeddingKernels };

inline std::string_view to_string(SearchPool p) {
  switch (p) {
    case SearchPool::kDefault: return "default";
    case SearchPool::kChain: return "chain";
    case SearchPool::kEmbeddingKernels: return "kernels";
  }
  return "?";
}

inline SearchPool parse_pool(std::string_view s) {
  if (s == "default") return SearchPool::kDefault;
  if (s == "chain") return SearchPool::kChain;
  if (s == "kernels") return SearchPool::kEmbeddingKernels;
  throw ParseError("unknown search pool \"" + std::string(s) + "\" (expected default, chain or kernels)");
}

struct SearchReport {
  GroupSpec group;
  std::string pool_description;
  std::uint64_t ideals_examined = 0;
  std::uint64_t realizing_found = 0;
  std::uint64_t fully_realizing_found = 0;
  bool exhaustive = false;
  bool budget_exhausted = false;
};

inline constexpr std::uint64_t kDefaultSearchBudget = 20'000;

namespace detail {

inline void examine(const GroupSpec& g, const Ideal& ideal, SearchReport& report, const EngineOptions& eopts) {
  ++report.ideals_examined;
  if (ideal.is_whole_ring()) return;
  // Cheap rejection: the group must embed in the quotient.
  std::set<BitVector> image;
  for (std::size_t e = 0; e < ideal.ambient().dim(); ++e) image.insert(ideal.reduce(ideal.ambient().basis(e)));
  if (image.size() != ideal.ambient().dim()) return;
  const QuotientRing q = quotient(g, ideal);
  if (!q.unit_to_group) return;
  ++report.realizing_found;
  if (fully_realizes(q, g, eopts).fully_realizes) ++report.fully_realizing_found;
}

}  // namespace detail

/// Runs fully_realizes over quotients F2[G]/I for ideals I drawn from a pool.
/// Only the chain pool on a cyclic 2-group is a complete list of ideals.
inline SearchReport bounded_ideal_search(const GroupSpec& g, SearchPool pool, std::uint64_t budget = kDefaultSearchBudget,
                                         const EngineOptions& eopts = {}) {
  detail::require_finite(g, "bounded_ideal_search");
  if (g.torsion_order() > 16) throw BudgetExceeded("bounded_ideal_search is limited to |G| <= 16");
  SearchReport report;
  report.group = g;
  auto alg = group_algebra(g);
  const std::size_t n = alg->dim();

  switch (pool) {
    case SearchPool::kChain: {
      const Order order = g.torsion_order();
      const bool cyclic_two = g.rank() == 1 && (order & (order - 1)) == 0;
      if (!cyclic_two) throw DomainError("chain pool needs a cyclic 2-group, got " + g.to_string());
      const int k = std::countr_zero(static_cast<std::uint64_t>(order));
      report.pool_description = "all ideals ((x+1)^j) of F2[C" + std::to_string(order) + "]";
      for (const auto& ideal : chain_ring_ideals(k)) {
        if (report.ideals_examined >= budget) {
          report.budget_exhausted = true;
          break;
        }
        detail::examine(g, ideal, report, eopts);
      }
      report.exhaustive = !report.budget_exhausted;
      return report;
    }
    case SearchPool::kDefault: {
      report.pool_description = "ideals generated by subsets of {(1+g)^m : m<=3} U {(1+g)(1+h)}";
      std::set<BitVector> pool_set;
      for (std::size_t a = 1; a < n; ++a) {
        const BitVector ua = alg->one() ^ alg->basis(a);
        pool_set.insert(ua);
        pool_set.insert(alg->multiply(ua, alg->multiply(ua, ua)));
        for (std::size_t b = a; b < n; ++b) pool_set.insert(alg->multiply(ua, alg->one() ^ alg->basis(b)));
      }
      pool_set.erase(BitVector(n));
      const std::vector<BitVector> pool_elems(pool_set.begin(), pool_set.end());
      // Breadth-first over the lattice of pool-generated ideals.
      std::set<std::vector<BitVector>> visited;
      std::deque<Ideal> queue;
      queue.push_back(Ideal::zero(alg));
      visited.insert({});
      while (!queue.empty()) {
        if (report.ideals_examined >= budget) {
          report.budget_exhausted = true;
          break;
        }
        const Ideal current = std::move(queue.front());
        queue.pop_front();
        detail::examine(g, current, report, eopts);
        if (current.is_whole_ring()) continue;
        for (const auto& p : pool_elems) {
          if (current.contains(p)) continue;
          Ideal next = ideal_extend(current, p);
          if (visited.insert(next.rref_basis()).second) queue.push_back(std::move(next));
        }
      }
      return report;
    }
    case SearchPool::kEmbeddingKernels: {
      report.pool_description = "kernels of F2[G] -> F2^a x F4^b, a + b <= 4";
      std::set<std::vector<BitVector>> visited;
      for (std::size_t factors = 1; factors <= 4 && !report.budget_exhausted; ++factors) {
        for (std::size_t b = 0; b <= factors && !report.budget_exhausted; ++b) {
          const std::size_t a = factors - b;
          std::vector<AlgebraPtr> fs;
          for (std::size_t i = 0; i < a; ++i) fs.push_back(field_algebra(1));
          for (std::size_t i = 0; i < b; ++i) fs.push_back(field_algebra(2));
          auto target = product_algebra(fs);
          const auto target_units = units(*target);
          // Candidate images per generator: units whose order divides d_j.
          std::vector<std::vector<BitVector>> cands(g.rank());
          for (std::size_t j = 0; j < g.rank(); ++j) {
            for (const auto& u : target_units) {
              if (target->power(u, static_cast<std::uint64_t>(g.finite_orders()[j])) == target->one()) cands[j].push_back(u);
            }
          }
          std::vector<std::size_t> pick(g.rank(), 0);
          while (true) {
            std::vector<BitVector> images;
            for (std::size_t j = 0; j < g.rank(); ++j) images.push_back(cands[j][pick[j]]);
            Ideal kernel = unit_embedding_kernel(alg, *target, images);
            if (visited.insert(kernel.rref_basis()).second) {
              if (report.ideals_examined >= budget) {
                report.budget_exhausted = true;
                break;
              }
              detail::examine(g, kernel, report, eopts);
            }
            std::size_t j = g.rank();
            while (j-- > 0) {
              if (++pick[j] < cands[j].size()) break;
              pick[j] = 0;
            }
            if (j == static_cast<std::size_t>(-1)) break;
          }
        }
      }
      return report;
    }
  }
  return report;
}

}  // namespace fuchslab
