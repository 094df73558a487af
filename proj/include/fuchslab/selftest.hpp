#pragma once

// The acceptance criteria as executable checks. Every expected number is
// exact; nothing here is tuned at run time.

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fuchslab/algebra.hpp"
#include "fuchslab/constructions.hpp"
#include "fuchslab/endo.hpp"
#include "fuchslab/groups.hpp"

namespace fuchslab {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SelftestOptions {
  /// Largest group order used by the order-profile sweep.
  Order max_order = 64;
  EngineOptions engine;
};

namespace selftest {

/// Collects failed expectations for one criterion.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) failures_.push_back(what);
  }
  template <typename A, typename B>
  void expect_eq(const A& actual, const B& expected, const std::string& what) {
    std::ostringstream os;
    os << what << ": got " << actual << ", want " << expected;
    expect(actual == expected, os.str());
  }
  bool ok() const { return failures_.empty(); }
  std::string summary() const {
    if (failures_.empty()) return std::to_string(checks_) + " checks";
    std::string s = std::to_string(failures_.size()) + "/" + std::to_string(checks_) + " failed: " + failures_.front();
    for (std::size_t i = 1; i < failures_.size() && i < 4; ++i) s += "; " + failures_[i];
    return s;
  }

 private:
  std::size_t checks_ = 0;
  std::vector<std::string> failures_;
};

inline GroupSpec g(const char* spec) { return parse_group(spec); }

inline QuotientRing group_ring(const GroupSpec& group) { return quotient(group, Ideal::zero(group_algebra(group))); }

/// F2 x F_{2^k} presented over F2[C_{2^k - 1}] via gen -> (1, t).
inline QuotientRing f2_times_field(int k) {
  auto f2 = field_algebra(1);
  auto fk = field_algebra(k);
  const AlgebraPtr factors[] = {f2, fk};
  auto target = product_algebra(factors);
  const BitVector parts[] = {f2->one(), fk->basis(1)};
  const BitVector images[] = {product_element(factors, parts)};
  return present(cyclic((Order{1} << k) - 1), *target, images);
}

/// F2 x F4 x F4 presented over F2[C3 x C3] via u -> (1, t, 1), v -> (1, 1, t).
inline QuotientRing c3c3_fields_ring() {
  auto f2 = field_algebra(1);
  auto f4 = field_algebra(2);
  const AlgebraPtr factors[] = {f2, f4, f4};
  auto target = product_algebra(factors);
  const BitVector u_parts[] = {f2->one(), f4->basis(1), f4->one()};
  const BitVector v_parts[] = {f2->one(), f4->one(), f4->basis(1)};
  const BitVector images[] = {product_element(factors, u_parts), product_element(factors, v_parts)};
  return present(g("C3 x C3"), *target, images);
}

/// F2[C3] x F4 presented over F2[C3 x C3]: u = (x, 1), v = (1, t).
inline QuotientRing group_ring_c3_times_f4() {
  auto c3 = group_algebra(cyclic(3));
  auto f4 = field_algebra(2);
  const AlgebraPtr factors[] = {c3, f4};
  auto target = product_algebra(factors);
  const BitVector u_parts[] = {c3->basis(1), f4->one()};
  const BitVector v_parts[] = {c3->one(), f4->basis(1)};
  const BitVector images[] = {product_element(factors, u_parts), product_element(factors, v_parts)};
  return present(g("C3 x C3"), *target, images);
}

/// The endomorphism (u, v) -> (u, uv) of R^x x S^x for R = F2[C3], S = F4.
inline GroupHom shear_c3c3() {
  const GroupSpec c = g("C3 x C3");
  return GroupHom{c, c, {GroupElement{{1, 1}}, GroupElement{{0, 1}}}};
}

inline Checker example_corpus(const SelftestOptions& o) {
  Checker c;
  auto check = [&](const QuotientRing& q, const GroupSpec& grp, std::uint64_t total, std::uint64_t realized,
                   const std::string& name) {
    const auto r = fully_realizes(q, grp, o.engine);
    c.expect(r.unit_group_ok, name + ": unit group");
    c.expect_eq(r.total_endos, total, name + ": |End|");
    c.expect_eq(r.realized_endos, realized, name + ": realized");
    c.expect_eq(r.fully_realizes, total == realized, name + ": verdict");
    return r;
  };
  check(group_ring(cyclic(2)), cyclic(2), 2, 2, "F2[C2]");
  check(build_recipe(parse_recipe("a24(rank=0,c4=true)")), cyclic(4), 4, 4, "F2[C4]/((1+y)^3)");
  check(group_ring(cyclic(3)), cyclic(3), 3, 3, "F2[C3]");
  auto f4 = field_algebra(2);
  const BitVector t[] = {f4->basis(1)};
  const auto r = check(present(cyclic(3), *f4, t), cyclic(3), 3, 2, "F4");
  c.expect(r.failing_witness && r.failing_witness->images[0] == GroupElement{{0}}, "F4: the trivial map is the failure");
  return c;
}

inline Checker odd_order_counting(const SelftestOptions& o) {
  Checker c;
  const GroupSpec c3c3 = g("C3 x C3");
  c.expect_eq(endomorphism_count(c3c3), std::uint64_t{81}, "|End(C3xC3)|");
  c.expect_eq(enumerate_endos(c3c3).size(), std::size_t{81}, "enumerated End(C3xC3)");
  const QuotientRing q = c3c3_fields_ring();
  c.expect_eq(q.dim(), std::size_t{5}, "F2xF4xF4 dim");
  c.expect_eq(ring_endos(q, o.engine).size(), std::size_t{25}, "End(F2xF4xF4)");
  const auto r = fully_realizes(q, c3c3, o.engine);
  c.expect(r.unit_group_ok && !r.fully_realizes && r.realized_endos == 25, "C3xC3 verdict 25 < 81");
  for (int k : {2, 3}) {
    const QuotientRing fk = f2_times_field(k);
    const auto want = static_cast<std::size_t>(k + 1);
    c.expect_eq(ring_endos(fk, o.engine).size(), want, "End(F2 x F_2^" + std::to_string(k) + ") via filter");
    auto f2 = field_algebra(1);
    auto fld = field_algebra(k);
    const AlgebraPtr factors[] = {f2, fld};
    c.expect_eq(ring_endos_oracle(*product_algebra(factors)), std::uint64_t(want),
                "End(F2 x F_2^" + std::to_string(k) + ") via oracle");
  }
  return c;
}

inline Checker chain_sweep(const SelftestOptions&) {
  Checker c;
  for (int k : {2, 3, 4}) {
    const auto ideals = chain_ring_ideals(k);
    const std::size_t n = std::size_t{1} << k;
    c.expect_eq(ideals.size(), n + 1, "ideal count of F2[C" + std::to_string(n) + "]");
    const GroupSpec grp = cyclic(static_cast<Order>(n));
    std::vector<std::size_t> cyclic_quotients;
    for (std::size_t j = 1; j < ideals.size(); ++j) {
      const QuotientRing q = quotient(grp, ideals[j]);
      if (unit_group_invariants(*q.algebra, q.units) == std::vector<Order>{static_cast<Order>(n)}) {
        cyclic_quotients.push_back(j);
      }
    }
    if (k == 2) {
      c.expect(cyclic_quotients == std::vector<std::size_t>{3}, "F2[C4]: only j = 3 yields C4");
    } else {
      c.expect(cyclic_quotients.empty(), "F2[C" + std::to_string(n) + "]: no quotient has cyclic unit group");
    }
  }
  return c;
}

inline Checker elementary_constructions(const SelftestOptions& o) {
  Checker c;
  const std::uint64_t sumc2_endos[] = {2, 16, 512, 65536};
  for (std::size_t r = 1; r <= 4; ++r) {
    const GroupSpec grp = detail::two_group(r, false);
    const auto rep = fully_realizes(quotient(grp, sumc2_ideal(r)), grp, o.engine);
    c.expect_eq(rep.total_endos, sumc2_endos[r - 1], "sumc2 rank " + std::to_string(r) + " |End|");
    c.expect(rep.fully_realizes, "sumc2 rank " + std::to_string(r) + " fully realizes");
  }
  const std::uint64_t a24_endos[] = {4, 32, 1024};
  for (std::size_t r = 0; r <= 2; ++r) {
    const GroupSpec grp = detail::two_group(r, true);
    const auto rep = fully_realizes(quotient(grp, a24_ideal(r, true)), grp, o.engine);
    c.expect_eq(rep.total_endos, a24_endos[r], "a24 rank " + std::to_string(r) + " |End|");
    c.expect(rep.fully_realizes, "a24 rank " + std::to_string(r) + " fully realizes");
  }
  for (std::size_t r = 0; r <= 2; ++r) {
    for (bool c4 : {false, true}) {
      c.expect(star_ideal(r, c4) == a24_ideal(r, c4),
               "star == a24 at rank " + std::to_string(r) + (c4 ? " with C4" : ""));
    }
  }
  c.expect(star_ideal(2, false) == sumc2_ideal(2), "star(2) == sumc2(2)");
  return c;
}

inline Checker cyclic_sweep(const SelftestOptions& o) {
  Checker c;
  for (Order n = 1; n <= 100; ++n) {
    const GroupSpec grp = cyclic(n);
    const bool divides12 = 12 % n == 0;
    const auto v = classify(grp);
    c.expect_eq(v.fully_realizable, divides12, "classify(C" + std::to_string(n) + ")");
    if (!divides12) continue;
    const Witness w = construct_witness(grp);
    const auto rep = fully_realizes(w.ring, grp, o.engine);
    c.expect(rep.fully_realizes, "witness for C" + std::to_string(n) + " fully realizes");
    c.expect_eq(rep.realized_endos, static_cast<std::uint64_t>(n), "C" + std::to_string(n) + " realized");
  }
  return c;
}

inline Checker negative_evidence(const SelftestOptions& o) {
  Checker c;
  const auto c4c4 = bounded_ideal_search(g("C4 x C4"), SearchPool::kDefault, kDefaultSearchBudget, o.engine);
  c.expect_eq(c4c4.fully_realizing_found, std::uint64_t{0}, "C4xC4 default pool");
  c.expect(!c4c4.exhaustive, "C4xC4 search flagged non-exhaustive");
  for (SearchPool pool : {SearchPool::kDefault, SearchPool::kEmbeddingKernels}) {
    const auto c3c3 = bounded_ideal_search(g("C3 x C3"), pool, kDefaultSearchBudget, o.engine);
    const std::string name = "C3xC3 " + std::string(to_string(pool)) + " pool";
    c.expect_eq(c3c3.fully_realizing_found, std::uint64_t{0}, name);
    c.expect(!c3c3.exhaustive, name + " flagged non-exhaustive");
  }
  const QuotientRing q = group_ring_c3_times_f4();
  c.expect(q.unit_to_group.has_value(), "F2[C3] x F4 has unit group C3 x C3");
  c.expect(!preserves_ideal(q.group, shear_c3c3(), q.ideal), "(u, v) -> (u, uv) does not lift");
  return c;
}

/// Rings of dimension <= 4 built elsewhere in the suite, all generated by
/// the image of their group.
inline std::vector<std::pair<std::string, QuotientRing>> small_rings() {
  std::vector<std::pair<std::string, QuotientRing>> out;
  out.emplace_back("F2", group_ring(GroupSpec{}));
  out.emplace_back("F2[C2]", group_ring(cyclic(2)));
  out.emplace_back("F2[C3]", group_ring(cyclic(3)));
  out.emplace_back("F2[C4]/((1+y)^3)", build_recipe(parse_recipe("a24(rank=0,c4=true)")));
  out.emplace_back("F2xF4", f2_times_field(2));
  out.emplace_back("F2xF8", f2_times_field(3));
  auto f4 = field_algebra(2);
  const BitVector t[] = {f4->basis(1)};
  out.emplace_back("F4", present(cyclic(3), *f4, t));
  for (std::size_t r = 1; r <= 3; ++r) {
    out.emplace_back("sumc2(" + std::to_string(r) + ")", quotient(detail::two_group(r, false), sumc2_ideal(r)));
  }
  out.emplace_back("C6 witness", construct_witness(cyclic(6)).ring);
  out.emplace_back("C2 x C2 witness", construct_witness(g("C2^2")).ring);
  return out;
}

inline Checker oracle_equivalence(const SelftestOptions& o) {
  Checker c;
  for (const auto& [name, q] : small_rings()) {
    c.expect(q.dim() <= 4, name + ": dim <= 4");
    c.expect_eq(ring_endos(q, o.engine).size(), static_cast<std::size_t>(ring_endos_oracle(*q.algebra)), name);
  }
  return c;
}

/// All invariant-factor sequences d1 | d2 | ... with product <= max_order.
inline std::vector<GroupSpec> all_finite_groups(Order max_order) {
  std::vector<GroupSpec> out;
  std::vector<Order> current;
  std::function<void(Order, Order)> grow = [&](Order last, Order size) {
    // Extend by d with last | d, keeping the product bounded.
    out.push_back(canonicalize(current, 0));
    for (Order d = last; size * d <= max_order; d += last) {
      if (d < 2) continue;
      current.push_back(d);
      grow(d, size * d);
      current.pop_back();
    }
  };
  grow(1, 1);
  return out;
}

inline Checker structural_properties(const SelftestOptions& o) {
  Checker c;
  std::mt19937_64 rng(20240611);

  // Ideal closure and quotient dimension arithmetic.
  std::vector<std::pair<GroupSpec, Ideal>> ideals;
  for (std::size_t r = 0; r <= 3; ++r) ideals.emplace_back(detail::two_group(r, false), sumc2_ideal(r));
  for (std::size_t r = 0; r <= 2; ++r) ideals.emplace_back(detail::two_group(r, true), a24_ideal(r, true));
  for (int k = 2; k <= 3; ++k) {
    for (const auto& i : chain_ring_ideals(k)) ideals.emplace_back(cyclic(Order{1} << k), i);
  }
  const GroupSpec small[] = {cyclic(2), cyclic(3), cyclic(4)};
  for (const auto& a : small) {
    for (const auto& b : small) {
      const GroupSpec parts[] = {a, b};
      const KgProduct kg = kgproduct(parts);
      ideals.emplace_back(kg.form.spec, kg.ideal);
    }
  }
  for (const auto& [grp, ideal] : ideals) {
    const Algebra& alg = ideal.ambient();
    bool closed = true;
    for (std::size_t i = 0; i < alg.dim(); ++i) {
      for (const auto& row : ideal.rref_basis()) closed &= ideal.reduce(alg.multiply(alg.basis(i), row)).none();
    }
    c.expect(closed, "ideal of F2[" + grp.to_string() + "] is closed");
    if (!ideal.is_whole_ring()) {
      const QuotientRing q = quotient(grp, ideal);
      c.expect_eq(q.dim() + ideal.dim(), alg.dim(), "quotient dimension of F2[" + grp.to_string() + "]");
    }
  }

  // Two unit criteria agree on every group algebra of dim <= 12.
  for (const auto& grp : all_finite_groups(12)) {
    auto alg = group_algebra(grp);
    c.expect(units(*alg) == units_by_inverse_search(*alg), "unit criteria agree on F2[" + grp.to_string() + "]");
  }

  // Augmentation is multiplicative.
  for (const auto& grp : all_finite_groups(16)) {
    auto alg = group_algebra(grp);
    bool ok = true;
    for (int s = 0; s < 64; ++s) {
      BitVector u(alg->dim()), v(alg->dim());
      for (std::size_t i = 0; i < alg->dim(); ++i) {
        u.set(i, rng() & 1U);
        v.set(i, rng() & 1U);
      }
      ok &= augmentation(grp, alg->multiply(u, v)) == (augmentation(grp, u) && augmentation(grp, v));
    }
    c.expect(ok, "augmentation multiplicative on F2[" + grp.to_string() + "]");
  }

  // Order profiles separate isomorphism classes.
  std::map<std::map<Order, std::uint64_t>, GroupSpec> seen;
  for (const auto& grp : all_finite_groups(o.max_order)) {
    const auto [it, fresh] = seen.emplace(order_profile(grp), grp);
    c.expect(fresh, "order profile of " + grp.to_string() + " collides with " + it->second.to_string());
  }

  // Unit group of the kgproduct quotient is the product of unit groups.
  for (const auto& a : small) {
    for (const auto& b : small) {
      const GroupSpec parts[] = {a, b};
      const KgProduct kg = kgproduct(parts);
      const QuotientRing q = quotient(kg.form.spec, kg.ideal);
      std::vector<Order> expected = unit_group_invariants(*group_algebra(a));
      const auto ub = unit_group_invariants(*group_algebra(b));
      expected.insert(expected.end(), ub.begin(), ub.end());
      c.expect(unit_group_invariants(*q.algebra, q.units) == canonicalize(expected, 0).finite_orders(),
               "unit formula for " + a.to_string() + " x " + b.to_string());
    }
  }

  // A direct summand is realized by the subring its units generate.
  {
    const GroupSpec w = g("C2^2");
    const QuotientRing q = quotient(w, sumc2_ideal(2));
    const BitVector x0 = q.group_image[index_of(w, GroupElement{{1, 0}})];
    const BitVector subset[] = {x0};
    const Subring sub = subring_generated(*q.algebra, subset);
    const BitVector images[] = {sub.to_subring(x0)};
    const QuotientRing h = present(cyclic(2), *sub.algebra, images);
    c.expect(fully_realizes(q, w, o.engine).fully_realizes, "sumc2 ring fully realizes C2 x C2");
    c.expect_eq(units(*sub.algebra).size(), std::size_t{2}, "[H] has unit group of order 2");
    c.expect(fully_realizes(h, cyclic(2), o.engine).fully_realizes, "[H] fully realizes C2");
  }

  // Product of fully realizable groups without cross homomorphisms.
  {
    c.expect_eq(endomorphism_count(cyclic(6)), endomorphism_count(cyclic(2)) * endomorphism_count(cyclic(3)),
                "|End(C2 x C3)|");
    auto c2 = group_algebra(cyclic(2));
    auto c3 = group_algebra(cyclic(3));
    const AlgebraPtr factors[] = {c2, c3};
    auto target = product_algebra(factors);
    // C6 = C2 x C3 generated by (x, z).
    const BitVector parts[] = {c2->basis(1), c3->basis(1)};
    const BitVector images[] = {product_element(factors, parts)};
    const auto rep = fully_realizes(present(cyclic(6), *target, images), cyclic(6), o.engine);
    c.expect(rep.fully_realizes && rep.realized_endos == 6, "F2[C2] x F2[C3] realizes 6 of 6");
  }
  return c;
}

}  // namespace selftest

inline std::vector<CriterionResult> run_acceptance(const SelftestOptions& opts = {}) {
  using Check = selftest::Checker (*)(const SelftestOptions&);
  const std::pair<const char*, Check> criteria[] = {
      {"basic examples: F2[C2], F2[C4]/((1+y)^3), F2[C3] full; F4 realizes 2 of 3", selftest::example_corpus},
      {"odd order: End(C3xC3) = 81, F2xF4xF4 has 25; |End(F2 x F_2^k)| = k + 1", selftest::odd_order_counting},
      {"chain rings F2[C_2^k]: 2^k + 1 ideals, C4 only at j = 3, no C8/C16", selftest::chain_sweep},
      {"sumc2 and a24 quotients fully realize; star ideal equals a24", selftest::elementary_constructions},
      {"cyclic sweep n <= 100: fully realizable iff n | 12, witnesses verified", selftest::cyclic_sweep},
      {"negative evidence: C4xC4 and C3xC3 searches, shear map on F2[C3] x F4", selftest::negative_evidence},
      {"endomorphism filter equals brute-force oracle on rings of dim <= 4", selftest::oracle_equivalence},
      {"structural properties", selftest::structural_properties},
  };
  std::vector<CriterionResult> out;
  int id = 1;
  for (const auto& [name, check] : criteria) {
    CriterionResult r{id++, name, false, ""};
    try {
      const auto c = check(opts);
      r.passed = c.ok();
      r.detail = c.summary();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace fuchslab
