#include <gtest/gtest.h>

#include <cstdlib>
#include <set>
#include <vector>

#include "fuchslab/constructions.hpp"
#include "fuchslab/endo.hpp"
#include "fuchslab/selftest.hpp"
#include "oracles.hpp"

using namespace fuchslab;

namespace {

QuotientRing a24_c4() { return build_recipe(parse_recipe("a24(rank=0,c4=true)")); }

oracle::Vec to_vec(const BitVector& b) {
  oracle::Vec v(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) v[i] = b.test(i);
  return v;
}

/// Preservation decided on the explicit element set of the ideal.
std::size_t count_preserving_by_oracle(const QuotientRing& q) {
  const oracle::Group og{std::vector<long>(q.group.finite_orders().begin(), q.group.finite_orders().end())};
  std::vector<oracle::Vec> gens;
  for (const auto& row : q.ideal.rref_basis()) gens.push_back(to_vec(row));
  const auto elems = oracle::ideal_elements(og, gens);
  std::size_t count = 0;
  for (const auto& f : enumerate_endos(q.group)) {
    const auto map = element_map(f);
    bool ok = true;
    for (const auto& v : elems) {
      oracle::Vec image(v.size(), 0);
      for (std::size_t e = 0; e < v.size(); ++e) {
        if (v[e]) image[map[e]] ^= 1;
      }
      ok &= elems.count(image) != 0;
    }
    count += ok;
  }
  return count;
}

}  // namespace

TEST(PreservesIdeal, IdentityAlwaysPreserves) {
  for (int k = 1; k <= 3; ++k) {
    const GroupSpec g = cyclic(Order{1} << k);
    for (const auto& i : chain_ring_ideals(k)) EXPECT_TRUE(preserves_ideal(g, identity_hom(g), i));
  }
  const GroupSpec w = parse_group("C2^3");
  EXPECT_TRUE(preserves_ideal(w, identity_hom(w), sumc2_ideal(3)));
}

TEST(PreservesIdeal, SquaringOnC4) {
  const QuotientRing q = a24_c4();
  const GroupSpec c4 = cyclic(4);
  const GroupHom square{c4, c4, {GroupElement{{2}}}};
  EXPECT_TRUE(preserves_ideal(c4, square, q.ideal));
  const GroupHom wrong{cyclic(2), cyclic(2), {GroupElement{{1}}}};
  EXPECT_THROW(preserves_ideal(c4, wrong, q.ideal), DomainError);
}

TEST(PreservesIdeal, SwapOnC3xC3FieldRing) {
  const QuotientRing q = selftest::c3c3_fields_ring();
  const GroupHom swap{q.group, q.group, {GroupElement{{0, 1}}, GroupElement{{1, 0}}}};
  EXPECT_TRUE(preserves_ideal(q.group, swap, q.ideal));
  // Projection onto the F2 factor followed by F2 -> R is a ring map.
  const GroupHom trivial{q.group, q.group, {identity(q.group), identity(q.group)}};
  EXPECT_TRUE(preserves_ideal(q.group, trivial, q.ideal));
  // (a, b, c) -> (a, a, b) is a ring map; u, v -> uv is not.
  const GroupHom shift{q.group, q.group, {GroupElement{{0, 1}}, identity(q.group)}};
  EXPECT_TRUE(preserves_ideal(q.group, shift, q.ideal));
  const GroupHom diagonal{q.group, q.group, {GroupElement{{1, 1}}, GroupElement{{1, 1}}}};
  EXPECT_FALSE(preserves_ideal(q.group, diagonal, q.ideal));
}

TEST(PreservesIdeal, ShearFailsOnGroupRingTimesF4) {
  const QuotientRing q = selftest::group_ring_c3_times_f4();
  EXPECT_EQ(q.dim(), 5U);
  ASSERT_TRUE(q.unit_to_group.has_value());
  EXPECT_FALSE(preserves_ideal(q.group, selftest::shear_c3c3(), q.ideal));
  const auto rep = fully_realizes(q, q.group);
  EXPECT_TRUE(rep.unit_group_ok);
  EXPECT_FALSE(rep.fully_realizes);
}

TEST(RingEndos, Examples) {
  const QuotientRing c3 = selftest::group_ring(cyclic(3));
  const auto e3 = ring_endos(c3);
  ASSERT_EQ(e3.size(), 3U);
  EXPECT_EQ(e3[0].images[0], GroupElement{{0}});
  EXPECT_EQ(e3[1].images[0], GroupElement{{1}});
  EXPECT_EQ(e3[2].images[0], GroupElement{{2}});
  EXPECT_EQ(ring_endos(a24_c4()).size(), 4U);
  EXPECT_EQ(ring_endos(selftest::c3c3_fields_ring()).size(), 25U);
  EXPECT_THROW(ring_endos(selftest::group_ring(cyclic(4))), DomainError);
}

TEST(RingEndos, FilterMatchesIdealSetOracle) {
  for (const QuotientRing& q : {selftest::c3c3_fields_ring(), selftest::group_ring_c3_times_f4(), a24_c4(),
                                build_recipe(parse_recipe("a24(rank=1,c4=true)"))}) {
    EXPECT_EQ(ring_endos(q).size(), count_preserving_by_oracle(q)) << q.group.to_string();
  }
}

TEST(RingEndos, ClosedUnderComposition) {
  for (const QuotientRing& q : {selftest::c3c3_fields_ring(), selftest::group_ring_c3_times_f4(),
                                quotient(parse_group("C2^3"), sumc2_ideal(3))}) {
    const auto endos = ring_endos(q);
    std::set<std::vector<std::size_t>> maps;
    for (const auto& f : endos) maps.insert(element_map(f));
    for (const auto& f : endos) {
      for (const auto& h : endos) EXPECT_TRUE(maps.count(element_map(compose(f, h))));
    }
  }
}

TEST(FullyRealizes, ReportsAndWitness) {
  const auto c2 = fully_realizes(selftest::group_ring(cyclic(2)), cyclic(2));
  EXPECT_TRUE(c2.fully_realizes);
  EXPECT_EQ(c2.realized_endos, 2U);
  EXPECT_EQ(c2.total_endos, 2U);
  EXPECT_FALSE(c2.failing_witness.has_value());

  const QuotientRing q = selftest::c3c3_fields_ring();
  const auto r = fully_realizes(q, q.group);
  EXPECT_TRUE(r.unit_group_ok);
  EXPECT_FALSE(r.fully_realizes);
  EXPECT_EQ(r.realized_endos, 25U);
  EXPECT_EQ(r.total_endos, 81U);
  ASSERT_TRUE(r.failing_witness.has_value());
  EXPECT_FALSE(preserves_ideal(q.group, *r.failing_witness, q.ideal));
  // The witness is the first failure in enumeration order.
  const EndoSpace space(q.group);
  const std::uint64_t first = space.encode(*r.failing_witness);
  for (std::uint64_t k = 0; k < first; ++k) EXPECT_TRUE(preserves_ideal(q.group, space.hom(k), q.ideal));

  const auto mismatch = fully_realizes(selftest::group_ring(cyclic(2)), cyclic(4));
  EXPECT_FALSE(mismatch.unit_group_ok);
  EXPECT_FALSE(mismatch.fully_realizes);
  EXPECT_FALSE(mismatch.failing_witness.has_value());
  EXPECT_EQ(mismatch.total_endos, 4U);

  const auto no_map = fully_realizes(selftest::group_ring(cyclic(4)), cyclic(4));
  EXPECT_FALSE(no_map.unit_group_ok);
  EXPECT_THROW(fully_realizes(selftest::group_ring(cyclic(2)), parse_group("Cinf")), InfiniteGroupError);
}

TEST(FullyRealizes, BudgetAndParallelDeterminism) {
  const GroupSpec w = parse_group("C2^4");
  const QuotientRing q = quotient(w, sumc2_ideal(4));
  EXPECT_THROW(fully_realizes(q, w, EngineOptions{1000, 0}), BudgetExceeded);
  const auto serial = fully_realizes(q, w, EngineOptions{kDefaultMaxEndos, 1});
  const auto parallel = fully_realizes(q, w, EngineOptions{kDefaultMaxEndos, 4});
  EXPECT_EQ(serial.realized_endos, 65536U);
  EXPECT_EQ(parallel.realized_endos, serial.realized_endos);

  // A ring with failures: counts and witness must not depend on the worker count.
  const QuotientRing r = selftest::c3c3_fields_ring();
  const auto a = fully_realizes(r, r.group, EngineOptions{kDefaultMaxEndos, 1, 0});
  for (unsigned threads : {2U, 3U, 7U}) {
    const auto b = fully_realizes(r, r.group, EngineOptions{kDefaultMaxEndos, threads, 0});
    EXPECT_EQ(b.realized_endos, a.realized_endos);
    ASSERT_TRUE(b.failing_witness.has_value());
    EXPECT_EQ(*b.failing_witness, *a.failing_witness);
  }
  EXPECT_EQ(ring_endos(r, EngineOptions{kDefaultMaxEndos, 5, 0}).size(), 25U);
}

TEST(RingEndosOracle, Examples) {
  EXPECT_EQ(ring_endos_oracle(*field_algebra(1)), 1U);
  const auto f2 = field_algebra(1), f4 = field_algebra(2);
  EXPECT_EQ(ring_endos_oracle(*product_algebra({f2, f4})), 3U);
  EXPECT_EQ(ring_endos_oracle(*a24_c4().algebra), 4U);
  EXPECT_EQ(ring_endos_oracle(*field_algebra(2)), 2U);
  EXPECT_THROW(ring_endos_oracle(*product_algebra({f2, f4, f4})), BudgetExceeded);
}

TEST(RingEndosOracle, AgreesWithFilterOnSmallRings) {
  for (const auto& [name, q] : selftest::small_rings()) {
    EXPECT_EQ(ring_endos(q).size(), ring_endos_oracle(*q.algebra)) << name;
  }
}

TEST(WorkerCount, RespectsEnvironmentCap) {
  EXPECT_EQ(worker_count(EngineOptions{kDefaultMaxEndos, 3}), 3U);
  ::setenv("FUCHSLAB_THREADS", "1", 1);
  EXPECT_EQ(worker_count(EngineOptions{}), 1U);
  ::unsetenv("FUCHSLAB_THREADS");
  EXPECT_GE(worker_count(EngineOptions{}), 1U);
}
