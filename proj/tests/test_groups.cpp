#include <gtest/gtest.h>

#include <map>
#include <set>
#include <vector>

#include "fuchslab/groups.hpp"
#include "fuchslab/selftest.hpp"
#include "oracles.hpp"

using namespace fuchslab;

namespace {

std::vector<Order> orders_of(const char* spec) { return parse_group(spec).finite_orders(); }

oracle::Group as_oracle(const GroupSpec& g) {
  return oracle::Group{std::vector<long>(g.finite_orders().begin(), g.finite_orders().end())};
}

}  // namespace

TEST(ParseGroup, Examples) {
  EXPECT_EQ(orders_of("C2^3 x C4 x C3"), (std::vector<Order>{2, 2, 2, 12}));
  EXPECT_TRUE(parse_group("C1").is_trivial());
  EXPECT_EQ(parse_group("C1").to_string(), "C1");
  const GroupSpec g = parse_group("Cinf^2 x C2");
  EXPECT_EQ(g.finite_orders(), std::vector<Order>{2});
  EXPECT_EQ(g.infinite_rank(), 2);
  EXPECT_FALSE(g.is_finite());
}

TEST(ParseGroup, WhitespaceAndTrivialFactors) {
  EXPECT_EQ(parse_group("C2xC3"), parse_group("  C6 "));
  EXPECT_EQ(parse_group("C1 x C4 x C1^3"), cyclic(4));
  EXPECT_EQ(parse_group("Cinf x Cinf").infinite_rank(), 2);
}

TEST(ParseGroup, Errors) {
  for (const char* bad : {"", "C0", "C", "C2 x", "D4", "C2^0", "C2 y C3", "C2^", "Cinf^0", "C99999999999999999999",
                          "C4294967296 x C4294967296"}) {
    EXPECT_THROW(parse_group(bad), ParseError) << bad;
  }
}

TEST(ParseGroup, RoundTripsThroughText) {
  for (const auto& g : selftest::all_finite_groups(64)) EXPECT_EQ(parse_group(g.to_string()), g);
  const GroupSpec inf = parse_group("C2 x Cinf^3 x C6");
  EXPECT_EQ(inf.to_string(), "C2 x C6 x Cinf^3");
  EXPECT_EQ(parse_group(inf.to_string()), inf);
}

TEST(Canonicalize, Examples) {
  const Order a[] = {4, 3};
  EXPECT_EQ(canonicalize(a).finite_orders(), std::vector<Order>{12});
  const Order b[] = {2, 2};
  EXPECT_EQ(canonicalize(b).finite_orders(), (std::vector<Order>{2, 2}));
  const Order c[] = {6, 4};
  EXPECT_EQ(canonicalize(c).finite_orders(), (std::vector<Order>{2, 12}));
}

TEST(Canonicalize, IdempotentAndProfilePreserving) {
  for (const auto& g : selftest::all_finite_groups(64)) {
    EXPECT_EQ(canonicalize(g), g);
    for (std::size_t i = 1; i < g.rank(); ++i) EXPECT_EQ(g.finite_orders()[i] % g.finite_orders()[i - 1], 0);
  }
  // A non-canonical factor list has the same element orders as its canonical form.
  const std::vector<long> raw = {6, 4, 10};
  const Order rawo[] = {6, 4, 10};
  EXPECT_EQ(oracle::order_profile(oracle::Group{raw}),
            oracle::order_profile(as_oracle(canonicalize(rawo))));
}

TEST(CanonicalForm, ExplicitIsomorphism) {
  const Order parts[] = {2, 4, 3, 6};
  const CanonicalForm f = canonical_form(parts);
  EXPECT_EQ(f.spec.finite_orders(), (std::vector<Order>{2, 6, 12}));
  ASSERT_EQ(f.generator_images.size(), 4U);
  // The images have the right orders and generate the whole group.
  std::set<std::size_t> reached;
  for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(element_order(f.spec, f.generator_images[j]), parts[j]);
  for (Order a = 0; a < 2; ++a) {
    for (Order b = 0; b < 4; ++b) {
      for (Order c = 0; c < 3; ++c) {
        for (Order d = 0; d < 6; ++d) {
          GroupElement e = scale(f.spec, f.generator_images[0], a);
          e = add(f.spec, e, scale(f.spec, f.generator_images[1], b));
          e = add(f.spec, e, scale(f.spec, f.generator_images[2], c));
          e = add(f.spec, e, scale(f.spec, f.generator_images[3], d));
          reached.insert(index_of(f.spec, e));
        }
      }
    }
  }
  EXPECT_EQ(reached.size(), 144U);
}

TEST(Elements, CountsAndOrder) {
  EXPECT_EQ(elements(parse_group("C2 x C2")).size(), 4U);
  EXPECT_EQ(elements(cyclic(12)).size(), 12U);
  EXPECT_EQ(elements(parse_group("C2^2 x C4")).size(), 16U);
  const auto es = elements(parse_group("C2 x C4"));
  EXPECT_EQ(es.front(), identity(parse_group("C2 x C4")));
  EXPECT_EQ(es[1].exponents, (std::vector<Order>{0, 1}));
  EXPECT_EQ(es[4].exponents, (std::vector<Order>{1, 0}));
  for (std::size_t i = 0; i < es.size(); ++i) EXPECT_EQ(index_of(parse_group("C2 x C4"), es[i]), i);
  EXPECT_THROW(elements(parse_group("Cinf")), InfiniteGroupError);
  EXPECT_THROW(elements(parse_group("C2^25")), BudgetExceeded);
}

TEST(Elements, ElementOrder) {
  const GroupSpec g = parse_group("C4 x C3");  // canonical C12
  EXPECT_EQ(element_order(g, identity(g)), 1);
  // (1,0) in C4 x C3 is 3 in C12 under CRT; (2,1) is 6 + 4 = 10.
  EXPECT_EQ(element_order(g, GroupElement{{3}}), 4);
  EXPECT_EQ(element_order(g, GroupElement{{10}}), 6);
  const Order parts[] = {4, 3};
  const CanonicalForm f = canonical_form(parts);
  EXPECT_EQ(element_order(f.spec, f.generator_images[0]), 4);
  const GroupElement two_one = add(f.spec, scale(f.spec, f.generator_images[0], 2), f.generator_images[1]);
  EXPECT_EQ(element_order(f.spec, two_one), 6);
}

TEST(OrderProfile, Examples) {
  EXPECT_EQ(order_profile(cyclic(4)), (std::map<Order, std::uint64_t>{{1, 1}, {2, 1}, {4, 2}}));
  EXPECT_EQ(order_profile(parse_group("C2 x C2")), (std::map<Order, std::uint64_t>{{1, 1}, {2, 3}}));
  EXPECT_EQ(order_profile(parse_group("C2 x C4")), (std::map<Order, std::uint64_t>{{1, 1}, {2, 3}, {4, 4}}));
  EXPECT_EQ(order_profile(cyclic(8)), (std::map<Order, std::uint64_t>{{1, 1}, {2, 1}, {4, 2}, {8, 4}}));
}

TEST(OrderProfile, MatchesOracleAndSeparatesClasses) {
  std::map<std::map<Order, std::uint64_t>, GroupSpec> seen;
  for (const auto& g : selftest::all_finite_groups(64)) {
    const auto p = order_profile(g);
    const auto o = oracle::order_profile(as_oracle(g));
    EXPECT_EQ(p.size(), o.size());
    for (const auto& [k, c] : o) EXPECT_EQ(p.at(k), c) << g.to_string();
    EXPECT_TRUE(seen.emplace(p, g).second) << g.to_string();
  }
  // Number of abelian groups of order <= 64, summed from partition counts.
  EXPECT_EQ(seen.size(), 117U);
}

TEST(Endomorphisms, Counts) {
  EXPECT_EQ(endomorphism_count(parse_group("C3 x C3")), 81U);
  EXPECT_EQ(endomorphism_count(GroupSpec{}), 1U);
  EXPECT_EQ(endomorphism_count(parse_group("C2 x C4")), 32U);
  EXPECT_EQ(enumerate_endos(GroupSpec{}).size(), 1U);
  EXPECT_THROW(endomorphism_count(parse_group("Cinf")), InfiniteGroupError);
  EXPECT_THROW(enumerate_endos(parse_group("C2^5")), BudgetExceeded);  // 2^25 > 10^6
  EXPECT_THROW(enumerate_endos(parse_group("C2^3"), 511), BudgetExceeded);
  EXPECT_EQ(enumerate_endos(parse_group("C2^3"), 512).size(), 512U);
}

TEST(Endomorphisms, EnumerationMatchesOracle) {
  for (const auto& g : selftest::all_finite_groups(64)) {
    const std::uint64_t expected = oracle::count_endos(as_oracle(g));
    EXPECT_EQ(endomorphism_count(g), expected) << g.to_string();
    if (expected > 5000) continue;
    const auto endos = enumerate_endos(g);
    ASSERT_EQ(endos.size(), expected);
    std::set<std::vector<std::size_t>> distinct;
    for (const auto& f : endos) {
      EXPECT_TRUE(is_well_defined(f));
      distinct.insert(element_map(f));
    }
    EXPECT_EQ(distinct.size(), expected);
  }
}

TEST(Endomorphisms, ClosedUnderComposition) {
  for (const auto& g : selftest::all_finite_groups(32)) {
    if (endomorphism_count(g) > 2000) continue;
    const auto endos = enumerate_endos(g);
    const EndoSpace space(g);
    for (std::size_t i = 0; i < endos.size(); i += 7) {
      for (std::size_t j = 0; j < endos.size(); j += 5) {
        const GroupHom c = compose(endos[i], endos[j]);
        const std::uint64_t k = space.encode(c);
        EXPECT_EQ(space.hom(k), c);
      }
    }
  }
}

TEST(Endomorphisms, EncodeDecodeAndFormatting) {
  const GroupSpec g = parse_group("C2 x C4");
  const EndoSpace space(g);
  for (std::uint64_t k = 0; k < space.size(); ++k) EXPECT_EQ(space.encode(space.hom(k)), k);
  EXPECT_EQ(space.hom(0).images[0], identity(g));
  EXPECT_EQ(to_string(identity_hom(g)), "[(1,0), (0,1)]");
  const GroupHom bad{g, g, {GroupElement{{0, 1}}, GroupElement{{0, 1}}}};
  EXPECT_FALSE(is_well_defined(bad));
  EXPECT_THROW(space.encode(bad), DomainError);
}

TEST(Endomorphisms, ApplyIsHomomorphism) {
  const GroupSpec g = parse_group("C2 x C6");
  for (const auto& f : enumerate_endos(g)) {
    for (const auto& a : elements(g)) {
      for (const auto& b : {GroupElement{{1, 0}}, GroupElement{{1, 5}}, GroupElement{{0, 3}}}) {
        EXPECT_EQ(apply(f, add(g, a, b)), add(g, apply(f, a), apply(f, b)));
      }
    }
  }
}

TEST(Elements, Arithmetic) {
  const GroupSpec g = parse_group("C3 x C6");
  const GroupElement a{{2, 5}};
  EXPECT_EQ(add(g, a, a).exponents, (std::vector<Order>{1, 4}));
  EXPECT_EQ(scale(g, a, -1).exponents, (std::vector<Order>{1, 1}));
  EXPECT_TRUE(is_member(g, a));
  EXPECT_FALSE(is_member(g, GroupElement{{3, 0}}));
  EXPECT_EQ(count_killed_by(g, 3), 9U);
  EXPECT_EQ(product(cyclic(2), parse_group("Cinf x C3")).to_string(), "C6 x Cinf");
}
