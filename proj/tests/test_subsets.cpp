#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "monoidforge/catalog.hpp"
#include "monoidforge/error.hpp"
#include "monoidforge/iso.hpp"
#include "monoidforge/subsets.hpp"
#include "oracles.hpp"

using namespace monoidforge;
namespace cat = monoidforge::catalog;

TEST_CASE("SubsetCode basics") {
  auto a = SubsetCode::from_elements(70, {0, 3, 69});
  CHECK(a.count() == 3);
  CHECK(a.contains(69));
  CHECK_FALSE(a.contains(70));
  CHECK(a.elements() == std::vector<Element>{0, 3, 69});
  CHECK(a.to_string() == "{0,3,69}");
  auto b = SubsetCode::from_elements(70, {3});
  CHECK(b.is_subset_of(a));
  CHECK((a - b) == SubsetCode::from_elements(70, {0, 69}));
  CHECK((a & b) == b);
  CHECK(canonical_less(b, a));
  CHECK_THROWS_AS(a | SubsetCode(4), Error);
  CHECK_THROWS_AS(SubsetCode(3).insert(3), Error);
  CHECK(SubsetCode::from_mask(4, 0b1010) == SubsetCode::from_elements(4, {1, 3}));
  CHECK(SubsetCode::from_elements(3, {0, 2}).to_string(std::vector<std::string>{"1", "a", "b"})
        == "{1,b}");
}

TEST_CASE("setwise_product examples") {
  auto t2 = cat::truncated_add(2);
  CHECK(setwise_product(t2, t2.singleton(1), SubsetCode::from_elements(3, {1, 2})) == t2.singleton(2));
  auto c2 = cat::cyclic_group(2);
  CHECK(setwise_product(c2, c2.all(), c2.all()) == c2.all());
  auto d = cat::semilattice_diamond();
  for (std::uint64_t s = 1; s < 16; ++s) {
    auto x = SubsetCode::from_mask(4, s);
    CHECK(setwise_product(d, d.singleton(d.identity()), x) == x);
    CHECK(setwise_product(d, x, d.singleton(d.identity())) == x);
  }
  CHECK_THROWS_AS(setwise_product(t2, t2.singleton(0), c2.singleton(0)), Error);
  CHECK_THROWS_AS(setwise_product(t2, t2.none(), t2.all()), Error);
  CHECK(setwise_power(t2, t2.singleton(1), 2) == t2.singleton(2));
}

TEST_CASE("setwise product laws on random triples") {
  std::mt19937 rng(2024);
  for (int round = 0; round < 30; ++round) {
    auto const                                  m = oracle::random_transformation_monoid(rng, 10);
    std::uniform_int_distribution<std::uint64_t> pick(1, (std::uint64_t{1} << m.order()) - 1);
    for (int i = 0; i < 40; ++i) {
      auto x = SubsetCode::from_mask(m.order(), pick(rng));
      auto y = SubsetCode::from_mask(m.order(), pick(rng));
      auto z = SubsetCode::from_mask(m.order(), pick(rng));
      CHECK(setwise_product(m, setwise_product(m, x, y), z)
            == setwise_product(m, x, setwise_product(m, y, z)));
      auto x2 = x | SubsetCode::from_mask(m.order(), pick(rng));
      auto y2 = y | SubsetCode::from_mask(m.order(), pick(rng));
      CHECK(setwise_product(m, x, y).is_subset_of(setwise_product(m, x2, y2)));
      CHECK(setwise_product(m, x, y).count() <= x.count() * y.count());
    }
  }
}

TEST_CASE("generated_subsemigroup examples") {
  auto t2 = cat::truncated_add(2);
  CHECK(generated_subsemigroup(t2, t2.singleton(1)) == SubsetCode::from_elements(3, {1, 2}));
  CHECK(generated_subsemigroup(t2, t2.singleton(0)) == t2.singleton(0));
  auto d = cat::semilattice_diamond();
  CHECK(generated_subsemigroup(d, SubsetCode::from_elements(4, {1, 2}))
        == SubsetCode::from_elements(4, {1, 2, 3}));
  CHECK_THROWS_AS(generated_subsemigroup(d, d.none()), Error);
}

TEST_CASE("power_monoid examples") {
  auto t2 = cat::truncated_add(2);
  auto p  = power_monoid(t2);
  CHECK(p.monoid.order() == 7);
  CHECK(oracle::associative(p.monoid));
  CHECK(units(p.monoid) == SubsetCode::singleton(7, *p.find(t2.singleton(0))));
  CHECK(p.labels[p.monoid.identity()] == t2.singleton(0));

  auto trivial = power_monoid(cat::cyclic_group(1));
  CHECK(trivial.monoid.order() == 1);

  auto c2 = cat::cyclic_group(2);
  auto pc = power_monoid(c2);
  REQUIRE(pc.monoid.order() == 3);
  auto e  = *pc.find(c2.singleton(0));
  auto g  = *pc.find(c2.singleton(1));
  auto eg = *pc.find(c2.all());
  CHECK(pc.monoid.mul(g, g) == e);
  for (Element x = 0; x < 3; ++x) {
    CHECK(pc.monoid.mul(eg, x) == eg);
    CHECK(pc.monoid.mul(x, eg) == eg);
  }
  // singletons first, in element order
  for (Element x = 0; x < t2.order(); ++x) {
    CHECK(p.labels[x] == t2.singleton(x));
  }
}

TEST_CASE("power_monoid respects the size cap") {
  Limits small;
  small.max_subset_order = 3;
  CHECK_THROWS_AS(power_monoid(cat::truncated_add(3), small), Error);
  try {
    power_monoid(cat::truncated_add(3), small);
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::too_large);
  }
  CHECK_NOTHROW(power_monoid(cat::truncated_add(2), small));
}

TEST_CASE("units of P(M) are the singleton units") {
  std::vector<CayleyMonoid> ms;
  for (auto const& spec : cat::default_catalog()) {
    auto m = cat::make(spec);
    if (m.order() <= 7) {
      ms.push_back(m);
    }
  }
  std::mt19937 rng(5);
  for (int i = 0; i < 8; ++i) {
    ms.push_back(oracle::random_transformation_monoid(rng, 7));
  }
  for (auto const& m : ms) {
    auto const p = power_monoid(m);
    SubsetCode expected(p.monoid.order());
    units(m).for_each([&](Element u) { expected.insert(*p.find(m.singleton(u))); });
    CHECK(units(p.monoid) == expected);
  }
}

TEST_CASE("augmentation of an isomorphism is an isomorphism") {
  std::mt19937 rng(9);
  for (int i = 0; i < 10; ++i) {
    auto const m = oracle::random_transformation_monoid(rng, 6);
    std::vector<Element> perm(m.order());
    std::iota(perm.begin(), perm.end(), Element{0});
    std::shuffle(perm.begin() + 1, perm.end(), rng);
    std::vector<std::vector<Element>> t(m.order(), std::vector<Element>(m.order()));
    for (Element a = 0; a < m.order(); ++a) {
      for (Element b = 0; b < m.order(); ++b) {
        t[perm[a]][perm[b]] = perm[m.mul(a, b)];
      }
    }
    auto const n  = build_cayley(t, perm[m.identity()]);
    auto const pm = power_monoid(m);
    auto const pn = power_monoid(n);
    auto const f  = augmentation(IsoWitness{perm, m.order(), n.order()}, pm, pn);
    CHECK(is_isomorphism(pm.monoid, pn.monoid, f.map));
  }
}

TEST_CASE("square_closed_identity_check examples") {
  auto c2 = cat::cyclic_group(2);
  CHECK(square_closed_identity_check(c2, c2.all()));
  auto one = cat::cyclic_group(1);
  CHECK(square_closed_identity_check(one, one.all()));
  try {
    square_closed_identity_check(c2, c2.singleton(1));
    FAIL("expected not_square_closed");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::not_square_closed);
  }
}

TEST_CASE("square-closed subsets of finite groups contain the identity") {
  for (std::int64_t n = 1; n <= 6; ++n) {
    auto const g = cat::cyclic_group(n);
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
      auto const x = SubsetCode::from_mask(g.order(), s);
      if (setwise_product(g, x, x) == x) {
        CHECK(square_closed_identity_check(g, x));
      }
    }
  }
  auto const s3 = unit_group(cat::full_transformation_monoid(3));
  REQUIRE(s3.order() == 6);
  for (std::uint64_t s = 1; s < 64; ++s) {
    auto const x = SubsetCode::from_mask(6, s);
    if (setwise_product(s3, x, x) == x) {
      CHECK(square_closed_identity_check(s3, x));
    }
  }
}
