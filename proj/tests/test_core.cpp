#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "monoidforge/catalog.hpp"
#include "monoidforge/cayley.hpp"
#include "monoidforge/error.hpp"
#include "monoidforge/iso.hpp"
#include "oracles.hpp"

using namespace monoidforge;
namespace cat = monoidforge::catalog;

namespace {
  std::vector<CayleyMonoid> sample_monoids() {
    std::vector<CayleyMonoid> out;
    for (auto const& spec : cat::default_catalog()) {
      out.push_back(cat::make(spec));
    }
    std::mt19937 rng(7);
    for (int i = 0; i < 12; ++i) {
      out.push_back(oracle::random_transformation_monoid(rng, 8));
    }
    return out;
  }
}  // namespace

TEST_CASE("build_cayley validation") {
  auto t2 = build_cayley({{0, 1, 2}, {1, 2, 2}, {2, 2, 2}}, 0);
  CHECK(t2.order() == 3);
  CHECK(oracle::associative(t2));

  auto trivial = build_cayley({{0}}, 0);
  CHECK(trivial.order() == 1);

  // (1*1)*2 = 2 but 1*(1*2) = 0
  try {
    build_cayley({{0, 1, 2}, {1, 0, 1}, {2, 2, 2}}, 0);
    FAIL("expected NonAssociativeError");
  } catch (NonAssociativeError const& e) {
    CHECK(e.code() == ErrorCode::non_associative);
    auto const t = std::vector<std::vector<Element>>{{0, 1, 2}, {1, 0, 1}, {2, 2, 2}};
    CHECK(t[t[e.i][e.j]][e.k] != t[e.i][t[e.j][e.k]]);
  }

  CHECK_THROWS_AS(build_cayley({{0, 1}, {1, 1}}, 1), NotIdentityError);
  try {
    build_cayley({{0, 1}, {0, 1}}, 0);
    FAIL("expected NotIdentityError");
  } catch (NotIdentityError const& e) {
    CHECK(e.element == 1);
  }
  CHECK_THROWS_AS(build_cayley({{0, 1}, {1}}, 0), Error);
  CHECK_THROWS_AS(build_cayley({{0, 5}, {1, 1}}, 0), Error);
  CHECK_THROWS_AS(build_cayley({}, 0), Error);
  CHECK_THROWS_AS(build_cayley({{0}}, 1), Error);
  try {
    build_cayley({{0, 1}, {1}}, 0);
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::malformed_table);
  }
}

TEST_CASE("property_report examples") {
  auto t2 = cat::truncated_add(2);
  auto r  = property_report(t2);
  CHECK(r.is_duo);
  CHECK_FALSE(r.is_cancellative);
  CHECK(r.is_reduced);
  CHECK(r.is_dedekind_finite);
  CHECK_FALSE(r.is_unit_cancellative);
  CHECK(r.units == t2.singleton(0));

  auto c3 = cat::cyclic_group(3);
  auto g  = property_report(c3);
  CHECK(g.is_duo);
  CHECK(g.is_cancellative);
  CHECK(g.is_dedekind_finite);
  CHECK(g.is_unit_cancellative);
  CHECK_FALSE(g.is_reduced);
  CHECK(g.units == c3.all());

  auto one = property_report(cat::cyclic_group(1));
  CHECK(one.is_duo);
  CHECK(one.is_cancellative);
  CHECK(one.is_reduced);
  CHECK(one.units.count() == 1);
}

TEST_CASE("divides examples") {
  auto t2 = cat::truncated_add(2);
  CHECK(divides(t2, 1, 2));
  CHECK_FALSE(divides(t2, 2, 1));
  for (auto const& m : sample_monoids()) {
    for (Element b = 0; b < m.order(); ++b) {
      CHECK(divides(m, m.identity(), b));
    }
  }
}

TEST_CASE("archimedean_profile examples") {
  auto t2 = archimedean_profile(cat::truncated_add(2));
  CHECK(t2.is_strongly_archimedean);
  CHECK(t2.is_archimedean);
  REQUIRE(t2.strong_exponent_per_element.size() == 3);
  CHECK(t2.strong_exponent_per_element[2] == std::optional<std::size_t>(2));
  CHECK(t2.strong_exponent_per_element[1] == std::optional<std::size_t>(1));

  auto d = archimedean_profile(cat::semilattice_diamond());
  CHECK_FALSE(d.is_archimedean);
  CHECK_FALSE(d.is_strongly_archimedean);
  // b^k = b never lands in aH = {a, 0}
  CHECK(d.archimedean_witness.at({1, 2}) == std::nullopt);

  for (std::int64_t n = 1; n <= 5; ++n) {
    auto g = archimedean_profile(cat::cyclic_group(n));
    CHECK(g.is_archimedean);
    CHECK(g.is_strongly_archimedean);
    CHECK(g.strong_exponent_per_element.empty());
    CHECK(g.archimedean_witness.empty());
  }
}

TEST_CASE("archimedean_profile agrees with direct search") {
  for (auto const& m : sample_monoids()) {
    auto const p = archimedean_profile(m);
    auto const u = units(m);
    bool       arch = true;
    for (Element a = 0; a < m.order(); ++a) {
      auto const ideal = oracle::two_sided(m, a);
      for (Element b = 0; b < m.order(); ++b) {
        if (u.contains(b)) {
          continue;
        }
        std::optional<std::size_t> k;
        Element                    pw = b;
        for (std::size_t e = 1; e <= m.order() + 1; ++e, pw = m.mul(pw, b)) {
          if (ideal.contains(pw)) {
            k = e;
            break;
          }
        }
        CHECK(p.archimedean_witness.at({a, b}) == k);
        arch = arch && k.has_value();
      }
    }
    CHECK(p.is_archimedean == arch);
    if (p.is_strongly_archimedean) {
      CHECK(p.is_archimedean);
    }
  }
}

TEST_CASE("divisor_closed_closure examples") {
  auto t2 = cat::truncated_add(2);
  CHECK(divisor_closed_closure(t2, t2.singleton(2)) == t2.all());
  CHECK(divisor_closed_closure(t2, t2.singleton(0)) == t2.singleton(0));
  auto d = cat::semilattice_diamond();
  CHECK(divisor_closed_closure(d, d.singleton(1)) == SubsetCode::from_elements(4, {0, 1}));
  CHECK_THROWS_AS(divisor_closed_closure(d, d.none()), Error);
  CHECK_THROWS_AS(divisor_closed_closure(d, t2.singleton(0)), Error);
}

TEST_CASE("divisor_closed_closure matches brute force on every seed") {
  for (auto const& m : sample_monoids()) {
    if (m.order() > 8) {
      continue;
    }
    DivisibilityIndex const index(m);
    for (std::uint64_t seed = 1; seed < (std::uint64_t{1} << m.order()); ++seed) {
      auto const got = divisor_closed_closure(m, index, SubsetCode::from_mask(m.order(), seed));
      CHECK(got.low_word() == oracle::dc_closure(m, seed));
      CHECK(is_subsemigroup(m, got));
      CHECK(is_divisor_closed(m, index, got));
    }
  }
}

TEST_CASE("closure contains the units of a Dedekind-finite monoid") {
  for (auto const& m : sample_monoids()) {
    if (!property_report(m).is_dedekind_finite) {
      continue;
    }
    auto const u = units(m);
    for (Element x = 0; x < m.order(); ++x) {
      CHECK(u.is_subset_of(divisor_closed_closure(m, m.singleton(x))));
    }
  }
}

TEST_CASE("structural invariants") {
  for (auto const& m : sample_monoids()) {
    auto const r = property_report(m);
    if (r.is_cancellative) {
      CHECK(r.is_unit_cancellative);
      CHECK(r.is_dedekind_finite);
      CHECK(r.units == m.all());
    }
    if (r.is_duo) {
      for (Element a = 0; a < m.order(); ++a) {
        CHECK(right_multiples(m, a) == left_multiples(m, a));
      }
    } else {
      auto w = duo_witness(m);
      REQUIRE(w.has_value());
      CHECK(right_multiples(m, *w) != left_multiples(m, *w));
    }
    CHECK(r.units.contains(m.identity()));
    CHECK(is_subsemigroup(m, r.units));
    for (Element a = 0; a < m.order(); ++a) {
      CHECK(principal_two_sided_ideal(m, a).low_word() == oracle::mask_of(oracle::two_sided(m, a)));
    }
  }
}

TEST_CASE("divisor-closed sets survive isomorphisms") {
  std::mt19937 rng(11);
  for (auto const& m : sample_monoids()) {
    if (m.order() > 8) {
      continue;
    }
    // Relabel m by a random permutation fixing nothing in particular.
    std::vector<Element> p(m.order());
    std::iota(p.begin(), p.end(), Element{0});
    std::shuffle(p.begin(), p.end(), rng);
    std::vector<std::vector<Element>> t(m.order(), std::vector<Element>(m.order()));
    for (Element a = 0; a < m.order(); ++a) {
      for (Element b = 0; b < m.order(); ++b) {
        t[p[a]][p[b]] = p[m.mul(a, b)];
      }
    }
    auto const n = build_cayley(t, p[m.identity()]);
    IsoWitness f{p, m.order(), n.order()};
    REQUIRE(is_isomorphism(m, n, p));
    DivisibilityIndex const mi(m), ni(n);
    for (Element x = 0; x < m.order(); ++x) {
      auto const d = divisor_closed_closure(m, mi, m.singleton(x));
      CHECK(is_divisor_closed(n, ni, image(f, d)));
      CHECK(image(f, d) == divisor_closed_closure(n, ni, n.singleton(p[x])));
    }
  }
}
