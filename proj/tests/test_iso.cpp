#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "monoidforge/catalog.hpp"
#include "monoidforge/error.hpp"
#include "monoidforge/ideals.hpp"
#include "monoidforge/iso.hpp"
#include "monoidforge/numsgp.hpp"
#include "monoidforge/subsets.hpp"
#include "oracles.hpp"

using namespace monoidforge;
namespace cat = monoidforge::catalog;

namespace {
  CayleyMonoid relabel(CayleyMonoid const& m, std::mt19937& rng) {
    std::vector<Element> p(m.order());
    std::iota(p.begin(), p.end(), Element{0});
    std::shuffle(p.begin(), p.end(), rng);
    std::vector<std::vector<Element>> t(m.order(), std::vector<Element>(m.order()));
    for (Element a = 0; a < m.order(); ++a) {
      for (Element b = 0; b < m.order(); ++b) {
        t[p[a]][p[b]] = p[m.mul(a, b)];
      }
    }
    return build_cayley(t, p[m.identity()]);
  }

  std::vector<CayleyMonoid> small_monoids() {
    std::vector<CayleyMonoid> out;
    for (auto const& spec : cat::default_catalog()) {
      auto m = cat::make(spec);
      if (m.order() <= 6) {
        out.push_back(m);
      }
    }
    out.push_back(oracle::direct_product(cat::cyclic_group(2), cat::cyclic_group(2)));
    out.push_back(oracle::direct_product(cat::truncated_add(1), cat::truncated_add(1)));
    out.push_back(oracle::direct_product(cat::truncated_add(2), cat::cyclic_group(2)));
    out.push_back(unit_group(cat::full_transformation_monoid(3)));
    std::mt19937 rng(31);
    for (int i = 0; i < 10; ++i) {
      out.push_back(oracle::random_transformation_monoid(rng, 6));
    }
    return out;
  }
}  // namespace

TEST_CASE("find_isomorphisms examples") {
  auto t2 = cat::truncated_add(2);
  CHECK(find_isomorphisms(t2, ideal_monoid(t2).monoid.monoid).witnesses.size() == 1);
  auto c3 = cat::cyclic_group(3);
  CHECK(find_isomorphisms(c3, c3).witnesses.size() == 2);
  CHECK_FALSE(find_isomorphisms(t2, c3).isomorphic());
  CHECK_FALSE(find_isomorphisms(t2, cat::truncated_add(3)).isomorphic());
}

TEST_CASE("find_isomorphisms agrees with brute force over all bijections") {
  std::mt19937 rng(8);
  auto const   ms = small_monoids();
  for (auto const& m : ms) {
    auto const copy = relabel(m, rng);
    auto const res  = find_isomorphisms(m, copy);
    CHECK(res.witnesses.size() == oracle::count_isomorphisms(m, copy));
    CHECK_FALSE(res.truncated);
    for (auto const& w : res.witnesses) {
      CHECK(is_isomorphism(m, copy, w.map));
      CHECK(w(m.identity()) == copy.identity());
    }
    MonoidFingerprint const a(m), b(copy);
    CHECK(a.multiset() == b.multiset());
  }
  for (std::size_t i = 0; i < ms.size(); ++i) {
    for (std::size_t j = i + 1; j < ms.size(); ++j) {
      if (ms[i].order() == ms[j].order()) {
        CHECK(find_isomorphisms(ms[i], ms[j]).witnesses.size()
              == oracle::count_isomorphisms(ms[i], ms[j]));
      }
    }
  }
}

TEST_CASE("enumeration limit") {
  auto const v4 = oracle::direct_product(cat::cyclic_group(2), cat::cyclic_group(2));
  auto const all = find_isomorphisms(v4, v4);
  CHECK(all.witnesses.size() == 6);
  CHECK_FALSE(all.truncated);
  auto const capped = find_isomorphisms(v4, v4, 2);
  CHECK(capped.witnesses.size() == 2);
  CHECK(capped.truncated);
  auto const exact = find_isomorphisms(v4, v4, 6);
  CHECK(exact.witnesses.size() == 6);
  CHECK_FALSE(exact.truncated);
}

TEST_CASE("restrict_to and unit_group") {
  auto const t3 = cat::full_transformation_monoid(3);
  auto const g  = unit_group(t3);
  CHECK(g.order() == 6);
  CHECK(is_group(g));
  CHECK_FALSE(is_duo(t3));
  auto const z = unit_group(cat::adjoin_zero_cyclic(3));
  CHECK(find_isomorphisms(z, cat::cyclic_group(3)).isomorphic());
}

TEST_CASE("check_restriction_theorem examples") {
  auto t2 = cat::truncated_add(2);
  auto r  = check_restriction_theorem(t2, t2);
  CHECK(r.hypotheses_hold);
  CHECK(r.ideal_monoids_isomorphic);
  CHECK(r.all_restrict);
  CHECK(r.reduced_quotients_isomorphic == std::optional<bool>(true));

  auto g = check_restriction_theorem(cat::cyclic_group(2), cat::cyclic_group(3));
  CHECK(g.isomorphism_count == 1);
  CHECK(g.all_restrict);

  auto const rees = cat::make({cat::Family::rees_truncation, {6, 2, 3}, {}});
  auto       rr   = check_restriction_theorem(rees, rees);
  CHECK(rr.ideal_monoids_isomorphic);
  CHECK(rr.all_restrict);
  CHECK_FALSE(rr.truncated);
}

TEST_CASE("check_power_iso_restricts_to_ideals examples") {
  auto c2 = cat::cyclic_group(2);
  auto r  = check_power_iso_restricts_to_ideals(c2, c2);
  CHECK(r.holds);
  CHECK(r.isomorphism_count >= 1);
  CHECK(r.identity_in_preimage >= 1);

  auto one = cat::cyclic_group(1);
  CHECK(check_power_iso_restricts_to_ideals(one, one).holds);

  auto t2 = cat::truncated_add(2);
  auto p  = check_power_iso_restricts_to_ideals(t2, t2);
  CHECK(p.holds);
  CHECK(p.isomorphism_count
        == oracle::count_isomorphisms(power_monoid(t2).monoid, power_monoid(t2).monoid));

  try {
    check_power_iso_restricts_to_ideals(cat::truncated_add(5), cat::truncated_add(5));
    FAIL("expected too_large");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::too_large);
  }
}

TEST_CASE("check_unit_group_iso examples") {
  auto c2 = cat::cyclic_group(2);
  auto r  = check_unit_group_iso(c2, c2);
  CHECK(r.globally_isomorphic);
  CHECK(r.unit_groups_isomorphic == std::optional<bool>(true));
  CHECK(r.holds);

  auto t2 = cat::truncated_add(2);
  auto s  = check_unit_group_iso(t2, t2);
  CHECK(s.globally_isomorphic);
  CHECK(s.reducedness_agrees == std::optional<bool>(true));
  CHECK(s.holds);

  auto v = check_unit_group_iso(c2, cat::cyclic_group(1));
  CHECK_FALSE(v.globally_isomorphic);
  CHECK(v.holds);
}

TEST_CASE("section 4 checks over small pairs") {
  std::vector<CayleyMonoid> ms;
  for (auto const& m : small_monoids()) {
    if (m.order() <= 4) {
      ms.push_back(m);
    }
  }
  for (auto const& h : ms) {
    for (auto const& k : ms) {
      CHECK(check_power_iso_restricts_to_ideals(h, k).holds);
      CHECK(check_unit_group_iso(h, k).holds);
    }
  }
}
