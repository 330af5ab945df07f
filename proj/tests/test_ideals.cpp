#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "monoidforge/catalog.hpp"
#include "monoidforge/error.hpp"
#include "monoidforge/ideals.hpp"
#include "monoidforge/iso.hpp"
#include "monoidforge/subsets.hpp"
#include "oracles.hpp"

using namespace monoidforge;
namespace cat = monoidforge::catalog;

namespace {
  SubsetCode set(std::size_t n, std::initializer_list<Element> xs) {
    return SubsetCode::from_elements(n, xs);
  }

  std::vector<CayleyMonoid> sample_monoids() {
    std::vector<CayleyMonoid> out;
    for (auto const& spec : cat::default_catalog()) {
      out.push_back(cat::make(spec));
    }
    out.push_back(oracle::direct_product(cat::truncated_add(2), cat::cyclic_group(2)));
    out.push_back(oracle::direct_product(cat::truncated_add(1), cat::truncated_add(2)));
    out.push_back(oracle::direct_product(cat::semilattice_diamond(), cat::truncated_add(1)));
    std::mt19937 rng(3);
    for (int i = 0; i < 10; ++i) {
      out.push_back(oracle::random_transformation_monoid(rng, 9));
    }
    return out;
  }

  // The divisor-closed closure of {I} inside I(M).
  SubsetCode closure_in_view(IdealSemigroupView const& v, Element i) {
    auto const& im = v.monoid.monoid;
    return divisor_closed_closure(im, im.singleton(i));
  }
}  // namespace

TEST_CASE("is_ideal and generated_ideal examples") {
  auto t2 = cat::truncated_add(2);
  CHECK(is_ideal(t2, t2.singleton(2)));
  CHECK_FALSE(is_ideal(t2, t2.singleton(1)));
  CHECK(is_ideal(t2, t2.all()));
  auto d = cat::semilattice_diamond();
  CHECK(is_ideal(d, set(4, {1, 3})));

  CHECK(generated_ideal(t2, t2.singleton(1)) == set(3, {1, 2}));
  CHECK(generated_ideal(t2, t2.singleton(0)) == t2.all());
  CHECK(generated_ideal(d, d.singleton(1)) == set(4, {1, 3}));
  CHECK_THROWS_AS(generated_ideal(d, d.none()), Error);
}

TEST_CASE("ideal_monoid examples") {
  auto t2 = cat::truncated_add(2);
  auto v  = ideal_monoid(t2);
  REQUIRE(v.size() == 3);
  CHECK(v.ideal(0) == t2.all());
  CHECK(v.monoid.monoid.identity() == 0);
  CHECK(v.find(set(3, {1, 2})).has_value());
  CHECK(v.find(set(3, {2})).has_value());
  for (std::size_t i = 0; i < v.size(); ++i) {
    CHECK(v.principal_flags[i]);
    CHECK(v.fin_gen_flags[i]);
  }
  CHECK(find_isomorphisms(t2, v.monoid.monoid).witnesses.size() == 1);
  CHECK(oracle::count_isomorphisms(t2, v.monoid.monoid) == 1);

  auto c2 = ideal_monoid(cat::cyclic_group(2));
  CHECK(c2.size() == 1);

  auto d  = cat::semilattice_diamond();
  auto dv = ideal_monoid(d);
  REQUIRE(dv.size() == 5);
  for (auto const& i : {d.all(), set(4, {1, 3}), set(4, {2, 3}), set(4, {1, 2, 3}), set(4, {3})}) {
    auto idx = dv.find(i);
    REQUIRE(idx.has_value());
    CHECK(dv.principal_flags[*idx] == (i != set(4, {1, 2, 3})));
  }
}

TEST_CASE("ideal_monoid agrees with the subset filter") {
  for (auto const& m : sample_monoids()) {
    auto const v  = ideal_monoid(m);
    auto const ex = oracle::ideals(m);
    REQUIRE(v.size() == ex.size());
    for (auto mask : ex) {
      CHECK(v.find(SubsetCode::from_mask(m.order(), mask)).has_value());
    }
    if (v.size() <= 7) {
      CHECK(oracle::associative(v.monoid.monoid));
    }
    for (Element a = 0; a < m.order(); ++a) {
      CHECK(v.ideal(v.principal_of[a]) == principal_two_sided_ideal(m, a));
      CHECK(v.principal_flags[v.principal_of[a]]);
    }
  }
}

TEST_CASE("ideal_monoid size cap") {
  Limits small;
  small.max_subset_order = 4;
  CHECK_THROWS_AS(ideal_monoid(cat::truncated_add(4), small), Error);
}

TEST_CASE("ideal_power_exponent examples") {
  auto t2 = cat::truncated_add(2);
  CHECK(ideal_power_exponent(t2, set(3, {1, 2}), set(3, {2})) == std::optional<std::size_t>(2));
  auto d = cat::semilattice_diamond();
  CHECK(ideal_power_exponent(d, set(4, {1, 3}), set(4, {2, 3})) == std::nullopt);
  for (auto const& m : sample_monoids()) {
    auto const v = ideal_monoid(m);
    for (std::size_t i = 0; i < v.size(); ++i) {
      CHECK(ideal_power_exponent(m, v.ideal(static_cast<Element>(i)), m.all()) == std::optional<std::size_t>(1));
    }
  }
  try {
    ideal_power_exponent(t2, t2.singleton(1), t2.all());
    FAIL("expected not_an_ideal");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::not_an_ideal);
  }
}

TEST_CASE("ideal monoid laws") {
  for (auto const& m : sample_monoids()) {
    auto const  v  = ideal_monoid(m);
    auto const& im = v.monoid.monoid;
    auto const  u  = units(m);
    for (Element i = 0; i < v.size(); ++i) {
      CHECK(im.mul(0, i) == i);
      CHECK(im.mul(i, 0) == i);
      CHECK(v.ideal(i).intersects(u) == (v.ideal(i) == m.all()));
      for (Element j = 0; j < v.size(); ++j) {
        auto const p = v.ideal(im.mul(i, j));
        CHECK(p == setwise_product(m, v.ideal(i), v.ideal(j)));
        CHECK(p.is_subset_of(v.ideal(i) & v.ideal(j)));
      }
    }
  }
}

TEST_CASE("duo monoids: principal ideals") {
  for (auto const& m : sample_monoids()) {
    if (!is_duo(m)) {
      continue;
    }
    auto const  v  = ideal_monoid(m);
    auto const& im = v.monoid.monoid;
    // a |-> MaM is a homomorphism onto P(M)
    for (Element a = 0; a < m.order(); ++a) {
      for (Element b = 0; b < m.order(); ++b) {
        CHECK(v.principal_of[m.mul(a, b)] == im.mul(v.principal_of[a], v.principal_of[b]));
      }
    }
    SubsetCode principal(v.size());
    for (Element a = 0; a < m.order(); ++a) {
      principal.insert(v.principal_of[a]);
    }
    CHECK(principal == v.pi_set);
    if (!is_group(m)) {
      auto const nonunits = m.all() - units(m);
      CHECK(is_ideal(m, nonunits));
      CHECK(nonunits != m.all());
    }
    if (archimedean_profile(m).is_archimedean) {
      for (Element i = 1; i < v.size(); ++i) {
        CHECK(v.pi_set.is_subset_of(closure_in_view(v, i)));
      }
    }
  }
}

TEST_CASE("ideal divisibility implies containment; closure membership gives an exponent") {
  for (auto const& m : sample_monoids()) {
    auto const v = ideal_monoid(m);
    for (Element i = 0; i < v.size(); ++i) {
      auto const cl = closure_in_view(v, i);
      for (Element j = 0; j < v.size(); ++j) {
        if (ideal_divides(v, i, j)) {
          CHECK(v.ideal(j).is_subset_of(v.ideal(i)));
        }
        if (cl.contains(j)) {
          CHECK(ideal_power_exponent(m, v.ideal(i), v.ideal(j)).has_value());
        }
      }
    }
  }
}

TEST_CASE("check_pi_divisor_closed examples") {
  for (std::int64_t n = 1; n <= 4; ++n) {
    CHECK(check_pi_divisor_closed(cat::cyclic_group(n)).holds);
  }
  CHECK(check_pi_divisor_closed(cat::truncated_add(2)).holds);
  auto const d = cat::semilattice_diamond();
  auto const r = check_pi_divisor_closed(d);
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness.has_value());
  auto const v = ideal_monoid(d);
  auto const [x, y] = *r.witness;
  auto const xi     = *v.find(x);
  auto const yi     = *v.find(y);
  CHECK(v.pi_set.contains(v.monoid.monoid.mul(xi, yi)));
  bool const both_principal = v.pi_set.contains(xi) && v.pi_set.contains(yi);
  CHECK_FALSE(both_principal);
  // the pair named in the documentation is also a witness
  auto const a = *v.find(set(4, {1, 2, 3}));
  auto const b = *v.find(set(4, {2, 3}));
  CHECK(v.pi_set.contains(v.monoid.monoid.mul(a, b)));
  CHECK_FALSE(v.pi_set.contains(a));
}

TEST_CASE("strongly Archimedean characterization") {
  auto t2 = check_strongly_archimedean_characterization(cat::truncated_add(2));
  CHECK(t2.strongly_archimedean);
  CHECK(t2.closures_contain_pi);
  CHECK(t2.agree);

  auto const d = cat::semilattice_diamond();
  auto const r = check_strongly_archimedean_characterization(d);
  CHECK_FALSE(r.strongly_archimedean);
  CHECK_FALSE(r.closures_contain_pi);
  CHECK(r.agree);
  REQUIRE(r.witness.has_value());
  auto const v    = ideal_monoid(d);
  auto const seed = *v.find(r.witness->seed);
  auto const cl   = closure_in_view(v, seed);
  CHECK(cl.count() == r.witness->closure.size());
  auto const missing = *v.find(r.witness->missing_principal);
  CHECK(v.pi_set.contains(missing));
  CHECK_FALSE(cl.contains(missing));
  // the closure of {a, 0} misses {b, 0}
  CHECK_FALSE(closure_in_view(v, *v.find(set(4, {1, 3}))).contains(*v.find(set(4, {2, 3}))));

  for (std::int64_t n = 1; n <= 4; ++n) {
    auto g = check_strongly_archimedean_characterization(cat::cyclic_group(n));
    CHECK(g.strongly_archimedean);
    CHECK(g.closures_contain_pi);
  }
  CHECK_THROWS_AS(check_strongly_archimedean_characterization(cat::nonduo3()), Error);
  for (auto const& m : sample_monoids()) {
    if (is_duo(m)) {
      CHECK(check_strongly_archimedean_characterization(m).agree);
    }
  }
}

TEST_CASE("interleaving containment examples") {
  auto t2 = cat::truncated_add(2);
  std::vector<Element>     xs{1, 2};
  std::vector<std::size_t> sigma{0, 1};
  CHECK(check_interleaving_containment(t2, xs, sigma));
  auto d = cat::semilattice_diamond();
  CHECK(check_interleaving_containment(d, std::vector<Element>{1, 2}, sigma));
  for (Element x = 0; x < d.order(); ++x) {
    CHECK(check_interleaving_containment(d, std::vector<Element>{x}, std::vector<std::size_t>{0}));
  }

  auto code_of = [](auto&& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.code();
    }
    return ErrorCode::parse_error;
  };
  CHECK(code_of([&] {
          check_interleaving_containment(cat::nonduo3(), std::vector<Element>{1},
                                         std::vector<std::size_t>{0});
        })
        == ErrorCode::not_duo);
  CHECK(code_of([&] {
          check_interleaving_containment(t2, xs, std::vector<std::size_t>{1, 0});
        })
        == ErrorCode::bad_sigma);
  CHECK(code_of([&] {
          check_interleaving_containment(t2, xs, std::vector<std::size_t>{0, 2});
        })
        == ErrorCode::bad_sigma);
}

TEST_CASE("interleaving containment on random draws") {
  std::mt19937 rng(17);
  for (auto const& m : sample_monoids()) {
    if (!is_duo(m)) {
      continue;
    }
    std::uniform_int_distribution<Element> el(0, static_cast<Element>(m.order() - 1));
    std::uniform_int_distribution<int>     len(1, 5);
    for (int i = 0; i < 50; ++i) {
      std::vector<Element> xs(static_cast<std::size_t>(len(rng)));
      for (auto& x : xs) {
        x = el(rng);
      }
      std::vector<std::size_t> sigma;
      for (std::size_t k = 0; k < xs.size(); ++k) {
        if (rng() % 2 == 0) {
          sigma.push_back(k);
        }
      }
      if (sigma.empty()) {
        sigma.push_back(rng() % xs.size());
      }
      CHECK(check_interleaving_containment(m, xs, sigma));
    }
  }
}
