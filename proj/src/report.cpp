#include "monoidforge/report.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "monoidforge/catalog.hpp"
#include "monoidforge/cayley.hpp"
#include "monoidforge/error.hpp"
#include "monoidforge/ideals.hpp"
#include "monoidforge/iso.hpp"
#include "monoidforge/numsgp.hpp"
#include "monoidforge/quotient.hpp"
#include "monoidforge/subsets.hpp"

namespace monoidforge::report {

  namespace {
    namespace cat = monoidforge::catalog;

    using Rng = std::mt19937_64;

    // rng() % n keeps draws identical across standard libraries, unlike the
    // <random> distributions.
    std::size_t draw(Rng& rng, std::size_t n) {
      return static_cast<std::size_t>(rng() % n);
    }

    struct Instance {
      std::string        id;
      cat::CatalogSpec   spec;
      CayleyMonoid       m;
    };

    std::vector<Instance> catalog_instances() {
      std::vector<Instance> out;
      for (auto const& spec : cat::default_catalog()) {
        out.push_back({spec.id(), spec, cat::make(spec)});
      }
      return out;
    }

    Check outcome(std::string id, bool ok, std::optional<Json> witness = std::nullopt) {
      return {std::move(id), ok ? Status::pass : Status::fail, std::move(witness)};
    }

    Check vacuous(std::string id, Json witness) {
      return {std::move(id), Status::vacuous, std::move(witness)};
    }

    Check reported(std::string id, Json witness) {
      return {std::move(id), Status::reported, std::move(witness)};
    }

    std::string show(CayleyMonoid const& m, SubsetCode const& s) {
      return s.to_string(m.names());
    }

    Json not_duo(CayleyMonoid const& m) {
      auto w = duo_witness(m);
      return Json{{"not_duo_at", w ? m.name(*w) : std::string()}};
    }

    // The divisor-closed closure of {I} inside I(M).
    SubsetCode closure_of(IdealSemigroupView const& v, Element i) {
      auto const& im = v.monoid.monoid;
      return divisor_closed_closure(im, im.singleton(i));
    }

    // -- red-iso-principal ---------------------------------------------------

    void suite_red_iso(SuiteReport& rep, Limits const& limits) {
      for (auto const& inst : catalog_instances()) {
        auto const&    m = inst.m;
        InstanceResult ir{inst.id, {}};
        if (!is_duo(m)) {
          ir.checks.push_back(vacuous("red-iso-principal", not_duo(m)));
          rep.instances.push_back(std::move(ir));
          continue;
        }
        auto const view = ideal_monoid(m, limits);
        auto const r    = check_red_iso_principal(m, view);
        auto const q    = reduced_quotient(m);
        Json       w    = Json::object();
        if (r.holds) {
          for (std::size_t c = 0; c < r.witness.size(); ++c) {
            w[q.monoid.name(static_cast<Element>(c))] = show(m, r.witness[c]);
          }
        } else {
          w["failure"] = r.failure;
        }
        ir.checks.push_back(outcome("red-iso-principal", r.holds, w));

        auto const assoc = associatedness(m);
        ir.checks.push_back(outcome("associatedness-is-congruence",
                                    congruence_closure(m, assoc)
                                        == equivalence_closure(m.order(), assoc)));
        ir.checks.push_back(outcome("reduced-quotient-is-reduced",
                                    property_report(q.monoid).is_reduced,
                                    Json{{"classes", q.monoid.order()}}));
        if (property_report(m).is_cancellative) {
          ir.checks.push_back(outcome("reduced-quotient-cancellative",
                                      property_report(q.monoid).is_cancellative));
        } else {
          ir.checks.push_back(vacuous("reduced-quotient-cancellative", Json{{"cancellative", false}}));
        }
        rep.instances.push_back(std::move(ir));
      }
    }

    // -- strongly-arch-char --------------------------------------------------

    void suite_strong_arch(SuiteReport& rep, Limits const& limits) {
      for (auto const& inst : catalog_instances()) {
        auto const&    m = inst.m;
        InstanceResult ir{inst.id, {}};
        if (!is_duo(m)) {
          ir.checks.push_back(vacuous("strongly-archimedean-iff-closures-contain-pi", not_duo(m)));
          rep.instances.push_back(std::move(ir));
          continue;
        }
        auto const view = ideal_monoid(m, limits);
        auto const c    = check_strongly_archimedean_characterization(m, view);
        Json       w{{"strongly_archimedean", c.strongly_archimedean},
                     {"closures_contain_pi", c.closures_contain_pi}};
        if (c.witness) {
          Json closure = Json::array();
          for (auto const& i : c.witness->closure) {
            closure.push_back(show(m, i));
          }
          w["seed"]              = show(m, c.witness->seed);
          w["closure"]           = closure;
          w["missing_principal"] = show(m, c.witness->missing_principal);
        }
        ir.checks.push_back(outcome("strongly-archimedean-iff-closures-contain-pi", c.agree, w));

        auto const prof = archimedean_profile(m);
        if (prof.is_archimedean) {
          std::optional<Json> bad;
          for (Element i = 1; i < view.size() && !bad; ++i) {
            auto const cl = closure_of(view, i);
            if (!view.pi_set.is_subset_of(cl)) {
              bad = Json{{"seed", show(m, view.ideal(i))}};
            }
          }
          ir.checks.push_back(outcome("archimedean-closures-contain-pi", !bad, bad));
        } else {
          ir.checks.push_back(vacuous("archimedean-closures-contain-pi", Json{{"archimedean", false}}));
        }
        ir.checks.push_back(reported("archimedean-vs-strongly-archimedean",
                                     Json{{"archimedean", prof.is_archimedean},
                                          {"strongly_archimedean", prof.is_strongly_archimedean}}));
        rep.instances.push_back(std::move(ir));
      }
      rep.notes.emplace_back(
          "The ideal side is decided by the closures of single ideals other than M; the "
          "trivial divisor-closed submonoid {M} is excluded.");
    }

    // -- pi-divisor-closed ---------------------------------------------------

    void suite_pi_dc(SuiteReport& rep, Limits const& limits) {
      for (auto const& inst : catalog_instances()) {
        auto const& m    = inst.m;
        auto const  view = ideal_monoid(m, limits);
        auto const  r    = check_pi_divisor_closed(view);
        Json        w{{"holds", r.holds}, {"ideals", view.size()}};
        if (r.witness) {
          w["product"] = Json::array({show(m, r.witness->first), show(m, r.witness->second)});
        }
        auto const props = property_report(m);
        Check      c;
        if (props.is_duo && props.is_cancellative) {
          c = outcome("pi-divisor-closed", r.holds, w);
        } else {
          c = reported("pi-divisor-closed", w);
        }
        rep.instances.push_back({inst.id, {c}});
      }
      rep.notes.emplace_back(
          "Asserted for cancellative duo monoids only; a finite cancellative monoid is a group, "
          "so other instances are recorded, not asserted. Non-cancellative converses are not "
          "checked since no finite non-group instance satisfies their hypotheses.");
    }

    // -- interleaving --------------------------------------------------------

    void suite_interleaving(SuiteReport& rep, Limits const&) {
      constexpr std::size_t draws = 1000;
      auto const            insts = catalog_instances();
      for (std::size_t idx = 0; idx < insts.size(); ++idx) {
        auto const& m = insts[idx].m;
        if (!is_duo(m)) {
          rep.instances.push_back(
              {insts[idx].id, {vacuous("interleaving-containment", not_duo(m))}});
          continue;
        }
        Rng                 rng(rep.seed + idx);
        std::size_t         failures = 0;
        std::optional<Json> first;
        for (std::size_t d = 0; d < draws; ++d) {
          std::size_t const    n = 1 + draw(rng, 6);
          std::vector<Element> xs(n);
          for (auto& x : xs) {
            x = static_cast<Element>(draw(rng, m.order()));
          }
          std::vector<std::size_t> sigma;
          for (std::size_t k = 0; k < n; ++k) {
            if (draw(rng, 2) == 0) {
              sigma.push_back(k);
            }
          }
          if (sigma.empty()) {
            sigma.push_back(draw(rng, n));
          }
          if (!check_interleaving_containment(m, xs, sigma)) {
            ++failures;
            if (!first) {
              Json names = Json::array();
              for (auto x : xs) {
                names.push_back(m.name(x));
              }
              first = Json{{"xs", names}, {"sigma", sigma}};
            }
          }
        }
        Json w{{"draws", draws}, {"failures", failures}};
        if (first) {
          w["first_failure"] = *first;
        }
        rep.instances.push_back({insts[idx].id, {outcome("interleaving-containment", failures == 0, w)}});
      }
    }

    // -- restriction ---------------------------------------------------------

    void suite_restriction(SuiteReport& rep, Limits const& limits) {
      auto const        insts = catalog_instances();
      std::vector<bool> hyp;
      std::vector<std::size_t> ideal_count;
      for (auto const& inst : insts) {
        auto const view = ideal_monoid(inst.m, limits);
        ideal_count.push_back(view.size());
        hyp.push_back(is_duo(inst.m) && archimedean_profile(inst.m).is_strongly_archimedean
                      && check_pi_divisor_closed(view).holds);
      }
      for (std::size_t i = 0; i < insts.size(); ++i) {
        for (std::size_t j = i; j < insts.size(); ++j) {
          bool const asserted = hyp[i] && hyp[j];
          if (!asserted && ideal_count[i] != ideal_count[j]) {
            continue;
          }
          auto const r = check_restriction_theorem(insts[i].m, insts[j].m, limits);
          if (!asserted && !r.ideal_monoids_isomorphic) {
            continue;
          }
          Json w{{"isomorphisms", r.isomorphism_count}, {"truncated", r.truncated},
                 {"all_restrict", r.all_restrict}};
          if (r.reduced_quotients_isomorphic) {
            w["reduced_quotients_isomorphic"] = *r.reduced_quotients_isomorphic;
          }
          if (r.counterexample) {
            w["counterexample"] = r.counterexample->map;
          }
          Check c;
          if (!asserted) {
            c = reported("ideal-isomorphisms-restrict-to-principal", w);
          } else if (!r.ideal_monoids_isomorphic) {
            c = vacuous("ideal-isomorphisms-restrict-to-principal", w);
          } else {
            bool const ok = r.all_restrict && r.reduced_quotients_isomorphic.value_or(false);
            c             = outcome("ideal-isomorphisms-restrict-to-principal", ok, w);
          }
          rep.instances.push_back({insts[i].id + " ~ " + insts[j].id, {c}});
        }
      }
      rep.notes.emplace_back(
          "Asserted for pairs that are duo, strongly Archimedean and have the principal ideals "
          "divisor-closed in the ideal monoid; this last property stands in for "
          "cancellativity, which at finite scale holds only for groups. Other pairs with "
          "isomorphic ideal monoids are recorded.");
    }

    // -- power-iso, unit-groups ----------------------------------------------

    std::vector<Instance> small_instances() {
      std::vector<Instance> out;
      for (auto& inst : catalog_instances()) {
        if (inst.m.order() <= 4) {
          out.push_back(std::move(inst));
        }
      }
      return out;
    }

    void suite_power_iso(SuiteReport& rep, Limits const& limits) {
      auto const insts = small_instances();
      for (auto const& h : insts) {
        for (auto const& k : insts) {
          auto const r = check_power_iso_restricts_to_ideals(h.m, k.m, limits);
          Json       w{{"isomorphisms", r.isomorphism_count}, {"truncated", r.truncated},
                       {"identity_in_preimage", r.identity_in_preimage},
                       {"identity_in_both", r.identity_in_both}};
          if (!r.failure.empty()) {
            w["failure"] = r.failure;
          }
          Check c = r.isomorphism_count == 0 ? vacuous("power-iso-restricts-to-ideals", w)
                                             : outcome("power-iso-restricts-to-ideals", r.holds, w);
          rep.instances.push_back({h.id + " ~ " + k.id, {c}});
        }
      }
      rep.notes.emplace_back(
          "Hosts of order at most 4. For a finite host the finitary power monoid coincides "
          "with the full power monoid.");
    }

    void suite_unit_groups(SuiteReport& rep, Limits const& limits) {
      auto const insts = small_instances();
      for (auto const& h : insts) {
        for (auto const& k : insts) {
          auto const r = check_unit_group_iso(h.m, k.m, limits);
          Json       w{{"globally_isomorphic", r.globally_isomorphic}};
          if (r.unit_groups_isomorphic) {
            w["unit_groups_isomorphic"] = *r.unit_groups_isomorphic;
          }
          if (r.reducedness_agrees) {
            w["reducedness_agrees"] = *r.reducedness_agrees;
          }
          Check c = r.globally_isomorphic ? outcome("global-iso-preserves-units", r.holds, w)
                                          : vacuous("global-iso-preserves-units", w);
          rep.instances.push_back({h.id + " ~ " + k.id, {c}});
        }
      }
    }

    // -- numsgp-laws ---------------------------------------------------------

    std::vector<bool> coin_table(std::vector<std::int64_t> const& gens, std::int64_t limit) {
      std::vector<bool> r(static_cast<std::size_t>(limit + 1), false);
      r[0] = true;
      for (std::int64_t n = 1; n <= limit; ++n) {
        for (auto g : gens) {
          if (g <= n && r[static_cast<std::size_t>(n - g)]) {
            r[static_cast<std::size_t>(n)] = true;
            break;
          }
        }
      }
      return r;
    }

    std::string sg_id(std::vector<std::int64_t> const& gens) {
      std::string out = "<";
      for (std::size_t i = 0; i < gens.size(); ++i) {
        out += (i ? "," : "") + std::to_string(gens[i]);
      }
      return out + ">";
    }

    NumIdeal random_ideal(NumericalSemigroup const& s, Rng& rng, bool non_principal) {
      auto const span = static_cast<std::size_t>(s.frobenius() + 3 * s.multiplicity() + 1);
      while (true) {
        std::vector<std::int64_t> g;
        std::size_t const         want = 1 + draw(rng, 3);
        while (g.size() < want) {
          auto const x = static_cast<std::int64_t>(draw(rng, span));
          if (s.contains(x)) {
            g.push_back(x);
          }
        }
        auto i = ideal_normalize(s, g);
        if (!non_principal || !i.is_principal()) {
          return i;
        }
      }
    }

    void suite_numsgp(SuiteReport& rep, Limits const&) {
      std::vector<std::vector<std::int64_t>> const hosts{{2, 3}, {3, 4, 5}, {5, 7, 9}};
      std::uint64_t                                stream = 0;
      for (auto const& gens : hosts) {
        auto const     s = NumericalSemigroup::from_generators(gens);
        InstanceResult ir{sg_id(gens), {}};

        std::int64_t const limit = std::max<std::int64_t>(50, s.frobenius() + 2 * s.multiplicity());
        auto const         dp    = coin_table(gens, limit);
        std::optional<Json> bad;
        for (std::int64_t n = 0; n <= limit && !bad; ++n) {
          if (s.contains(n) != dp[static_cast<std::size_t>(n)]) {
            bad = Json{{"n", n}};
          }
        }
        ir.checks.push_back(outcome("apery-membership-matches-dp", !bad, bad.value_or(Json{{"up_to", limit}})));

        std::vector<std::int64_t> gaps;
        for (std::int64_t n = 0; n <= limit; ++n) {
          if (!dp[static_cast<std::size_t>(n)]) {
            gaps.push_back(n);
          }
        }
        ir.checks.push_back(outcome("frobenius-and-gaps",
                                    s.gaps() == gaps
                                        && s.frobenius() == (gaps.empty() ? -1 : gaps.back()),
                                    Json{{"frobenius", s.frobenius()}, {"gaps", s.gaps()}}));

        auto const          maxid = maximal_ideal(s);
        std::optional<Json> mismatch;
        for (std::int64_t a = 0; a <= 20 && !mismatch; ++a) {
          if (s.contains(a) && strong_exponent(s, a) != ideal_power_exponent_num(s, maxid, a)) {
            mismatch = Json{{"a", a}};
          }
        }
        ir.checks.push_back(outcome("strong-exponent-is-ideal-power-exponent", !mismatch, mismatch));

        std::optional<Json> arch_bad;
        for (std::int64_t x = 0; x <= 20 && !arch_bad; ++x) {
          for (std::int64_t y = 1; y <= 12 && !arch_bad; ++y) {
            if (!s.contains(x) || !s.contains(y)) {
              continue;
            }
            auto const k     = archimedean_exponent(s, x, y);
            auto const bound = std::max<std::int64_t>(1, (x + s.frobenius() + 1 + y - 1) / y);
            bool const least = k == 1 || !s.contains((k - 1) * y - x);
            if (!(s.contains(k * y - x) && least && k <= bound)) {
              arch_bad = Json{{"x", x}, {"y", y}, {"k", k}};
            }
          }
        }
        ir.checks.push_back(outcome("archimedean-exponent-within-bound", !arch_bad, arch_bad));

        Rng                 rng(rep.seed + stream++);
        std::size_t         failures = 0;
        std::optional<Json> first;
        for (int d = 0; d < 1000; ++d) {
          auto const i = random_ideal(s, rng, true);
          auto const j = random_ideal(s, rng, false);
          if (ideal_sum(i, j).is_principal()) {
            ++failures;
            if (!first) {
              first = Json{{"i", i.generators()}, {"j", j.generators()}};
            }
          }
        }
        Json w{{"pairs", 1000}, {"failures", failures}};
        if (first) {
          w["first_failure"] = *first;
        }
        ir.checks.push_back(outcome("non-principal-sums-stay-non-principal", failures == 0, w));

        bool       laws = true;
        auto const zero = ideal_normalize(s, {0});
        for (int d = 0; d < 200 && laws; ++d) {
          auto const a = random_ideal(s, rng, false);
          auto const b = random_ideal(s, rng, false);
          auto const c = random_ideal(s, rng, false);
          laws         = ideal_sum(a, b) == ideal_sum(b, a)
                 && ideal_sum(ideal_sum(a, b), c) == ideal_sum(a, ideal_sum(b, c))
                 && ideal_sum(a, zero) == a
                 && (!(a.is_principal() && b.is_principal()) || ideal_sum(a, b).is_principal());
        }
        ir.checks.push_back(outcome("ideal-sum-laws", laws));
        rep.instances.push_back(std::move(ir));
      }

      auto normalize = [](std::vector<char const*> const& xs) {
        std::vector<Rational> v;
        for (auto x : xs) {
          v.push_back(parse_rational(x));
        }
        return puiseux_normalize(v);
      };
      auto const a = normalize({"1/2", "1/3"});
      auto const b = normalize({"1/2", "3/4"});
      rep.instances.push_back(
          {"puiseux <1/2,1/3> vs <1/2,3/4>",
           {outcome("canonical-forms-agree",
                    a == b && a.min_generators() == std::vector<std::int64_t>{2, 3},
                    Json{{"first", a.min_generators()}, {"second", b.min_generators()}})}});

      // A subsemigroup of the positive integers is never idempotent: its
      // least element is not a sum of two of its elements.
      Rng  rng(rep.seed + stream++);
      bool ok = true;
      for (int d = 0; d < 200 && ok; ++d) {
        std::vector<std::int64_t> g{static_cast<std::int64_t>(1 + draw(rng, 20)),
                                    static_cast<std::int64_t>(1 + draw(rng, 20))};
        auto       t     = coin_table(g, 60);
        auto const least = *std::min_element(g.begin(), g.end());
        for (std::int64_t x = 1; x < least; ++x) {
          ok = ok && !(t[static_cast<std::size_t>(x)] && t[static_cast<std::size_t>(least - x)]);
        }
      }
      rep.instances.push_back({"positive subsemigroups", {outcome("square-closed-needs-zero", ok)}});
      rep.notes.emplace_back(
          "Ideal monoids of numerical monoids are infinite; isomorphism between them is not "
          "decided here. The checks cover canonical forms, exponents and ideal arithmetic.");
    }

    // -- dc-closure ----------------------------------------------------------

    void suite_dc_closure(SuiteReport& rep, Limits const& limits) {
      for (auto const& inst : catalog_instances()) {
        auto const& m = inst.m;
        if (m.order() > std::min<std::size_t>(limits.max_subset_order, 16)) {
          continue;
        }
        DivisibilityIndex const index(m);
        // All divisor-closed subsemigroups, by filtering every subset.
        std::vector<SubsetCode> dcs;
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m.order()); ++mask) {
          auto const s = SubsetCode::from_mask(m.order(), mask);
          if (is_subsemigroup(m, s) && is_divisor_closed(m, index, s)) {
            dcs.push_back(s);
          }
        }
        std::optional<Json> bad;
        for (Element x = 0; x < m.order() && !bad; ++x) {
          SubsetCode expected = m.all();
          for (auto const& d : dcs) {
            if (d.contains(x)) {
              expected &= d;
            }
          }
          auto const got = divisor_closed_closure(m, index, m.singleton(x));
          if (got != expected) {
            bad = Json{{"seed", m.name(x)}, {"closure", show(m, got)}, {"expected", show(m, expected)}};
          }
        }
        rep.instances.push_back(
            {inst.id, {outcome("closure-matches-subset-filter", !bad,
                               bad.value_or(Json{{"divisor_closed_subsemigroups", dcs.size()}}))}});
      }
    }

    // -- ideal-exponents -----------------------------------------------------

    void suite_ideal_exponents(SuiteReport& rep, Limits const& limits) {
      for (auto const& inst : catalog_instances()) {
        auto const&         m    = inst.m;
        auto const          view = ideal_monoid(m, limits);
        std::optional<Json> div_bad;
        std::optional<Json> exp_bad;
        std::size_t         converse = 0;
        for (Element i = 0; i < view.size(); ++i) {
          auto const cl = closure_of(view, i);
          for (Element j = 0; j < view.size(); ++j) {
            if (!div_bad && ideal_divides(view, i, j) && !view.ideal(j).is_subset_of(view.ideal(i))) {
              div_bad = Json{{"i", show(m, view.ideal(i))}, {"j", show(m, view.ideal(j))}};
            }
            bool const has_exp = ideal_power_exponent(m, view.ideal(i), view.ideal(j)).has_value();
            if (!exp_bad && cl.contains(j) && !has_exp) {
              exp_bad = Json{{"i", show(m, view.ideal(i))}, {"j", show(m, view.ideal(j))}};
            }
            if (has_exp && !cl.contains(j)) {
              ++converse;
            }
          }
        }
        rep.instances.push_back(
            {inst.id,
             {outcome("divisibility-implies-containment", !div_bad, div_bad),
              outcome("closure-membership-gives-exponent", !exp_bad, exp_bad),
              reported("exponent-without-closure-membership", Json{{"pairs", converse}})}});
      }
    }

    // -- catalog-laws --------------------------------------------------------

    void suite_catalog(SuiteReport& rep, Limits const&) {
      using F = cat::Family;
      for (auto const& inst : catalog_instances()) {
        auto const& m     = inst.m;
        auto const  props = property_report(m);
        auto const  prof  = archimedean_profile(m);
        bool const  valid = CayleyMonoid::build(m.table(), m.identity(), m.names()) == m;
        bool        expected = true;
        switch (inst.spec.family) {
          case F::truncated_add:
            expected = props.is_duo && props.is_reduced && prof.is_strongly_archimedean
                    && !props.is_cancellative;
            break;
          case F::adjoin_zero_cyclic:
            expected = props.is_duo && prof.is_strongly_archimedean && !props.is_reduced;
            break;
          case F::semilattice_diamond:
            expected = props.is_duo && !prof.is_archimedean;
            break;
          case F::nonduo3:
            expected = !props.is_duo && duo_witness(m) == std::optional<Element>(1);
            break;
          case F::cyclic_group:
            expected = is_group(m);
            break;
          case F::rees_truncation:
            expected = props.is_duo && prof.is_strongly_archimedean && !props.is_cancellative;
            break;
          case F::unitization_of_nonunits:
            break;
        }
        InstanceResult ir{inst.id,
                          {outcome("valid-table", valid),
                           outcome("family-properties", expected,
                                   Json{{"duo", props.is_duo},
                                        {"cancellative", props.is_cancellative},
                                        {"reduced", props.is_reduced},
                                        {"archimedean", prof.is_archimedean},
                                        {"strongly_archimedean", prof.is_strongly_archimedean}})}};
        if (inst.spec.family == F::adjoin_zero_cyclic || inst.spec.family == F::rees_truncation) {
          auto const k  = cat::make({F::unitization_of_nonunits, {}, {inst.spec}});
          auto const pk = archimedean_profile(k);
          bool const ok = is_duo(k) && property_report(k).is_reduced
                       && (!prof.is_archimedean || pk.is_archimedean)
                       && (!prof.is_strongly_archimedean || pk.is_strongly_archimedean);
          ir.checks.push_back(outcome("unitization-keeps-archimedean", ok,
                                      Json{{"order", k.order()},
                                           {"archimedean", pk.is_archimedean},
                                           {"strongly_archimedean", pk.is_strongly_archimedean}}));
        }
        rep.instances.push_back(std::move(ir));
      }
      rep.notes.emplace_back(
          "Unitizations are checked for the conclusion only: no finite monoid other than a group "
          "is unit-cancellative.");
    }

    // -- quotient-laws -------------------------------------------------------

    void suite_quotient(SuiteReport& rep, Limits const&) {
      auto insts = catalog_instances();
      insts.push_back({"full_transformation_monoid(3)", {}, cat::full_transformation_monoid(3)});
      for (auto const& inst : insts) {
        auto const& m = inst.m;
        auto const  q = reduced_quotient(m);
        bool        hom = true;
        for (Element a = 0; a < m.order(); ++a) {
          for (Element b = 0; b < m.order(); ++b) {
            hom = hom && q.projection[m.mul(a, b)] == q.monoid.mul(q.projection[a], q.projection[b]);
          }
        }
        InstanceResult ir{inst.id, {outcome("projection-is-homomorphism", hom)}};

        auto const props = property_report(m);
        auto const assoc = associatedness(m);
        if (!props.is_duo) {
          auto const eq = equivalence_closure(m.order(), assoc);
          auto const co = congruence_closure(m, assoc);
          ir.checks.push_back(reported("congruence-vs-associatedness",
                                       Json{{"associate_classes", eq.class_count},
                                            {"congruence_classes", co.class_count},
                                            {"strictly_larger", co.class_count < eq.class_count}}));
        }
        if (props.is_duo && props.is_unit_cancellative) {
          bool ok = true;
          for (auto [a, b] : assoc) {
            bool right = false;
            props.units.for_each([&](Element u) { right = right || m.mul(a, u) == b; });
            ok = ok && right;
          }
          ir.checks.push_back(outcome("associates-differ-by-units", ok));
        }
        rep.instances.push_back(std::move(ir));
      }
      rep.notes.emplace_back(
          "Non-duo instances record whether the least congruence containing associatedness "
          "merges more than the associate classes.");
    }

    struct SuiteEntry {
      std::string_view                                 name;
      std::function<void(SuiteReport&, Limits const&)> run;
    };

    std::vector<SuiteEntry> const& registry() {
      static std::vector<SuiteEntry> const suites{
          {"red-iso-principal", suite_red_iso},
          {"strongly-arch-char", suite_strong_arch},
          {"pi-divisor-closed", suite_pi_dc},
          {"interleaving", suite_interleaving},
          {"restriction", suite_restriction},
          {"power-iso", suite_power_iso},
          {"unit-groups", suite_unit_groups},
          {"numsgp-laws", suite_numsgp},
          {"dc-closure", suite_dc_closure},
          {"ideal-exponents", suite_ideal_exponents},
          {"catalog-laws", suite_catalog},
          {"quotient-laws", suite_quotient},
      };
      return suites;
    }
  }  // namespace

  std::string_view to_string(Status s) {
    switch (s) {
      case Status::pass:
        return "pass";
      case Status::fail:
        return "fail";
      case Status::vacuous:
        return "vacuous";
      case Status::reported:
        return "reported";
    }
    return "unknown";
  }

  bool SuiteReport::passed() const {
    return count(Status::fail) == 0;
  }

  std::size_t SuiteReport::count(Status s) const {
    std::size_t n = 0;
    for (auto const& i : instances) {
      for (auto const& c : i.checks) {
        n += c.status == s ? 1 : 0;
      }
    }
    return n;
  }

  std::vector<std::string_view> suite_names() {
    std::vector<std::string_view> out;
    for (auto const& s : registry()) {
      out.push_back(s.name);
    }
    return out;
  }

  std::optional<SuiteReport> run_suite(std::string_view name,
                                       std::uint64_t    seed,
                                       Limits const&    limits) {
    for (auto const& s : registry()) {
      if (s.name == name) {
        SuiteReport rep;
        rep.suite_name   = std::string(name);
        rep.seed         = seed;
        auto const start = std::chrono::steady_clock::now();
        s.run(rep, limits);
        rep.elapsed = std::chrono::steady_clock::now() - start;
        return rep;
      }
    }
    return std::nullopt;
  }

  std::vector<SuiteReport> run_all(std::uint64_t seed, Limits const& limits) {
    std::vector<SuiteReport> out;
    for (auto const& s : registry()) {
      out.push_back(*run_suite(s.name, seed, limits));
    }
    return out;
  }

  std::string_view scale_limitation_note() {
    return "Not reproducible at desk scale: the results on ideal and power monoids of infinite "
           "cancellative monoids, and the isomorphism classification of numerical monoids by "
           "their ideal monoids. Every suite above checks finite-scale proxies of these "
           "statements.";
  }

  Json to_json(SuiteReport const& r, bool include_timing) {
    Json instances = Json::array();
    for (auto const& i : r.instances) {
      Json checks = Json::array();
      for (auto const& c : i.checks) {
        Json jc{{"id", c.id}, {"status", to_string(c.status)}};
        if (c.witness) {
          jc["witness"] = *c.witness;
        }
        checks.push_back(std::move(jc));
      }
      instances.push_back(Json{{"id", i.id}, {"checks", std::move(checks)}});
    }
    Json j;
    j["suite"]  = r.suite_name;
    j["status"] = r.passed() ? "pass" : "fail";
    j["seed"]   = r.seed;
    j["counts"] = Json{{"pass", r.count(Status::pass)},
                       {"fail", r.count(Status::fail)},
                       {"vacuous", r.count(Status::vacuous)},
                       {"reported", r.count(Status::reported)}};
    if (include_timing) {
      j["elapsed_seconds"] = r.elapsed.count();
    }
    j["instances"] = std::move(instances);
    j["notes"]     = r.notes;
    return j;
  }

  std::string to_text(SuiteReport const& r) {
    std::ostringstream out;
    out << "suite " << r.suite_name << ": " << (r.passed() ? "PASS" : "FAIL") << " ("
        << r.count(Status::pass) << " pass, " << r.count(Status::fail) << " fail, "
        << r.count(Status::vacuous) << " vacuous, " << r.count(Status::reported)
        << " reported; seed " << r.seed << ", " << r.elapsed.count() << " s)\n";
    for (auto const& i : r.instances) {
      for (auto const& c : i.checks) {
        out << "  [" << to_string(c.status) << "] " << i.id << ": " << c.id;
        if (c.witness && c.status != Status::pass) {
          out << " " << c.witness->dump();
        }
        out << '\n';
      }
    }
    for (auto const& n : r.notes) {
      out << "  note: " << n << '\n';
    }
    return out.str();
  }

}  // namespace monoidforge::report
