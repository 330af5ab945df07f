#include "monoidforge/iso.hpp"

#include <algorithm>
#include <numeric>

#include "monoidforge/error.hpp"
#include "monoidforge/ideals.hpp"
#include "monoidforge/quotient.hpp"
#include "monoidforge/subsets.hpp"

namespace monoidforge {

  MonoidFingerprint::MonoidFingerprint(CayleyMonoid const& m) {
    std::size_t const n     = m.order();
    SubsetCode const  unit  = units(m);
    keys_.resize(n);
    for (Element a = 0; a < n; ++a) {
      Key& k = keys_[a];
      k.fill(0);
      k[0] = a == m.identity();
      k[1] = unit.contains(a);
      k[2] = m.mul(a, a) == a;

      std::vector<std::uint32_t> first_seen(n, 0);
      std::uint32_t              step = 1;
      Element                    x    = a;
      while (first_seen[x] == 0) {
        first_seen[x] = step++;
        x             = m.mul(x, a);
      }
      k[3] = first_seen[x];         // index
      k[4] = step - first_seen[x];  // period

      k[5] = static_cast<std::uint32_t>(right_multiples(m, a).count());
      k[6] = static_cast<std::uint32_t>(left_multiples(m, a).count());
      k[7] = static_cast<std::uint32_t>(principal_two_sided_ideal(m, a).count());
      for (Element y = 0; y < n; ++y) {
        k[8] += m.mul(a, y) == y;
        k[9] += m.mul(y, a) == y;
        k[10] += m.mul(y, y) == a;
        k[11] += m.mul(a, y) == a;
        k[12] += m.mul(y, a) == a;
      }
    }
    sorted_ = keys_;
    std::sort(sorted_.begin(), sorted_.end());
  }

  namespace {
    constexpr Element unset = static_cast<Element>(-1);

    class IsoSearcher {
     public:
      IsoSearcher(CayleyMonoid const&        m,
                  MonoidFingerprint const&   fm,
                  CayleyMonoid const&        n,
                  MonoidFingerprint const&   fn,
                  std::optional<std::size_t> limit)
          : m_(m), n_(n), fm_(fm), fn_(fn), limit_(limit) {}

      IsoSearchResult run() {
        if (m_.order() != n_.order() || fm_.multiset() != fn_.multiset()) {
          return {};
        }
        std::size_t const size = m_.order();
        candidates_.resize(size);
        for (Element a = 0; a < size; ++a) {
          for (Element b = 0; b < size; ++b) {
            if (fm_.key(a) == fn_.key(b)) {
              candidates_[a].push_back(b);
            }
          }
        }
        choose_generators();

        std::vector<Element> f(size, unset);
        std::vector<bool>    used(size, false);
        f[m_.identity()]    = n_.identity();
        used[n_.identity()] = true;
        search(0, std::move(f), std::move(used));
        return std::move(result_);
      }

     private:
      // Greedy generating set, most constrained elements first.
      void choose_generators() {
        std::vector<Element> order(m_.order());
        std::iota(order.begin(), order.end(), Element(0));
        std::stable_sort(order.begin(), order.end(), [this](Element a, Element b) {
          return candidates_[a].size() < candidates_[b].size();
        });
        SubsetCode covered = m_.singleton(m_.identity());
        for (auto a : order) {
          if (!covered.contains(a)) {
            gens_.push_back(a);
            covered.insert(a);
            covered = generated_subsemigroup(m_, covered);
          }
        }
      }

      bool assign(Element              x,
                  Element              fx,
                  std::vector<Element>& f,
                  std::vector<bool>&    used,
                  std::vector<Element>& queue) const {
        if (f[x] != unset) {
          return f[x] == fx;
        }
        if (used[fx] || fm_.key(x) != fn_.key(fx)) {
          return false;
        }
        f[x]     = fx;
        used[fx] = true;
        queue.push_back(x);
        return true;
      }

      // Extends f through products with the first `assigned` generators.
      bool propagate(std::size_t           assigned,
                     std::vector<Element>& f,
                     std::vector<bool>&    used) const {
        std::vector<Element> queue;
        for (Element x = 0; x < f.size(); ++x) {
          if (f[x] != unset) {
            queue.push_back(x);
          }
        }
        while (!queue.empty()) {
          Element const x = queue.back();
          queue.pop_back();
          for (std::size_t i = 0; i < assigned; ++i) {
            Element const g = gens_[i];
            if (!assign(m_.mul(x, g), n_.mul(f[x], f[g]), f, used, queue)
                || !assign(m_.mul(g, x), n_.mul(f[g], f[x]), f, used, queue)) {
              return false;
            }
          }
        }
        return true;
      }

      // Returns false once the limit is exceeded.
      bool search(std::size_t level, std::vector<Element> f, std::vector<bool> used) {
        if (level == gens_.size()) {
          if (std::find(f.begin(), f.end(), unset) == f.end()
              && is_isomorphism(m_, n_, f)) {
            result_.witnesses.push_back({std::move(f), m_.order(), n_.order()});
            if (limit_ && result_.witnesses.size() > *limit_) {
              result_.witnesses.pop_back();
              result_.truncated = true;
              return false;
            }
          }
          return true;
        }
        Element const g = gens_[level];
        for (auto h : candidates_[g]) {
          if (used[h]) {
            continue;
          }
          auto f2    = f;
          auto used2 = used;
          f2[g]      = h;
          used2[h]   = true;
          if (propagate(level + 1, f2, used2)
              && !search(level + 1, std::move(f2), std::move(used2))) {
            return false;
          }
        }
        return true;
      }

      CayleyMonoid const&               m_;
      CayleyMonoid const&               n_;
      MonoidFingerprint const&          fm_;
      MonoidFingerprint const&          fn_;
      std::optional<std::size_t>        limit_;
      std::vector<std::vector<Element>> candidates_;
      std::vector<Element>              gens_;
      IsoSearchResult                   result_;
    };
  }  // namespace

  IsoSearchResult find_isomorphisms(CayleyMonoid const&        m,
                                    CayleyMonoid const&        n,
                                    std::optional<std::size_t> limit) {
    if (m.order() != n.order()) {
      return {};
    }
    return find_isomorphisms(m, MonoidFingerprint(m), n, MonoidFingerprint(n), limit);
  }

  IsoSearchResult find_isomorphisms(CayleyMonoid const&        m,
                                    MonoidFingerprint const&   fm,
                                    CayleyMonoid const&        n,
                                    MonoidFingerprint const&   fn,
                                    std::optional<std::size_t> limit) {
    return IsoSearcher(m, fm, n, fn, limit).run();
  }

  bool is_isomorphism(CayleyMonoid const&         m,
                      CayleyMonoid const&         n,
                      std::vector<Element> const& map) {
    if (m.order() != n.order() || map.size() != m.order()) {
      return false;
    }
    std::vector<bool> hit(n.order(), false);
    for (auto y : map) {
      if (y >= n.order() || hit[y]) {
        return false;
      }
      hit[y] = true;
    }
    for (Element a = 0; a < m.order(); ++a) {
      for (Element b = 0; b < m.order(); ++b) {
        if (map[m.mul(a, b)] != n.mul(map[a], map[b])) {
          return false;
        }
      }
    }
    return true;
  }

  SubsetCode image(IsoWitness const& f, SubsetCode const& x) {
    SubsetCode out(f.target_order);
    x.for_each([&](Element a) { out.insert(f(a)); });
    return out;
  }

  IsoWitness augmentation(IsoWitness const&            f,
                          LabeledQuotientMonoid const& pm,
                          LabeledQuotientMonoid const& pn) {
    IsoWitness out{{}, pm.labels.size(), pn.labels.size()};
    for (auto const& x : pm.labels) {
      auto target = pn.find(image(f, x));
      if (!target) {
        throw Error(ErrorCode::host_mismatch, "augmentation target not in P(N)");
      }
      out.map.push_back(*target);
    }
    return out;
  }

  CayleyMonoid restrict_to(CayleyMonoid const& m, SubsetCode const& s) {
    auto const           elems = s.elements();
    std::vector<Element> index_of(m.order(), unset);
    for (std::size_t i = 0; i < elems.size(); ++i) {
      index_of[elems[i]] = static_cast<Element>(i);
    }
    if (!s.contains(m.identity())) {
      throw Error(ErrorCode::bad_params, "submonoid must contain the identity");
    }
    std::vector<Element>     flat;
    std::vector<std::string> names;
    for (auto a : elems) {
      for (auto b : elems) {
        Element p = index_of[m.mul(a, b)];
        if (p == unset) {
          throw Error(ErrorCode::bad_params, "subset is not closed");
        }
        flat.push_back(p);
      }
      if (!m.names().empty()) {
        names.push_back(m.name(a));
      }
    }
    return CayleyMonoid::from_derived_table(
        elems.size(), std::move(flat), index_of[m.identity()], std::move(names));
  }

  CayleyMonoid unit_group(CayleyMonoid const& m) {
    return restrict_to(m, units(m));
  }

  namespace {
    bool restriction_hypotheses(CayleyMonoid const& m, IdealSemigroupView const& view) {
      return is_duo(m) && archimedean_profile(m).is_strongly_archimedean
             && check_pi_divisor_closed(view).holds;
    }

    void check_power_cap(CayleyMonoid const& m, Limits const& limits) {
      if (m.order() > limits.max_power_iso_order) {
        throw Error(ErrorCode::too_large,
                    "power-monoid isomorphism search needs order <= "
                        + std::to_string(limits.max_power_iso_order) + ", got "
                        + std::to_string(m.order()));
      }
    }
  }  // namespace

  RestrictionReport check_restriction_theorem(CayleyMonoid const& h,
                                              CayleyMonoid const& k,
                                              Limits const&       limits) {
    auto const        ih = ideal_monoid(h, limits);
    auto const        ik = ideal_monoid(k, limits);
    RestrictionReport out;
    out.hypotheses_hold = restriction_hypotheses(h, ih) && restriction_hypotheses(k, ik);

    auto const search = find_isomorphisms(
        ih.monoid.monoid, ik.monoid.monoid, limits.iso_enumeration_cap);
    out.isomorphism_count        = search.witnesses.size();
    out.truncated                = search.truncated;
    out.ideal_monoids_isomorphic = search.isomorphic();
    for (auto const& f : search.witnesses) {
      if (image(f, ih.pi_set) != ik.pi_set) {
        out.all_restrict   = false;
        out.counterexample = f;
        break;
      }
    }
    if (out.ideal_monoids_isomorphic) {
      out.reduced_quotients_isomorphic
          = find_isomorphisms(reduced_quotient(h).monoid, reduced_quotient(k).monoid, 1)
                .isomorphic();
    }
    return out;
  }

  PowerIsoReport check_power_iso_restricts_to_ideals(CayleyMonoid const& h,
                                                     CayleyMonoid const& k,
                                                     Limits const&       limits) {
    check_power_cap(h, limits);
    check_power_cap(k, limits);
    PowerIsoReport out;
    auto const     ph = power_monoid(h, limits);
    auto const     pk = power_monoid(k, limits);
    auto const     search
        = find_isomorphisms(ph.monoid, pk.monoid, limits.iso_enumeration_cap);
    out.isomorphism_count = search.witnesses.size();
    out.truncated         = search.truncated;
    if (!search.isomorphic()) {
      return out;
    }

    SubsetCode ideals_h(ph.labels.size());
    SubsetCode ideals_k(pk.labels.size());
    for (Element x = 0; x < ph.labels.size(); ++x) {
      if (is_ideal(h, ph.labels[x])) {
        ideals_h.insert(x);
      }
    }
    for (Element x = 0; x < pk.labels.size(); ++x) {
      if (is_ideal(k, pk.labels[x])) {
        ideals_k.insert(x);
      }
    }
    Element const full_h = *ph.find(h.all());
    Element const full_k = *pk.find(k.all());

    for (std::size_t t = 0; t < search.witnesses.size(); ++t) {
      auto const& f = search.witnesses[t];
      Element     preimage_of_k
          = static_cast<Element>(std::find(f.map.begin(), f.map.end(), full_k) - f.map.begin());
      if (!ph.labels[preimage_of_k].contains(h.identity())) {
        continue;
      }
      ++out.identity_in_preimage;
      SubsetCode const mapped = image(f, ideals_h);
      if (!mapped.is_subset_of(ideals_k)) {
        out.holds   = false;
        out.failure = "isomorphism " + std::to_string(t) + " sends an ideal to a non-ideal";
        return out;
      }
      if (pk.labels[f(full_h)].contains(k.identity())) {
        ++out.identity_in_both;
        if (mapped != ideals_k) {
          out.holds   = false;
          out.failure = "isomorphism " + std::to_string(t)
                        + " does not restrict to a bijection of ideal monoids";
          return out;
        }
      }
    }
    return out;
  }

  UnitGroupReport check_unit_group_iso(CayleyMonoid const& h,
                                       CayleyMonoid const& k,
                                       Limits const&       limits) {
    check_power_cap(h, limits);
    check_power_cap(k, limits);
    UnitGroupReport out;
    auto const      ph = power_monoid(h, limits);
    auto const      pk = power_monoid(k, limits);
    out.globally_isomorphic = find_isomorphisms(ph.monoid, pk.monoid, 1).isomorphic();
    if (!out.globally_isomorphic) {
      return out;
    }
    out.unit_groups_isomorphic
        = find_isomorphisms(unit_group(h), unit_group(k), 1).isomorphic();
    out.reducedness_agrees
        = property_report(h).is_reduced == property_report(k).is_reduced;
    out.holds = *out.unit_groups_isomorphic && *out.reducedness_agrees;
    return out;
  }

}  // namespace monoidforge
