#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "monoidforge/cayley.hpp"
#include "monoidforge/labeled_monoid.hpp"
#include "monoidforge/limits.hpp"

namespace monoidforge {

  struct IsoWitness {
    std::vector<Element> map;
    std::size_t          source_order = 0;
    std::size_t          target_order = 0;

    Element operator()(Element x) const {
      return map[x];
    }

    friend bool operator==(IsoWitness const&, IsoWitness const&) = default;
  };

  struct IsoSearchResult {
    std::vector<IsoWitness> witnesses;
    // The search stopped at the limit while more isomorphisms existed.
    bool truncated = false;

    bool isomorphic() const noexcept {
      return !witnesses.empty();
    }
  };

  // Isomorphism-invariant data for every element: identity/unit/idempotent
  // flags, index and period of the power sequence, sizes of aM, Ma, MaM,
  // and counts of fixed points and square roots. Compute once per monoid
  // and reuse across searches.
  class MonoidFingerprint {
   public:
    using Key = std::array<std::uint32_t, 13>;

    explicit MonoidFingerprint(CayleyMonoid const& m);

    Key const& key(Element x) const {
      return keys_[x];
    }
    // Sorted keys; equal for isomorphic monoids.
    std::vector<Key> const& multiset() const {
      return sorted_;
    }

   private:
    std::vector<Key> keys_;
    std::vector<Key> sorted_;
  };

  // All isomorphisms m -> n (at most `limit` of them), by backtracking over
  // the images of a generating set. Candidate images must share the
  // fingerprint key; each partial assignment is propagated through products
  // with the generators, and every result is re-verified on all pairs.
  IsoSearchResult find_isomorphisms(CayleyMonoid const&        m,
                                    CayleyMonoid const&        n,
                                    std::optional<std::size_t> limit = std::nullopt);
  IsoSearchResult find_isomorphisms(CayleyMonoid const&        m,
                                    MonoidFingerprint const&   fm,
                                    CayleyMonoid const&        n,
                                    MonoidFingerprint const&   fn,
                                    std::optional<std::size_t> limit = std::nullopt);

  // Bijective and multiplicative.
  bool is_isomorphism(CayleyMonoid const& m,
                      CayleyMonoid const& n,
                      std::vector<Element> const& map);

  // f[X].
  SubsetCode image(IsoWitness const& f, SubsetCode const& x);

  // The augmentation X |-> f[X] of f : M -> N, as a map between the power
  // monoids pm = P(M) and pn = P(N).
  IsoWitness augmentation(IsoWitness const&            f,
                          LabeledQuotientMonoid const& pm,
                          LabeledQuotientMonoid const& pn);

  // The submonoid on the elements of s, reindexed in increasing order.
  // s must be closed and contain the identity.
  CayleyMonoid restrict_to(CayleyMonoid const& m, SubsetCode const& s);
  CayleyMonoid unit_group(CayleyMonoid const& m);

  struct RestrictionReport {
    // Both hosts are duo, strongly Archimedean and have P divisor-closed
    // in I; the finite-scale stand-in for cancellativity.
    bool        hypotheses_hold   = false;
    bool        ideal_monoids_isomorphic = false;
    std::size_t isomorphism_count = 0;
    bool        truncated         = false;
    // Every enumerated isomorphism I(H) -> I(K) maps P(H) onto P(K).
    bool                       all_restrict = true;
    std::optional<IsoWitness>  counterexample;
    // When I(H) and I(K) are isomorphic: whether H_red and K_red are.
    std::optional<bool> reduced_quotients_isomorphic;
  };

  RestrictionReport check_restriction_theorem(CayleyMonoid const& h,
                                              CayleyMonoid const& k,
                                              Limits const&       limits = {});

  struct PowerIsoReport {
    std::size_t isomorphism_count = 0;
    bool        truncated         = false;
    // Isomorphisms with 1_H in f^{-1}(K).
    std::size_t identity_in_preimage = 0;
    // ... and additionally 1_K in f(H).
    std::size_t identity_in_both = 0;
    bool        holds            = true;
    std::string failure;
  };

  // For every isomorphism f : P(H) -> P(K): if 1_H lies in f^{-1}(K) then
  // f maps ideals of H to ideals of K, and if moreover 1_K lies in f(H)
  // then f restricts to a bijection I(H) -> I(K). Throws Error(too_large)
  // above limits.max_power_iso_order.
  PowerIsoReport check_power_iso_restricts_to_ideals(CayleyMonoid const& h,
                                                     CayleyMonoid const& k,
                                                     Limits const& limits = {});

  struct UnitGroupReport {
    bool                globally_isomorphic = false;
    std::optional<bool> unit_groups_isomorphic;
    std::optional<bool> reducedness_agrees;
    bool                holds = true;
  };

  // If P(H) and P(K) are isomorphic, then H^x and K^x are isomorphic and H
  // is reduced iff K is. Throws Error(too_large) as above.
  UnitGroupReport check_unit_group_iso(CayleyMonoid const& h,
                                       CayleyMonoid const& k,
                                       Limits const&       limits = {});

}  // namespace monoidforge
