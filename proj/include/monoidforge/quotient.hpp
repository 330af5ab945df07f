#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "monoidforge/cayley.hpp"
#include "monoidforge/ideals.hpp"
#include "monoidforge/labeled_monoid.hpp"
#include "monoidforge/limits.hpp"

namespace monoidforge {

  using PairSet = std::vector<std::pair<Element, Element>>;

  // An equivalence on the elements of a host monoid. Classes are numbered
  // by their least element, so equal congruences compare equal.
  struct Congruence {
    std::size_t          host_order  = 0;
    std::vector<Element> class_of;
    std::size_t          class_count = 0;

    SubsetCode members(Element cls) const;
    // Whether the equivalence is compatible with the multiplication of m.
    bool is_compatible(CayleyMonoid const& m) const;

    friend bool operator==(Congruence const&, Congruence const&) = default;
  };

  // Pairs (a, b) with MaM == MbM, sorted.
  PairSet associatedness(CayleyMonoid const& m);

  // Least equivalence containing r (no compatibility propagation).
  Congruence equivalence_closure(std::size_t host_order, PairSet const& r);

  // Least congruence containing r: union-find seeded with r, where each
  // merge of (a, b) queues the translates (ca, cb) and (ac, bc).
  Congruence congruence_closure(CayleyMonoid const& m, PairSet const& r);

  // The quotient of m by a congruence; labels are the classes and
  // projection maps each element of m to its class.
  LabeledQuotientMonoid quotient_monoid(CayleyMonoid const& m, Congruence const& c);

  // M_red: the quotient by the least congruence containing associatedness.
  LabeledQuotientMonoid reduced_quotient(CayleyMonoid const& m);

  struct RedIsoPrincipalResult {
    bool holds = false;
    // Class of M_red -> principal ideal, as a label and as an index into
    // the ideal view.
    std::vector<SubsetCode> witness;
    std::vector<Element>    witness_index;
    std::string             failure;
  };

  // Checks that the class of a |-> MaM is a well-defined isomorphism from
  // M_red onto P(M). Throws Error(not_duo) for non-duo monoids.
  RedIsoPrincipalResult check_red_iso_principal(CayleyMonoid const& m,
                                                Limits const&       limits = {});
  RedIsoPrincipalResult check_red_iso_principal(CayleyMonoid const&       m,
                                                IdealSemigroupView const& view);

}  // namespace monoidforge
