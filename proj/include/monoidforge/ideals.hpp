#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "monoidforge/cayley.hpp"
#include "monoidforge/labeled_monoid.hpp"
#include "monoidforge/limits.hpp"

namespace monoidforge {

  // The ideal monoid I(M) of a finite monoid: every ideal is an element,
  // labelled by its SubsetCode, multiplied setwise. Element 0 is always M
  // itself, the identity; the rest follow by decreasing size, then by
  // bitmask.
  //
  // At finite scale every ideal is finitely generated, so I_fin(M) = I(M)
  // and fin_gen_flags is all true. P(M), the submonoid generated by the
  // principal ideals, is held in pi_set; it equals the set of principal
  // ideals when M is duo.
  struct IdealSemigroupView {
    LabeledQuotientMonoid monoid;
    std::vector<bool>     principal_flags;
    std::vector<bool>     fin_gen_flags;
    SubsetCode            pi_set;
    // Host element a -> index of MaM.
    std::vector<Element> principal_of;

    std::size_t size() const noexcept {
      return monoid.labels.size();
    }
    SubsetCode const& ideal(Element i) const {
      return monoid.labels[i];
    }
    std::optional<Element> find(SubsetCode const& ideal) const {
      return monoid.find(ideal);
    }
  };

  // IM = I = MI.
  bool is_ideal(CayleyMonoid const& m, SubsetCode const& i);

  // MXM. Throws Error(empty_input) for an empty x.
  SubsetCode generated_ideal(CayleyMonoid const& m, SubsetCode const& x);

  // Throws Error(too_large) when m.order() > limits.max_subset_order.
  IdealSemigroupView ideal_monoid(CayleyMonoid const& m, Limits const& limits = {});

  // Least n >= 1 with I^n contained in J, if any. Throws Error(not_an_ideal)
  // unless both arguments are ideals.
  std::optional<std::size_t> ideal_power_exponent(CayleyMonoid const& m,
                                                  SubsetCode const&   i,
                                                  SubsetCode const&   j);

  // Divisibility inside I(M): J = AIB for some ideals A, B.
  bool ideal_divides(IdealSemigroupView const& view, Element i, Element j);

  struct PiDivisorClosedResult {
    bool holds = false;
    // A pair of ideals whose product lies in P(M) although one of them
    // does not.
    std::optional<std::pair<SubsetCode, SubsetCode>> witness;
  };

  PiDivisorClosedResult check_pi_divisor_closed(IdealSemigroupView const& view);
  PiDivisorClosedResult check_pi_divisor_closed(CayleyMonoid const& m,
                                                Limits const&       limits = {});

  struct StrongArchimedeanCharacterization {
    // M is strongly Archimedean.
    bool strongly_archimedean = false;
    // For every ideal I != M, the divisor-closed closure of {I} inside I(M)
    // contains P(M).
    bool closures_contain_pi = false;
    bool agree               = false;

    struct Witness {
      SubsetCode              seed;
      std::vector<SubsetCode> closure;
      SubsetCode              missing_principal;
    };
    std::optional<Witness> witness;
  };

  // Requires a duo monoid (Error(not_duo) otherwise). Any non-trivial
  // divisor-closed submonoid of I(M) contains some I != M and hence the
  // closure of {I}, so checking those closures decides the ideal side.
  StrongArchimedeanCharacterization
  check_strongly_archimedean_characterization(CayleyMonoid const& m,
                                              Limits const&       limits = {});
  StrongArchimedeanCharacterization
  check_strongly_archimedean_characterization(CayleyMonoid const&       m,
                                              IdealSemigroupView const& view);

  // Whether Mx_1M ... Mx_nM is contained in x_{s(1)} ... x_{s(k)} M, for a
  // strictly increasing list s of 0-based positions into xs. Throws
  // Error(not_duo) or Error(bad_sigma).
  bool check_interleaving_containment(CayleyMonoid const&          m,
                                      std::span<Element const>     xs,
                                      std::span<std::size_t const> sigma);

}  // namespace monoidforge
