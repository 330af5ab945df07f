#pragma once

#include <cstddef>

#include "monoidforge/cayley.hpp"
#include "monoidforge/labeled_monoid.hpp"
#include "monoidforge/limits.hpp"
#include "monoidforge/subset_code.hpp"

namespace monoidforge {

  // XY = {xy : x in X, y in Y}.
  SubsetCode setwise_product(CayleyMonoid const& m,
                             SubsetCode const&   x,
                             SubsetCode const&   y);

  // X^k for k >= 1.
  SubsetCode setwise_power(CayleyMonoid const& m,
                           SubsetCode const&   x,
                           std::size_t         k);

  // Least subset containing x that is closed under multiplication.
  SubsetCode generated_subsemigroup(CayleyMonoid const& m, SubsetCode const& x);

  // The power monoid P(M) of all non-empty subsets under setwise product,
  // with identity {1_M}. Elements are ordered by canonical_less, so the
  // first order() elements are the singletons in element order. For a
  // finite host this is also P_fin(M).
  //
  // Throws Error(too_large) when m.order() > limits.max_subset_order.
  LabeledQuotientMonoid power_monoid(CayleyMonoid const& m,
                                     Limits const&       limits = {});

  // Returns whether 1_M lies in x, after checking x^2 == x
  // (Error(not_square_closed) otherwise).
  bool square_closed_identity_check(CayleyMonoid const& m, SubsetCode const& x);

}  // namespace monoidforge
