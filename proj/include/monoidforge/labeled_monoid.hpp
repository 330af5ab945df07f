#pragma once

#include <optional>
#include <vector>

#include "monoidforge/cayley.hpp"
#include "monoidforge/subset_code.hpp"

namespace monoidforge {

  // A monoid built out of another one: every element carries a subset of
  // the parent (a subset, an ideal, a congruence class). When the monoid is
  // a quotient, `projection` sends each parent element to its class.
  struct LabeledQuotientMonoid {
    CayleyMonoid            monoid;
    std::vector<SubsetCode> labels;
    std::vector<Element>    projection;

    std::optional<Element> find(SubsetCode const& label) const;
  };

}  // namespace monoidforge
