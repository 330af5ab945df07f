#include "monoidforge/labeled_monoid.hpp"

#include <algorithm>

namespace monoidforge {

  std::optional<Element> LabeledQuotientMonoid::find(SubsetCode const& label) const {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) {
      return std::nullopt;
    }
    return static_cast<Element>(it - labels.begin());
  }

}  // namespace monoidforge
