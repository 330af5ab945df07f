#pragma once

#include <cstddef>

namespace monoidforge {

  // Size caps for the constructions whose cost is exponential in the order
  // of the host monoid.
  struct Limits {
    // Largest host order for which all non-empty subsets are enumerated
    // (power monoids, ideal enumeration). 12 gives 4095 subsets.
    std::size_t max_subset_order = 12;
    // Largest host order for searches over isomorphisms of power monoids.
    std::size_t max_power_iso_order = 5;
    // Most isomorphisms enumerated per pair before a report is truncated.
    std::size_t iso_enumeration_cap = 10000;

    // Defaults, with max_subset_order taken from MONOIDFORGE_MAX_ORDER when
    // that variable holds an integer in [1, 24].
    static Limits from_environment();
  };

}  // namespace monoidforge
