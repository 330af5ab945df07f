#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "monoidforge/cayley.hpp"

namespace monoidforge::catalog {

  enum class Family {
    truncated_add,
    cyclic_group,
    adjoin_zero_cyclic,
    semilattice_diamond,
    nonduo3,
    rees_truncation,
    unitization_of_nonunits
  };

  std::string_view        family_name(Family f);
  std::optional<Family>   parse_family(std::string_view name);
  std::vector<Family>     all_families();

  // Parameters per family:
  //   truncated_add           [t], t >= 1: {0..t} under min(x + y, t)
  //   cyclic_group            [n], n >= 1
  //   adjoin_zero_cyclic      [n], n >= 1: C_n with a zero adjoined
  //   semilattice_diamond     []: {1, a, b, 0} with ab = 0
  //   nonduo3                 []: {1, a, b} with xy = x on {a, b}
  //   rees_truncation         [t, g_1, ..., g_r]: see rees_truncation()
  //   unitization_of_nonunits [] and exactly one base spec
  struct CatalogSpec {
    Family                    family = Family::truncated_add;
    std::vector<std::int64_t> params;
    std::vector<CatalogSpec>  base;

    // Stable display id, e.g. "truncated_add(2)".
    std::string id() const;
  };

  // Throws Error(bad_params).
  CayleyMonoid make(CatalogSpec const& spec);

  CayleyMonoid truncated_add(std::int64_t t);
  CayleyMonoid cyclic_group(std::int64_t n);
  CayleyMonoid adjoin_zero_cyclic(std::int64_t n);
  CayleyMonoid semilattice_diamond();
  CayleyMonoid nonduo3();

  // Strips the units of m and adjoins a fresh identity to what is left. A
  // group yields the trivial monoid. Throws Error(bad_params) when the
  // non-units are not closed under multiplication.
  CayleyMonoid unitization_of_nonunits(CayleyMonoid const& m);

  // All maps {0..n-1} -> {0..n-1} composed left to right. Not a catalog
  // family; used as a non-duo probe.
  CayleyMonoid full_transformation_monoid(std::size_t n);

  // Parses "family p1 p2 ..." with the base of unitization_of_nonunits
  // given by the remaining tokens. Throws Error(bad_params).
  CatalogSpec parse_spec(std::span<std::string const> tokens);

  // truncated_add 2..6, cyclic_group 1..4, adjoin_zero_cyclic 2..3,
  // semilattice_diamond, rees_truncation of <2,3> and <3,4,5> at bounds
  // 6..10, and nonduo3.
  std::vector<CatalogSpec> default_catalog();

}  // namespace monoidforge::catalog
