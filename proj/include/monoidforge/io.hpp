#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "monoidforge/cayley.hpp"
#include "monoidforge/numsgp.hpp"

namespace monoidforge::io {

  using Json = nlohmann::ordered_json;

  inline constexpr int schema_version = 1;

  struct NumericalInput {
    std::vector<std::int64_t> generators;
  };

  struct PuiseuxInput {
    std::vector<Rational> generators;
  };

  using Input = std::variant<CayleyMonoid, NumericalInput, PuiseuxInput>;

  // Text formats:
  //   monoid <order> <identity>
  //   <order rows of order indices>
  //   names: <order names>        (optional)
  // or a single line "numerical g1 g2 ..." or "puiseux p1/q1 p2/q2 ...".
  // Blank lines and lines starting with '#' are skipped. A document whose
  // first non-blank character is '{' is read as JSON (see monoid_to_json).
  // Throws Error(parse_error), or the table errors of CayleyMonoid::build.
  Input parse_input(std::string_view text);

  // parse_input for inputs that must be a finite monoid.
  CayleyMonoid parse_monoid(std::string_view text);

  // Throws Error(parse_error) when the file cannot be read.
  std::string read_file(std::string const& path);

  std::string format_monoid(CayleyMonoid const& m);

  // {"schema": 1, "kind": "monoid", "order", "identity", "table", "names"?}
  Json         monoid_to_json(CayleyMonoid const& m);
  CayleyMonoid monoid_from_json(Json const& j);

}  // namespace monoidforge::io
