#include "monoidforge/catalog.hpp"

#include <charconv>

#include "monoidforge/error.hpp"
#include "monoidforge/numsgp.hpp"

namespace monoidforge::catalog {

  namespace {
    struct FamilyEntry {
      Family           family;
      std::string_view name;
    };

    constexpr FamilyEntry families[] = {
        {Family::truncated_add, "truncated_add"},
        {Family::cyclic_group, "cyclic_group"},
        {Family::adjoin_zero_cyclic, "adjoin_zero_cyclic"},
        {Family::semilattice_diamond, "semilattice_diamond"},
        {Family::nonduo3, "nonduo3"},
        {Family::rees_truncation, "rees_truncation"},
        {Family::unitization_of_nonunits, "unitization_of_nonunits"},
    };

    [[noreturn]] void bad(std::string const& msg) {
      throw Error(ErrorCode::bad_params, msg);
    }

    void expect_params(CatalogSpec const& spec, std::size_t count) {
      if (spec.params.size() != count) {
        bad(std::string(family_name(spec.family)) + " takes " + std::to_string(count)
            + " parameter(s), got " + std::to_string(spec.params.size()));
      }
    }

    constexpr std::int64_t max_cyclic = 64;

    std::vector<std::string> numbered(std::int64_t n) {
      std::vector<std::string> out;
      for (std::int64_t i = 0; i < n; ++i) {
        out.push_back(std::to_string(i));
      }
      return out;
    }
  }  // namespace

  std::string_view family_name(Family f) {
    for (auto const& e : families) {
      if (e.family == f) {
        return e.name;
      }
    }
    return "unknown";
  }

  std::optional<Family> parse_family(std::string_view name) {
    for (auto const& e : families) {
      if (e.name == name) {
        return e.family;
      }
    }
    return std::nullopt;
  }

  std::vector<Family> all_families() {
    std::vector<Family> out;
    for (auto const& e : families) {
      out.push_back(e.family);
    }
    return out;
  }

  std::string CatalogSpec::id() const {
    std::string out(family_name(family));
    out += "(";
    if (family == Family::rees_truncation && !params.empty()) {
      out += "<";
      for (std::size_t i = 1; i < params.size(); ++i) {
        out += (i > 1 ? "," : "") + std::to_string(params[i]);
      }
      out += ">," + std::to_string(params[0]);
    } else {
      for (std::size_t i = 0; i < params.size(); ++i) {
        out += (i > 0 ? "," : "") + std::to_string(params[i]);
      }
      for (auto const& b : base) {
        out += b.id();
      }
    }
    return out + ")";
  }

  CayleyMonoid truncated_add(std::int64_t t) {
    if (t < 1 || t > max_cyclic) {
      bad("truncated_add needs 1 <= t <= " + std::to_string(max_cyclic));
    }
    auto const                        n = static_cast<Element>(t + 1);
    std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        table[x][y] = std::min<Element>(x + y, static_cast<Element>(t));
      }
    }
    return CayleyMonoid::build(table, 0, numbered(t + 1));
  }

  CayleyMonoid cyclic_group(std::int64_t n) {
    if (n < 1 || n > max_cyclic) {
      bad("cyclic_group needs 1 <= n <= " + std::to_string(max_cyclic));
    }
    auto const                        k = static_cast<Element>(n);
    std::vector<std::vector<Element>> table(k, std::vector<Element>(k));
    for (Element x = 0; x < k; ++x) {
      for (Element y = 0; y < k; ++y) {
        table[x][y] = (x + y) % k;
      }
    }
    return CayleyMonoid::build(table, 0, numbered(n));
  }

  CayleyMonoid adjoin_zero_cyclic(std::int64_t n) {
    if (n < 1 || n > max_cyclic) {
      bad("adjoin_zero_cyclic needs 1 <= n <= " + std::to_string(max_cyclic));
    }
    auto const                        k = static_cast<Element>(n);
    std::vector<std::vector<Element>> table(k + 1, std::vector<Element>(k + 1, k));
    for (Element x = 0; x < k; ++x) {
      for (Element y = 0; y < k; ++y) {
        table[x][y] = (x + y) % k;
      }
    }
    auto names = numbered(n);
    names.emplace_back("z");
    return CayleyMonoid::build(table, 0, std::move(names));
  }

  CayleyMonoid semilattice_diamond() {
    // 1, a, b, 0
    return CayleyMonoid::build(
        {{0, 1, 2, 3}, {1, 1, 3, 3}, {2, 3, 2, 3}, {3, 3, 3, 3}}, 0, {"1", "a", "b", "0"});
  }

  CayleyMonoid nonduo3() {
    // 1, a, b
    return CayleyMonoid::build({{0, 1, 2}, {1, 1, 1}, {2, 2, 2}}, 0, {"1", "a", "b"});
  }

  CayleyMonoid unitization_of_nonunits(CayleyMonoid const& m) {
    SubsetCode const non_units = m.all() - units(m);
    if (non_units.empty()) {
      return CayleyMonoid::build({{0}}, 0, {"1"});
    }
    auto const           elems = non_units.elements();
    std::vector<Element> index_of(m.order(), 0);
    for (std::size_t i = 0; i < elems.size(); ++i) {
      index_of[elems[i]] = static_cast<Element>(i + 1);
    }
    std::size_t const                 n = elems.size() + 1;
    std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
    std::vector<std::string>          names{"1"};
    for (Element i = 0; i < n; ++i) {
      table[0][i] = i;
      table[i][0] = i;
    }
    for (std::size_t i = 0; i < elems.size(); ++i) {
      names.push_back(m.name(elems[i]));
      for (std::size_t j = 0; j < elems.size(); ++j) {
        Element const p = m.mul(elems[i], elems[j]);
        if (!non_units.contains(p)) {
          bad("the non-units are not closed under multiplication");
        }
        table[i + 1][j + 1] = index_of[p];
      }
    }
    return CayleyMonoid::build(table, 0, std::move(names));
  }

  CayleyMonoid full_transformation_monoid(std::size_t n) {
    if (n < 1 || n > 4) {
      bad("full_transformation_monoid needs 1 <= n <= 4");
    }
    std::size_t count = 1;
    for (std::size_t i = 0; i < n; ++i) {
      count *= n;
    }
    // Map index -> images, digits base n with point 0 least significant.
    auto image = [n](std::size_t f, std::size_t x) {
      for (std::size_t i = 0; i < x; ++i) {
        f /= n;
      }
      return f % n;
    };
    std::size_t identity = 0;
    for (std::size_t x = 0, p = 1; x < n; ++x, p *= n) {
      identity += x * p;
    }
    std::vector<std::vector<Element>> table(count, std::vector<Element>(count));
    std::vector<std::string>          names;
    for (std::size_t f = 0; f < count; ++f) {
      std::string name;
      for (std::size_t x = 0; x < n; ++x) {
        name += std::to_string(image(f, x));
      }
      names.push_back(name);
      for (std::size_t g = 0; g < count; ++g) {
        std::size_t fg = 0;
        for (std::size_t x = 0, p = 1; x < n; ++x, p *= n) {
          fg += image(g, image(f, x)) * p;
        }
        table[f][g] = static_cast<Element>(fg);
      }
    }
    return CayleyMonoid::build(table, static_cast<Element>(identity), std::move(names));
  }

  CayleyMonoid make(CatalogSpec const& spec) {
    if (spec.family != Family::unitization_of_nonunits && !spec.base.empty()) {
      bad(std::string(family_name(spec.family)) + " takes no base monoid");
    }
    switch (spec.family) {
      case Family::truncated_add:
        expect_params(spec, 1);
        return truncated_add(spec.params[0]);
      case Family::cyclic_group:
        expect_params(spec, 1);
        return cyclic_group(spec.params[0]);
      case Family::adjoin_zero_cyclic:
        expect_params(spec, 1);
        return adjoin_zero_cyclic(spec.params[0]);
      case Family::semilattice_diamond:
        expect_params(spec, 0);
        return semilattice_diamond();
      case Family::nonduo3:
        expect_params(spec, 0);
        return nonduo3();
      case Family::rees_truncation: {
        if (spec.params.size() < 2) {
          bad("rees_truncation takes a bound followed by generators");
        }
        std::vector<std::int64_t> gens(spec.params.begin() + 1, spec.params.end());
        try {
          auto m = rees_truncation(NumericalSemigroup::from_generators(gens), spec.params[0]);
          return CayleyMonoid::build(m.table(), m.identity(), m.names());
        } catch (Error const& e) {
          bad(std::string("rees_truncation: ") + e.what());
        }
      }
      case Family::unitization_of_nonunits:
        expect_params(spec, 0);
        if (spec.base.size() != 1) {
          bad("unitization_of_nonunits takes exactly one base monoid");
        }
        return unitization_of_nonunits(make(spec.base.front()));
    }
    bad("unknown family");
  }

  CatalogSpec parse_spec(std::span<std::string const> tokens) {
    if (tokens.empty()) {
      bad("missing family name");
    }
    auto family = parse_family(tokens.front());
    if (!family) {
      bad("unknown family '" + tokens.front() + "'");
    }
    CatalogSpec spec{*family, {}, {}};
    if (*family == Family::unitization_of_nonunits) {
      spec.base.push_back(parse_spec(tokens.subspan(1)));
      return spec;
    }
    for (auto const& t : tokens.subspan(1)) {
      std::int64_t v = 0;
      auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
      if (ec != std::errc() || ptr != t.data() + t.size()) {
        bad("parameter '" + t + "' is not an integer");
      }
      spec.params.push_back(v);
    }
    return spec;
  }

  std::vector<CatalogSpec> default_catalog() {
    std::vector<CatalogSpec> out;
    for (std::int64_t t = 2; t <= 6; ++t) {
      out.push_back({Family::truncated_add, {t}, {}});
    }
    for (std::int64_t n = 1; n <= 4; ++n) {
      out.push_back({Family::cyclic_group, {n}, {}});
    }
    for (std::int64_t n = 2; n <= 3; ++n) {
      out.push_back({Family::adjoin_zero_cyclic, {n}, {}});
    }
    out.push_back({Family::semilattice_diamond, {}, {}});
    for (std::int64_t t = 6; t <= 10; ++t) {
      out.push_back({Family::rees_truncation, {t, 2, 3}, {}});
    }
    for (std::int64_t t = 6; t <= 10; ++t) {
      out.push_back({Family::rees_truncation, {t, 3, 4, 5}, {}});
    }
    out.push_back({Family::nonduo3, {}, {}});
    return out;
  }

}  // namespace monoidforge::catalog
