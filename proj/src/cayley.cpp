#include "monoidforge/cayley.hpp"

#include <unordered_set>

#include "monoidforge/error.hpp"
#include "monoidforge/subsets.hpp"

namespace monoidforge {

  namespace {
    void check_identity_law(std::size_t                 n,
                            std::vector<Element> const& flat,
                            Element                     identity) {
      if (identity >= n) {
        throw Error(ErrorCode::malformed_table,
                    "identity index " + std::to_string(identity)
                        + " out of range for order " + std::to_string(n));
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (flat[identity * n + i] != i || flat[i * n + identity] != i) {
          throw NotIdentityError(i);
        }
      }
    }

    void check_shape(std::size_t                     n,
                     std::vector<Element> const&     flat,
                     std::vector<std::string> const& names) {
      if (n == 0) {
        throw Error(ErrorCode::malformed_table, "a monoid needs at least one element");
      }
      if (flat.size() != n * n) {
        throw Error(ErrorCode::malformed_table, "table is not square");
      }
      for (auto x : flat) {
        if (x >= n) {
          throw Error(ErrorCode::malformed_table,
                      "table entry " + std::to_string(x) + " out of range");
        }
      }
      if (!names.empty() && names.size() != n) {
        throw Error(ErrorCode::malformed_table,
                    "expected " + std::to_string(n) + " names, got "
                        + std::to_string(names.size()));
      }
    }
  }  // namespace

  CayleyMonoid CayleyMonoid::build(std::vector<std::vector<Element>> const& table,
                                   Element                  identity,
                                   std::vector<std::string> names) {
    std::size_t const    n = table.size();
    std::vector<Element> flat;
    flat.reserve(n * n);
    for (auto const& row : table) {
      if (row.size() != n) {
        throw Error(ErrorCode::malformed_table, "table is not square");
      }
      flat.insert(flat.end(), row.begin(), row.end());
    }
    CayleyMonoid m = from_derived_table(n, std::move(flat), identity, std::move(names));
    for (Element i = 0; i < n; ++i) {
      for (Element j = 0; j < n; ++j) {
        Element const ij = m.mul(i, j);
        for (Element k = 0; k < n; ++k) {
          if (m.mul(ij, k) != m.mul(i, m.mul(j, k))) {
            throw NonAssociativeError(i, j, k);
          }
        }
      }
    }
    return m;
  }

  CayleyMonoid CayleyMonoid::from_derived_table(std::size_t              order,
                                                std::vector<Element>     flat,
                                                Element                  identity,
                                                std::vector<std::string> names) {
    check_shape(order, flat, names);
    check_identity_law(order, flat, identity);
    CayleyMonoid m;
    m.order_    = order;
    m.table_    = std::move(flat);
    m.identity_ = identity;
    m.names_    = std::move(names);
    return m;
  }

  std::vector<std::vector<Element>> CayleyMonoid::table() const {
    std::vector<std::vector<Element>> out(order_);
    for (Element i = 0; i < order_; ++i) {
      auto r = row(i);
      out[i].assign(r.begin(), r.end());
    }
    return out;
  }

  std::string CayleyMonoid::name(Element x) const {
    return x < names_.size() ? names_[x] : std::to_string(x);
  }

  SubsetCode units(CayleyMonoid const& m) {
    SubsetCode  out = m.none();
    auto const  e   = m.identity();
    std::size_t n   = m.order();
    for (Element u = 0; u < n; ++u) {
      for (Element v = 0; v < n; ++v) {
        if (m.mul(u, v) == e && m.mul(v, u) == e) {
          out.insert(u);
          break;
        }
      }
    }
    return out;
  }

  SubsetCode right_multiples(CayleyMonoid const& m, Element a) {
    SubsetCode out = m.none();
    for (auto x : m.row(a)) {
      out.insert(x);
    }
    return out;
  }

  SubsetCode left_multiples(CayleyMonoid const& m, Element a) {
    SubsetCode out = m.none();
    for (Element x = 0; x < m.order(); ++x) {
      out.insert(m.mul(x, a));
    }
    return out;
  }

  SubsetCode principal_two_sided_ideal(CayleyMonoid const& m, Element a) {
    SubsetCode out = m.none();
    left_multiples(m, a).for_each([&](Element xa) {
      for (auto y : m.row(xa)) {
        out.insert(y);
      }
    });
    return out;
  }

  std::optional<Element> duo_witness(CayleyMonoid const& m) {
    for (Element a = 0; a < m.order(); ++a) {
      if (right_multiples(m, a) != left_multiples(m, a)) {
        return a;
      }
    }
    return std::nullopt;
  }

  bool is_duo(CayleyMonoid const& m) {
    return !duo_witness(m).has_value();
  }

  bool is_group(CayleyMonoid const& m) {
    return units(m).count() == m.order();
  }

  PropertyReport property_report(CayleyMonoid const& m) {
    std::size_t const n = m.order();
    PropertyReport    r;
    r.units  = units(m);
    r.is_duo = is_duo(m);

    r.is_cancellative = true;
    for (Element a = 0; a < n && r.is_cancellative; ++a) {
      SubsetCode seen_right = m.none();
      SubsetCode seen_left  = m.none();
      for (Element x = 0; x < n; ++x) {
        Element const ax = m.mul(a, x);
        Element const xa = m.mul(x, a);
        if (seen_right.contains(ax) || seen_left.contains(xa)) {
          r.is_cancellative = false;
          break;
        }
        seen_right.insert(ax);
        seen_left.insert(xa);
      }
    }

    r.is_dedekind_finite = true;
    for (Element u = 0; u < n && r.is_dedekind_finite; ++u) {
      for (Element v = 0; v < n; ++v) {
        if (m.mul(u, v) == m.identity() && m.mul(v, u) != m.identity()) {
          r.is_dedekind_finite = false;
          break;
        }
      }
    }

    r.is_unit_cancellative = true;
    for (Element x = 0; x < n && r.is_unit_cancellative; ++x) {
      for (Element y = 0; y < n; ++y) {
        if (!r.units.contains(y) && (m.mul(x, y) == x || m.mul(y, x) == x)) {
          r.is_unit_cancellative = false;
          break;
        }
      }
    }

    r.is_reduced = r.units == m.singleton(m.identity());
    return r;
  }

  DivisibilityIndex::DivisibilityIndex(CayleyMonoid const& m) {
    std::size_t const n = m.order();
    principal_.reserve(n);
    divisors_.assign(n, m.none());
    for (Element a = 0; a < n; ++a) {
      principal_.push_back(principal_two_sided_ideal(m, a));
      principal_.back().for_each([&](Element b) { divisors_[b].insert(a); });
    }
  }

  bool divides(CayleyMonoid const& m, Element a, Element b) {
    return principal_two_sided_ideal(m, a).contains(b);
  }

  ArchimedeanProfile archimedean_profile(CayleyMonoid const& m) {
    ArchimedeanProfile p;
    std::size_t const  n         = m.order();
    SubsetCode const   non_units = m.all() - units(m);
    if (non_units.empty()) {
      p.is_archimedean          = true;
      p.is_strongly_archimedean = true;
      return p;
    }
    DivisibilityIndex const index(m);

    p.is_archimedean = true;
    non_units.for_each([&](Element b) {
      // Distinct powers b, b^2, ... up to the first repeat.
      std::vector<Element> powers;
      SubsetCode           seen = m.none();
      for (Element x = b; !seen.contains(x); x = m.mul(x, b)) {
        seen.insert(x);
        powers.push_back(x);
      }
      for (Element a = 0; a < n; ++a) {
        std::optional<std::size_t> k;
        for (std::size_t i = 0; i < powers.size(); ++i) {
          if (index.divides(a, powers[i])) {
            k = i + 1;
            break;
          }
        }
        p.is_archimedean = p.is_archimedean && k.has_value();
        p.archimedean_witness.emplace(std::make_pair(a, b), k);
      }
    });

    std::vector<SubsetCode>                    setwise_powers;
    std::unordered_set<SubsetCode, SubsetCodeHash> seen;
    for (SubsetCode x = non_units; seen.insert(x).second;
         x = setwise_product(m, x, non_units)) {
      setwise_powers.push_back(x);
    }
    p.is_strongly_archimedean = true;
    p.strong_exponent_per_element.resize(n);
    for (Element a = 0; a < n; ++a) {
      for (std::size_t i = 0; i < setwise_powers.size(); ++i) {
        if (setwise_powers[i].is_subset_of(index.principal_ideal(a))) {
          p.strong_exponent_per_element[a] = i + 1;
          break;
        }
      }
      p.is_strongly_archimedean = p.is_strongly_archimedean
                                  && p.strong_exponent_per_element[a].has_value();
    }
    return p;
  }

  SubsetCode divisor_closed_closure(CayleyMonoid const& m, SubsetCode const& x) {
    return divisor_closed_closure(m, DivisibilityIndex(m), x);
  }

  SubsetCode divisor_closed_closure(CayleyMonoid const&      m,
                                    DivisibilityIndex const& index,
                                    SubsetCode const&        x) {
    if (x.host_order() != m.order()) {
      throw Error(ErrorCode::host_mismatch, "seed does not belong to this monoid");
    }
    if (x.empty()) {
      throw Error(ErrorCode::empty_input, "divisor-closed closure of the empty set");
    }
    SubsetCode current = x;
    while (true) {
      SubsetCode divisors = m.none();
      current.for_each([&](Element y) { divisors |= index.divisors_of(y); });
      SubsetCode next = generated_subsemigroup(m, divisors);
      if (next == current) {
        return current;
      }
      current = std::move(next);
    }
  }

  bool is_subsemigroup(CayleyMonoid const& m, SubsetCode const& x) {
    if (x.empty()) {
      return false;
    }
    bool closed = true;
    x.for_each([&](Element a) {
      x.for_each([&](Element b) { closed = closed && x.contains(m.mul(a, b)); });
    });
    return closed;
  }

  bool is_divisor_closed(CayleyMonoid const&      m,
                         DivisibilityIndex const& index,
                         SubsetCode const&        x) {
    if (!is_subsemigroup(m, x)) {
      return false;
    }
    bool closed = true;
    x.for_each([&](Element y) { closed = closed && index.divisors_of(y).is_subset_of(x); });
    return closed;
  }

}  // namespace monoidforge
