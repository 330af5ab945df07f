#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "monoidforge/subset_code.hpp"

namespace monoidforge {

  // A finite monoid given by its multiplication table. Elements are the
  // indices 0, ..., order() - 1; names are for display only.
  //
  // Instances are immutable. Every public way of obtaining one either
  // validates the table in full (build) or derives it from an already
  // validated monoid by a construction that preserves associativity
  // (power monoids, ideal monoids, quotients).
  class CayleyMonoid {
   public:
    // Checks shape, range of entries, the identity law and all order^3
    // associativity triples. Throws Error(malformed_table),
    // NotIdentityError or NonAssociativeError.
    static CayleyMonoid build(std::vector<std::vector<Element>> const& table,
                              Element                                  identity,
                              std::vector<std::string> names = {});

    // For tables produced by associativity-preserving constructions: checks
    // shape, range and the identity law, but not associativity.
    static CayleyMonoid from_derived_table(std::size_t              order,
                                           std::vector<Element>     flat,
                                           Element                  identity,
                                           std::vector<std::string> names = {});

    std::size_t order() const noexcept {
      return order_;
    }

    Element identity() const noexcept {
      return identity_;
    }

    Element mul(Element a, Element b) const noexcept {
      return table_[a * order_ + b];
    }

    std::span<Element const> row(Element a) const noexcept {
      return {table_.data() + a * order_, order_};
    }

    std::vector<std::vector<Element>> table() const;

    std::vector<std::string> const& names() const noexcept {
      return names_;
    }

    std::string name(Element x) const;

    SubsetCode all() const {
      return SubsetCode::full(order_);
    }

    SubsetCode none() const {
      return SubsetCode(order_);
    }

    SubsetCode singleton(Element x) const {
      return SubsetCode::singleton(order_, x);
    }

    friend bool operator==(CayleyMonoid const&, CayleyMonoid const&) = default;

   private:
    CayleyMonoid() = default;

    std::size_t              order_ = 0;
    std::vector<Element>     table_;
    Element                  identity_ = 0;
    std::vector<std::string> names_;
  };

  inline CayleyMonoid build_cayley(std::vector<std::vector<Element>> const& table,
                                   Element                  identity,
                                   std::vector<std::string> names = {}) {
    return CayleyMonoid::build(table, identity, std::move(names));
  }

  struct PropertyReport {
    bool       is_duo             = false;
    bool       is_cancellative    = false;
    bool       is_dedekind_finite = false;
    bool       is_unit_cancellative = false;
    bool       is_reduced         = false;
    SubsetCode units;
  };

  // {u : uv = vu = e for some v}.
  SubsetCode     units(CayleyMonoid const& m);
  PropertyReport property_report(CayleyMonoid const& m);

  // aM, Ma and MaM.
  SubsetCode right_multiples(CayleyMonoid const& m, Element a);
  SubsetCode left_multiples(CayleyMonoid const& m, Element a);
  SubsetCode principal_two_sided_ideal(CayleyMonoid const& m, Element a);

  bool is_duo(CayleyMonoid const& m);
  // Least a with aM != Ma, if any.
  std::optional<Element> duo_witness(CayleyMonoid const& m);
  bool                   is_group(CayleyMonoid const& m);

  // Precomputed two-sided principal ideals and their transpose, so that
  // repeated divisibility queries and closures cost one lookup.
  class DivisibilityIndex {
   public:
    explicit DivisibilityIndex(CayleyMonoid const& m);

    // MaM.
    SubsetCode const& principal_ideal(Element a) const {
      return principal_[a];
    }

    // {a : b in MaM}.
    SubsetCode const& divisors_of(Element b) const {
      return divisors_[b];
    }

    bool divides(Element a, Element b) const {
      return principal_[a].contains(b);
    }

   private:
    std::vector<SubsetCode> principal_;
    std::vector<SubsetCode> divisors_;
  };

  // a | b iff b lies in MaM.
  bool divides(CayleyMonoid const& m, Element a, Element b);

  struct ArchimedeanProfile {
    bool is_archimedean          = false;
    bool is_strongly_archimedean = false;
    // Indexed by element a: least k with (M \ M^x)^k contained in MaM.
    // Empty when M is a group.
    std::vector<std::optional<std::size_t>> strong_exponent_per_element;
    // Keyed by (a, b) with b a non-unit: least k with b^k in MaM.
    std::map<std::pair<Element, Element>, std::optional<std::size_t>>
        archimedean_witness;
  };

  // Decides both properties exactly. The powers b, b^2, ... and the
  // setwise powers N, N^2, ... of the non-units N are eventually periodic,
  // so each exponent search stops at the first repeated state.
  ArchimedeanProfile archimedean_profile(CayleyMonoid const& m);

  // The least divisor-closed subsemigroup containing x, computed as the
  // union of the ascending chain D_0 = x, D_{n+1} = subsemigroup generated
  // by the divisors of D_n. Throws Error(empty_input) for an empty seed.
  SubsetCode divisor_closed_closure(CayleyMonoid const& m, SubsetCode const& x);
  SubsetCode divisor_closed_closure(CayleyMonoid const&      m,
                                    DivisibilityIndex const& index,
                                    SubsetCode const&        x);

  bool is_subsemigroup(CayleyMonoid const& m, SubsetCode const& x);
  bool is_divisor_closed(CayleyMonoid const&      m,
                         DivisibilityIndex const& index,
                         SubsetCode const&        x);

}  // namespace monoidforge
