#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "monoidforge/cayley.hpp"

namespace monoidforge {

  using Rational = boost::multiprecision::cpp_rational;

  // A cofinite submonoid of (N, +). Cheap to copy: the data is shared and
  // immutable.
  class NumericalSemigroup {
   public:
    // Throws Error(empty_input) for no generators and Error(not_cofinite)
    // when the gcd is not 1. Zero generators are ignored.
    static NumericalSemigroup from_generators(std::span<std::int64_t const> gens);

    std::vector<std::int64_t> const& min_generators() const noexcept {
      return data_->min_generators;
    }
    // Largest integer not in S; -1 for N itself.
    std::int64_t frobenius() const noexcept {
      return data_->frobenius;
    }
    // Least positive element.
    std::int64_t multiplicity() const noexcept {
      return data_->min_generators.front();
    }
    // apery()[r] is the least element congruent to r mod multiplicity().
    std::vector<std::int64_t> const& apery() const noexcept {
      return data_->apery;
    }
    std::vector<std::int64_t> const& gaps() const noexcept {
      return data_->gaps;
    }

    bool contains(std::int64_t n) const noexcept {
      return n >= 0 && n >= data_->apery[static_cast<std::size_t>(n % multiplicity())];
    }

    friend bool operator==(NumericalSemigroup const& a, NumericalSemigroup const& b) {
      return a.data_ == b.data_ || a.min_generators() == b.min_generators();
    }

   private:
    struct Data {
      std::vector<std::int64_t> min_generators;
      std::int64_t              frobenius = -1;
      std::vector<std::int64_t> apery;
      std::vector<std::int64_t> gaps;
    };
    std::shared_ptr<Data const> data_;
  };

  inline NumericalSemigroup from_generators(std::span<std::int64_t const> gens) {
    return NumericalSemigroup::from_generators(gens);
  }

  // Constant time via the Apery set.
  inline bool membership(NumericalSemigroup const& s, std::int64_t n) {
    return s.contains(n);
  }

  // An ideal I = (g_1 + S) u ... u (g_r + S) in canonical form: the g_i are
  // sorted and pairwise incomparable under a <=_S b iff b - a in S, so two
  // ideals are equal iff their generator lists are.
  class NumIdeal {
   public:
    NumericalSemigroup const& host() const noexcept {
      return host_;
    }
    std::vector<std::int64_t> const& generators() const noexcept {
      return gens_;
    }
    std::int64_t min() const noexcept {
      return gens_.front();
    }
    bool is_principal() const noexcept {
      return gens_.size() == 1;
    }
    bool contains(std::int64_t x) const;

    friend bool operator==(NumIdeal const& a, NumIdeal const& b) {
      return a.host_ == b.host_ && a.gens_ == b.gens_;
    }

   private:
    friend NumIdeal ideal_normalize(NumericalSemigroup const&, std::span<std::int64_t const>);
    NumIdeal(NumericalSemigroup host, std::vector<std::int64_t> gens)
        : host_(std::move(host)), gens_(std::move(gens)) {}

    NumericalSemigroup        host_;
    std::vector<std::int64_t> gens_;
  };

  // Drops every generator a with a - b in S for another generator b.
  // Throws Error(empty_input) or Error(not_in_semigroup).
  NumIdeal ideal_normalize(NumericalSemigroup const& s, std::span<std::int64_t const> gens);
  inline NumIdeal ideal_normalize(NumericalSemigroup const&           s,
                                  std::initializer_list<std::int64_t> gens) {
    return ideal_normalize(s, std::span<std::int64_t const>(gens.begin(), gens.size()));
  }

  // I + J, generated by the pairwise sums of generators. Throws
  // Error(host_mismatch).
  NumIdeal ideal_sum(NumIdeal const& i, NumIdeal const& j);

  // J contained in I. Throws Error(host_mismatch).
  bool ideal_contains(NumIdeal const& i, NumIdeal const& j);

  // S \ {0}.
  NumIdeal maximal_ideal(NumericalSemigroup const& s);

  // Least k >= 1 with k*y - x in S. Throws Error(zero_divisor) for y = 0
  // and Error(not_in_semigroup) unless x, y lie in S.
  std::int64_t archimedean_exponent(NumericalSemigroup const& s,
                                    std::int64_t              x,
                                    std::int64_t              y);

  // Least n >= 1 such that every sum of n nonzero elements lies in a + S.
  std::int64_t strong_exponent(NumericalSemigroup const& s, std::int64_t a);

  // Least k >= 1 with I + ... + I (k times) contained in a + S. Throws
  // Error(improper_ideal) when 0 lies in I.
  std::int64_t ideal_power_exponent_num(NumericalSemigroup const& s,
                                        NumIdeal const&           i,
                                        std::int64_t              a);

  // "p/q" or "p". Throws Error(parse_error).
  Rational parse_rational(std::string_view text);

  // Scales the generators of a finitely generated Puiseux monoid to coprime
  // integers. Two such monoids are isomorphic iff the results are equal.
  // Throws Error(empty_input) or Error(non_positive).
  NumericalSemigroup puiseux_normalize(std::span<Rational const> gens);

  // The finite monoid {s in S : s <= t} u {inf} under addition saturating
  // at inf. Element 0 is the identity and the last element is inf.
  // Throws Error(bad_bound) when t <= frobenius.
  CayleyMonoid rees_truncation(NumericalSemigroup const& s, std::int64_t t);

}  // namespace monoidforge
