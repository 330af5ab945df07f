#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace monoidforge {

  // Positional index of an element in a finite monoid.
  using Element = std::uint32_t;

  // A subset of the elements {0, ..., host_order - 1} of a finite monoid,
  // stored as a bitmask. Two codes are equal iff they have the same host
  // order and the same bits, so a code is its own canonical form.
  //
  // The empty set is representable (it shows up as an intermediate value,
  // e.g. the non-units of a group), but the algebraic operations that take
  // a SubsetCode reject it with ErrorCode::empty_input.
  class SubsetCode {
   public:
    SubsetCode() = default;
    explicit SubsetCode(std::size_t host_order);

    static SubsetCode full(std::size_t host_order);
    static SubsetCode singleton(std::size_t host_order, Element x);
    static SubsetCode from_elements(std::size_t              host_order,
                                    std::span<Element const> xs);
    static SubsetCode from_elements(std::size_t                    host_order,
                                    std::initializer_list<Element> xs) {
      return from_elements(host_order, std::span<Element const>(xs));
    }
    // Only for host_order <= 64.
    static SubsetCode from_mask(std::size_t host_order, std::uint64_t mask);

    std::size_t host_order() const noexcept {
      return order_;
    }

    bool contains(Element x) const noexcept {
      return x < order_ && ((words_[x >> 6] >> (x & 63)) & 1U) != 0;
    }

    void insert(Element x);
    void erase(Element x);

    std::size_t count() const noexcept;
    bool        empty() const noexcept;

    bool is_subset_of(SubsetCode const& other) const;
    bool intersects(SubsetCode const& other) const;

    std::optional<Element> first() const noexcept;
    std::vector<Element>   elements() const;

    template <typename Func>
    void for_each(Func&& f) const {
      for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t bits = words_[w];
        while (bits != 0) {
          auto b = static_cast<Element>(std::countr_zero(bits));
          f(static_cast<Element>(w * 64 + b));
          bits &= bits - 1;
        }
      }
    }

    // The low 64 bits; equals the whole code when host_order <= 64.
    std::uint64_t low_word() const noexcept {
      return words_.empty() ? 0 : words_.front();
    }

    std::span<std::uint64_t const> words() const noexcept {
      return words_;
    }

    SubsetCode& operator|=(SubsetCode const& other);
    SubsetCode& operator&=(SubsetCode const& other);
    // Set difference.
    SubsetCode& operator-=(SubsetCode const& other);

    friend SubsetCode operator|(SubsetCode a, SubsetCode const& b) {
      return a |= b;
    }
    friend SubsetCode operator&(SubsetCode a, SubsetCode const& b) {
      return a &= b;
    }
    friend SubsetCode operator-(SubsetCode a, SubsetCode const& b) {
      return a -= b;
    }

    friend bool operator==(SubsetCode const&, SubsetCode const&) = default;

    std::size_t hash() const noexcept;

    // "{0,2,5}", or with display names "{e,a,0}".
    std::string to_string(std::span<std::string const> names = {}) const;

   private:
    void check_host(SubsetCode const& other) const;

    std::size_t                order_ = 0;
    std::vector<std::uint64_t> words_;
  };

  // Orders codes by cardinality, then by the bitmask read as an unsigned
  // integer. Used wherever a deterministic element order is needed.
  bool canonical_less(SubsetCode const& a, SubsetCode const& b);

  struct SubsetCodeHash {
    std::size_t operator()(SubsetCode const& s) const noexcept {
      return s.hash();
    }
  };

}  // namespace monoidforge

template <>
struct std::hash<monoidforge::SubsetCode> : monoidforge::SubsetCodeHash {};
