#include "monoidforge/subset_code.hpp"

#include <algorithm>

#include "monoidforge/error.hpp"

namespace monoidforge {

  namespace {
    std::size_t word_count(std::size_t n) {
      return (n + 63) / 64;
    }
  }  // namespace

  SubsetCode::SubsetCode(std::size_t host_order)
      : order_(host_order), words_(word_count(host_order), 0) {}

  SubsetCode SubsetCode::full(std::size_t host_order) {
    SubsetCode s(host_order);
    for (std::size_t w = 0; w < s.words_.size(); ++w) {
      s.words_[w] = ~std::uint64_t(0);
    }
    if (host_order % 64 != 0) {
      s.words_.back() = (std::uint64_t(1) << (host_order % 64)) - 1;
    }
    return s;
  }

  SubsetCode SubsetCode::singleton(std::size_t host_order, Element x) {
    SubsetCode s(host_order);
    s.insert(x);
    return s;
  }

  SubsetCode SubsetCode::from_elements(std::size_t              host_order,
                                       std::span<Element const> xs) {
    SubsetCode s(host_order);
    for (auto x : xs) {
      s.insert(x);
    }
    return s;
  }

  SubsetCode SubsetCode::from_mask(std::size_t host_order, std::uint64_t mask) {
    if (host_order > 64) {
      throw Error(ErrorCode::too_large,
                  "from_mask requires host order <= 64, got "
                      + std::to_string(host_order));
    }
    if (host_order < 64 && (mask >> host_order) != 0) {
      throw Error(ErrorCode::malformed_table,
                  "mask has bits beyond host order "
                      + std::to_string(host_order));
    }
    SubsetCode s(host_order);
    if (!s.words_.empty()) {
      s.words_[0] = mask;
    }
    return s;
  }

  void SubsetCode::insert(Element x) {
    if (x >= order_) {
      throw Error(ErrorCode::host_mismatch,
                  "element " + std::to_string(x) + " out of range for order "
                      + std::to_string(order_));
    }
    words_[x >> 6] |= std::uint64_t(1) << (x & 63);
  }

  void SubsetCode::erase(Element x) {
    if (x < order_) {
      words_[x >> 6] &= ~(std::uint64_t(1) << (x & 63));
    }
  }

  std::size_t SubsetCode::count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) {
      c += static_cast<std::size_t>(std::popcount(w));
    }
    return c;
  }

  bool SubsetCode::empty() const noexcept {
    return std::all_of(
        words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }

  void SubsetCode::check_host(SubsetCode const& other) const {
    if (order_ != other.order_) {
      throw Error(ErrorCode::host_mismatch,
                  "subset codes over hosts of order " + std::to_string(order_)
                      + " and " + std::to_string(other.order_));
    }
  }

  bool SubsetCode::is_subset_of(SubsetCode const& other) const {
    check_host(other);
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if ((words_[w] & ~other.words_[w]) != 0) {
        return false;
      }
    }
    return true;
  }

  bool SubsetCode::intersects(SubsetCode const& other) const {
    check_host(other);
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if ((words_[w] & other.words_[w]) != 0) {
        return true;
      }
    }
    return false;
  }

  std::optional<Element> SubsetCode::first() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] != 0) {
        return static_cast<Element>(w * 64 + std::countr_zero(words_[w]));
      }
    }
    return std::nullopt;
  }

  std::vector<Element> SubsetCode::elements() const {
    std::vector<Element> out;
    out.reserve(count());
    for_each([&out](Element x) { out.push_back(x); });
    return out;
  }

  SubsetCode& SubsetCode::operator|=(SubsetCode const& other) {
    check_host(other);
    for (std::size_t w = 0; w < words_.size(); ++w) {
      words_[w] |= other.words_[w];
    }
    return *this;
  }

  SubsetCode& SubsetCode::operator&=(SubsetCode const& other) {
    check_host(other);
    for (std::size_t w = 0; w < words_.size(); ++w) {
      words_[w] &= other.words_[w];
    }
    return *this;
  }

  SubsetCode& SubsetCode::operator-=(SubsetCode const& other) {
    check_host(other);
    for (std::size_t w = 0; w < words_.size(); ++w) {
      words_[w] &= ~other.words_[w];
    }
    return *this;
  }

  std::size_t SubsetCode::hash() const noexcept {
    // FNV-1a over the words, seeded with the order.
    std::uint64_t h = 1469598103934665603ULL ^ order_;
    for (auto w : words_) {
      h ^= w;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }

  std::string SubsetCode::to_string(std::span<std::string const> names) const {
    std::string out = "{";
    bool        first_item = true;
    for_each([&](Element x) {
      if (!first_item) {
        out += ",";
      }
      first_item = false;
      out += x < names.size() ? names[x] : std::to_string(x);
    });
    out += "}";
    return out;
  }

  bool canonical_less(SubsetCode const& a, SubsetCode const& b) {
    auto ca = a.count();
    auto cb = b.count();
    if (ca != cb) {
      return ca < cb;
    }
    auto wa = a.words();
    auto wb = b.words();
    if (wa.size() != wb.size()) {
      return wa.size() < wb.size();
    }
    for (std::size_t w = wa.size(); w-- > 0;) {
      if (wa[w] != wb[w]) {
        return wa[w] < wb[w];
      }
    }
    return false;
  }

}  // namespace monoidforge
