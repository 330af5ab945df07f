#include "monoidforge/subsets.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "monoidforge/error.hpp"

namespace monoidforge {

  namespace {
    void check_operand(CayleyMonoid const& m, SubsetCode const& x) {
      if (x.host_order() != m.order()) {
        throw Error(ErrorCode::host_mismatch,
                    "subset over a host of order " + std::to_string(x.host_order())
                        + " used with a monoid of order " + std::to_string(m.order()));
      }
      if (x.empty()) {
        throw Error(ErrorCode::empty_input, "empty subset");
      }
    }
  }  // namespace

  SubsetCode setwise_product(CayleyMonoid const& m,
                             SubsetCode const&   x,
                             SubsetCode const&   y) {
    check_operand(m, x);
    check_operand(m, y);
    SubsetCode out = m.none();
    x.for_each([&](Element a) {
      auto row = m.row(a);
      y.for_each([&](Element b) { out.insert(row[b]); });
    });
    return out;
  }

  SubsetCode setwise_power(CayleyMonoid const& m, SubsetCode const& x, std::size_t k) {
    if (k == 0) {
      throw Error(ErrorCode::bad_params, "setwise_power needs k >= 1");
    }
    SubsetCode out = x;
    for (std::size_t i = 1; i < k; ++i) {
      out = setwise_product(m, out, x);
    }
    return out;
  }

  SubsetCode generated_subsemigroup(CayleyMonoid const& m, SubsetCode const& x) {
    check_operand(m, x);
    SubsetCode           out  = x;
    std::vector<Element> gens = x.elements();
    std::vector<Element> work = gens;
    // Every element of the closure is a product w * g with w in the closure
    // and g a generator, so right-multiplying by generators suffices.
    while (!work.empty()) {
      Element const w = work.back();
      work.pop_back();
      for (auto g : gens) {
        Element const p = m.mul(w, g);
        if (!out.contains(p)) {
          out.insert(p);
          work.push_back(p);
        }
      }
    }
    return out;
  }

  LabeledQuotientMonoid power_monoid(CayleyMonoid const& m, Limits const& limits) {
    std::size_t const n = m.order();
    if (n > limits.max_subset_order || n > 24) {
      throw Error(ErrorCode::too_large,
                  "power monoid of an order-" + std::to_string(n)
                      + " monoid exceeds the subset cap of order "
                      + std::to_string(limits.max_subset_order));
    }
    std::uint64_t const subsets = (std::uint64_t(1) << n) - 1;

    std::vector<std::uint64_t> masks(subsets);
    std::iota(masks.begin(), masks.end(), std::uint64_t(1));
    std::sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
      auto pa = std::popcount(a);
      auto pb = std::popcount(b);
      return pa != pb ? pa < pb : a < b;
    });
    std::vector<Element> index_of(subsets + 1, 0);
    for (std::size_t i = 0; i < masks.size(); ++i) {
      index_of[masks[i]] = static_cast<Element>(i);
    }

    // row_products[a][Y] = {a} * Y, built incrementally over Y.
    std::vector<std::vector<std::uint64_t>> row_products(
        n, std::vector<std::uint64_t>(subsets + 1, 0));
    for (Element a = 0; a < n; ++a) {
      auto& rp = row_products[a];
      for (std::uint64_t y = 1; y <= subsets; ++y) {
        auto low = static_cast<Element>(std::countr_zero(y));
        rp[y]    = rp[y & (y - 1)] | (std::uint64_t(1) << m.mul(a, low));
      }
    }

    std::vector<Element>       flat(masks.size() * masks.size());
    std::vector<std::uint64_t> product_row(subsets + 1);
    for (std::size_t i = 0; i < masks.size(); ++i) {
      std::uint64_t const x = masks[i];
      std::fill(product_row.begin(), product_row.end(), 0);
      for (std::uint64_t rest = x; rest != 0; rest &= rest - 1) {
        auto const& rp = row_products[std::countr_zero(rest)];
        for (std::uint64_t y = 1; y <= subsets; ++y) {
          product_row[y] |= rp[y];
        }
      }
      for (std::size_t j = 0; j < masks.size(); ++j) {
        flat[i * masks.size() + j] = index_of[product_row[masks[j]]];
      }
    }

    LabeledQuotientMonoid out{
        CayleyMonoid::from_derived_table(
            masks.size(), std::move(flat), index_of[std::uint64_t(1) << m.identity()]),
        {},
        {}};
    out.labels.reserve(masks.size());
    for (auto x : masks) {
      out.labels.push_back(SubsetCode::from_mask(n, x));
    }
    return out;
  }

  bool square_closed_identity_check(CayleyMonoid const& m, SubsetCode const& x) {
    if (setwise_product(m, x, x) != x) {
      throw Error(ErrorCode::not_square_closed,
                  "X^2 != X for X = " + x.to_string(m.names()));
    }
    return x.contains(m.identity());
  }

}  // namespace monoidforge
