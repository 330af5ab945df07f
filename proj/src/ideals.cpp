#include "monoidforge/ideals.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "monoidforge/error.hpp"
#include "monoidforge/subsets.hpp"

namespace monoidforge {

  namespace {
    bool larger_first(SubsetCode const& a, SubsetCode const& b) {
      auto ca = a.count();
      auto cb = b.count();
      return ca != cb ? ca > cb : canonical_less(a, b);
    }

    // Every ideal is the union of the principal ideals of its elements, so
    // closing the principal ideals under union yields all ideals. Used to
    // cross-check the subset filter.
    std::vector<SubsetCode> ideals_by_union_closure(CayleyMonoid const& m) {
      std::unordered_set<SubsetCode, SubsetCodeHash> found;
      std::vector<SubsetCode>                        principal;
      for (Element a = 0; a < m.order(); ++a) {
        auto p = principal_two_sided_ideal(m, a);
        if (found.insert(p).second) {
          principal.push_back(p);
        }
      }
      std::vector<SubsetCode> work(found.begin(), found.end());
      while (!work.empty()) {
        SubsetCode x = work.back();
        work.pop_back();
        for (auto const& p : principal) {
          SubsetCode u = x | p;
          if (found.insert(u).second) {
            work.push_back(u);
          }
        }
      }
      return {found.begin(), found.end()};
    }
  }  // namespace

  bool is_ideal(CayleyMonoid const& m, SubsetCode const& i) {
    if (i.host_order() != m.order()) {
      throw Error(ErrorCode::host_mismatch, "subset does not belong to this monoid");
    }
    if (i.empty()) {
      return false;
    }
    bool closed = true;
    i.for_each([&](Element x) {
      for (Element y = 0; y < m.order() && closed; ++y) {
        closed = i.contains(m.mul(x, y)) && i.contains(m.mul(y, x));
      }
    });
    return closed;
  }

  SubsetCode generated_ideal(CayleyMonoid const& m, SubsetCode const& x) {
    SubsetCode const mx = setwise_product(m, m.all(), x);
    return setwise_product(m, mx, m.all());
  }

  IdealSemigroupView ideal_monoid(CayleyMonoid const& m, Limits const& limits) {
    std::size_t const n = m.order();
    if (n > limits.max_subset_order || n > 24) {
      throw Error(ErrorCode::too_large,
                  "ideal enumeration for order " + std::to_string(n)
                      + " exceeds the subset cap of order "
                      + std::to_string(limits.max_subset_order));
    }
    std::vector<SubsetCode> ideals;
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n); ++mask) {
      auto s = SubsetCode::from_mask(n, mask);
      if (is_ideal(m, s)) {
        ideals.push_back(std::move(s));
      }
    }
    std::sort(ideals.begin(), ideals.end(), larger_first);

    auto by_union = ideals_by_union_closure(m);
    std::sort(by_union.begin(), by_union.end(), larger_first);
    if (by_union != ideals) {
      throw std::logic_error("ideal enumeration strategies disagree");
    }

    std::unordered_map<SubsetCode, Element, SubsetCodeHash> index;
    for (std::size_t i = 0; i < ideals.size(); ++i) {
      index.emplace(ideals[i], static_cast<Element>(i));
    }
    std::size_t const    k = ideals.size();
    std::vector<Element> flat(k * k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        flat[i * k + j] = index.at(setwise_product(m, ideals[i], ideals[j]));
      }
    }

    IdealSemigroupView view{
        {CayleyMonoid::from_derived_table(k, std::move(flat), 0), ideals, {}},
        std::vector<bool>(k, false),
        std::vector<bool>(k, true),
        SubsetCode(k),
        {}};
    SubsetCode principal(k);
    for (Element a = 0; a < n; ++a) {
      Element p = index.at(principal_two_sided_ideal(m, a));
      view.principal_of.push_back(p);
      view.principal_flags[p] = true;
      principal.insert(p);
    }
    view.pi_set = generated_subsemigroup(view.monoid.monoid, principal);
    return view;
  }

  std::optional<std::size_t> ideal_power_exponent(CayleyMonoid const& m,
                                                  SubsetCode const&   i,
                                                  SubsetCode const&   j) {
    if (!is_ideal(m, i) || !is_ideal(m, j)) {
      throw Error(ErrorCode::not_an_ideal, "ideal_power_exponent needs two ideals");
    }
    std::unordered_set<SubsetCode, SubsetCodeHash> seen;
    std::size_t                                    n = 1;
    for (SubsetCode p = i; seen.insert(p).second; p = setwise_product(m, p, i), ++n) {
      if (p.is_subset_of(j)) {
        return n;
      }
    }
    return std::nullopt;
  }

  bool ideal_divides(IdealSemigroupView const& view, Element i, Element j) {
    return divides(view.monoid.monoid, i, j);
  }

  PiDivisorClosedResult check_pi_divisor_closed(IdealSemigroupView const& view) {
    auto const& im = view.monoid.monoid;
    for (Element i = 0; i < im.order(); ++i) {
      for (Element j = 0; j < im.order(); ++j) {
        if (view.pi_set.contains(im.mul(i, j))
            && !(view.pi_set.contains(i) && view.pi_set.contains(j))) {
          return {false, std::make_pair(view.ideal(i), view.ideal(j))};
        }
      }
    }
    return {true, std::nullopt};
  }

  PiDivisorClosedResult check_pi_divisor_closed(CayleyMonoid const& m,
                                                Limits const&       limits) {
    return check_pi_divisor_closed(ideal_monoid(m, limits));
  }

  StrongArchimedeanCharacterization
  check_strongly_archimedean_characterization(CayleyMonoid const& m,
                                              Limits const&       limits) {
    if (!is_duo(m)) {
      throw Error(ErrorCode::not_duo, "characterization requires a duo monoid");
    }
    return check_strongly_archimedean_characterization(m, ideal_monoid(m, limits));
  }

  StrongArchimedeanCharacterization
  check_strongly_archimedean_characterization(CayleyMonoid const&       m,
                                              IdealSemigroupView const& view) {
    if (!is_duo(m)) {
      throw Error(ErrorCode::not_duo, "characterization requires a duo monoid");
    }
    StrongArchimedeanCharacterization out;
    out.strongly_archimedean = archimedean_profile(m).is_strongly_archimedean;
    out.closures_contain_pi  = true;

    auto const&             im = view.monoid.monoid;
    DivisibilityIndex const index(im);
    for (Element i = 0; i < im.order(); ++i) {
      if (i == im.identity()) {
        continue;
      }
      SubsetCode closure = divisor_closed_closure(im, index, im.singleton(i));
      if (!view.pi_set.is_subset_of(closure)) {
        out.closures_contain_pi = false;
        StrongArchimedeanCharacterization::Witness w;
        w.seed = view.ideal(i);
        closure.for_each([&](Element c) { w.closure.push_back(view.ideal(c)); });
        w.missing_principal = view.ideal(*(view.pi_set - closure).first());
        out.witness         = std::move(w);
        break;
      }
    }
    out.agree = out.strongly_archimedean == out.closures_contain_pi;
    return out;
  }

  bool check_interleaving_containment(CayleyMonoid const&          m,
                                      std::span<Element const>     xs,
                                      std::span<std::size_t const> sigma) {
    if (!is_duo(m)) {
      throw Error(ErrorCode::not_duo, "interleaving containment requires a duo monoid");
    }
    if (xs.empty() || sigma.empty()) {
      throw Error(ErrorCode::bad_sigma, "xs and sigma must be non-empty");
    }
    for (std::size_t t = 0; t < sigma.size(); ++t) {
      if (sigma[t] >= xs.size() || (t > 0 && sigma[t] <= sigma[t - 1])) {
        throw Error(ErrorCode::bad_sigma,
                    "sigma must be strictly increasing into [0, "
                        + std::to_string(xs.size()) + ")");
      }
    }
    for (auto x : xs) {
      if (x >= m.order()) {
        throw Error(ErrorCode::bad_params, "element " + std::to_string(x) + " out of range");
      }
    }
    SubsetCode lhs = principal_two_sided_ideal(m, xs[0]);
    for (std::size_t t = 1; t < xs.size(); ++t) {
      lhs = setwise_product(m, lhs, principal_two_sided_ideal(m, xs[t]));
    }
    Element word = m.identity();
    for (auto s : sigma) {
      word = m.mul(word, xs[s]);
    }
    return lhs.is_subset_of(right_multiples(m, word));
  }

}  // namespace monoidforge
