#include "monoidforge/quotient.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "monoidforge/error.hpp"

namespace monoidforge {

  namespace {
    class UnionFind {
     public:
      explicit UnionFind(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), Element(0));
      }

      Element find(Element x) {
        while (parent_[x] != x) {
          parent_[x] = parent_[parent_[x]];
          x          = parent_[x];
        }
        return x;
      }

      bool unite(Element a, Element b) {
        a = find(a);
        b = find(b);
        if (a == b) {
          return false;
        }
        parent_[std::max(a, b)] = std::min(a, b);
        return true;
      }

      Congruence to_congruence() {
        Congruence c;
        c.host_order = parent_.size();
        c.class_of.assign(parent_.size(), 0);
        std::vector<std::size_t> class_of_root(parent_.size(), parent_.size());
        for (Element x = 0; x < parent_.size(); ++x) {
          Element r = find(x);
          if (class_of_root[r] == parent_.size()) {
            class_of_root[r] = c.class_count++;
          }
          c.class_of[x] = static_cast<Element>(class_of_root[r]);
        }
        return c;
      }

     private:
      std::vector<Element> parent_;
    };

    void check_pairs(std::size_t n, PairSet const& r) {
      for (auto [a, b] : r) {
        if (a >= n || b >= n) {
          throw Error(ErrorCode::bad_params, "relation pair out of range");
        }
      }
    }
  }  // namespace

  SubsetCode Congruence::members(Element cls) const {
    SubsetCode out(host_order);
    for (Element x = 0; x < host_order; ++x) {
      if (class_of[x] == cls) {
        out.insert(x);
      }
    }
    return out;
  }

  bool Congruence::is_compatible(CayleyMonoid const& m) const {
    // Compatible iff for all a ~ b and all c: ca ~ cb and ac ~ bc.
    for (Element a = 0; a < host_order; ++a) {
      for (Element b = a + 1; b < host_order; ++b) {
        if (class_of[a] != class_of[b]) {
          continue;
        }
        for (Element c = 0; c < host_order; ++c) {
          if (class_of[m.mul(c, a)] != class_of[m.mul(c, b)]
              || class_of[m.mul(a, c)] != class_of[m.mul(b, c)]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  PairSet associatedness(CayleyMonoid const& m) {
    std::vector<SubsetCode> principal;
    for (Element a = 0; a < m.order(); ++a) {
      principal.push_back(principal_two_sided_ideal(m, a));
    }
    PairSet out;
    for (Element a = 0; a < m.order(); ++a) {
      for (Element b = 0; b < m.order(); ++b) {
        if (principal[a] == principal[b]) {
          out.emplace_back(a, b);
        }
      }
    }
    return out;
  }

  Congruence equivalence_closure(std::size_t host_order, PairSet const& r) {
    check_pairs(host_order, r);
    UnionFind uf(host_order);
    for (auto [a, b] : r) {
      uf.unite(a, b);
    }
    return uf.to_congruence();
  }

  Congruence congruence_closure(CayleyMonoid const& m, PairSet const& r) {
    check_pairs(m.order(), r);
    UnionFind                               uf(m.order());
    std::deque<std::pair<Element, Element>> queue;
    for (auto [a, b] : r) {
      if (uf.unite(a, b)) {
        queue.emplace_back(a, b);
      }
    }
    while (!queue.empty()) {
      auto [a, b] = queue.front();
      queue.pop_front();
      for (Element c = 0; c < m.order(); ++c) {
        std::pair<Element, Element> const translates[]
            = {{m.mul(c, a), m.mul(c, b)}, {m.mul(a, c), m.mul(b, c)}};
        for (auto [x, y] : translates) {
          if (uf.unite(x, y)) {
            queue.emplace_back(x, y);
          }
        }
      }
    }
    return uf.to_congruence();
  }

  LabeledQuotientMonoid quotient_monoid(CayleyMonoid const& m, Congruence const& c) {
    if (c.host_order != m.order()) {
      throw Error(ErrorCode::host_mismatch, "congruence belongs to another monoid");
    }
    if (!c.is_compatible(m)) {
      throw Error(ErrorCode::bad_params, "relation is not a congruence");
    }
    std::size_t const    k = c.class_count;
    std::vector<Element> representative(k, 0);
    for (Element x = m.order(); x-- > 0;) {
      representative[c.class_of[x]] = x;
    }
    std::vector<Element> flat(k * k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        flat[i * k + j] = c.class_of[m.mul(representative[i], representative[j])];
      }
    }
    std::vector<std::string> names;
    if (!m.names().empty()) {
      for (std::size_t i = 0; i < k; ++i) {
        names.push_back("[" + m.name(representative[i]) + "]");
      }
    }
    LabeledQuotientMonoid out{
        CayleyMonoid::from_derived_table(
            k, std::move(flat), c.class_of[m.identity()], std::move(names)),
        {},
        c.class_of};
    for (std::size_t i = 0; i < k; ++i) {
      out.labels.push_back(c.members(static_cast<Element>(i)));
    }
    return out;
  }

  LabeledQuotientMonoid reduced_quotient(CayleyMonoid const& m) {
    return quotient_monoid(m, congruence_closure(m, associatedness(m)));
  }

  RedIsoPrincipalResult check_red_iso_principal(CayleyMonoid const& m,
                                                Limits const&       limits) {
    if (!is_duo(m)) {
      throw Error(ErrorCode::not_duo, "check_red_iso_principal requires a duo monoid");
    }
    return check_red_iso_principal(m, ideal_monoid(m, limits));
  }

  RedIsoPrincipalResult check_red_iso_principal(CayleyMonoid const&       m,
                                                IdealSemigroupView const& view) {
    if (!is_duo(m)) {
      throw Error(ErrorCode::not_duo, "check_red_iso_principal requires a duo monoid");
    }
    RedIsoPrincipalResult out;
    auto const            red = reduced_quotient(m);
    std::size_t const     k   = red.monoid.order();
    out.witness_index.assign(k, 0);
    out.witness.assign(k, SubsetCode());

    std::vector<bool> assigned(k, false);
    for (Element a = 0; a < m.order(); ++a) {
      Element const cls   = red.projection[a];
      Element const image = view.principal_of[a];
      if (assigned[cls] && out.witness_index[cls] != image) {
        out.failure = "map is not well defined on the class of " + m.name(a);
        return out;
      }
      assigned[cls]          = true;
      out.witness_index[cls] = image;
      out.witness[cls]       = view.ideal(image);
    }

    SubsetCode image_set(view.size());
    for (auto i : out.witness_index) {
      if (image_set.contains(i)) {
        out.failure = "map is not injective";
        return out;
      }
      image_set.insert(i);
    }
    if (image_set != view.pi_set) {
      out.failure = "image differs from P(M)";
      return out;
    }
    auto const& im = view.monoid.monoid;
    for (Element c = 0; c < k; ++c) {
      for (Element d = 0; d < k; ++d) {
        if (out.witness_index[red.monoid.mul(c, d)]
            != im.mul(out.witness_index[c], out.witness_index[d])) {
          out.failure = "map is not multiplicative";
          return out;
        }
      }
    }
    out.holds = true;
    return out;
  }

}  // namespace monoidforge
