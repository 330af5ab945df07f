#include "monoidforge/numsgp.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <string>

#include "monoidforge/error.hpp"

namespace monoidforge {

  namespace {
    constexpr std::int64_t max_generator = std::int64_t(1) << 31;
    constexpr std::int64_t max_genus     = 10'000'000;

    void require_member(NumericalSemigroup const& s, std::int64_t x) {
      if (!s.contains(x)) {
        throw Error(ErrorCode::not_in_semigroup, std::to_string(x) + " is not in the semigroup");
      }
    }

    void require_same_host(NumIdeal const& i, NumIdeal const& j) {
      if (!(i.host() == j.host())) {
        throw Error(ErrorCode::host_mismatch, "ideals of different numerical semigroups");
      }
    }

    std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
      return a <= 0 ? 0 : (a + b - 1) / b;
    }
  }  // namespace

  NumericalSemigroup NumericalSemigroup::from_generators(std::span<std::int64_t const> raw) {
    std::vector<std::int64_t> gens;
    for (auto g : raw) {
      if (g < 0) {
        throw Error(ErrorCode::non_positive, "negative generator " + std::to_string(g));
      }
      if (g > max_generator) {
        throw Error(ErrorCode::too_large, "generator " + std::to_string(g) + " too large");
      }
      if (g != 0) {
        gens.push_back(g);
      }
    }
    if (raw.empty()) {
      throw Error(ErrorCode::empty_input, "no generators");
    }
    std::int64_t g = 0;
    for (auto x : gens) {
      g = std::gcd(g, x);
    }
    if (g != 1) {
      throw Error(ErrorCode::not_cofinite, "generators have gcd " + std::to_string(g));
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    // Apery set of the multiplicity: shortest paths on residues mod m.
    std::int64_t const m = gens.front();
    auto const         residues = static_cast<std::size_t>(m);
    std::vector<std::int64_t> apery(residues, std::numeric_limits<std::int64_t>::max());
    using Entry = std::pair<std::int64_t, std::size_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
    apery[0] = 0;
    queue.emplace(0, 0);
    while (!queue.empty()) {
      auto [d, r] = queue.top();
      queue.pop();
      if (d != apery[r]) {
        continue;
      }
      for (auto x : gens) {
        std::size_t const next = (r + static_cast<std::size_t>(x % m)) % residues;
        if (d + x < apery[next]) {
          apery[next] = d + x;
          queue.emplace(d + x, next);
        }
      }
    }

    auto data       = std::make_shared<Data>();
    data->frobenius = *std::max_element(apery.begin(), apery.end()) - m;
    std::int64_t genus = 0;
    for (auto w : apery) {
      genus += w / m;
    }
    if (genus > max_genus) {
      throw Error(ErrorCode::too_large, "genus " + std::to_string(genus) + " too large");
    }
    for (std::size_t r = 0; r < residues; ++r) {
      for (std::int64_t x = apery[r] - m; x > 0; x -= m) {
        data->gaps.push_back(x);
      }
    }
    std::sort(data->gaps.begin(), data->gaps.end());

    // Minimal generators: m, plus the nonzero Apery elements that are not
    // a nonzero Apery element plus an element of S.
    data->min_generators.push_back(m);
    for (std::size_t r = 1; r < residues; ++r) {
      bool minimal = true;
      for (std::size_t q = 1; q < residues && minimal; ++q) {
        if (q == r) {
          continue;
        }
        std::int64_t const diff = apery[r] - apery[q];
        minimal = !(diff >= 0 && diff >= apery[static_cast<std::size_t>(diff % m)]);
      }
      if (minimal) {
        data->min_generators.push_back(apery[r]);
      }
    }
    std::sort(data->min_generators.begin(), data->min_generators.end());
    data->apery = std::move(apery);

    NumericalSemigroup s;
    s.data_ = std::move(data);
    return s;
  }

  bool NumIdeal::contains(std::int64_t x) const {
    return std::any_of(
        gens_.begin(), gens_.end(), [&](std::int64_t g) { return host_.contains(x - g); });
  }

  NumIdeal ideal_normalize(NumericalSemigroup const& s, std::span<std::int64_t const> raw) {
    if (raw.empty()) {
      throw Error(ErrorCode::empty_input, "an ideal needs at least one generator");
    }
    std::vector<std::int64_t> gens(raw.begin(), raw.end());
    for (auto g : gens) {
      require_member(s, g);
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<std::int64_t> kept;
    for (auto a : gens) {
      // Only smaller generators can divide a.
      bool redundant = std::any_of(
          kept.begin(), kept.end(), [&](std::int64_t b) { return s.contains(a - b); });
      if (!redundant) {
        kept.push_back(a);
      }
    }
    return NumIdeal(s, std::move(kept));
  }

  NumIdeal ideal_sum(NumIdeal const& i, NumIdeal const& j) {
    require_same_host(i, j);
    std::vector<std::int64_t> sums;
    for (auto a : i.generators()) {
      for (auto b : j.generators()) {
        sums.push_back(a + b);
      }
    }
    return ideal_normalize(i.host(), sums);
  }

  bool ideal_contains(NumIdeal const& i, NumIdeal const& j) {
    require_same_host(i, j);
    return std::all_of(j.generators().begin(),
                       j.generators().end(),
                       [&](std::int64_t g) { return i.contains(g); });
  }

  NumIdeal maximal_ideal(NumericalSemigroup const& s) {
    return ideal_normalize(s, s.min_generators());
  }

  std::int64_t archimedean_exponent(NumericalSemigroup const& s,
                                    std::int64_t              x,
                                    std::int64_t              y) {
    if (y == 0) {
      throw Error(ErrorCode::zero_divisor, "archimedean_exponent needs y != 0");
    }
    require_member(s, x);
    require_member(s, y);
    std::int64_t const bound = std::max<std::int64_t>(1, ceil_div(x + s.frobenius() + 1, y));
    for (std::int64_t k = 1; k <= bound; ++k) {
      if (s.contains(k * y - x)) {
        return k;
      }
    }
    throw std::logic_error("archimedean_exponent exceeded its bound");
  }

  std::int64_t strong_exponent(NumericalSemigroup const& s, std::int64_t a) {
    require_member(s, a);
    // Sums above a + frobenius always land in a + S, so only the n-fold
    // sums in [0, limit] need checking.
    std::int64_t const limit = a + s.frobenius();
    if (limit < 0) {
      return 1;
    }
    auto const        width = static_cast<std::size_t>(limit + 1);
    std::vector<bool> nonzero(width, false);
    for (std::size_t x = 1; x < width; ++x) {
      nonzero[x] = s.contains(static_cast<std::int64_t>(x));
    }
    std::vector<bool> sums = nonzero;
    for (std::int64_t n = 1;; ++n) {
      bool ok = true;
      for (std::size_t x = 0; x < width && ok; ++x) {
        ok = !sums[x] || s.contains(static_cast<std::int64_t>(x) - a);
      }
      if (ok) {
        return n;
      }
      std::vector<bool> next(width, false);
      for (std::size_t x = 0; x < width; ++x) {
        if (!sums[x]) {
          continue;
        }
        for (std::size_t y = 1; x + y < width; ++y) {
          if (nonzero[y]) {
            next[x + y] = true;
          }
        }
      }
      sums = std::move(next);
    }
  }

  std::int64_t ideal_power_exponent_num(NumericalSemigroup const& s,
                                        NumIdeal const&           i,
                                        std::int64_t              a) {
    if (!(i.host() == s)) {
      throw Error(ErrorCode::host_mismatch, "ideal belongs to another semigroup");
    }
    if (i.contains(0)) {
      throw Error(ErrorCode::improper_ideal, "the ideal is the whole semigroup");
    }
    require_member(s, a);
    NumIdeal const principal = ideal_normalize(s, {a});
    NumIdeal       power     = i;
    for (std::int64_t k = 1;; ++k) {
      if (ideal_contains(principal, power)) {
        return k;
      }
      power = ideal_sum(power, i);
    }
  }

  Rational parse_rational(std::string_view text) {
    using boost::multiprecision::cpp_int;
    auto parse_int = [&](std::string_view part) {
      if (part.empty()
          || !std::all_of(part.begin() + (part.front() == '-' ? 1 : 0), part.end(), [](char c) {
               return c >= '0' && c <= '9';
             })
          || part == "-") {
        throw Error(ErrorCode::parse_error, "malformed rational '" + std::string(text) + "'");
      }
      return cpp_int(std::string(part));
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
      return Rational(parse_int(text));
    }
    cpp_int const den = parse_int(text.substr(slash + 1));
    if (den == 0) {
      throw Error(ErrorCode::parse_error, "zero denominator in '" + std::string(text) + "'");
    }
    return Rational(parse_int(text.substr(0, slash)), den);
  }

  NumericalSemigroup puiseux_normalize(std::span<Rational const> gens) {
    using boost::multiprecision::cpp_int;
    if (gens.empty()) {
      throw Error(ErrorCode::empty_input, "no generators");
    }
    cpp_int scale = 1;
    for (auto const& q : gens) {
      if (q <= 0) {
        throw Error(ErrorCode::non_positive, "generator " + q.str() + " is not positive");
      }
      scale = boost::multiprecision::lcm(scale, boost::multiprecision::denominator(q));
    }
    std::vector<cpp_int> scaled;
    cpp_int              g = 0;
    for (auto const& q : gens) {
      cpp_int x = boost::multiprecision::numerator(q) * (scale / boost::multiprecision::denominator(q));
      g         = boost::multiprecision::gcd(g, x);
      scaled.push_back(x);
    }
    std::vector<std::int64_t> ints;
    for (auto const& x : scaled) {
      cpp_int const v = x / g;
      if (v > max_generator) {
        throw Error(ErrorCode::too_large, "normalized generator " + v.str() + " too large");
      }
      ints.push_back(v.convert_to<std::int64_t>());
    }
    return NumericalSemigroup::from_generators(ints);
  }

  CayleyMonoid rees_truncation(NumericalSemigroup const& s, std::int64_t t) {
    if (t <= s.frobenius()) {
      throw Error(ErrorCode::bad_bound,
                  "bound " + std::to_string(t) + " must exceed the Frobenius number "
                      + std::to_string(s.frobenius()));
    }
    if (t > 4096) {
      throw Error(ErrorCode::too_large, "truncation bound " + std::to_string(t) + " too large");
    }
    std::vector<std::int64_t> members;
    for (std::int64_t x = 0; x <= t; ++x) {
      if (s.contains(x)) {
        members.push_back(x);
      }
    }
    auto const           sink = static_cast<Element>(members.size());
    std::size_t const    n    = members.size() + 1;
    std::vector<Element> index_of(static_cast<std::size_t>(t) + 1, sink);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < members.size(); ++i) {
      index_of[static_cast<std::size_t>(members[i])] = static_cast<Element>(i);
      names.push_back(std::to_string(members[i]));
    }
    names.emplace_back("inf");
    std::vector<Element> flat(n * n, sink);
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = 0; j < members.size(); ++j) {
        std::int64_t const sum = members[i] + members[j];
        if (sum <= t) {
          flat[i * n + j] = index_of[static_cast<std::size_t>(sum)];
        }
      }
    }
    return CayleyMonoid::from_derived_table(n, std::move(flat), 0, std::move(names));
  }

}  // namespace monoidforge
