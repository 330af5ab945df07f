#include "monoidforge/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <ostream>
#include <sstream>

#include "monoidforge/catalog.hpp"
#include "monoidforge/error.hpp"
#include "monoidforge/ideals.hpp"
#include "monoidforge/io.hpp"
#include "monoidforge/iso.hpp"
#include "monoidforge/numsgp.hpp"
#include "monoidforge/quotient.hpp"
#include "monoidforge/report.hpp"
#include "monoidforge/subsets.hpp"

namespace monoidforge::cli {

  namespace {
    using io::Json;

    [[noreturn]] void bad_input(std::string const& msg) {
      throw Error(ErrorCode::parse_error, msg);
    }

    std::vector<std::string> split_list(std::string const& text) {
      std::vector<std::string> out;
      std::string              cur;
      for (char c : text + ",") {
        if (c == ',' || c == ' ') {
          if (!cur.empty()) {
            out.push_back(cur);
          }
          cur.clear();
        } else {
          cur += c;
        }
      }
      return out;
    }

    std::int64_t parse_i64(std::string const& s) {
      std::int64_t v{};
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || ptr != s.data() + s.size()) {
        bad_input("expected an integer, got '" + s + "'");
      }
      return v;
    }

    std::vector<std::int64_t> parse_i64_list(std::string const& text) {
      std::vector<std::int64_t> out;
      for (auto const& w : split_list(text)) {
        out.push_back(parse_i64(w));
      }
      return out;
    }

    // Element by display name, else by index.
    Element parse_element(CayleyMonoid const& m, std::string const& token) {
      for (Element x = 0; x < m.order(); ++x) {
        if (m.name(x) == token) {
          return x;
        }
      }
      auto const v = parse_i64(token);
      if (v < 0 || static_cast<std::size_t>(v) >= m.order()) {
        bad_input("no element '" + token + "'");
      }
      return static_cast<Element>(v);
    }

    Json names_of(CayleyMonoid const& m, SubsetCode const& s) {
      Json out = Json::array();
      s.for_each([&](Element x) { out.push_back(m.name(x)); });
      return out;
    }

    std::string yes_no(bool b) {
      return b ? "yes" : "no";
    }

    void print_table(std::ostream& out, CayleyMonoid const& m) {
      std::size_t width = 1;
      for (Element x = 0; x < m.order(); ++x) {
        width = std::max(width, m.name(x).size());
      }
      auto pad = [&](std::string s) {
        s.resize(std::max(width, s.size()), ' ');
        return s;
      };
      out << pad("") << " |";
      for (Element y = 0; y < m.order(); ++y) {
        out << ' ' << pad(m.name(y));
      }
      out << '\n';
      for (Element x = 0; x < m.order(); ++x) {
        out << pad(m.name(x)) << " |";
        for (Element y = 0; y < m.order(); ++y) {
          out << ' ' << pad(m.name(m.mul(x, y)));
        }
        out << '\n';
      }
    }

    Json with_header(std::string const& command, Json body) {
      Json j;
      j["schema"]  = io::schema_version;
      j["command"] = command;
      for (auto& [k, v] : body.items()) {
        j[k] = v;
      }
      return j;
    }

    struct Context {
      std::ostream& out;
      bool          json = false;
      Limits        limits;

      void emit(std::string const& command, Json body) const {
        out << with_header(command, std::move(body)).dump(2) << '\n';
      }
    };

    // -- monoid commands -----------------------------------------------------

    NumericalSemigroup numerical_of(io::Input const& in) {
      if (auto const* n = std::get_if<io::NumericalInput>(&in)) {
        return NumericalSemigroup::from_generators(n->generators);
      }
      return puiseux_normalize(std::get<io::PuiseuxInput>(in).generators);
    }

    // A finite monoid from a file; numerical and Puiseux inputs need a bound
    // and become Rees truncations.
    CayleyMonoid load_monoid(std::string const& path, std::optional<std::int64_t> bound) {
      auto in = io::parse_input(io::read_file(path));
      if (auto* m = std::get_if<CayleyMonoid>(&in)) {
        return std::move(*m);
      }
      if (!bound) {
        bad_input("'" + path + "' holds a numerical monoid; pass --bound to truncate it");
      }
      return rees_truncation(numerical_of(in), *bound);
    }

    Json numsgp_json(NumericalSemigroup const& s) {
      return Json{{"min_generators", s.min_generators()},
                  {"multiplicity", s.multiplicity()},
                  {"frobenius", s.frobenius()},
                  {"genus", s.gaps().size()},
                  {"gaps", s.gaps()},
                  {"apery", s.apery()}};
    }

    void print_numsgp(Context const& ctx, std::string const& command, NumericalSemigroup const& s) {
      if (ctx.json) {
        ctx.emit(command, numsgp_json(s));
        return;
      }
      auto list = [](std::vector<std::int64_t> const& v) {
        std::string o;
        for (std::size_t i = 0; i < v.size(); ++i) {
          o += (i ? " " : "") + std::to_string(v[i]);
        }
        return o;
      };
      ctx.out << "minimal generators: " << list(s.min_generators()) << '\n'
              << "multiplicity: " << s.multiplicity() << '\n'
              << "frobenius: " << s.frobenius() << '\n'
              << "genus: " << s.gaps().size() << '\n'
              << "gaps: " << list(s.gaps()) << '\n'
              << "apery set (mod " << s.multiplicity() << "): " << list(s.apery()) << '\n';
    }

    int cmd_inspect(Context const& ctx, std::string const& path, std::optional<std::int64_t> bound) {
      auto in = io::parse_input(io::read_file(path));
      if (!std::holds_alternative<CayleyMonoid>(in) && !bound) {
        print_numsgp(ctx, "inspect", numerical_of(in));
        return exit_ok;
      }
      auto const m     = load_monoid(path, bound);
      auto const props = property_report(m);
      auto const prof  = archimedean_profile(m);

      Json strong = Json::object();
      for (Element a = 0; a < prof.strong_exponent_per_element.size(); ++a) {
        auto const& k   = prof.strong_exponent_per_element[a];
        strong[m.name(a)] = k ? Json(*k) : Json(nullptr);
      }
      Json failures = Json::array();
      for (auto const& [ab, k] : prof.archimedean_witness) {
        if (!k) {
          failures.push_back(Json::array({m.name(ab.first), m.name(ab.second)}));
        }
      }
      if (ctx.json) {
        ctx.emit("inspect",
                 Json{{"monoid", io::monoid_to_json(m)},
                      {"properties",
                       Json{{"duo", props.is_duo},
                            {"cancellative", props.is_cancellative},
                            {"dedekind_finite", props.is_dedekind_finite},
                            {"unit_cancellative", props.is_unit_cancellative},
                            {"reduced", props.is_reduced},
                            {"units", names_of(m, props.units)}}},
                      {"archimedean",
                       Json{{"archimedean", prof.is_archimedean},
                            {"strongly_archimedean", prof.is_strongly_archimedean},
                            {"strong_exponents", strong},
                            {"non_archimedean_pairs", failures}}}});
        return exit_ok;
      }
      auto& out = ctx.out;
      out << "order: " << m.order() << ", identity: " << m.name(m.identity()) << '\n'
          << "duo: " << yes_no(props.is_duo) << '\n'
          << "cancellative: " << yes_no(props.is_cancellative) << '\n'
          << "dedekind-finite: " << yes_no(props.is_dedekind_finite) << '\n'
          << "unit-cancellative: " << yes_no(props.is_unit_cancellative) << '\n'
          << "reduced: " << yes_no(props.is_reduced) << '\n'
          << "units: " << props.units.to_string(m.names()) << '\n'
          << "archimedean: " << yes_no(prof.is_archimedean) << '\n'
          << "strongly archimedean: " << yes_no(prof.is_strongly_archimedean) << '\n';
      if (!strong.empty()) {
        out << "strong exponents:";
        for (auto const& [name, k] : strong.items()) {
          out << ' ' << name << '=' << (k.is_null() ? "none" : k.dump());
        }
        out << '\n';
      }
      if (!failures.empty()) {
        out << "no power of b lies in MaM for (a, b):";
        for (auto const& f : failures) {
          out << " (" << f[0].get<std::string>() << ", " << f[1].get<std::string>() << ")";
        }
        out << '\n';
      }
      return exit_ok;
    }

    int cmd_ideals(Context const& ctx, CayleyMonoid const& m) {
      auto const view = ideal_monoid(m, ctx.limits);
      if (ctx.json) {
        Json ideals = Json::array();
        for (Element i = 0; i < view.size(); ++i) {
          ideals.push_back(Json{{"index", i},
                                {"ideal", names_of(m, view.ideal(i))},
                                {"principal", static_cast<bool>(view.principal_flags[i])},
                                {"finitely_generated", static_cast<bool>(view.fin_gen_flags[i])},
                                {"in_pi", view.pi_set.contains(i)}});
        }
        ctx.emit("ideals", Json{{"ideals", ideals}, {"monoid", io::monoid_to_json(view.monoid.monoid)}});
        return exit_ok;
      }
      auto& out = ctx.out;
      out << view.size() << " ideals (every ideal is finitely generated at finite scale)\n";
      for (Element i = 0; i < view.size(); ++i) {
        out << "  I" << i << " = " << view.ideal(i).to_string(m.names())
            << (view.principal_flags[i] ? "  principal" : "")
            << (view.pi_set.contains(i) ? "  in P(M)" : "") << '\n';
      }
      out << "product table (by index):\n";
      print_table(out, view.monoid.monoid);
      return exit_ok;
    }

    int cmd_power(Context const& ctx, CayleyMonoid const& m) {
      auto const p = power_monoid(m, ctx.limits);
      if (ctx.json) {
        Json labels = Json::array();
        for (auto const& l : p.labels) {
          labels.push_back(names_of(m, l));
        }
        ctx.emit("power", Json{{"labels", labels}, {"monoid", io::monoid_to_json(p.monoid)}});
        return exit_ok;
      }
      auto& out = ctx.out;
      out << "power monoid of order " << p.monoid.order()
          << " (equal to the finitary power monoid for a finite host)\n";
      for (Element i = 0; i < p.monoid.order(); ++i) {
        out << "  X" << i << " = " << p.labels[i].to_string(m.names()) << '\n';
      }
      out << "product table (by index):\n";
      print_table(out, p.monoid);
      return exit_ok;
    }

    int cmd_quotient(Context const& ctx, CayleyMonoid const& m) {
      auto const q = reduced_quotient(m);
      Json       classes = Json::array();
      for (auto const& l : q.labels) {
        classes.push_back(names_of(m, l));
      }
      std::optional<RedIsoPrincipalResult> iso;
      if (is_duo(m)) {
        iso = check_red_iso_principal(m, ctx.limits);
      }
      int const status = iso && !iso->holds ? exit_check_failure : exit_ok;
      if (ctx.json) {
        Json body{{"classes", classes}, {"projection", q.projection},
                  {"monoid", io::monoid_to_json(q.monoid)}};
        if (iso) {
          Json w = Json::array();
          for (auto const& s : iso->witness) {
            w.push_back(names_of(m, s));
          }
          body["red_iso_principal"] = Json{{"holds", iso->holds}, {"witness", w}, {"failure", iso->failure}};
        } else {
          body["red_iso_principal"] = nullptr;
        }
        ctx.emit("quotient", body);
        return status;
      }
      auto& out = ctx.out;
      out << "reduced quotient of order " << q.monoid.order() << '\n';
      for (Element c = 0; c < q.monoid.order(); ++c) {
        out << "  " << q.monoid.name(c) << " = " << q.labels[c].to_string(m.names()) << '\n';
      }
      print_table(out, q.monoid);
      if (!iso) {
        out << "not duo: the principal-ideal comparison is skipped\n";
      } else if (iso->holds) {
        out << "class of a -> MaM is an isomorphism onto the principal ideal monoid:\n";
        for (Element c = 0; c < q.monoid.order(); ++c) {
          out << "  " << q.monoid.name(c) << " -> " << iso->witness[c].to_string(m.names()) << '\n';
        }
      } else {
        out << "FAIL: class of a -> MaM is not an isomorphism: " << iso->failure << '\n';
      }
      return status;
    }

    int cmd_dcclose(Context const& ctx, CayleyMonoid const& m, std::string const& set) {
      SubsetCode seed = m.none();
      for (auto const& t : split_list(set)) {
        seed.insert(parse_element(m, t));
      }
      auto const cl = divisor_closed_closure(m, seed);
      if (ctx.json) {
        ctx.emit("dcclose", Json{{"seed", names_of(m, seed)}, {"closure", names_of(m, cl)}});
      } else {
        ctx.out << cl.to_string(m.names()) << '\n';
      }
      return exit_ok;
    }

    int cmd_iso(Context const& ctx, CayleyMonoid const& a, CayleyMonoid const& b, bool all) {
      auto const r = find_isomorphisms(a, b, all ? ctx.limits.iso_enumeration_cap : 1);
      if (ctx.json) {
        Json ws = Json::array();
        for (auto const& w : r.witnesses) {
          ws.push_back(w.map);
        }
        ctx.emit("iso", Json{{"isomorphic", r.isomorphic()}, {"witnesses", ws},
                             {"truncated", all && r.truncated}});
        return exit_ok;
      }
      if (!r.isomorphic()) {
        ctx.out << "not isomorphic\n";
        return exit_ok;
      }
      ctx.out << "isomorphic";
      if (all) {
        ctx.out << " (" << r.witnesses.size() << (r.truncated ? "+, truncated" : "") << " isomorphisms)";
      }
      ctx.out << '\n';
      for (auto const& w : r.witnesses) {
        ctx.out << " ";
        for (Element x = 0; x < a.order(); ++x) {
          ctx.out << ' ' << a.name(x) << "->" << b.name(w(x));
        }
        ctx.out << '\n';
      }
      return exit_ok;
    }

    // -- numerical commands --------------------------------------------------

    struct IdealArgs {
      std::string              sg;
      std::vector<std::string> ideals;
      std::optional<std::int64_t> x, y, a;
    };

    int cmd_numsgp_ideal(Context const& ctx, std::string const& op, IdealArgs const& args) {
      auto const s = NumericalSemigroup::from_generators(parse_i64_list(args.sg));
      std::vector<NumIdeal> ids;
      for (auto const& text : args.ideals) {
        ids.push_back(ideal_normalize(s, parse_i64_list(text)));
      }
      auto need_ideals = [&](std::size_t n) {
        if (ids.size() != n) {
          bad_input(op + " needs " + std::to_string(n) + " --ideal option(s)");
        }
      };
      auto need = [&](std::optional<std::int64_t> const& v, char const* name) {
        if (!v) {
          bad_input(op + " needs --" + std::string(name));
        }
        return *v;
      };
      Json result;
      if (op == "normalize") {
        need_ideals(1);
        result = ids[0].generators();
      } else if (op == "sum") {
        need_ideals(2);
        result = ideal_sum(ids[0], ids[1]).generators();
      } else if (op == "contains") {
        need_ideals(2);
        result = ideal_contains(ids[0], ids[1]);
      } else if (op == "arch-exp") {
        result = archimedean_exponent(s, need(args.x, "x"), need(args.y, "y"));
      } else if (op == "strong-exp") {
        result = strong_exponent(s, need(args.a, "a"));
      } else if (op == "power-exp") {
        need_ideals(1);
        result = ideal_power_exponent_num(s, ids[0], need(args.a, "a"));
      } else {
        bad_input("unknown numsgp-ideal operation '" + op + "'");
      }
      if (ctx.json) {
        ctx.emit("numsgp-ideal", Json{{"operation", op}, {"semigroup", s.min_generators()},
                                      {"result", result}});
      } else if (result.is_array()) {
        std::string o;
        for (std::size_t i = 0; i < result.size(); ++i) {
          o += (i ? " " : "") + result[i].dump();
        }
        ctx.out << "generators: " << o << '\n';
      } else {
        ctx.out << (result.is_boolean() ? yes_no(result.get<bool>()) : result.dump()) << '\n';
      }
      return exit_ok;
    }

    // -- verify, catalog -----------------------------------------------------

    int cmd_verify(Context const& ctx, std::string const& suite, std::uint64_t seed, bool timing) {
      std::vector<report::SuiteReport> reports;
      if (suite.empty()) {
        reports = report::run_all(seed, ctx.limits);
      } else {
        auto r = report::run_suite(suite, seed, ctx.limits);
        if (!r) {
          std::string known;
          for (auto n : report::suite_names()) {
            known += " " + std::string(n);
          }
          bad_input("unknown suite '" + suite + "'; known suites:" + known);
        }
        reports.push_back(std::move(*r));
      }
      bool ok = true;
      for (auto const& r : reports) {
        ok = ok && r.passed();
      }
      std::string const note(report::scale_limitation_note());
      if (ctx.json) {
        Json suites = Json::array();
        for (auto const& r : reports) {
          suites.push_back(report::to_json(r, timing));
        }
        ctx.emit("verify", Json{{"seed", seed}, {"status", ok ? "pass" : "fail"},
                                {"suites", suites}, {"notes", Json::array({note})}});
      } else {
        for (auto const& r : reports) {
          ctx.out << report::to_text(r);
        }
        ctx.out << "overall: " << (ok ? "PASS" : "FAIL") << '\n' << "note: " << note << '\n';
      }
      return ok ? exit_ok : exit_check_failure;
    }

    int cmd_catalog(Context const& ctx, std::vector<std::string> const& tokens) {
      if (tokens.empty()) {
        Json families = Json::array();
        for (auto f : catalog::all_families()) {
          families.push_back(std::string(catalog::family_name(f)));
        }
        Json defaults = Json::array();
        for (auto const& spec : catalog::default_catalog()) {
          defaults.push_back(spec.id());
        }
        if (ctx.json) {
          ctx.emit("catalog", Json{{"families", families}, {"default_catalog", defaults}});
        } else {
          ctx.out << "families:";
          for (auto const& f : families) {
            ctx.out << ' ' << f.get<std::string>();
          }
          ctx.out << "\ndefault catalog:";
          for (auto const& d : defaults) {
            ctx.out << ' ' << d.get<std::string>();
          }
          ctx.out << '\n';
        }
        return exit_ok;
      }
      auto const m = catalog::make(catalog::parse_spec(tokens));
      if (ctx.json) {
        ctx.out << io::monoid_to_json(m).dump(2) << '\n';
      } else {
        ctx.out << io::format_monoid(m);
      }
      return exit_ok;
    }
  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Ideal and power monoids of finite and numerical monoids", "monoidforge"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "Print a JSON report");

    auto sub = [&](char const* name, char const* desc) {
      auto* s = app.add_subcommand(name, desc);
      s->fallthrough();
      return s;
    };

    std::string                 file, file2, set, suite, op;
    std::optional<std::int64_t> bound;
    bool                        all = false, timing = false;
    std::uint64_t               seed = 1;
    std::vector<std::string>    words;
    IdealArgs                   ideal_args;

    auto* inspect = sub("inspect", "Structural properties and Archimedean profile");
    inspect->add_option("file", file, "Monoid file")->required();
    inspect->add_option("--bound", bound, "Truncation bound for numerical inputs");
    auto* ideals = sub("ideals", "Ideal monoid with principal ideals marked");
    ideals->add_option("file", file)->required();
    ideals->add_option("--bound", bound);
    auto* power = sub("power", "Power monoid");
    power->add_option("file", file)->required();
    power->add_option("--bound", bound);
    auto* quotient = sub("quotient", "Reduced quotient and its principal-ideal image");
    quotient->add_option("file", file)->required();
    quotient->add_option("--bound", bound);
    auto* dcclose = sub("dcclose", "Least divisor-closed subsemigroup containing a set");
    dcclose->add_option("file", file)->required();
    dcclose->add_option("--set", set, "Elements by name or index, comma separated")->required();
    dcclose->add_option("--bound", bound);
    auto* iso = sub("iso", "Isomorphism test");
    iso->add_option("file1", file)->required();
    iso->add_option("file2", file2)->required();
    iso->add_flag("--all", all, "List every isomorphism");
    iso->add_option("--bound", bound);
    auto* numsgp = sub("numsgp", "Numerical semigroup data");
    numsgp->add_option("generators", words)->required();
    auto* numideal = sub("numsgp-ideal", "Ideal arithmetic in a numerical semigroup");
    numideal->add_option("operation", op, "normalize, sum, contains, arch-exp, strong-exp, power-exp")
        ->required();
    numideal->add_option("--sg", ideal_args.sg, "Generators, comma separated")->required();
    numideal->add_option("--ideal", ideal_args.ideals, "Ideal generators, comma separated");
    numideal->add_option("--x", ideal_args.x);
    numideal->add_option("--y", ideal_args.y);
    numideal->add_option("--a", ideal_args.a);
    auto* puiseux = sub("puiseux", "Normalize a finitely generated Puiseux monoid");
    puiseux->add_option("generators", words)->required();
    auto* verify = sub("verify", "Run verification suites over the default catalog");
    verify->add_option("suite", suite);
    verify->add_option("--seed", seed);
    verify->add_flag("--timing", timing, "Include elapsed times in JSON");
    auto* catalog_cmd = sub("catalog", "Emit a catalog monoid, or list the families");
    catalog_cmd->add_option("spec", words);
    catalog_cmd->allow_extras();

    std::vector<char const*> argv{"monoidforge"};
    for (auto const& a : args) {
      argv.push_back(a.c_str());
    }
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return code == 0 ? exit_ok : exit_bad_input;
    }

    Context ctx{out, json, Limits::from_environment()};
    try {
      if (*inspect) {
        return cmd_inspect(ctx, file, bound);
      }
      if (*ideals) {
        return cmd_ideals(ctx, load_monoid(file, bound));
      }
      if (*power) {
        return cmd_power(ctx, load_monoid(file, bound));
      }
      if (*quotient) {
        return cmd_quotient(ctx, load_monoid(file, bound));
      }
      if (*dcclose) {
        return cmd_dcclose(ctx, load_monoid(file, bound), set);
      }
      if (*iso) {
        return cmd_iso(ctx, load_monoid(file, bound), load_monoid(file2, bound), all);
      }
      if (*numsgp) {
        std::vector<std::int64_t> gens;
        for (auto const& w : words) {
          for (auto g : parse_i64_list(w)) {
            gens.push_back(g);
          }
        }
        print_numsgp(ctx, "numsgp", NumericalSemigroup::from_generators(gens));
        return exit_ok;
      }
      if (*numideal) {
        return cmd_numsgp_ideal(ctx, op, ideal_args);
      }
      if (*puiseux) {
        std::vector<Rational> gens;
        for (auto const& w : words) {
          gens.push_back(parse_rational(w));
        }
        print_numsgp(ctx, "puiseux", puiseux_normalize(gens));
        return exit_ok;
      }
      if (*verify) {
        return cmd_verify(ctx, suite, seed, timing);
      }
      if (*catalog_cmd) {
        auto tokens = words;
        for (auto const& extra : catalog_cmd->remaining()) {
          tokens.push_back(extra);
        }
        return cmd_catalog(ctx, tokens);
      }
    } catch (NonAssociativeError const& e) {
      err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
      return exit_bad_input;
    } catch (Error const& e) {
      err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
      return exit_bad_input;
    }
    return exit_bad_input;
  }

}  // namespace monoidforge::cli
