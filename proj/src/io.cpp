#include "monoidforge/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "monoidforge/error.hpp"

namespace monoidforge::io {

  namespace {
    [[noreturn]] void fail(std::string const& msg) {
      throw Error(ErrorCode::parse_error, msg);
    }

    std::vector<std::string> split_words(std::string_view line) {
      std::vector<std::string> out;
      std::istringstream       in{std::string(line)};
      std::string              w;
      while (in >> w) {
        out.push_back(w);
      }
      return out;
    }

    template <typename T>
    T parse_int(std::string const& word, char const* what) {
      T    v{};
      auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), v);
      if (ec != std::errc() || ptr != word.data() + word.size()) {
        fail(std::string("expected ") + what + ", got '" + word + "'");
      }
      return v;
    }

    // Non-blank, non-comment lines.
    std::vector<std::string> content_lines(std::string_view text) {
      std::vector<std::string> out;
      std::istringstream       in{std::string(text)};
      std::string              line;
      while (std::getline(in, line)) {
        auto const first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
          continue;
        }
        out.push_back(line);
      }
      return out;
    }

    CayleyMonoid parse_monoid_lines(std::vector<std::string> const& lines) {
      auto const header = split_words(lines.front());
      if (header.size() != 3) {
        fail("expected 'monoid <order> <identity>'");
      }
      auto const order    = parse_int<std::size_t>(header[1], "an order");
      auto const identity = parse_int<Element>(header[2], "an identity index");
      if (order == 0) {
        fail("order must be positive");
      }
      if (lines.size() < order + 1) {
        fail("expected " + std::to_string(order) + " table rows, got "
             + std::to_string(lines.size() - 1));
      }
      std::vector<std::vector<Element>> table;
      for (std::size_t i = 0; i < order; ++i) {
        auto const words = split_words(lines[i + 1]);
        if (words.size() != order) {
          fail("row " + std::to_string(i) + " has " + std::to_string(words.size())
               + " entries, expected " + std::to_string(order));
        }
        auto& row = table.emplace_back();
        for (auto const& w : words) {
          row.push_back(parse_int<Element>(w, "an element index"));
        }
      }
      std::vector<std::string> names;
      if (lines.size() > order + 1) {
        auto words = split_words(lines[order + 1]);
        if (lines.size() > order + 2 || words.empty() || words.front() != "names:") {
          fail("unexpected content after the table: '" + lines[order + 1] + "'");
        }
        names.assign(words.begin() + 1, words.end());
        if (names.size() != order) {
          fail("expected " + std::to_string(order) + " names, got "
               + std::to_string(names.size()));
        }
      }
      return CayleyMonoid::build(table, identity, std::move(names));
    }
  }  // namespace

  Input parse_input(std::string_view text) {
    auto const first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') {
      Json j;
      try {
        j = Json::parse(text);
      } catch (Json::exception const& e) {
        fail(std::string("invalid JSON: ") + e.what());
      }
      return monoid_from_json(j);
    }
    auto const lines = content_lines(text);
    if (lines.empty()) {
      fail("empty input");
    }
    auto const head = split_words(lines.front());
    if (head.front() == "monoid") {
      return parse_monoid_lines(lines);
    }
    if (lines.size() != 1) {
      fail("expected a single line after '" + head.front() + "'");
    }
    if (head.front() == "numerical") {
      NumericalInput in;
      for (std::size_t i = 1; i < head.size(); ++i) {
        in.generators.push_back(parse_int<std::int64_t>(head[i], "an integer generator"));
      }
      return in;
    }
    if (head.front() == "puiseux") {
      PuiseuxInput in;
      for (std::size_t i = 1; i < head.size(); ++i) {
        in.generators.push_back(parse_rational(head[i]));
      }
      return in;
    }
    fail("unknown input kind '" + head.front() + "'");
  }

  CayleyMonoid parse_monoid(std::string_view text) {
    auto in = parse_input(text);
    if (auto* m = std::get_if<CayleyMonoid>(&in)) {
      return std::move(*m);
    }
    fail("expected a finite monoid table");
  }

  std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      fail("cannot read '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }

  std::string format_monoid(CayleyMonoid const& m) {
    std::ostringstream out;
    out << "monoid " << m.order() << ' ' << m.identity() << '\n';
    for (Element a = 0; a < m.order(); ++a) {
      auto const row = m.row(a);
      for (std::size_t b = 0; b < row.size(); ++b) {
        out << (b ? " " : "") << row[b];
      }
      out << '\n';
    }
    if (!m.names().empty()) {
      out << "names:";
      for (auto const& n : m.names()) {
        out << ' ' << n;
      }
      out << '\n';
    }
    return out.str();
  }

  Json monoid_to_json(CayleyMonoid const& m) {
    Json j;
    j["schema"]   = schema_version;
    j["kind"]     = "monoid";
    j["order"]    = m.order();
    j["identity"] = m.identity();
    j["table"]    = m.table();
    if (!m.names().empty()) {
      j["names"] = m.names();
    }
    return j;
  }

  CayleyMonoid monoid_from_json(Json const& j) {
    try {
      if (!j.is_object() || j.value("kind", "") != "monoid") {
        fail("JSON document is not a monoid");
      }
      if (j.at("schema").get<int>() != schema_version) {
        fail("unsupported schema " + j.at("schema").dump());
      }
      auto table    = j.at("table").get<std::vector<std::vector<Element>>>();
      auto identity = j.at("identity").get<Element>();
      std::vector<std::string> names;
      if (j.contains("names")) {
        names = j.at("names").get<std::vector<std::string>>();
      }
      if (j.at("order").get<std::size_t>() != table.size()) {
        fail("order does not match the table");
      }
      return CayleyMonoid::build(table, identity, std::move(names));
    } catch (Json::exception const& e) {
      fail(std::string("malformed monoid JSON: ") + e.what());
    }
  }

}  // namespace monoidforge::io
