#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "monoidforge/io.hpp"
#include "monoidforge/limits.hpp"

namespace monoidforge::report {

  using Json = io::Json;

  // pass/fail are asserted outcomes; vacuous means the hypotheses of the
  // check do not hold for the instance; reported outcomes are recorded but
  // not asserted.
  enum class Status { pass, fail, vacuous, reported };

  std::string_view to_string(Status s);

  struct Check {
    std::string         id;
    Status              status = Status::pass;
    std::optional<Json> witness;
  };

  struct InstanceResult {
    std::string        id;
    std::vector<Check> checks;
  };

  struct SuiteReport {
    std::string                   suite_name;
    std::vector<InstanceResult>   instances;
    std::uint64_t                 seed = 0;
    std::chrono::duration<double> elapsed{0};
    std::vector<std::string>      notes;

    bool        passed() const;
    std::size_t count(Status s) const;
  };

  // The suites of `verify`, in run order.
  std::vector<std::string_view> suite_names();

  // Runs one suite over the default catalog; nullopt for an unknown name.
  std::optional<SuiteReport> run_suite(std::string_view name,
                                       std::uint64_t    seed,
                                       Limits const&    limits = {});

  std::vector<SuiteReport> run_all(std::uint64_t seed, Limits const& limits = {});

  // Printed by every `verify` run.
  std::string_view scale_limitation_note();

  // Elapsed time is left out unless include_timing is set, so that equal
  // runs give byte-identical JSON.
  Json        to_json(SuiteReport const& r, bool include_timing = false);
  std::string to_text(SuiteReport const& r);

}  // namespace monoidforge::report
