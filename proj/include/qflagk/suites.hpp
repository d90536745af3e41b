#pragma once

// Verification suites behind `qflagk verify`. Each suite is a batch of exact
// checks; a failed check contributes exactly one violation with a witness.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qflagk/gkm.hpp"
#include "qflagk/serialize.hpp"

namespace qflagk::suites {

struct Config {
  std::size_t n = 2;
  std::uint64_t seed = 1;
  std::size_t trials = 100;
  std::size_t jobs = 1;
  /// Perturb this many components of every tuple before membership checks.
  std::size_t mutate = 0;
  /// Record wall time; off by default so reports are byte-identical.
  bool timing = false;
};

struct Finding {
  std::string section;
  gkm::Violation witness;
};

struct Section {
  std::string name;
  std::size_t checks = 0;
  std::size_t failed = 0;
};

struct SuiteReport {
  std::string suite;
  Config config;
  std::size_t checks = 0;
  std::size_t passed = 0;
  std::vector<Section> sections;
  std::vector<Finding> violations;
  std::optional<double> wall_seconds;
  bool ok() const { return violations.empty(); }
};

const std::vector<std::string>& suite_names();
bool supports_mutation(std::string_view suite);

/// Throws UnknownSuite, UsageError (mutation on a suite without tuples),
/// OutOfRange (bad config) and InexactDivision.
SuiteReport run_suite(std::string_view suite, const Config& config);

io::Json to_json(const SuiteReport& r);
std::string render_text(const SuiteReport& r);

}  // namespace qflagk::suites
