// Command dispatch shared by the CLI and the Python module.

#ifndef SUBSTRATA_REPORT_HPP
#define SUBSTRATA_REPORT_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "substrata/rootsys.hpp"

namespace substrata {

inline constexpr int kReportSchemaVersion = 1;

enum class Format { text, json };

struct RunConfig {
  std::string verb;  // chartable, fakedeg, substrata, strata, check, compare-regimes, validate-data
  std::string type;  // "C3", "A4"; optional for validate-data
  std::optional<Flavor> flavor;  // defaults to Sp for C, GL for A
  Regime regime = Regime::p0odd;
  std::string data_dir;  // empty: default_data_directory()
  Format format = Format::text;
};

const std::vector<std::string>& known_verbs();
Format parse_format(const std::string& text);

/// Exit status: 0 success, 1 a checked property or conjecture clause failed,
/// 2 bad input, missing or invalid data, or an engine consistency error.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace substrata

#endif  // SUBSTRATA_REPORT_HPP
