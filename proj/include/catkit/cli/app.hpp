#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "catkit/cli/json_io.hpp"

namespace catkit::cli {

struct RunConfig {
  std::uint64_t seed = 0;
  std::optional<double> tol;  // commands fall back to their own default
  int workers = 1;
  std::string format = "json";  // json | csv | svg
  std::string out;              // empty: standard output

  double tol_or(double fallback) const { return tol.value_or(fallback); }
};

/// Header, one entry per case, and a summary. `ok` drives the exit status.
struct Report {
  std::string command;
  std::vector<Json> cases;
  Json summary = Json::object();
  bool ok = true;
  std::string svg;  // filled by commands that can plot

  /// Serialized form for the selected format.
  std::string render(const RunConfig& cfg) const;
};

/// Independent per-case seed derived from the run seed (splitmix64).
std::uint64_t case_seed(std::uint64_t seed, std::uint64_t index);

/// Evaluates fn(i) for i < n on `workers` threads; results come back in index
/// order. On an exception, results before the first failing index are kept
/// and the message is returned in `error`.
struct CaseBatch {
  std::vector<Json> results;
  std::optional<std::string> error;
};
CaseBatch run_cases(std::size_t n, int workers, const std::function<Json(std::size_t)>& fn);

/// Entry point behind the `catkit` binary. `args` excludes the program name.
/// Exit status: 0 when every asserted property held, 1 when a check failed,
/// 2 on usage or input errors.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace catkit::cli
