#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "orbiklt/germ.hpp"
#include "orbiklt/orbibase.hpp"

namespace orbiklt::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParseError = 2,
  kNotNegativeDefinite = 3,
  kNotSpecial = 4,
  kUnsupported = 5,
  kWrongClass = 6,
  kInvalidArgument = 7,
};

enum class Format { Json, Plain };

struct Report {
  std::string command;
  std::string digest;  // fnv1a64 of the input bytes or canonical arguments
  nlohmann::json result = nlohmann::json::object();
  std::vector<std::string> warnings;
};

std::string render(const Report& r, Format f);
std::string fnv1a64(std::string_view bytes);

struct GraphOptions {
  bool require_cyclic = false;  // WrongClass unless ChainTwoBlackEnds
  bool require_order = false;   // Unsupported unless a closed order exists
};

Report run_graph(std::string_view text, const GraphOptions& opts = {});
Report run_germ(std::string_view text);
Report run_enumerate_family(std::size_t branches, std::int64_t contact, std::int64_t max_mult);
Report run_enumerate_all(const EnumerationBounds& bounds);
Report run_cusp(std::int64_t p, std::int64_t q, std::int64_t m);
Report run_cyclic_nq(std::int64_t n, std::int64_t q);
Report run_cyclic_chain(const std::vector<std::int64_t>& chain);
Report run_curve(std::int64_t genus, const std::vector<std::int64_t>& mults);
/// Inputs are file contents; with a kappa the report adds the specialness
/// verdict relative to these fibrations.
Report run_base(const std::vector<std::string>& texts, std::optional<Kappa> kappa);

struct VerdictArgs {
  std::string kappa;
  std::string outcome;  // nef | mori | delpezzo
  bool special = true;
  std::optional<OrbifoldCurve> mori_base;
  std::optional<std::string> fibration_text;
  std::optional<OrbifoldCurve> fiber;
};

Report run_verdict(const VerdictArgs& args);

/// Full command-line entry point. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace orbiklt::cli
