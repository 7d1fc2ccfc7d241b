#pragma once

// Command-line front end: JSON input/output, DOT export, subcommands.

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "nashlab/iterate.hpp"
#include "nashlab/semigroup.hpp"

namespace nashlab::cli {

inline constexpr const char* kSchema = "nashlab/1";

/// Bad user input: malformed JSON, unknown preset, invalid flags.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Parses {"rank": d, "generators": [[...], ...]}. Entries may be JSON
/// integers or decimal strings (for values beyond 64 bits). The result is
/// taken as given, not canonicalized.
AffineSemigroup parse_semigroup(const std::string& text);

/// Resolves "example:<preset>", "-" (read `in`), inline JSON, or a file path.
AffineSemigroup load_input(const std::string& spec, std::istream& in);

nlohmann::json to_json(const Integer& x);
nlohmann::json to_json(const LatticeVector& v);
nlohmann::json to_json(const AffineSemigroup& s);

/// Report for one iteration, without the timing field.
nlohmann::json run_report(const IterationTree& tree, bool full_tree);

/// Graphviz rendering: Smooth green, Cycle red, DepthLimit gray; edges are
/// labelled with base exponents, cycle links are dashed.
std::string to_dot(const IterationTree& tree);

/// Exit codes: 0 Resolved, 2 CounterexampleCycle, 3 Inconclusive, 1 error.
int exit_code(Summary s);

/// Entry point; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace nashlab::cli
