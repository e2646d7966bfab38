#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "basicfn/presets.hpp"
#include "basicfn/report.hpp"

namespace basicfn {

enum ExitCode : int { kExitOk = 0, kExitVerifyFailed = 1, kExitUsage = 2, kExitComputation = 3 };

/// "1,-1,0", "(1,-1,0)" or "[1,-1,0]".
std::vector<std::int64_t> parse_int_list(const std::string& text);

/// Datum (and optionally a representation) from a JSON document:
/// {"rank", "simple_roots", "simple_coroots", "det_grading", "label",
///  "rep": {"highest_weight": [...]} | {"weights": [[...], ...]},
///  "allow_nonunit_det": false}. Without "rep" the highest weight must be
/// supplied separately.
Preset preset_from_json(const Json& j, const std::vector<std::int64_t>* highest_override = nullptr);
Json datum_json(const BasedRootDatum& d);

/// Runs one command; returns the process exit code.
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace basicfn
