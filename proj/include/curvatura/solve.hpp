#pragma once

#include <string>

#include "curvatura/jsonfmt.hpp"

namespace curvatura {

// Execute one JSON task request:
//   {"space": {"kind": "...", "radius": R}, "task": "...", "params": {...}}
// Tasks: triangle-sss, triangle-sas, lambert-quad, saccheri, profile,
// parallelism-angle, canonical-unit, chain.
//
// Returns {"ok": true, "result": {...}} or {"ok": false, "error": {"code",
// "detail"}} with module errors mapped to their stable codes.  Malformed
// requests throw SchemaError instead (the CLI turns that into exit code 2).
// All lengths are in model units, all angles in radians; numbers are rounded
// to 15 significant digits before serialization.
ojson solve_request(const ojson& request);

// Convenience: parse a request string, solve, serialize.
std::string solve_request_text(const std::string& request_text);

}  // namespace curvatura
