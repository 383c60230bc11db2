#pragma once

#include <string>

#include "kdecomp/contracted.hpp"

namespace kdecomp::cli {

// Input problems (bad table files, bad flag combinations) that map to
// exit code 2.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Parse a ring-table document:
//   { "name": "...", "regular": false,
//     "K":  { "<degree>": "zero" | "symbol" | {"rank": r, "torsion": [d...]} },
//     "NK": { ... } }
// Every field is optional; unspecified degrees stay symbolic.  Errors carry
// line (syntax) or field-path (semantic) diagnostics.
RingTable parse_ring_table(const std::string& text, const std::string& origin);

// "symbolic" and "regular" name the built-in tables; anything else is read
// as a file path.
RingTable load_ring_table(const std::string& name_or_path);

}  // namespace kdecomp::cli
