#ifndef GENTLE_QUIVER_IO_HPP
#define GENTLE_QUIVER_IO_HPP

#include <string>

#include "gentle/quiver.hpp"

namespace gentle {

// Line-oriented quiver DSL (UTF-8, `#` comments):
//   quiver <name>
//   vertex <id> [<id> ...]
//   arrow <label>: <src> -> <tgt>
//   rel <first> <second>       # traverse <first> then <second>; composite in I
//
// Syntax errors throw GentleError(Parse) with line/column; semantic errors
// (unknown vertex, non-composable relation) throw GentleError(Semantic).
QuiverSpec parse_quiver_spec(const std::string& text);
GentleQuiver parse_quiver(const std::string& text);

std::string emit_quiver(const GentleQuiver& q);
std::string emit_quiver(const QuiverSpec& spec);

// JSON with stable key names (vertices, arrows, relations, violations).
std::string quiver_to_json(const GentleQuiver& q);
std::string report_to_json(const ValidationReport& r);

}  // namespace gentle

#endif
