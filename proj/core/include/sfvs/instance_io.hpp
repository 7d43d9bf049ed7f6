#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "sfvs/graph.hpp"

namespace sfvs {

/// Line-oriented instance files; ids are 1-based on disk, 0-based in memory.
///
///   c <comment>
///   p sfvs <n> <m>
///   e <u> <v>
///   t <u>
///   w <u> <num>/<den>     (default 1/1)
///   k <num>/<den>         (optional threshold)
///
/// Throws ParseError with the offending line number.
Instance read_instance(std::istream& in);
Instance parse_instance(std::string_view text);

/// Canonical form: header, sorted edges, sorted terminals, non-unit weights, threshold.
void write_instance(std::ostream& out, const Instance& inst);
std::string format_instance(const Instance& inst);

}  // namespace sfvs
