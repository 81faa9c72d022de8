#pragma once

#include <iosfwd>
#include <string>

#include "baranyai/core.hpp"

namespace baranyai {

// Text format, one parallel class per line after the header:
//   BARANYAI v1 n=<N> k=<K> classes=<C> provenance=<tag>
//   0 1 2 3;4 5 6 7
// Blocks are ';'-separated, points space-separated ascending, LF endings.
void write_design(std::ostream& os, const Design& d);
std::string design_to_string(const Design& d);

Design read_design(std::istream& is);
Design read_design_file(const std::string& path);
void write_design_file(const std::string& path, const Design& d);

void write_class_line(std::ostream& os, const ParallelClass& c);
void write_class_line_labeled(std::ostream& os, const ParallelClass& c, int t);

// FNV-1a 64-bit content digest, as written to the `.sha` sidecar files.
std::string content_digest(const std::string& bytes);

} // namespace baranyai
