#pragma once

#include <string>
#include <string_view>

#include "extremal/family.hpp"

namespace extremal {

/// Canonical text form, 1-based, edges in colex order:
///   {"n": 6, "k": 2, "edges": [[1,2],[1,3]]}
/// No trailing newline.
std::string family_to_json(const Family& f);

/// Parses the canonical form. Key order and whitespace are free. Rejects
/// duplicate edges, out-of-range vertices, repeated vertices inside an edge
/// and edges whose size differs from k. Errors are ParseError naming the
/// line (syntax errors) or the field path (e.g. "edges[3][1]").
Family family_from_json(std::string_view text);

Family read_family_file(const std::string& path);
/// Writes family_to_json plus a trailing newline.
void write_family_file(const std::string& path, const Family& f);

}  // namespace extremal
