#pragma once

#include <string>
#include <vector>

#include "brauer/cartan.hpp"
#include "brauer/tree.hpp"
#include "json.hpp"

namespace brauer::io {

// Tree files: {"vertices":[{"id":"v0","multiplicity":1,"cyclic":[1,2]},...]}.
// Printing is canonical: vertices ordered by their sorted incident edges
// (ties by id), each cyclic list rotated to start at its smallest edge.
[[nodiscard]] nlohmann::json tree_to_json(const BrauerTree& t);
[[nodiscard]] std::string print_tree(const BrauerTree& t);

// Throws BrauerError on malformed JSON or a wrong schema; tree-level
// violations are returned in the result.
[[nodiscard]] std::vector<Vertex> vertices_from_json(const nlohmann::json& j);
[[nodiscard]] ValidationResult parse_tree(const std::string& text);
[[nodiscard]] BrauerTree read_tree_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
[[nodiscard]] std::string read_text_file(const std::string& path);

// Matrix files: plain JSON arrays of integer arrays.
[[nodiscard]] nlohmann::json matrix_to_json(const IntMatrix& m);
[[nodiscard]] IntMatrix matrix_from_json(const nlohmann::json& j);
[[nodiscard]] IntMatrix read_matrix_file(const std::string& path);

// Graphviz rendering; the cyclic order at each vertex is kept as a comment.
[[nodiscard]] std::string to_dot(const BrauerTree& t);

}  // namespace brauer::io
