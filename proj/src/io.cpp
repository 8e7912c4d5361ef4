#include "brauer/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace brauer::io {

using nlohmann::json;

namespace {

std::vector<VertexIndex> canonical_vertex_order(const BrauerTree& t) {
  std::vector<VertexIndex> order(t.vertex_count());
  for (VertexIndex v = 0; v < order.size(); ++v) order[v] = v;
  auto key = [&](VertexIndex v) {
    auto edges = t.vertex(v).cyclic;
    std::sort(edges.begin(), edges.end());
    return std::make_pair(edges, t.vertex(v).id);
  };
  std::sort(order.begin(), order.end(), [&](VertexIndex a, VertexIndex b) { return key(a) < key(b); });
  return order;
}

}  // namespace

json tree_to_json(const BrauerTree& t) {
  json vertices = json::array();
  for (VertexIndex v : canonical_vertex_order(t)) {
    auto cyclic = t.vertex(v).cyclic;
    std::rotate(cyclic.begin(), std::min_element(cyclic.begin(), cyclic.end()), cyclic.end());
    vertices.push_back({{"id", t.vertex(v).id}, {"multiplicity", t.multiplicity(v)}, {"cyclic", cyclic}});
  }
  return {{"vertices", vertices}};
}

std::string print_tree(const BrauerTree& t) { return tree_to_json(t).dump(2) + "\n"; }

std::vector<Vertex> vertices_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.at("vertices").is_array()) {
    throw BrauerError("tree JSON must be an object with a \"vertices\" array");
  }
  std::vector<Vertex> out;
  for (const auto& v : j.at("vertices")) {
    if (!v.is_object() || !v.contains("cyclic") || !v.at("cyclic").is_array()) {
      throw BrauerError("each vertex needs a \"cyclic\" array");
    }
    Vertex x;
    x.id = v.contains("id") ? v.at("id").get<std::string>() : "v" + std::to_string(out.size());
    x.multiplicity = v.value("multiplicity", 1);
    for (const auto& e : v.at("cyclic")) {
      if (!e.is_number_integer()) throw BrauerError("edge labels must be integers");
      x.cyclic.push_back(e.get<EdgeId>());
    }
    out.push_back(std::move(x));
  }
  return out;
}

ValidationResult parse_tree(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw BrauerError(std::string("malformed JSON: ") + e.what());
  }
  try {
    return BrauerTree::validate(vertices_from_json(j));
  } catch (const json::exception& e) {
    throw BrauerError(std::string("bad tree schema: ") + e.what());
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BrauerError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw BrauerError("cannot write " + path);
  out << text;
}

BrauerTree read_tree_file(const std::string& path) {
  auto result = parse_tree(read_text_file(path));
  if (!result.ok()) {
    std::string msg = path + ":";
    for (const auto& issue : result.issues) msg += std::string(" [") + to_string(issue.kind) + "] " + issue.message + ";";
    throw BrauerError(msg);
  }
  return std::move(*result.tree);
}

json matrix_to_json(const IntMatrix& m) { return m.rows(); }

IntMatrix matrix_from_json(const json& j) {
  try {
    return IntMatrix::from_rows(j.get<std::vector<std::vector<int>>>());
  } catch (const json::exception& e) {
    throw BrauerError(std::string("matrix must be an array of integer arrays: ") + e.what());
  }
}

IntMatrix read_matrix_file(const std::string& path) {
  try {
    return matrix_from_json(json::parse(read_text_file(path)));
  } catch (const json::exception& e) {
    throw BrauerError(path + ": malformed JSON: " + e.what());
  }
}

std::string to_dot(const BrauerTree& t) {
  std::ostringstream os;
  os << "graph brauer_tree {\n";
  for (VertexIndex v : canonical_vertex_order(t)) {
    const auto& x = t.vertex(v);
    os << "  // " << x.id << " cyclic:";
    for (EdgeId e : x.cyclic) os << ' ' << e;
    os << '\n';
    os << "  \"" << x.id << "\" [";
    if (x.multiplicity > 1) {
      os << "shape=doublecircle, label=\"" << x.id << "\\nm=" << x.multiplicity << "\"";
    } else {
      os << "shape=circle, label=\"" << x.id << "\"";
    }
    os << "];\n";
  }
  for (EdgeId e = 1; e <= t.edge_count(); ++e) {
    const auto ends = t.ends(e);
    os << "  \"" << t.vertex(ends[0]).id << "\" -- \"" << t.vertex(ends[1]).id << "\" [label=\"" << e << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace brauer::io
