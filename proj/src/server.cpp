#include "brauer/server.hpp"

#include <mutex>

#include "brauer/cartan.hpp"
#include "brauer/io.hpp"
#include "httplib.h"

namespace brauer {

using nlohmann::json;

Session::Session(BrauerTree initial, std::string id) : id_(std::move(id)), current_(std::move(initial)) {}

const BrauerTree& Session::mutate(EdgeId edge) {
  if (!current_.has_edge(edge)) {
    throw SessionError(400, "unknown edge " + std::to_string(edge));
  }
  auto next = brauer::mutate(current_, edge);
  history_.push_back({edge, std::move(current_)});
  current_ = std::move(next);
  ++revision_;
  return current_;
}

const BrauerTree& Session::undo() {
  if (history_.empty()) throw SessionError(409, "nothing to undo");
  current_ = std::move(history_.back().previous);
  history_.pop_back();
  ++revision_;
  return current_;
}

BrauerTree Session::replay() const {
  if (history_.empty()) return current_;
  BrauerTree t = history_.front().previous;
  for (const auto& entry : history_) t = brauer::mutate(t, entry.edge);
  return t;
}

namespace {

json parse_body(const std::string& body) {
  try {
    auto j = json::parse(body.empty() ? "{}" : body);
    if (!j.is_object()) throw SessionError(400, "request body must be a JSON object");
    return j;
  } catch (const json::exception& e) {
    throw SessionError(400, std::string("malformed JSON: ") + e.what());
  }
}

EdgeId edge_field(const json& j) {
  if (!j.contains("edge") || !j.at("edge").is_number_integer()) {
    throw SessionError(400, "body needs an integer \"edge\"");
  }
  return j.at("edge").get<EdgeId>();
}

VertexIndex vertex_field(const json& j, const BrauerTree& t) {
  if (!j.contains("vertex")) throw SessionError(400, "body needs a \"vertex\"");
  const auto& v = j.at("vertex");
  if (v.is_string()) {
    if (auto found = t.find_vertex(v.get<std::string>())) return *found;
    throw SessionError(400, "unknown vertex " + v.get<std::string>());
  }
  throw SessionError(400, "\"vertex\" must be a vertex id string");
}

}  // namespace

json Api::tree_payload() const {
  const auto& t = session_.current();
  return {{"revision", session_.revision()},
          {"session", session_.id()},
          {"tree", io::tree_to_json(t)},
          {"is_star", is_star(t)},
          {"cartan", io::matrix_to_json(cartan_formula(t))}};
}

Session Api::snapshot() const {
  std::shared_lock lock(mutex_);
  return session_;
}

ApiResponse Api::handle(const std::string& method, const std::string& path, const std::string& body) {
  try {
    if (method == "GET") {
      std::shared_lock lock(mutex_);
      const auto& t = session_.current();
      if (path == "/api/tree") return {200, tree_payload()};
      if (path == "/api/cartan") {
        return {200, {{"revision", session_.revision()}, {"cartan", io::matrix_to_json(cartan_formula(t))}}};
      }
      if (path == "/api/ext") {
        return {200, {{"revision", session_.revision()}, {"ext", io::matrix_to_json(ext_formula(t))}}};
      }
      if (path == "/api/history") {
        json entries = json::array();
        for (const auto& h : session_.history()) {
          entries.push_back({{"edge", h.edge}, {"previous", io::tree_to_json(h.previous)}});
        }
        return {200, {{"revision", session_.revision()}, {"entries", entries}}};
      }
    } else if (method == "POST") {
      if (path == "/api/mutate") {
        const auto edge = edge_field(parse_body(body));
        std::unique_lock lock(mutex_);
        session_.mutate(edge);
        auto payload = tree_payload();
        payload["edge"] = edge;
        return {200, payload};
      }
      if (path == "/api/undo") {
        std::unique_lock lock(mutex_);
        session_.undo();
        return {200, tree_payload()};
      }
      if (path == "/api/to-star") {
        const auto request = parse_body(body);
        std::shared_lock lock(mutex_);
        const auto& t = session_.current();
        const auto v = vertex_field(request, t);
        const auto seq = to_star_sequence(t, v);
        return {200,
                {{"revision", session_.revision()},
                 {"vertex", t.vertex(v).id},
                 {"sequence", seq},
                 {"already_star", seq.empty()}}};
      }
    }
    std::shared_lock lock(mutex_);
    return {404, {{"revision", session_.revision()}, {"error", "no route " + method + " " + path}}};
  } catch (const SessionError& e) {
    std::shared_lock lock(mutex_);
    return {e.status(), {{"revision", session_.revision()}, {"error", e.what()}}};
  }
}

namespace {

constexpr const char* kPlaceholderPage = R"(<!doctype html>
<html><head><meta charset="utf-8"><title>Brauer tree explorer</title></head>
<body>
<p>No UI bundle is being served. The JSON API is available under /api:</p>
<ul>
<li>GET /api/tree, /api/cartan, /api/ext, /api/history</li>
<li>POST /api/mutate {"edge": i}, /api/undo, /api/to-star {"vertex": "v0"}</li>
</ul>
</body></html>
)";

}  // namespace

void install_routes(httplib::Server& server, Api& api, const std::optional<std::string>& ui_dir) {
  auto forward = [&api](const httplib::Request& req, httplib::Response& res) {
    const auto out = api.handle(req.method, req.path, req.body);
    res.status = out.status;
    res.set_content(out.body.dump(), "application/json");
  };
  server.Get(R"(/api/.*)", forward);
  server.Post(R"(/api/.*)", forward);

  if (ui_dir && server.set_mount_point("/", *ui_dir)) return;
  server.Get("/", [](const httplib::Request&, httplib::Response& res) {
    res.set_content(kPlaceholderPage, "text/html");
  });
}

}  // namespace brauer
