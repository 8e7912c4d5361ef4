#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "brauer/tree.hpp"
#include "json.hpp"

namespace httplib {
class Server;
}

namespace brauer {

struct HistoryEntry {
  EdgeId edge;
  BrauerTree previous;
};

class SessionError : public BrauerError {
 public:
  SessionError(int status, const std::string& what) : BrauerError(what), status_(status) {}
  [[nodiscard]] int status() const { return status_; }

 private:
  int status_;
};

/// One explorer session: the current tree plus the stack of mutations that
/// led to it. Every state change bumps the revision.
class Session {
 public:
  explicit Session(BrauerTree initial, std::string id = "default");

  [[nodiscard]] const std::string& id() const { return id_; }
  [[nodiscard]] const BrauerTree& current() const { return current_; }
  [[nodiscard]] const std::vector<HistoryEntry>& history() const { return history_; }
  [[nodiscard]] std::uint64_t revision() const { return revision_; }

  // Throws SessionError(400) for an unknown edge.
  const BrauerTree& mutate(EdgeId edge);
  // Throws SessionError(409) on an empty history.
  const BrauerTree& undo();

  // Oldest state with the recorded mutations applied again.
  [[nodiscard]] BrauerTree replay() const;

 private:
  std::string id_;
  BrauerTree current_;
  std::vector<HistoryEntry> history_;
  std::uint64_t revision_ = 0;
};

struct ApiResponse {
  int status = 200;
  nlohmann::json body;
};

/// The JSON API without any transport, so it can be driven directly.
/// Reads share the lock; mutate and undo take it exclusively.
class Api {
 public:
  explicit Api(BrauerTree initial) : session_(std::move(initial)) {}

  [[nodiscard]] ApiResponse handle(const std::string& method, const std::string& path,
                                   const std::string& body);

  [[nodiscard]] Session snapshot() const;

 private:
  [[nodiscard]] nlohmann::json tree_payload() const;
  mutable std::shared_mutex mutex_;
  Session session_;
};

// Routes /api/* to `api` and serves `ui_dir` (or a placeholder page) at /.
void install_routes(httplib::Server& server, Api& api, const std::optional<std::string>& ui_dir);

}  // namespace brauer
