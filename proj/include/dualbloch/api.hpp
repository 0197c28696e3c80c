// Copyright 2026 The DualBloch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "dualbloch/gates.hpp"
#include "json.hpp"

namespace dualbloch {

struct Session {
  std::string id;
  TwoQubitState current;
  /// Applied steps with the state each one started from.
  std::vector<std::pair<RotationStep, TwoQubitState>> history;
};

/// In-memory sessions. Calls on one session are serialized; different
/// sessions proceed in parallel. With a journal path every mutation is
/// appended as one JSON line and replayed on construction.
class SessionStore {
 public:
  explicit SessionStore(std::optional<std::string> journal_path = std::nullopt);
  ~SessionStore();

  SessionStore(const SessionStore&) = delete;
  SessionStore& operator=(const SessionStore&) = delete;

  Session create(const TwoQubitState& initial);
  std::optional<Session> get(const std::string& id) const;
  /// nullopt when the id is unknown.
  std::optional<Session> apply(const std::string& id, const RotationStep& step);
  /// Throws InvalidArgument when there is nothing to undo.
  std::optional<Session> undo(const std::string& id);

  std::size_t size() const;

 private:
  struct Slot {
    mutable std::mutex mutex;
    Session session;
  };
  std::shared_ptr<Slot> slot(const std::string& id) const;
  std::string next_id();
  void journal(const nlohmann::ordered_json& record);
  void replay(const std::string& path);

  mutable std::shared_mutex map_mutex_;
  std::map<std::string, std::shared_ptr<Slot>> sessions_;
  std::uint64_t nonce_;
  std::uint64_t counter_ = 0;
  std::mutex journal_mutex_;
  std::optional<std::string> journal_path_;
  bool replaying_ = false;
};

struct HttpResponse {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
};

/// Transport-independent request handler for the session API.
///
///   POST /sessions                {state?}              -> session payload
///   GET  /sessions/{id}                                 -> session payload
///   POST /sessions/{id}/apply     {generator, angle, radians?}
///   POST /sessions/{id}/undo
///   GET  /stabilizers/graph
///   GET  /gates/cnot/trace?input=<state>
///   GET  /planes
///
/// Angles are in units of pi unless "radians" is true. Errors are
/// {"error": message} with 400 (malformed body), 404 (unknown path or
/// session), 405, 409 (nothing to undo) or 422 (invalid state/generator).
class Api {
 public:
  explicit Api(std::optional<std::string> journal_path = std::nullopt);

  HttpResponse handle(std::string_view method, std::string_view path, std::string_view body,
                      const std::map<std::string, std::string>& query = {});

  SessionStore& store() { return store_; }

 private:
  SessionStore store_;
  std::once_flag graph_once_;
  std::string graph_body_;
};

nlohmann::ordered_json session_payload(const Session& session);
nlohmann::ordered_json measures_json(const TwoQubitState& psi);
nlohmann::ordered_json trace_json(const GateTrace& trace);
nlohmann::ordered_json planes_json(const std::optional<TwoQubitState>& psi = std::nullopt);

/// Blocking HTTP server around an Api.
class HttpServer {
 public:
  explicit HttpServer(Api& api);
  ~HttpServer();

  /// Binds to `port` (0 picks a free one) and returns the bound port, or -1.
  int bind(const std::string& host, int port);
  /// Serves until stop(); call after bind().
  bool listen();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace dualbloch
