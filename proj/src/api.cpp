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

#include "dualbloch/api.hpp"

#include <fmt/format.h>

#include <chrono>
#include <cmath>
#include <fstream>
#include <random>

#include "dualbloch/scene_io.hpp"
#include "dualbloch/stabilizers.hpp"
#include "dualbloch/text_format.hpp"
#include "httplib.h"

namespace dualbloch {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::int64_t now_ms() {
  using namespace std::chrono;
  return duration_cast<milliseconds>(system_clock::now().time_since_epoch()).count();
}

/// Carries an HTTP status out of request handling.
struct HttpError {
  int status;
  std::string message;
};

HttpResponse json_response(int status, const ordered_json& body) {
  return {status, body.dump(), "application/json"};
}

HttpResponse error_response(int status, const std::string& message) {
  ordered_json body;
  body["error"] = message;
  return json_response(status, body);
}

std::vector<std::string_view> split_path(std::string_view path) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (start < path.size()) {
    std::size_t slash = path.find('/', start);
    if (slash == std::string_view::npos) slash = path.size();
    if (slash > start) parts.push_back(path.substr(start, slash - start));
    start = slash + 1;
  }
  return parts;
}

json parse_body(std::string_view body, bool allow_empty) {
  if (body.find_first_not_of(" \t\r\n") == std::string_view::npos) {
    if (allow_empty) return json::object();
    throw HttpError{400, "request body is required"};
  }
  json doc;
  try {
    doc = json::parse(body.begin(), body.end());
  } catch (const json::parse_error& e) {
    throw HttpError{400, fmt::format("malformed JSON at byte {}", e.byte)};
  }
  if (!doc.is_object()) throw HttpError{400, "request body must be a JSON object"};
  return doc;
}

TwoQubitState state_or_422(std::string_view text) {
  try {
    return parse_state(text);
  } catch (const Error& e) {
    throw HttpError{422, std::string("invalid state: ") + e.what()};
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Payloads

ordered_json measures_json(const TwoQubitState& psi) {
  const Classification c = classify(psi);
  ordered_json m;
  m["classification"] = std::string(to_string(c.kind));
  m["r"] = c.r;
  m["r_tilde"] = c.r_tilde;
  m["concurrence"] = concurrence(psi);
  m["purity"] = purity(reduced_density(psi, 1));
  m["separable_share"] = c.separable_share();
  m["entangled_share"] = c.entangled_share();
  return m;
}

namespace {

ordered_json amplitudes_json(const TwoQubitState& psi) {
  ordered_json a = ordered_json::array();
  for (int i = 0; i < 4; ++i) a.push_back({psi[i].real(), psi[i].imag()});
  return a;
}

ordered_json state_json(const TwoQubitState& psi) {
  ordered_json s;
  s["state"] = format_state(psi);
  s["amplitudes"] = amplitudes_json(psi);
  s["scene"] = scene_to_json(scene_from_state(psi));
  s["measures"] = measures_json(psi);
  return s;
}

ordered_json step_json(const RotationStep& step) {
  ordered_json s;
  s["generator"] = step.gen.name();
  s["angle"] = step.angle / kPi;
  return s;
}

}  // namespace

ordered_json planes_json(const std::optional<TwoQubitState>& psi) {
  const bool classify_planes = psi && is_stabilizer_state(*psi);
  ordered_json out = ordered_json::array();
  for (const auto& g : all_generators()) {
    ordered_json e;
    e["generator"] = g.name();
    e["plane"] = plane_of(g).name();
    e["local"] = g.is_local();
    if (psi) {
      e["class"] = classify_planes ? ordered_json(std::string(to_string(classify_plane(*psi, g))))
                                   : ordered_json(nullptr);
    }
    out.push_back(std::move(e));
  }
  return out;
}

ordered_json session_payload(const Session& session) {
  ordered_json p;
  p["id"] = session.id;
  p.update(state_json(session.current));
  ordered_json history = ordered_json::array();
  for (const auto& [step, before] : session.history) history.push_back(step_json(step));
  p["history"] = std::move(history);
  p["planes"] = planes_json(session.current);
  return p;
}

ordered_json trace_json(const GateTrace& trace) {
  ordered_json t;
  t["input"] = state_json(trace.input);
  t["global_phase"] = {trace.global_phase.real(), trace.global_phase.imag()};
  ordered_json steps = ordered_json::array();
  for (const auto& s : trace.steps) {
    ordered_json step = step_json(s.step);
    step["note"] = s.step.note;
    step.update(state_json(s.state));
    steps.push_back(std::move(step));
  }
  t["steps"] = std::move(steps);
  return t;
}

// ---------------------------------------------------------------------------
// SessionStore

SessionStore::SessionStore(std::optional<std::string> journal_path)
    : nonce_(std::random_device{}() & 0xffffffffu), journal_path_(std::move(journal_path)) {
  if (journal_path_) replay(*journal_path_);
}

SessionStore::~SessionStore() = default;

std::string SessionStore::next_id() {
  // Caller holds map_mutex_ exclusively.
  for (;;) {
    std::string id = fmt::format("{:08x}{:06x}", nonce_, ++counter_);
    if (!sessions_.count(id)) return id;
  }
}

void SessionStore::journal(const ordered_json& record) {
  if (!journal_path_ || replaying_) return;
  std::lock_guard lock(journal_mutex_);
  std::ofstream out(*journal_path_, std::ios::app);
  out << record.dump() << '\n';
  if (!out) throw Error("cannot append to journal " + *journal_path_);
}

std::shared_ptr<SessionStore::Slot> SessionStore::slot(const std::string& id) const {
  std::shared_lock lock(map_mutex_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

Session SessionStore::create(const TwoQubitState& initial) {
  auto s = std::make_shared<Slot>();
  s->session.current = initial;
  {
    std::unique_lock lock(map_mutex_);
    s->session.id = next_id();
    sessions_.emplace(s->session.id, s);
  }
  ordered_json rec;
  rec["ts"] = now_ms();
  rec["session"] = s->session.id;
  rec["op"] = "create";
  rec["state"] = format_state(initial);
  journal(rec);
  return s->session;
}

std::optional<Session> SessionStore::get(const std::string& id) const {
  auto s = slot(id);
  if (!s) return std::nullopt;
  std::lock_guard lock(s->mutex);
  return s->session;
}

std::optional<Session> SessionStore::apply(const std::string& id, const RotationStep& step) {
  auto s = slot(id);
  if (!s) return std::nullopt;
  std::lock_guard lock(s->mutex);
  Session& session = s->session;
  const TwoQubitState next =
      dualbloch::apply(rotation_unitary(step.gen, step.angle), session.current);
  ordered_json rec;
  rec["ts"] = now_ms();
  rec["session"] = id;
  rec["op"] = "apply";
  rec["generator"] = step.gen.name();
  rec["angle"] = step.angle / kPi;
  rec["radians"] = step.angle;  // exact value for replay
  journal(rec);
  session.history.emplace_back(step, session.current);
  session.current = next;
  return session;
}

std::optional<Session> SessionStore::undo(const std::string& id) {
  auto s = slot(id);
  if (!s) return std::nullopt;
  std::lock_guard lock(s->mutex);
  Session& session = s->session;
  if (session.history.empty()) throw InvalidArgument("nothing to undo");
  ordered_json rec;
  rec["ts"] = now_ms();
  rec["session"] = id;
  rec["op"] = "undo";
  journal(rec);
  session.current = session.history.back().second;
  session.history.pop_back();
  return session;
}

std::size_t SessionStore::size() const {
  std::shared_lock lock(map_mutex_);
  return sessions_.size();
}

void SessionStore::replay(const std::string& path) {
  std::ifstream in(path);
  if (!in) return;  // a fresh journal
  replaying_ = true;
  std::string line;
  int line_no = 0;
  try {
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      const json rec = json::parse(line);
      const std::string id = rec.at("session").get<std::string>();
      const std::string op = rec.value("op", std::string("apply"));
      if (op == "create") {
        auto s = std::make_shared<Slot>();
        s->session.id = id;
        s->session.current = parse_state(rec.at("state").get<std::string>());
        sessions_[id] = s;
        continue;
      }
      if (!sessions_.count(id)) throw Error("unknown session " + id);
      if (op == "apply") {
        const double angle = rec.contains("radians") ? rec.at("radians").get<double>()
                                                     : rec.at("angle").get<double>() * kPi;
        apply(id, {Generator::parse(rec.at("generator").get<std::string>()), angle, {}});
      } else if (op == "undo") {
        undo(id);
      } else {
        throw Error("unknown op " + op);
      }
    }
  } catch (const std::exception& e) {
    replaying_ = false;
    throw Error(fmt::format("journal {} line {}: {}", path, line_no, e.what()));
  }
  replaying_ = false;
}

// ---------------------------------------------------------------------------
// Api

Api::Api(std::optional<std::string> journal_path) : store_(std::move(journal_path)) {}

HttpResponse Api::handle(std::string_view method, std::string_view path, std::string_view body,
                         const std::map<std::string, std::string>& query) {
  const auto parts = split_path(path);
  const auto method_is = [&](std::string_view m) {
    if (method != m) throw HttpError{405, fmt::format("method {} not allowed", method)};
  };
  try {
    if (parts.size() == 1 && parts[0] == "planes") {
      method_is("GET");
      ordered_json doc;
      doc["planes"] = planes_json();
      return json_response(200, doc);
    }
    if (parts.size() == 2 && parts[0] == "stabilizers" && parts[1] == "graph") {
      method_is("GET");
      std::call_once(graph_once_, [this] { graph_body_ = enumerate_stabilizers().to_json().dump(); });
      return {200, graph_body_, "application/json"};
    }
    if (parts.size() == 3 && parts[0] == "gates" && parts[1] == "cnot" && parts[2] == "trace") {
      method_is("GET");
      auto it = query.find("input");
      if (it == query.end()) throw HttpError{400, "query parameter 'input' is required"};
      const TwoQubitState input = state_or_422(it->second);
      ordered_json doc = trace_json(trace(input, cnot_sequence()));
      doc["sequence"] = format_sequence(cnot_sequence().steps);
      return json_response(200, doc);
    }
    if (!parts.empty() && parts[0] == "sessions") {
      if (parts.size() == 1) {
        method_is("POST");
        const json doc = parse_body(body, /*allow_empty=*/true);
        TwoQubitState initial;
        if (doc.contains("state")) {
          if (!doc["state"].is_string()) throw HttpError{400, "'state' must be a string"};
          initial = state_or_422(doc["state"].get<std::string>());
        }
        return json_response(201, session_payload(store_.create(initial)));
      }
      const std::string id(parts[1]);
      if (parts.size() == 2) {
        method_is("GET");
        auto s = store_.get(id);
        if (!s) throw HttpError{404, "unknown session " + id};
        return json_response(200, session_payload(*s));
      }
      if (parts.size() == 3 && parts[2] == "apply") {
        method_is("POST");
        const json doc = parse_body(body, /*allow_empty=*/false);
        if (!doc.contains("generator") || !doc["generator"].is_string()) {
          throw HttpError{400, "'generator' (string) is required"};
        }
        if (!doc.contains("angle") || !doc["angle"].is_number()) {
          throw HttpError{400, "'angle' (number) is required"};
        }
        const bool radians = doc.value("radians", false);
        std::optional<Generator> gen;
        try {
          gen = Generator::parse(doc["generator"].get<std::string>());
        } catch (const Error& e) {
          throw HttpError{422, std::string("invalid generator: ") + e.what()};
        }
        const double value = doc["angle"].get<double>();
        const RotationStep step{*gen, radians ? value : value * kPi, {}};
        auto s = store_.apply(id, step);
        if (!s) throw HttpError{404, "unknown session " + id};
        return json_response(200, session_payload(*s));
      }
      if (parts.size() == 3 && parts[2] == "undo") {
        method_is("POST");
        std::optional<Session> s;
        try {
          s = store_.undo(id);
        } catch (const InvalidArgument& e) {
          throw HttpError{409, e.what()};
        }
        if (!s) throw HttpError{404, "unknown session " + id};
        return json_response(200, session_payload(*s));
      }
    }
    throw HttpError{404, fmt::format("no route for {}", path)};
  } catch (const HttpError& e) {
    return error_response(e.status, e.message);
  } catch (const Error& e) {
    return error_response(422, e.what());
  } catch (const std::exception& e) {
    return error_response(500, e.what());
  }
}

// ---------------------------------------------------------------------------
// HttpServer

struct HttpServer::Impl {
  Api& api;
  httplib::Server server;
  explicit Impl(Api& a) : api(a) {}
};

HttpServer::HttpServer(Api& api) : impl_(std::make_unique<Impl>(api)) {
  auto handler = [this](const httplib::Request& req, httplib::Response& res) {
    std::map<std::string, std::string> query;
    for (const auto& [k, v] : req.params) query.emplace(k, v);
    const HttpResponse r = impl_->api.handle(req.method, req.path, req.body, query);
    res.status = r.status;
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_content(r.body, r.content_type);
  };
  impl_->server.Get(R"(/.*)", handler);
  impl_->server.Post(R"(/.*)", handler);
  impl_->server.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.status = 204;
  });
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool HttpServer::listen() { return impl_->server.listen_after_bind(); }

void HttpServer::stop() {
  if (impl_) impl_->server.stop();
}

}  // namespace dualbloch
