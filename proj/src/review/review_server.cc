/*
 * Copyright 2026 The vqacurate Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "vqacurate/review/review_server.h"

#include <fstream>
#include <sstream>

#include "httplib.h"
#include "spdlog/spdlog.h"
#include "vqacurate/common/error.h"

namespace vqacurate::review {
namespace {

void SendJson(httplib::Response& res, int status, const Json& body) {
  res.status = status;
  res.set_content(CanonicalDump(body), "application/json");
}

void SendError(httplib::Response& res, int status, const std::string& code,
               const std::string& message) {
  SendJson(res, status, Json{{"code", code}, {"message", message}});
}

int StatusFor(const Error& error) {
  const std::string code = error.code();
  if (code == "not_found") return 404;
  if (code == "io") return 500;
  return 400;
}

// Runs a handler and maps library errors and JSON errors to status codes.
template <typename Fn>
void Guard(httplib::Response& res, Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    SendError(res, StatusFor(e), e.code(), e.what());
  } catch (const Json::exception& e) {
    SendError(res, 400, "bad_request", e.what());
  } catch (const std::exception& e) {
    SendError(res, 500, "internal", e.what());
  }
}

std::string ContentType(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  for (auto& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (ext == ".jpg" || ext == ".jpeg") return "image/jpeg";
  if (ext == ".png") return "image/png";
  if (ext == ".gif") return "image/gif";
  if (ext == ".webp") return "image/webp";
  if (ext == ".svg") return "image/svg+xml";
  return "application/octet-stream";
}

ReviewCriteria CriteriaFromBody(const Json& body) {
  if (!body.contains("criteria") || !body["criteria"].is_object()) {
    throw DataError("body needs a criteria object");
  }
  const Json& c = body["criteria"];
  for (const char* key :
       {"question_image_answerable", "distractors_adequate", "image_quality_ok"}) {
    if (!c.contains(key) || !c[key].is_boolean()) {
      throw DataError(std::string("criteria.") + key + " must be true or false");
    }
  }
  return {c["question_image_answerable"].get<bool>(), c["distractors_adequate"].get<bool>(),
          c["image_quality_ok"].get<bool>()};
}

std::string RequiredString(const Json& body, const char* key) {
  if (!body.contains(key) || !body[key].is_string() || body[key].get<std::string>().empty()) {
    throw DataError(std::string(key) + " must be a nonempty string");
  }
  return body[key].get<std::string>();
}

constexpr char kPlaceholderPage[] =
    "<!doctype html><html><head><meta charset=\"utf-8\"><title>Review</title></head>"
    "<body><p>The review UI bundle is not installed. The JSON API is available under "
    "/api/.</p></body></html>";

}  // namespace

std::optional<std::filesystem::path> ResolveMediaPath(const std::filesystem::path& media_dir,
                                                      const std::string& ref) {
  if (media_dir.empty() || ref.empty()) return std::nullopt;
  const std::filesystem::path relative(ref);
  if (relative.is_absolute() || relative.has_root_name()) return std::nullopt;
  for (const auto& part : relative) {
    if (part == "..") return std::nullopt;
  }
  std::error_code ec;
  const auto root = std::filesystem::weakly_canonical(media_dir, ec);
  if (ec) return std::nullopt;
  const auto target = std::filesystem::weakly_canonical(root / relative, ec);
  if (ec || !std::filesystem::is_regular_file(target, ec)) return std::nullopt;
  auto [root_end, target_it] = std::mismatch(root.begin(), root.end(), target.begin(),
                                              target.end());
  if (root_end != root.end()) return std::nullopt;
  return target;
}

ReviewServer::ReviewServer(ReviewStore& store, ServerOptions options)
    : store_(store), options_(std::move(options)), server_(std::make_unique<httplib::Server>()) {
  Routes();
}

ReviewServer::~ReviewServer() { Stop(); }

void ReviewServer::Routes() {
  httplib::Server& svr = *server_;

  svr.Get("/api/tasks/next", [this](const httplib::Request& req, httplib::Response& res) {
    Guard(res, [&] {
      const std::string annotator = req.get_param_value("annotator");
      if (annotator.empty()) throw UsageError("query parameter 'annotator' is required");
      auto task = store_.NextTask(annotator);
      SendJson(res, 200, Json{{"task", task ? ToJson(*task) : Json()}});
    });
  });

  svr.Post("/api/verdicts", [this](const httplib::Request& req, httplib::Response& res) {
    Guard(res, [&] {
      Json body;
      try {
        body = Json::parse(req.body);
      } catch (const Json::exception&) {
        throw DataError("body is not valid JSON");
      }
      if (!body.is_object()) throw DataError("body must be a JSON object");
      const std::string pair_id = RequiredString(body, "pair_id");
      const std::string annotator = RequiredString(body, "annotator");
      const ReviewCriteria criteria = CriteriaFromBody(body);
      SendJson(res, 200, ToJson(store_.SubmitVerdict(pair_id, annotator, criteria)));
    });
  });

  svr.Get("/api/progress", [this](const httplib::Request&, httplib::Response& res) {
    Guard(res, [&] { SendJson(res, 200, ToJson(store_.GetProgress())); });
  });

  svr.Get("/api/export/labels", [this](const httplib::Request&, httplib::Response& res) {
    Guard(res, [&] {
      Json labels = Json::array();
      for (const auto& label : store_.ExportLabels()) labels.push_back(ToJson(label));
      SendJson(res, 200, labels);
    });
  });

  svr.Get("/media/(.+)", [this](const httplib::Request& req, httplib::Response& res) {
    Guard(res, [&] {
      const auto path = ResolveMediaPath(options_.media_dir, req.matches[1].str());
      if (!path) {
        SendError(res, 404, "not_found", "no media named '" + req.matches[1].str() + "'");
        return;
      }
      res.set_content(ReadFile(*path), ContentType(*path));
    });
  });

  const bool has_bundle = !options_.static_dir.empty() &&
                          std::filesystem::is_directory(options_.static_dir);
  if (has_bundle) {
    svr.set_mount_point("/", options_.static_dir.string());
  } else {
    svr.Get("/", [](const httplib::Request&, httplib::Response& res) {
      res.set_content(kPlaceholderPage, "text/html");
    });
  }

  svr.set_error_handler([](const httplib::Request& req, httplib::Response& res) {
    if (res.body.empty()) {
      SendError(res, res.status, res.status == 404 ? "not_found" : "error",
                "no route for " + req.method + " " + req.path);
    }
  });
}

int ReviewServer::Bind() {
  if (bound_port_ > 0) return bound_port_;
  if (options_.port == 0) {
    bound_port_ = server_->bind_to_any_port(options_.host);
  } else if (server_->bind_to_port(options_.host, options_.port)) {
    bound_port_ = options_.port;
  }
  if (bound_port_ <= 0) {
    throw IoError("cannot bind " + options_.host + ":" + std::to_string(options_.port));
  }
  return bound_port_;
}

void ReviewServer::Serve() {
  const int port = Bind();
  spdlog::info("review service listening on http://{}:{}/", options_.host, port);
  server_->listen_after_bind();
}

void ReviewServer::Stop() {
  if (server_) server_->stop();
}

void ReviewServer::WaitUntilReady() const { server_->wait_until_ready(); }

}  // namespace vqacurate::review
