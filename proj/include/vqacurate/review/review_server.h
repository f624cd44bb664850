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

#ifndef VQACURATE_REVIEW_REVIEW_SERVER_H_
#define VQACURATE_REVIEW_REVIEW_SERVER_H_

#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "vqacurate/review/review_store.h"

namespace httplib {
class Server;
}

namespace vqacurate::review {

struct ServerOptions {
  std::string host = "127.0.0.1";
  int port = 8080;  // 0 picks a free port.
  std::filesystem::path media_dir;
  std::filesystem::path static_dir;  // Built UI bundle; optional.
};

// Resolves `ref` under `media_dir`. Returns nothing for absolute refs, refs
// with a ".." segment, refs escaping the directory through symlinks and
// files that do not exist.
std::optional<std::filesystem::path> ResolveMediaPath(const std::filesystem::path& media_dir,
                                                      const std::string& ref);

// JSON API over a ReviewStore:
//   GET  /api/tasks/next?annotator=NAME
//   POST /api/verdicts
//   GET  /api/progress
//   GET  /api/export/labels
//   GET  /media/<image_ref>
// plus the UI bundle at "/". Errors are {"code", "message"}.
class ReviewServer {
 public:
  ReviewServer(ReviewStore& store, ServerOptions options);
  ~ReviewServer();

  // Binds the socket and returns the port. IoError when binding fails.
  int Bind();
  // Serves until Stop(). Binds first if needed.
  void Serve();
  void Stop();
  void WaitUntilReady() const;

 private:
  void Routes();

  ReviewStore& store_;
  ServerOptions options_;
  std::unique_ptr<httplib::Server> server_;
  int bound_port_ = -1;
};

}  // namespace vqacurate::review

#endif  // VQACURATE_REVIEW_REVIEW_SERVER_H_
