#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <unordered_map>

#include "atlas/snapshot.hpp"

namespace atlas {

struct ApiResponse {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
};

using QueryParams = std::multimap<std::string, std::string>;

// Transport-free request handling over an immutable snapshot. Bodies are exactly the
// bytes of the matching export_* call, so the HTTP layer adds transport only.
//
//   GET /api/summary?group_by=&order=
//   GET /api/network
//   GET /api/keywords
//   GET /api/layout/grouped?width&height&seed&ticks (+ any layout parameter)
//   GET /api/layout/radial?keyword=&...
//   GET /api/rank?keyword=
//   GET /api/items/{id}
class ApiService {
 public:
  explicit ApiService(std::shared_ptr<const Snapshot> snapshot);

  ApiResponse handle(std::string_view path, const QueryParams& query) const;

  // Requests that start after the swap see the new snapshot; in-flight ones finish on
  // the old one.
  void swap_snapshot(std::shared_ptr<const Snapshot> snapshot);
  std::shared_ptr<const Snapshot> snapshot() const;

  std::size_t cached_layouts() const;

 private:
  ApiResponse layout(const Snapshot& snapshot, std::uint64_t generation, bool radial, const QueryParams& query) const;

  mutable std::mutex mutex_;
  std::shared_ptr<const Snapshot> snapshot_;
  std::uint64_t generation_ = 0;
  mutable std::unordered_map<std::string, std::string> layout_cache_;
};

struct ServerOptions {
  std::string host = "127.0.0.1";
  // 0 picks a free port.
  int port = 8080;
  std::string cors_origin = "*";
  // Optional directory of built UI assets mounted at "/".
  std::string static_dir;
};

// cpp-httplib front end for ApiService.
class HttpServer {
 public:
  HttpServer(std::shared_ptr<ApiService> service, ServerOptions options);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  // Binds the listening socket; throws Error when the port is busy. Returns the port.
  int bind();
  // Blocks serving requests until stop().
  void listen();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace atlas
