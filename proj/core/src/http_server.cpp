#include <httplib.h>

#include <mutex>

#include "atlas/api.hpp"
#include "atlas/error.hpp"
#include "atlas/export.hpp"

namespace atlas {

struct HttpServer::Impl {
  std::shared_ptr<ApiService> service;
  ServerOptions options;
  httplib::Server server;
  bool bound = false;
  std::mutex mutex;
  bool listening = false;
  bool stop_requested = false;
};

HttpServer::HttpServer(std::shared_ptr<ApiService> service, ServerOptions options) : impl_(std::make_unique<Impl>()) {
  if (!service) throw InvalidArgument("HttpServer needs an ApiService");
  impl_->service = std::move(service);
  impl_->options = std::move(options);

  auto& server = impl_->server;
  // The library default adds SO_REUSEPORT, which would let a second instance share a busy port.
  server.set_socket_options([](socket_t sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, reinterpret_cast<const char*>(&yes), sizeof(yes));
  });
  const std::string origin = impl_->options.cors_origin;
  server.set_default_headers({{"Access-Control-Allow-Origin", origin},
                              {"Access-Control-Allow-Methods", "GET, OPTIONS"},
                              {"Access-Control-Allow-Headers", "Content-Type"}});

  auto* service_ptr = impl_->service.get();
  server.Get(R"(/api/.*)", [service_ptr](const httplib::Request& req, httplib::Response& res) {
    QueryParams query(req.params.begin(), req.params.end());
    const ApiResponse response = service_ptr->handle(req.path, query);
    res.status = response.status;
    res.set_content(response.body, response.content_type + "; charset=utf-8");
  });
  server.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
  server.set_error_handler([](const httplib::Request& req, httplib::Response& res) {
    if (!res.body.empty()) return;
    res.set_content(export_error_json(res.status, "no such resource: " + req.path), "application/json; charset=utf-8");
  });

  if (!impl_->options.static_dir.empty() && !server.set_mount_point("/", impl_->options.static_dir)) {
    throw Error("static directory '" + impl_->options.static_dir + "' does not exist");
  }
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind() {
  auto& o = impl_->options;
  int port = o.port;
  if (port == 0) {
    port = impl_->server.bind_to_any_port(o.host);
    if (port < 0) throw Error("cannot bind " + o.host);
  } else if (!impl_->server.bind_to_port(o.host, port)) {
    throw Error("cannot bind " + o.host + ":" + std::to_string(port) + " (port busy?)");
  }
  impl_->bound = true;
  return port;
}

void HttpServer::listen() {
  {
    std::lock_guard lock(impl_->mutex);
    if (impl_->stop_requested) return;
    impl_->listening = true;
  }
  if (!impl_->bound) bind();
  impl_->server.listen_after_bind();
}

void HttpServer::stop() {
  if (!impl_) return;
  {
    std::lock_guard lock(impl_->mutex);
    impl_->stop_requested = true;
    if (!impl_->listening) return;
  }
  // listen() may not have reached the accept loop yet; stopping before that is a no-op.
  impl_->server.wait_until_ready();
  impl_->server.stop();
}

}  // namespace atlas
