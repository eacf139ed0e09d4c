#include "hopf/service.hpp"

#include <httplib.h>

#include <chrono>
#include <cstdio>

namespace hopf {

struct FiberServer::Impl {
  ServiceConfig config;
  httplib::Server server;
  int port = -1;
};

FiberServer::FiberServer(ServiceConfig config) : impl_(std::make_unique<Impl>()) {
  impl_->config = std::move(config);
  const ServiceConfig& cfg = impl_->config;
  auto route = [&cfg](const httplib::Request& req, httplib::Response& res) {
    const auto start = std::chrono::steady_clock::now();
    QueryParams params;
    for (const auto& [k, v] : req.params) params.emplace(k, v);  // first value wins
    const ApiResponse out = handle_request(cfg, req.path, params);
    const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.3f", elapsed.count());
    res.status = out.status;
    res.set_header("Access-Control-Allow-Origin", cfg.cors_origin);
    res.set_header("Access-Control-Expose-Headers", "X-Elapsed-Ms");
    res.set_header("X-Elapsed-Ms", ms);
    res.set_content(out.body, out.content_type);
  };
  impl_->server.Get(R"(/api/.*)", route);
  impl_->server.Options(R"(/api/.*)", [&cfg](const httplib::Request&, httplib::Response& res) {
    res.status = 204;
    res.set_header("Access-Control-Allow-Origin", cfg.cors_origin);
    res.set_header("Access-Control-Allow-Methods", "GET, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
  });
}

FiberServer::~FiberServer() { stop(); }

int FiberServer::bind() {
  const auto& cfg = impl_->config;
  if (cfg.port == 0) {
    impl_->port = impl_->server.bind_to_any_port(cfg.host);
  } else {
    impl_->port = impl_->server.bind_to_port(cfg.host, cfg.port) ? cfg.port : -1;
  }
  return impl_->port;
}

void FiberServer::listen() { impl_->server.listen_after_bind(); }

void FiberServer::stop() {
  if (impl_) impl_->server.stop();
}

}  // namespace hopf
