#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>

namespace hopf {

struct ServiceConfig {
  std::string host = "127.0.0.1";
  int port = 8787;
  int max_samples = 16384;
  int max_latitudes = 16;
  int max_fibers = 64;
  std::string cors_origin = "*";
};

/// Reads HOPF_BIND ("host:port") and HOPF_MAX_SAMPLES over the defaults.
ServiceConfig config_from_env();

/// Parses "host:port" into the config; throws GeometryError(invalid_argument).
void apply_bind(ServiceConfig& config, std::string_view bind);

struct ApiResponse {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
};

using QueryParams = std::map<std::string, std::string>;

/// The whole API as a pure function of path and query. Bodies depend only on
/// the inputs, so identical requests get byte-identical responses.
ApiResponse handle_request(const ServiceConfig& config, std::string_view path, const QueryParams& params);

/// HTTP front end over handle_request. Request time goes into the
/// X-Elapsed-Ms header rather than the body.
class FiberServer {
 public:
  explicit FiberServer(ServiceConfig config);
  ~FiberServer();
  FiberServer(const FiberServer&) = delete;
  FiberServer& operator=(const FiberServer&) = delete;

  /// Binds to config.host and config.port, or to a free port when port is 0.
  /// Returns the bound port, or -1 on failure.
  int bind();
  /// Serves until stop() is called. Call bind() first.
  void listen();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace hopf
