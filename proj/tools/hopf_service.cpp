#include "hopf/common.hpp"
#include "hopf/service.hpp"

#include <CLI11.hpp>

#include <csignal>
#include <iostream>

namespace {

hopf::FiberServer* g_server = nullptr;

void on_signal(int) {
  if (g_server) g_server->stop();
}

}  // namespace

int main(int argc, char** argv) {
  hopf::ServiceConfig config;
  try {
    config = hopf::config_from_env();
  } catch (const hopf::GeometryError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  CLI::App app{"Hopf fiber HTTP service"};
  std::string bind;
  app.add_option("--bind", bind, "host:port (overrides HOPF_BIND, default 127.0.0.1:8787)");
  app.add_option("--max-samples", config.max_samples, "Per-request sample cap (overrides HOPF_MAX_SAMPLES)")
      ->check(CLI::Range(8, 1 << 22));
  app.add_option("--max-latitudes", config.max_latitudes)->check(CLI::Range(1, 256));
  app.add_option("--cors-origin", config.cors_origin, "Access-Control-Allow-Origin value");
  CLI11_PARSE(app, argc, argv);

  try {
    if (!bind.empty()) hopf::apply_bind(config, bind);
  } catch (const hopf::GeometryError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  hopf::FiberServer server(config);
  const int port = server.bind();
  if (port < 0) {
    std::cerr << "error: cannot bind " << config.host << ":" << config.port << "\n";
    return 1;
  }
  g_server = &server;
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  std::cout << "listening on " << config.host << ":" << port << std::endl;
  server.listen();
  return 0;
}
