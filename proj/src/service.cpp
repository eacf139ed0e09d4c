#include "hopf/service.hpp"

#include "hopf/scenes.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdlib>

namespace hopf {

namespace {

using nlohmann::json;

constexpr const char* kVersion = "1.0.0";
constexpr const char* kChart = "S3 -> R3 from (0,0,0,1); base S2 from (0,0,1)";

struct HttpError {
  int status;
  std::string message;
};

ApiResponse error_response(int status, const std::string& message) {
  const json body = {{"error", message}, {"status", status}};
  return {status, body.dump() + "\n", "application/json"};
}

const std::string* find(const QueryParams& params, const char* key) {
  const auto it = params.find(key);
  return it == params.end() ? nullptr : &it->second;
}

double require_real(const QueryParams& params, const char* key) {
  const auto* v = find(params, key);
  if (!v) throw HttpError{400, std::string("missing parameter '") + key + "'"};
  try {
    const auto values = parse_reals(*v);
    if (values.size() != 1) throw HttpError{400, std::string("parameter '") + key + "' must be one number"};
    return values.front();
  } catch (const GeometryError&) {
    throw HttpError{400, std::string("parameter '") + key + "' is not a number"};
  }
}

int integer_param(const QueryParams& params, const char* key, int fallback, int lo, int hi) {
  const auto* v = find(params, key);
  if (!v) return fallback;
  char* end = nullptr;
  const long value = std::strtol(v->c_str(), &end, 10);
  if (v->empty() || *end != '\0') throw HttpError{400, std::string("parameter '") + key + "' must be an integer"};
  if (value < lo || value > hi) {
    throw HttpError{400, std::string("parameter '") + key + "' must lie in [" + std::to_string(lo) + ", " +
                             std::to_string(hi) + "]"};
  }
  return int(value);
}

HopfVariant variant_param(const QueryParams& params) {
  const auto* v = find(params, "variant");
  if (!v) return HopfVariant::riemann;
  try {
    return parse_variant(*v);
  } catch (const GeometryError&) {
    throw HttpError{422, "unsupported variant '" + *v + "'"};
  }
}

json convention_block(HopfVariant variant) {
  return {{"variant", std::string(to_string(variant))}, {"chart", kChart}, {"orientation_sign", orientation_sign(variant)}};
}

ApiResponse scene_response(const SceneDocument& scene, HopfVariant variant, json extra = json::object()) {
  json body = json::parse(export_json(scene));
  body["convention"] = convention_block(variant);
  for (auto& [k, v] : extra.items()) body[k] = v;
  return {200, body.dump() + "\n", "application/json"};
}

ApiResponse fiber_endpoint(const ServiceConfig& config, const QueryParams& params) {
  const Vector3<double> raw(require_real(params, "x"), require_real(params, "y"), require_real(params, "z"));
  const HopfVariant variant = variant_param(params);
  const int samples = integer_param(params, "samples", 256, 8, config.max_samples);
  if (!(raw.norm() > 1e-9)) throw HttpError{400, "base point must be a nonzero vector"};
  const Vector3<double> base = raw.normalized();
  HopfConvention<double> conv;
  conv.variant = variant;
  const SceneDocument scene = fiber_scene(conv, base, samples);
  return scene_response(scene, variant, {{"base", {base.x(), base.y(), base.z()}}});
}

ApiResponse tori_endpoint(const ServiceConfig& config, const QueryParams& params) {
  const auto* text = find(params, "latitudes");
  if (!text) throw HttpError{400, "missing parameter 'latitudes'"};
  std::vector<double> latitudes;
  try {
    latitudes = parse_reals(*text);
  } catch (const GeometryError&) {
    throw HttpError{400, "malformed latitude list"};
  }
  if (int(latitudes.size()) > config.max_latitudes) {
    throw HttpError{400, "at most " + std::to_string(config.max_latitudes) + " latitudes"};
  }
  for (double rho : latitudes) {
    if (!(rho > 0.0)) throw HttpError{400, "latitudes must be positive"};
  }
  ToriOptions options;
  options.variant = variant_param(params);
  options.fibers_per_torus = integer_param(params, "fibers", 12, 1, config.max_fibers);
  options.samples_per_fiber = integer_param(params, "samples", 128, 64, config.max_samples);
  return scene_response(tori_scene(latitudes, options), options.variant);
}

}  // namespace

void apply_bind(ServiceConfig& config, std::string_view bind) {
  const auto colon = bind.rfind(':');
  if (colon == std::string_view::npos || colon == 0) {
    throw GeometryError(ErrorKind::invalid_argument, "bind address must be host:port");
  }
  const std::string port(bind.substr(colon + 1));
  char* end = nullptr;
  const long value = std::strtol(port.c_str(), &end, 10);
  if (port.empty() || *end != '\0' || value < 0 || value > 65535) {
    throw GeometryError(ErrorKind::invalid_argument, "bad port in bind address");
  }
  config.host = std::string(bind.substr(0, colon));
  config.port = int(value);
}

ServiceConfig config_from_env() {
  ServiceConfig config;
  if (const char* bind = std::getenv("HOPF_BIND")) apply_bind(config, bind);
  if (const char* cap = std::getenv("HOPF_MAX_SAMPLES")) {
    char* end = nullptr;
    const long value = std::strtol(cap, &end, 10);
    if (*end != '\0' || value < 8) throw GeometryError(ErrorKind::invalid_argument, "HOPF_MAX_SAMPLES must be >= 8");
    config.max_samples = int(value);
  }
  return config;
}

ApiResponse handle_request(const ServiceConfig& config, std::string_view path, const QueryParams& params) {
  try {
    if (path == "/api/health") return {200, json{{"status", "ok"}, {"version", kVersion}}.dump() + "\n"};
    if (path == "/api/fiber") return fiber_endpoint(config, params);
    if (path == "/api/tori") return tori_endpoint(config, params);
    if (path == "/api/base-sphere") return scene_response(base_sphere_scene(), HopfVariant::riemann);
    if (path == "/api/scene/hypercube") return scene_response(hypercube_scene(), HopfVariant::riemann);
    return error_response(404, "no such endpoint");
  } catch (const HttpError& e) {
    return error_response(e.status, e.message);
  } catch (const GeometryError& e) {
    return error_response(422, std::string(to_string(e.kind())) + ": " + e.what());
  }
}

}  // namespace hopf
