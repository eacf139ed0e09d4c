#include "hopf/scenes.hpp"
#include "hopf/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace hopf;

constexpr int kUsageError = 2;
constexpr int kVerificationFailure = 1;

std::vector<double> parse_tuple(const std::string& text, std::size_t n, const char* what) {
  auto v = parse_reals(text);
  if (v.size() != n) {
    throw GeometryError(ErrorKind::invalid_argument,
                        std::string(what) + " needs " + std::to_string(n) + " comma-separated numbers");
  }
  return v;
}

std::string render(const SceneDocument& scene, const std::string& format) {
  if (format == "obj") return export_obj(scene);
  if (format == "svg") return export_svg(scene);
  return export_json(scene);
}

int emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return kUsageError;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hopf fibration geometry toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string output;
  app.add_option("-o,--output", output, "Write to a file instead of stdout");

  auto* fiber_cmd = app.add_subcommand("fiber", "Projected fiber over a base point of S^2");
  std::string base_text, variant = "riemann", fiber_format = "json";
  int fiber_samples = 256;
  fiber_cmd->add_option("--base", base_text, "Base point X,Y,Z (normalized)")->required();
  fiber_cmd->add_option("--variant", variant)->check(CLI::IsMember({"riemann", "quat-right", "quat-left"}));
  fiber_cmd->add_option("--samples", fiber_samples)->check(CLI::Range(8, 1 << 20));
  fiber_cmd->add_option("--format", fiber_format)->check(CLI::IsMember({"json", "obj"}));

  auto* tori_cmd = app.add_subcommand("tori", "Nested latitudinal tori with their fibers");
  std::string latitudes_text, tori_format = "json";
  int fibers_per_torus = 12;
  tori_cmd->add_option("--latitudes", latitudes_text, "Latitudes r1,r2,... (positive)")->required();
  tori_cmd->add_option("--fibers-per-torus", fibers_per_torus)->check(CLI::Range(1, 1024));
  tori_cmd->add_option("--format", tori_format)->check(CLI::IsMember({"json", "obj"}));

  auto* apollonius_cmd = app.add_subcommand("apollonius", "Both Apollonian circle families of a point pair");
  std::string p_text, p2_text, apollonius_format;
  int count = 6;
  apollonius_cmd->add_option("--p", p_text, "First point X,Y")->required();
  apollonius_cmd->add_option("--p2", p2_text, "Second point X,Y")->required();
  apollonius_cmd->add_option("--count", count, "Circles per family")->check(CLI::Range(1, 1000));
  apollonius_cmd->add_option("--format", apollonius_format)->required()->check(CLI::IsMember({"svg", "json"}));

  auto* hypercube_cmd = app.add_subcommand("hypercube", "Projected edges of the hypercube inscribed in S^3");
  std::string hypercube_format = "json";
  int edge_samples = 33;
  hypercube_cmd->add_option("--format", hypercube_format)->check(CLI::IsMember({"json", "obj"}));
  hypercube_cmd->add_option("--samples", edge_samples, "Samples per edge")->check(CLI::Range(2, 100000));

  auto* winding_cmd = app.add_subcommand("winding", "Roots of a polynomial inside a circle, by winding number");
  std::string poly_text, winding_format = "text";
  double radius = 1.0;
  winding_cmd->add_option("--poly", poly_text, "Coefficients c0,c1,... in ascending degree (e.g. 1+2i)")->required();
  winding_cmd->add_option("--radius", radius)->required();
  winding_cmd->add_option("--format", winding_format)->check(CLI::IsMember({"text", "json", "svg"}));

  auto* verify_cmd = app.add_subcommand("verify", "Run the invariant suites");
  std::string suite = "all";
  std::vector<std::string> suites{"all"};
  for (const auto& s : verify_suites()) suites.push_back(s);
  verify_cmd->add_option("--suite", suite)->check(CLI::IsMember(suites));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*fiber_cmd) {
      const auto b = parse_tuple(base_text, 3, "--base");
      const Vector3<double> base(b[0], b[1], b[2]);
      if (!(base.norm() > 1e-9)) throw GeometryError(ErrorKind::invalid_argument, "--base must be nonzero");
      HopfConvention<double> conv;
      conv.variant = parse_variant(variant);
      return emit(render(fiber_scene(conv, base.normalized(), fiber_samples), fiber_format), output);
    }
    if (*tori_cmd) {
      ToriOptions options;
      options.fibers_per_torus = fibers_per_torus;
      return emit(render(tori_scene(parse_reals(latitudes_text), options), tori_format), output);
    }
    if (*apollonius_cmd) {
      const auto p = parse_tuple(p_text, 2, "--p");
      const auto p2 = parse_tuple(p2_text, 2, "--p2");
      return emit(render(apollonius_scene({p[0], p[1]}, {p2[0], p2[1]}, count), apollonius_format), output);
    }
    if (*hypercube_cmd) return emit(render(hypercube_scene(edge_samples), hypercube_format), output);
    if (*winding_cmd) {
      std::vector<Complex<double>> coeffs;
      std::size_t start = 0;
      while (true) {
        const auto comma = poly_text.find(',', start);
        coeffs.push_back(parse_complex(std::string_view(poly_text).substr(start, comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
      const auto scene = winding_scene(Polynomial<double>(coeffs), radius);
      if (winding_format == "text") {
        return emit("winding number " + scene.annotations.at("winding_number") + " (roots inside |z| = " +
                        scene.annotations.at("radius") + ")\n",
                    output);
      }
      return emit(render(scene, winding_format), output);
    }
    if (*verify_cmd) {
      const auto results = run_verify(suite);
      std::cout << format_results(results);
      for (const auto& r : results) {
        if (!r.passed) return kVerificationFailure;
      }
      return 0;
    }
  } catch (const GeometryError& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}
