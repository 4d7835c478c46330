#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "segskel/io.hpp"

int main(int argc, char** argv) {
  CLI::App app{"beta-skeletons, Gabriel graphs and Delaunay graphs for planar segment sets"};
  app.get_formatter()->column_width(34);

  segskel::RunConfig cfg;
  std::string graph = "beta";
  std::string variant = "lune";
  std::string closure = "default";
  double beta = 0.0;
  std::string svg;

  app.add_option("--input", cfg.input_path, "scene file (JSON or \"x1 y1 x2 y2\" lines)")
      ->required();
  app.add_option("--graph", graph, "graph to compute: beta | gg | dt")
      ->check(CLI::IsMember({"beta", "gg", "dt"}));
  app.add_option("--beta", beta, "beta parameter (required with --graph beta)");
  app.add_option("--variant", variant, "neighborhood variant: lune | circle")
      ->check(CLI::IsMember({"lune", "circle"}));
  app.add_option("--closure", closure, "open | closed | default (closed for beta <= 1)")
      ->check(CLI::IsMember({"open", "closed", "default"}));
  app.add_option("--epsilon", cfg.epsilon, "witness search resolution in (0, 0.5)");
  app.add_option("--grid", cfg.grid, "oracle grid subdivisions per axis");
  app.add_option("--svg", svg, "write an SVG rendering to this path");
  app.add_flag("--oracle", cfg.oracle, "use the brute-force grid oracle instead of the solver");
  app.add_flag("--normalize", cfg.normalize, "map the scene into the unit box first");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;  // usage problems exit 1; --help exits 0
  }

  cfg.graph = graph == "beta" ? segskel::GraphKind::beta
              : graph == "gg" ? segskel::GraphKind::gg
                              : segskel::GraphKind::dt;
  cfg.variant = variant == "lune" ? segskel::Variant::lune : segskel::Variant::circle;
  if (closure == "open") cfg.closure = segskel::Closure::open;
  if (closure == "closed") cfg.closure = segskel::Closure::closed;
  if (app.count("--beta")) cfg.beta = beta;
  if (!svg.empty()) cfg.svg_path = svg;

  return segskel::run(cfg, std::cout, std::cerr);
}
