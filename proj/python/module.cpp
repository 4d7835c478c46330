#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "segskel/delaunay.hpp"
#include "segskel/gabriel.hpp"
#include "segskel/neighborhood.hpp"
#include "segskel/oracle.hpp"
#include "segskel/solver.hpp"

namespace py = pybind11;
using namespace segskel;

namespace {

SegmentSet to_set(const std::vector<std::array<double, 4>>& rows, bool allow_degenerate) {
  SegmentSet S;
  S.allow_degenerate = allow_degenerate;
  S.sites.reserve(rows.size());
  for (const auto& r : rows) S.sites.push_back({{r[0], r[1]}, {r[2], r[3]}});
  return S;
}

Variant to_variant(const std::string& v) {
  if (v == "lune") return Variant::lune;
  if (v == "circle") return Variant::circle;
  throw std::invalid_argument("variant must be 'lune' or 'circle'");
}

BetaSpec to_spec(double beta, const std::string& variant, const std::string& closure) {
  BetaSpec spec{beta, to_variant(variant), default_closure(beta)};
  if (closure == "open")
    spec.closure = Closure::open;
  else if (closure == "closed")
    spec.closure = Closure::closed;
  else if (closure != "default")
    throw std::invalid_argument("closure must be 'open', 'closed' or 'default'");
  return spec;
}

py::list edges_out(const SkeletonGraph& g) {
  py::list out;
  for (const auto& e : g.edges) {
    py::dict d;
    d["i"] = e.i;
    d["j"] = e.j;
    if (e.witness) {
      d["t1"] = e.witness->t1;
      d["t2"] = e.witness->t2;
    }
    out.append(d);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_segskel, m) {
  m.doc() = "beta-skeletons, Gabriel graphs and Delaunay graphs for planar segment sets";
  m.attr("__version__") = "0.1.0";

  m.def(
      "validate_general_position",
      [](const std::vector<std::array<double, 4>>& segments, bool allow_degenerate) -> py::object {
        const auto v = validate_general_position(to_set(segments, allow_degenerate));
        if (!v) return py::none();
        py::dict d;
        d["kind"] = v->kind == ViolationKind::crossing            ? "crossing"
                    : v->kind == ViolationKind::collinear_endpoints ? "collinear"
                                                                    : "degenerate";
        d["i"] = v->i;
        d["j"] = v->j;
        d["k"] = v->k;
        d["message"] = v->message;
        return d;
      },
      py::arg("segments"), py::arg("allow_degenerate") = false,
      "Returns None when the sites are in general position, else a violation dict.");

  m.def(
      "beta_skeleton",
      [](const std::vector<std::array<double, 4>>& segments, double beta,
         const std::string& variant, const std::string& closure, double epsilon,
         bool allow_degenerate) {
        return edges_out(
            beta_skeleton(to_set(segments, allow_degenerate), to_spec(beta, variant, closure), epsilon));
      },
      py::arg("segments"), py::arg("beta"), py::arg("variant") = "lune",
      py::arg("closure") = "default", py::arg("epsilon") = kDefaultEpsilon,
      py::arg("allow_degenerate") = false,
      "Edges of the beta-skeleton with witness generator parameters per edge.");

  m.def(
      "gg_graph",
      [](const std::vector<std::array<double, 4>>& segments, double epsilon,
         bool allow_degenerate) {
        return edges_out(gg_graph(to_set(segments, allow_degenerate), epsilon));
      },
      py::arg("segments"), py::arg("epsilon") = kDefaultEpsilon,
      py::arg("allow_degenerate") = false, "Gabriel graph (closed 1-skeleton).");

  m.def(
      "delaunay_graph",
      [](const std::vector<std::array<double, 4>>& segments, int resolution,
         bool allow_degenerate) {
        return edges_out(delaunay_graph(to_set(segments, allow_degenerate), resolution));
      },
      py::arg("segments"), py::arg("resolution") = kDefaultDtResolution,
      py::arg("allow_degenerate") = false, "Dual graph of the segment Voronoi diagram.");

  m.def(
      "oracle_edge",
      [](const std::vector<std::array<double, 4>>& segments, int i, int j, double beta,
         const std::string& variant, const std::string& closure, int grid,
         bool allow_degenerate) {
        return oracle_edge(to_set(segments, allow_degenerate), i, j,
                           to_spec(beta, variant, closure), OracleConfig{grid, 1000});
      },
      py::arg("segments"), py::arg("i"), py::arg("j"), py::arg("beta"),
      py::arg("variant") = "lune", py::arg("closure") = "default", py::arg("grid") = 256,
      py::arg("allow_degenerate") = false,
      "Brute-force grid decision for a single edge.");

  m.def(
      "oracle_skeleton",
      [](const std::vector<std::array<double, 4>>& segments, double beta,
         const std::string& variant, const std::string& closure, int grid,
         bool allow_degenerate) {
        return edges_out(oracle_skeleton(to_set(segments, allow_degenerate),
                                         to_spec(beta, variant, closure),
                                         OracleConfig{grid, 1000}));
      },
      py::arg("segments"), py::arg("beta"), py::arg("variant") = "lune",
      py::arg("closure") = "default", py::arg("grid") = 256,
      py::arg("allow_degenerate") = false, "All-pairs brute-force grid skeleton.");

  m.def(
      "point_skeleton",
      [](const std::vector<std::array<double, 2>>& points, double beta,
         const std::string& variant, const std::string& closure) {
        std::vector<Point> V;
        V.reserve(points.size());
        for (const auto& p : points) V.push_back({p[0], p[1]});
        return edges_out(point_skeleton_oracle(V, to_spec(beta, variant, closure)));
      },
      py::arg("points"), py::arg("beta"), py::arg("variant") = "lune",
      py::arg("closure") = "default", "Classic point-set beta-skeleton (brute force).");

  m.def(
      "delta_of_beta",
      [](double beta, const std::string& variant) {
        return delta_of_beta(BetaSpec{beta, to_variant(variant), default_closure(beta)});
      },
      py::arg("beta"), py::arg("variant") = "lune",
      "Constant inscribed angle of the neighborhood boundary.");

  m.def(
      "neighborhood_contains",
      [](const std::array<double, 2>& v1, const std::array<double, 2>& v2, double beta,
         const std::string& variant, const std::string& closure,
         const std::array<double, 2>& p) {
        const Neighborhood N = make_neighborhood({v1[0], v1[1]}, {v2[0], v2[1]},
                                                 to_spec(beta, variant, closure));
        return nbhd_contains(N, {p[0], p[1]});
      },
      py::arg("v1"), py::arg("v2"), py::arg("beta"), py::arg("variant") = "lune",
      py::arg("closure") = "default", py::arg("p") = std::array<double, 2>{0.0, 0.0},
      "Point membership in the neighborhood of a generator pair.");

  m.def(
      "segment_intersects_neighborhood",
      [](const std::array<double, 2>& v1, const std::array<double, 2>& v2, double beta,
         const std::string& variant, const std::string& closure,
         const std::array<double, 4>& seg) {
        const Neighborhood N = make_neighborhood({v1[0], v1[1]}, {v2[0], v2[1]},
                                                 to_spec(beta, variant, closure));
        return segment_intersects_nbhd(N, {{seg[0], seg[1]}, {seg[2], seg[3]}});
      },
      py::arg("v1"), py::arg("v2"), py::arg("beta"), py::arg("variant") = "lune",
      py::arg("closure") = "default", py::arg("seg") = std::array<double, 4>{0, 0, 1, 0},
      "Exact segment/neighborhood intersection predicate.");
}
