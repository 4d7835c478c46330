#include "segskel/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "segskel/delaunay.hpp"
#include "segskel/gabriel.hpp"
#include "segskel/oracle.hpp"
#include "segskel/svg.hpp"

namespace segskel {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

SegmentSet normalize_scene(const SegmentSet& S) {
  if (S.sites.empty()) return S;
  Point lo = S.sites[0].a, hi = S.sites[0].a;
  for (const Segment& s : S.sites)
    for (const Point& p : {s.a, s.b}) {
      lo.x = std::min(lo.x, p.x);
      lo.y = std::min(lo.y, p.y);
      hi.x = std::max(hi.x, p.x);
      hi.y = std::max(hi.y, p.y);
    }
  const double span = std::max({hi.x - lo.x, hi.y - lo.y, 1e-300});
  const double scale = 1.0 / span;
  SegmentSet out = S;
  for (Segment& s : out.sites) {
    s.a = scale * (s.a - lo);
    s.b = scale * (s.b - lo);
  }
  return out;
}

namespace {

SegmentSet from_json_content(const std::string& content) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(content);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("JSON parse error: " + std::string(e.what()));
  }
  if (!j.contains("segments") || !j["segments"].is_array())
    throw ParseError("JSON scene must contain a \"segments\" array");
  SegmentSet S;
  int idx = 0;
  for (const auto& row : j["segments"]) {
    if (!row.is_array() || row.size() != 4)
      throw ParseError("segment " + std::to_string(idx) +
                       " must be an array [x1, y1, x2, y2]");
    for (const auto& v : row)
      if (!v.is_number())
        throw ParseError("segment " + std::to_string(idx) + " has a non-numeric entry");
    S.sites.push_back(
        {{row[0].get<double>(), row[1].get<double>()}, {row[2].get<double>(), row[3].get<double>()}});
    ++idx;
  }
  return S;
}

SegmentSet from_text_content(const std::string& content) {
  SegmentSet S;
  std::istringstream in(content);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    double x1, y1, x2, y2;
    if (!(ls >> x1 >> y1 >> x2 >> y2))
      throw ParseError("line " + std::to_string(lineno) +
                       ": expected four numbers \"x1 y1 x2 y2\"");
    std::string rest;
    if (ls >> rest)
      throw ParseError("line " + std::to_string(lineno) + ": trailing content \"" + rest + "\"");
    S.sites.push_back({{x1, y1}, {x2, y2}});
  }
  return S;
}

}  // namespace

SegmentSet parse_segments_text(const std::string& content, bool normalize) {
  const auto first = content.find_first_not_of(" \t\r\n");
  SegmentSet S = (first != std::string::npos && content[first] == '{')
                     ? from_json_content(content)
                     : from_text_content(content);
  if (normalize) S = normalize_scene(S);
  return S;
}

SegmentSet parse_segments(const std::string& path, bool normalize) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_segments_text(buf.str(), normalize);
}

std::string write_segments_json(const SegmentSet& S) {
  std::string out = "{\"segments\":[";
  for (size_t i = 0; i < S.sites.size(); ++i) {
    const Segment& s = S.sites[i];
    if (i) out += ",";
    out += "[" + format_double(s.a.x) + "," + format_double(s.a.y) + "," +
           format_double(s.b.x) + "," + format_double(s.b.y) + "]";
  }
  out += "]}";
  return out;
}

namespace {

const char* variant_name(Variant v) { return v == Variant::lune ? "lune" : "circle"; }
const char* closure_name(Closure c) { return c == Closure::closed ? "closed" : "open"; }
const char* graph_name(GraphKind g) {
  switch (g) {
    case GraphKind::beta: return "beta";
    case GraphKind::gg: return "gg";
    case GraphKind::dt: return "dt";
  }
  return "?";
}

std::string edges_json(const SkeletonGraph& g) {
  std::string out = "[";
  for (size_t k = 0; k < g.edges.size(); ++k) {
    const auto& e = g.edges[k];
    if (k) out += ",";
    out += "{\"i\":" + std::to_string(e.i) + ",\"j\":" + std::to_string(e.j);
    if (e.witness)
      out += ",\"t1\":" + format_double(e.witness->t1) +
             ",\"t2\":" + format_double(e.witness->t2);
    out += "}";
  }
  out += "]";
  return out;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.graph == GraphKind::beta && !cfg.beta) {
    err << "error: --beta is required with --graph beta\n";
    return 1;
  }
  if (!(cfg.epsilon > 0.0 && cfg.epsilon < 0.5)) {
    err << "error: --epsilon must lie in (0, 0.5)\n";
    return 1;
  }
  if (cfg.oracle && cfg.graph == GraphKind::dt) {
    err << "error: --oracle applies to beta/gg graphs only\n";
    return 1;
  }
  if (cfg.beta && !(std::isfinite(*cfg.beta) && *cfg.beta > 0.0)) {
    err << "error: --beta must be finite and positive\n";
    return 1;
  }

  SegmentSet S;
  try {
    S = parse_segments(cfg.input_path, cfg.normalize);
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  }

  if (const auto violation = validate_general_position(S)) {
    if (violation->kind == ViolationKind::collinear_endpoints) {
      err << "warning: " << violation->message << " (results may be degenerate)\n";
    } else {
      err << "input violation: " << violation->message << "\n";
      return 2;
    }
  }

  try {
    const double beta = cfg.graph == GraphKind::gg ? 1.0 : cfg.beta.value_or(1.0);
    BetaSpec spec{beta, cfg.variant, cfg.closure ? *cfg.closure : default_closure(beta)};
    if (cfg.graph == GraphKind::gg) spec = BetaSpec{1.0, Variant::lune, Closure::closed};

    SkeletonGraph g;
    if (cfg.graph == GraphKind::dt) {
      g = delaunay_graph(S, kDefaultDtResolution);
    } else if (cfg.oracle) {
      g = oracle_skeleton(S, spec, OracleConfig{cfg.grid, 1000});
    } else if (cfg.graph == GraphKind::gg) {
      g = gg_graph(S, cfg.epsilon);
    } else {
      g = beta_skeleton(S, spec, cfg.epsilon);
    }

    std::string json = "{\"format\":1,\"graph\":\"" + std::string(graph_name(cfg.graph)) + "\"";
    json += ",\"n\":" + std::to_string(g.n);
    if (cfg.graph != GraphKind::dt) {
      json += ",\"beta\":" + format_double(spec.beta);
      json += ",\"variant\":\"" + std::string(variant_name(spec.variant)) + "\"";
      json += ",\"closure\":\"" + std::string(closure_name(spec.closure)) + "\"";
      if (cfg.oracle)
        json += ",\"oracle\":true,\"grid\":" + std::to_string(cfg.grid);
      else
        json += ",\"epsilon\":" + format_double(cfg.epsilon);
    } else {
      json += ",\"resolution\":" + std::to_string(kDefaultDtResolution);
    }
    json += ",\"edges\":" + edges_json(g) + "}";
    out << json << "\n";

    if (cfg.svg_path) {
      const std::optional<BetaSpec> svg_spec =
          cfg.graph == GraphKind::dt ? std::nullopt : std::optional<BetaSpec>(spec);
      write_svg(*cfg.svg_path, S, g, svg_spec);
    }
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace segskel
