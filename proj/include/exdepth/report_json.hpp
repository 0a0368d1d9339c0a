#pragma once

// JSON and text renderings of depth reports and Betti data.

#include <iomanip>
#include <sstream>
#include <string>

#include "json.hpp"

#include "exdepth/depth.hpp"
#include "exdepth/hochster.hpp"

namespace exdepth {

using Json = nlohmann::ordered_json;

inline Json sigma_json(VertexSet s) {
  Json a = Json::array();
  bits::for_each(s, [&](int v) { a.push_back(v + 1); });
  return a;
}

inline Json to_json(const BoundsReport& b) {
  Json j;
  j["general"] = b.general;
  if (b.bipartite) j["bipartite"] = *b.bipartite;
  j["attained_general"] = b.attained_general;
  if (b.attained_bipartite) j["attained_bipartite"] = *b.attained_bipartite;
  j["applies"] = b.applies;
  j["satisfied_general"] = b.satisfied_general;
  if (b.satisfied_bipartite) j["satisfied_bipartite"] = *b.satisfied_bipartite;
  if (b.extremal_shape) j["extremal_shape"] = *b.extremal_shape;
  return j;
}

inline BoundsReport bounds_from_json(const Json& j) {
  BoundsReport b;
  b.general = j.at("general").get<double>();
  if (j.contains("bipartite")) b.bipartite = j["bipartite"].get<int>();
  b.attained_general = j.at("attained_general").get<bool>();
  if (j.contains("attained_bipartite")) b.attained_bipartite = j["attained_bipartite"].get<bool>();
  b.applies = j.at("applies").get<bool>();
  b.satisfied_general = j.at("satisfied_general").get<bool>();
  if (j.contains("satisfied_bipartite")) b.satisfied_bipartite = j["satisfied_bipartite"].get<bool>();
  if (j.contains("extremal_shape")) b.extremal_shape = j["extremal_shape"].get<bool>();
  return b;
}

inline Json to_json(const DepthReport& r) {
  Json j;
  j["n"] = r.n;
  j["depth_E"] = r.depth_E;
  j["cx_E"] = r.cx_E;
  if (r.depth_S) j["depth_S"] = *r.depth_S;
  if (r.pd_S) j["pd_S"] = *r.pd_S;
  if (r.reg) j["reg"] = *r.reg;
  if (r.variety)
    j["variety"] = r.variety->to_lists();
  else
    j["variety_omitted"] = r.variety_omitted;
  j["method"] = r.method;
  j["bounds"] = to_json(r.bounds);
  return j;
}

inline DepthReport report_from_json(const Json& j) {
  DepthReport r;
  r.n = j.at("n").get<int>();
  r.depth_E = j.at("depth_E").get<int>();
  r.cx_E = j.at("cx_E").get<int>();
  if (j.contains("depth_S")) r.depth_S = j["depth_S"].get<int>();
  if (j.contains("pd_S")) r.pd_S = j["pd_S"].get<int>();
  if (j.contains("reg")) r.reg = j["reg"].get<int>();
  if (j.contains("variety"))
    r.variety = CoordinateSubspaceUnion::from_lists(r.n, j["variety"].get<std::vector<std::vector<int>>>());
  if (j.contains("variety_omitted")) r.variety_omitted = j["variety_omitted"].get<std::string>();
  r.method = j.at("method").get<std::vector<std::string>>();
  r.bounds = bounds_from_json(j.at("bounds"));
  return r;
}

inline std::string render_json(const DepthReport& r) { return to_json(r).dump(); }

inline std::string render_text(const DepthReport& r, const Graph* g = nullptr) {
  std::ostringstream os;
  auto row = [&](const std::string& k, const std::string& v) { os << std::left << std::setw(10) << k << v << '\n'; };
  row("n", std::to_string(r.n));
  row("depth_E", std::to_string(r.depth_E));
  row("cx_E", std::to_string(r.cx_E));
  if (r.depth_S) row("depth_S", std::to_string(*r.depth_S));
  if (r.pd_S) row("pd_S", std::to_string(*r.pd_S));
  if (r.reg) row("reg", std::to_string(*r.reg));
  if (r.variety)
    row("variety", g != nullptr ? r.variety->render(*g) : r.variety->render());
  else
    row("variety", "(" + r.variety_omitted + ")");
  for (std::size_t i = 0; i < r.method.size(); ++i) row(i == 0 ? "method" : "", r.method[i]);
  std::ostringstream b;
  b << std::setprecision(6) << "general " << r.bounds.general
    << (r.bounds.attained_general ? " (attained)" : "");
  if (r.bounds.bipartite) b << ", bipartite " << *r.bounds.bipartite << (*r.bounds.attained_bipartite ? " (attained)" : "");
  if (!r.bounds.applies) b << "; not applicable, graph has isolated vertices";
  if (r.bounds.extremal_shape) b << "; W(K_m, m-1) shape " << (*r.bounds.extremal_shape ? "confirmed" : "NOT found");
  row("bounds", b.str());
  return os.str();
}

inline Json to_json(const BettiData& b) {
  Json j;
  j["n"] = b.n;
  Json entries = Json::array();
  for (const auto& e : b.entries) {
    Json x;
    x["i"] = e.i;
    x["sigma"] = sigma_json(e.sigma);
    x["value"] = e.value;
    entries.push_back(std::move(x));
  }
  j["entries"] = std::move(entries);
  j["pd_S"] = b.pd_S;
  j["depth_S"] = b.depth_S;
  j["reg"] = b.reg;
  j["max_shift"] = b.max_shift;
  return j;
}

}  // namespace exdepth
