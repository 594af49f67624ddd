#include "glassnet/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <openssl/evp.h>

#include "glassnet/errors.hpp"
#include "glassnet/version.hpp"

namespace glassnet {

using nlohmann::json;

namespace {

std::string format_double(double x) {
  if (std::isnan(x)) return "\"nan\"";
  if (std::isinf(x)) return x > 0 ? "\"inf\"" : "\"-inf\"";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

bool scalar(const json& j) { return !j.is_array() && !j.is_object(); }

void dump_into(const json& j, std::string& out, int indent, int depth) {
  const auto newline = [&](int d) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += json(key).dump();
        out += indent < 0 ? ":" : ": ";
        dump_into(value, out, indent, depth + 1);
      }
      newline(depth);
      out += '}';
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      const bool flat = std::all_of(j.begin(), j.end(), scalar);
      out += '[';
      bool first = true;
      for (const auto& value : j) {
        if (!first) out += flat && indent >= 0 ? ", " : ",";
        first = false;
        if (!flat) newline(depth + 1);
        dump_into(value, out, indent, depth + 1);
      }
      if (!flat) newline(depth);
      out += ']';
      return;
    }
    case json::value_t::number_float:
      out += format_double(j.get<double>());
      return;
    default:
      out += j.dump();
  }
}

json vector_json(const Vector& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

json box_json(const Box& b) {
  json a = json::array();
  for (const auto& iv : b.intervals) a.push_back(json::array({iv.lo, iv.hi}));
  return a;
}

json names_json(const GlassNetwork& net, const std::vector<int>& idx) {
  json a = json::array();
  for (int i : idx) a.push_back(net.name(i));
  return a;
}

double number(const json& j, const std::string& where) {
  if (!j.is_number()) throw ParseError(where + ": expected a number");
  return j.get<double>();
}

}  // namespace

GlassNetwork parse_network(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("network spec must be a JSON object");
  if (!doc.contains("variables") || !doc["variables"].is_array() || doc["variables"].empty())
    throw ParseError("\"variables\" must be a non-empty array");
  if (!doc.contains("focal_points") || !doc["focal_points"].is_object())
    throw ParseError("\"focal_points\" must be an object");

  std::vector<ThresholdLadder> ladders;
  std::vector<std::string> names;
  for (const auto& var : doc["variables"]) {
    const std::string where = "variable " + std::to_string(ladders.size() + 1);
    if (!var.is_object()) throw ParseError(where + ": expected an object");
    if (var.contains("name")) {
      if (!var["name"].is_string()) throw ParseError(where + ": name must be a string");
      names.push_back(var["name"].get<std::string>());
    } else {
      names.push_back("x" + std::to_string(ladders.size() + 1));
    }
    if (!var.contains("thresholds") || !var["thresholds"].is_array() || var["thresholds"].empty())
      throw ParseError(where + ": \"thresholds\" must be a non-empty array");
    ThresholdLadder ladder;
    for (const auto& t : var["thresholds"]) ladder.thresholds.push_back(number(t, where));
    ladders.push_back(std::move(ladder));
  }

  const std::size_t n = ladders.size();
  std::map<RegionIndex, Vector> focal;
  for (const auto& [key, value] : doc["focal_points"].items()) {
    const std::string where = "focal point \"" + key + "\"";
    RegionIndex region;
    if (n == 1 && key.find(',') == std::string::npos) {
      int level = -1;
      const auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), level);
      if (ec != std::errc() || ptr != key.data() + key.size() || level < 0)
        throw ParseError("bad region key '" + key + "'");
      region = RegionIndex{level};
    } else {
      region = RegionIndex::parse_key(key);
    }
    if (region.size() != n) throw ParseError(where + ": key needs " + std::to_string(n) + " levels");
    if (!value.is_array() || value.size() != n)
      throw ParseError(where + ": expected " + std::to_string(n) + " coordinates");
    Vector f(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) f[static_cast<Eigen::Index>(i)] = number(value[i], where);
    if (!focal.emplace(region, f).second) throw ParseError(where + ": duplicate region");
  }

  try {
    return GlassNetwork(std::move(ladders), std::move(focal), std::move(names));
  } catch (const InvalidNetworkError& e) {
    throw ParseError(e.what());
  }
}

GlassNetwork load_network(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_network(ss.str());
}

json network_to_json(const GlassNetwork& net) {
  json vars = json::array();
  for (int i = 0; i < net.dimension(); ++i) {
    json t = json::array();
    for (double x : net.ladder(i).thresholds) t.push_back(x);
    vars.push_back({{"name", net.name(i)}, {"thresholds", t}});
  }
  json focal = json::object();
  for (const auto& [region, f] : net.focal_points()) focal[region.key()] = vector_json(f);
  return {{"variables", vars}, {"focal_points", focal}};
}

std::string serialize_network(const GlassNetwork& net) { return dump_json(network_to_json(net)); }

std::string network_digest(const GlassNetwork& net) {
  const std::string text = serialize_network(net);
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw Error("SHA-256 digest failed");
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    hex += buf;
  }
  return hex;
}

std::string dump_json(const json& value, int indent) {
  std::string out;
  dump_into(value, out, indent, 0);
  return out;
}

json report_json(const GlassNetwork& net, const CycleClassification& c) {
  json cert;
  json entries = json::array();
  for (const auto& e : c.certificates.cycle.entries) {
    entries.push_back({{"region", e.region.key()},
                       {"switching", net.name(e.coordinate)},
                       {"direction", to_string(e.direction)},
                       {"zero", names_json(net, e.sets.zero)},
                       {"plus", names_json(net, e.sets.plus)},
                       {"minus", names_json(net, e.sets.minus)}});
  }
  cert["cycle"] = entries;
  cert["eigen_residual"] = c.certificates.eigen_residual;
  cert["iterations"] = c.certificates.iterations;
  cert["projective_diameter"] = c.certificates.projective_diameter ? json(*c.certificates.projective_diameter) : json();
  cert["contraction_rate"] = c.certificates.contraction_rate ? json(*c.certificates.contraction_rate) : json();
  cert["birkhoff_bound"] = c.certificates.birkhoff_bound ? json(*c.certificates.birkhoff_bound) : json();
  cert["trapping_box"] = c.certificates.trapping_box ? box_json(*c.certificates.trapping_box) : json();
  if (c.certificates.invariance)
    cert["invariance"] = {{"holds", c.certificates.invariance->holds},
                          {"margin", c.certificates.invariance->margin}};
  else
    cert["invariance"] = json();

  json waypoints = json::array();
  for (const auto& w : c.waypoints)
    waypoints.push_back({{"wall", w.wall.descriptor()}, {"point", vector_json(w.point)}, {"time", w.time}});

  json kept = json::array();
  for (int k : c.kept) kept.push_back(k + 1);

  return {{"tool", "glassnet"},
          {"version", kVersion},
          {"network_digest", network_digest(net)},
          {"cycle", c.cycle.to_string()},
          {"verdict", to_string(c.verdict)},
          {"marginal", c.marginal},
          {"lambda", c.lambda},
          {"period", c.period ? json(*c.period) : json()},
          {"fixed_point", c.fixed_point ? vector_json(*c.fixed_point) : json()},
          {"orbit_waypoints", waypoints},
          {"base_wall", c.cycle.wall(net, c.base_wall).descriptor()},
          {"spine", {{"empty", c.spine.empty}, {"box", c.spine.empty ? json() : box_json(c.spine.box)}}},
          {"frame", to_string(c.frame)},
          {"compressed", c.compressed},
          {"kept_coordinates", kept},
          {"certificates", cert}};
}

Vector parse_vector(std::string_view text) {
  std::vector<double> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find(',', pos), text.size());
    std::string part(text.substr(pos, end - pos));
    while (!part.empty() && part.front() == ' ') part.erase(part.begin());
    while (!part.empty() && part.back() == ' ') part.pop_back();
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (part.empty() || used != part.size())
      throw ParseError("bad coordinate '" + part + "' in \"" + std::string(text) + "\"");
    values.push_back(v);
    pos = end + 1;
  }
  return Eigen::Map<Vector>(values.data(), static_cast<Eigen::Index>(values.size()));
}

void write_trajectory_csv(std::ostream& os, const GlassNetwork& net, const EventTrajectory& traj) {
  const auto row = [&](const std::string& index, double t, const Vector& x, const std::string& wall) {
    os << index << ',' << format_double(t);
    for (Eigen::Index i = 0; i < x.size(); ++i) os << ',' << format_double(x[i]);
    os << ',' << wall << '\n';
  };
  os << "event_index,cumulative_time";
  for (const auto& name : net.names()) os << ',' << name;
  os << ",wall\n";
  row("0", 0.0, traj.start, "start");
  for (std::size_t k = 0; k < traj.events.size(); ++k) {
    const auto& e = traj.events[k];
    row(std::to_string(k + 1), e.cumulative_time, e.exit.point, e.exit.wall.descriptor());
  }
  const Vector& last = traj.events.empty() ? traj.start : traj.events.back().exit.point;
  row("status", traj.total_time(), last, to_string(traj.status));
}

void write_dot(std::ostream& os, const TransitionGraph& graph) {
  os << "digraph state_transitions {\n";
  for (const auto& node : graph.nodes) os << "  \"" << node.key() << "\";\n";
  for (std::size_t i = 0; i < graph.nodes.size(); ++i)
    for (std::size_t j : graph.successors[i])
      os << "  \"" << graph.nodes[i].key() << "\" -> \"" << graph.nodes[j].key() << "\";\n";
  os << "}\n";
}

json embedding_json(const GlassNetwork& net, const Embedding& emb, const GlassNetwork& embedded) {
  json rows = json::array();
  const auto names = emb.row_names(net);
  for (std::size_t r = 0; r < emb.rows().size(); ++r) {
    const auto& row = emb.rows()[r];
    rows.push_back({{"name", names[r]},
                    {"variable", net.name(row.variable)},
                    {"threshold_index", row.threshold_index + 1},
                    {"offset", row.offset}});
  }
  json B = json::array();
  const Matrix b = emb.B();
  for (Eigen::Index r = 0; r < b.rows(); ++r) {
    json line = json::array();
    for (Eigen::Index c = 0; c < b.cols(); ++c) line.push_back(static_cast<int>(b(r, c)));
    B.push_back(line);
  }
  return {{"dimension", emb.dimension()},
          {"source_dimension", emb.source_dimension()},
          {"rows", rows},
          {"B", B},
          {"offset", vector_json(emb.offset())},
          {"network", network_to_json(embedded)}};
}

}  // namespace glassnet
