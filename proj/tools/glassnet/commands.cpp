#include "glassnet/commands.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <limits>

#include <CLI11.hpp>

#include "glassnet/attractor.hpp"
#include "glassnet/dynamics.hpp"
#include "glassnet/embedding.hpp"
#include "glassnet/errors.hpp"
#include "glassnet/io.hpp"
#include "glassnet/network.hpp"
#include "glassnet/version.hpp"

namespace glassnet::cli {

namespace {

// Runs body and maps library errors onto exit codes.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const glassnet::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
}

void write_to(const std::optional<std::string>& path, std::ostream& out,
              const std::function<void(std::ostream&)>& write) {
  if (!path) {
    write(out);
    return;
  }
  std::ofstream file(*path);
  if (!file) throw glassnet::ParseError("cannot write " + *path);
  write(file);
  if (!file) throw glassnet::ParseError("write to " + *path + " failed");
}

bool report_violations(const GlassNetwork& net, std::ostream& err) {
  const ValidationReport report = validate(net);
  for (const auto& v : report.violations) err << v << '\n';
  return report.ok();
}

}  // namespace

int cmd_validate(const std::string& network, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const GlassNetwork net = load_network(network);
    const ValidationReport report = validate(net);
    for (const auto& v : report.violations) out << v << '\n';
    if (!report.ok()) return kDomainError;
    out << "ok: " << net.dimension() << " variables, " << net.region_count() << " regions\n";
    return kOk;
  });
}

int cmd_simulate(const SimulateArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const GlassNetwork net = load_network(args.network);
    const Vector x0 = parse_vector(args.start);
    if (x0.size() != net.dimension())
      throw DomainError("start point has " + std::to_string(x0.size()) + " coordinates, network has " +
                        std::to_string(net.dimension()));
    std::optional<RegionIndex> entry;
    if (args.entry) entry = RegionIndex::parse_key(*args.entry);

    SimulationLimits limits;
    limits.max_events = args.max_events;
    limits.t_max = args.t_max;
    limits.spine_tol = args.spine_tol;
    try {
      for (const auto& cycle : find_cyclic_attractors(net)) {
        const Spine s = spine(net, cycle);
        if (!s.empty) limits.spines.push_back(s.box);
      }
    } catch (const MissingFocalError&) {
      // sparse focal map: no cycle discovery, so no spine detection
    }

    const EventTrajectory traj = simulate(net, x0, limits, entry);
    write_to(args.out, out, [&](std::ostream& os) { write_trajectory_csv(os, net, traj); });

    if (traj.status == TrajectoryStatus::SimultaneousSwitch) {
      err << "error: simultaneous switch of " << net.name(traj.tie->first) << " and "
          << net.name(traj.tie->second) << " at event " << traj.events.size() + 1 << '\n';
      return kDomainError;
    }
    if (traj.status == TrajectoryStatus::WallSliding) {
      err << "error: trajectory slides along a wall at event " << traj.events.size() + 1 << '\n';
      return kDomainError;
    }
    return kOk;
  });
}

int cmd_std(const std::string& network, const std::optional<std::string>& out_path,
            std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const GlassNetwork net = load_network(network);
    const TransitionGraph graph = state_transition_graph(net);
    write_to(out_path, out, [&](std::ostream& os) { write_dot(os, graph); });
    return kOk;
  });
}

int cmd_analyze(const AnalyzeArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (args.automatic == args.cycle.has_value())
      throw glassnet::ParseError("analyze needs exactly one of --cycle and --auto");
    const GlassNetwork net = load_network(args.network);
    if (!report_violations(net, err)) return kDomainError;

    ClassifyOptions options;
    options.degeneracy_tol = args.tol;
    options.base_wall = args.base_wall;

    nlohmann::json doc;
    if (args.cycle) {
      const CycleSpec cycle = CycleSpec::parse(*args.cycle);
      doc = report_json(net, classify(net, cycle, options));
    } else {
      doc = nlohmann::json::array();
      for (const auto& cycle : find_cyclic_attractors(net)) {
        ClassifyOptions o = options;
        o.base_wall = options.base_wall % cycle.size();
        doc.push_back(report_json(net, classify(net, cycle, o)));
      }
    }
    write_to(args.report, out, [&](std::ostream& os) { os << dump_json(doc) << '\n'; });
    return kOk;
  });
}

int cmd_embed(const EmbedArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const GlassNetwork net = load_network(args.network);
    nlohmann::json doc;
    if (args.cycle) {
      const CycleSpec cycle = CycleSpec::parse(*args.cycle);
      const Embedding emb = minimal_embedding(net, cycle);
      doc = embedding_json(net, emb, embed_network(net, emb, cycle.regions));
    } else {
      const Embedding emb = build_embedding(net);
      doc = embedding_json(net, emb, embed_network(net, emb));
    }
    write_to(args.out, out, [&](std::ostream& os) { os << dump_json(doc) << '\n'; });
    return kOk;
  });
}

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Glass network simulation and cyclic attractor analysis", "glassnet"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::string validate_path;
  auto* validate_cmd = app.add_subcommand("validate", "Check a network spec file");
  validate_cmd->add_option("network", validate_path, "Network JSON file")->required();

  SimulateArgs sim;
  auto* simulate_cmd = app.add_subcommand("simulate", "Event-driven trajectory as CSV");
  simulate_cmd->add_option("network", sim.network, "Network JSON file")->required();
  simulate_cmd->add_option("--start", sim.start, "Start point, e.g. \"-1,0\"")->required();
  simulate_cmd->add_option("--entry", sim.entry, "Region entered when the start lies on a wall");
  simulate_cmd->add_option("--max-events", sim.max_events, "Event budget")->capture_default_str();
  simulate_cmd->add_option("--t-max", sim.t_max, "Time budget");
  simulate_cmd->add_option("--spine-tol", sim.spine_tol, "Distance counted as spine convergence")
      ->capture_default_str();
  simulate_cmd->add_option("--out", sim.out, "CSV output path (stdout if omitted)");

  std::string std_path;
  std::optional<std::string> std_out;
  auto* std_cmd = app.add_subcommand("std", "State transition graph as DOT");
  std_cmd->add_option("network", std_path, "Network JSON file")->required();
  std_cmd->add_option("--out", std_out, "DOT output path (stdout if omitted)");

  AnalyzeArgs an;
  auto* analyze_cmd = app.add_subcommand("analyze", "Classify cyclic attractors");
  analyze_cmd->add_option("network", an.network, "Network JSON file")->required();
  analyze_cmd->add_option("--cycle", an.cycle, "Cycle such as \"00>10>11>01\"");
  analyze_cmd->add_flag("--auto", an.automatic, "Classify every cyclic attractor found");
  analyze_cmd->add_option("--base-wall", an.base_wall, "Index of the Poincare section wall")
      ->capture_default_str();
  analyze_cmd->add_option("--tol", an.tol, "Band around lambda = 1 reported as degenerate")
      ->capture_default_str();
  analyze_cmd->add_option("--report", an.report, "JSON output path (stdout if omitted)");

  EmbedArgs em;
  auto* embed_cmd = app.add_subcommand("embed", "Binary embedding of a network");
  embed_cmd->add_option("network", em.network, "Network JSON file")->required();
  embed_cmd->add_option("--cycle", em.cycle, "Keep only the thresholds crossed by this cycle");
  embed_cmd->add_option("--out", em.out, "JSON output path (stdout if omitted)");

  std::vector<const char*> cargv;
  for (const auto& a : argv) cargv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  if (validate_cmd->parsed()) return cmd_validate(validate_path, out, err);
  if (simulate_cmd->parsed()) return cmd_simulate(sim, out, err);
  if (std_cmd->parsed()) return cmd_std(std_path, std_out, out, err);
  if (analyze_cmd->parsed()) return cmd_analyze(an, out, err);
  return cmd_embed(em, out, err);
}

}  // namespace glassnet::cli
