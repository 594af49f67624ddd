#include <gtest/gtest.h>

#include <sstream>

#include "glassnet/errors.hpp"
#include "glassnet/io.hpp"
#include "oracles.hpp"

using namespace glassnet;
using glassnet::testing::fixture;
using glassnet::testing::vec;

TEST(ParseNetwork, NetC) {
  const auto c = fixture("net_c");
  EXPECT_EQ(c.dimension(), 2);
  EXPECT_EQ(c.ladder(0).thresholds, (std::vector<double>{0, 1}));
  EXPECT_EQ(c.focal({2, 1}), vec({0.5, 1}));
  EXPECT_EQ(c.names(), (std::vector<std::string>{"x1", "x2"}));
}

TEST(ParseNetwork, RoundTrip) {
  for (const char* name : {"net_a", "net_b", "net_c", "net_d", "net_e", "net_f", "equilibrium_1d"}) {
    const auto net = fixture(name);
    const auto text = serialize_network(net);
    EXPECT_EQ(parse_network(text), net) << name;
    EXPECT_EQ(serialize_network(parse_network(text)), text) << name;
  }
}

TEST(ParseNetwork, Errors) {
  EXPECT_THROW(load_network(glassnet::testing::fixture_path("malformed")), ParseError);
  EXPECT_THROW(load_network("/nonexistent/net.json"), ParseError);
  EXPECT_THROW(parse_network("[]"), ParseError);
  EXPECT_THROW(parse_network(R"({"variables": [], "focal_points": {}})"), ParseError);
  EXPECT_THROW(parse_network(R"({"variables": [{"thresholds": [0]}]})"), ParseError);
  EXPECT_THROW(parse_network(R"({"variables": [{"thresholds": ["a"]}], "focal_points": {}})"), ParseError);
  EXPECT_THROW(parse_network(R"({"variables": [{"thresholds": [0]}], "focal_points": {"0": [1, 2]}})"),
               ParseError);
  EXPECT_THROW(parse_network(R"({"variables": [{"thresholds": [0]}], "focal_points": {"3": [1]}})"),
               ParseError);
  EXPECT_THROW(parse_network(R"({"variables": [{"thresholds": [0]}, {"thresholds": [0]}],
                                 "focal_points": {"0": [1, 1]}})"),
               ParseError);
}

TEST(ParseNetwork, SemanticProblemsLeftToValidate) {
  const auto net = fixture("net_b_focal_on_threshold");
  EXPECT_FALSE(validate(net).ok());
}

TEST(Digest, StableAndSensitive) {
  const auto b = fixture("net_b");
  EXPECT_EQ(network_digest(b).size(), 64u);
  EXPECT_EQ(network_digest(b), network_digest(parse_network(serialize_network(b))));
  EXPECT_NE(network_digest(b), network_digest(fixture("net_e")));
}

TEST(DumpJson, SortedKeysAndSeventeenDigits) {
  const nlohmann::json j = {{"b", 0.1}, {"a", 16.0}, {"c", {1, 2}}, {"d", kInfinity}, {"e", nullptr}};
  EXPECT_EQ(dump_json(j, -1), R"({"a":16,"b":0.10000000000000001,"c":[1,2],"d":"inf","e":null})");
  EXPECT_EQ(dump_json(nlohmann::json::array(), 2), "[]");
  EXPECT_EQ(dump_json({{"k", {1.5, -2.0}}}, 2), "{\n  \"k\": [1.5, -2]\n}");
}

TEST(ParseVector, Examples) {
  EXPECT_EQ(parse_vector("-1,0"), vec({-1, 0}));
  EXPECT_EQ(parse_vector(" 0.5 , -3 "), vec({0.5, -3}));
  EXPECT_THROW(parse_vector("1,,2"), ParseError);
  EXPECT_THROW(parse_vector("1,x"), ParseError);
}

TEST(TrajectoryCsv, Layout) {
  const auto b = fixture("net_b");
  SimulationLimits limits;
  limits.max_events = 2;
  std::ostringstream os;
  write_trajectory_csv(os, b, simulate(b, vec({-1, 0}), limits));
  std::istringstream in(os.str());
  std::vector<std::string> lines;
  for (std::string l; std::getline(in, l);) lines.push_back(l);
  ASSERT_EQ(lines.size(), 5u);
  EXPECT_EQ(lines[0], "event_index,cumulative_time,x1,x2,wall");
  EXPECT_EQ(lines[1], "0,0,-1,0,start");
  EXPECT_EQ(lines[2], "1,0.69314718055994529,0,-1,x1@1:up");
  EXPECT_EQ(lines[4].rfind("status,", 0), 0u);
  EXPECT_NE(lines[4].find(",Budget"), std::string::npos);
}

TEST(Dot, NetB) {
  std::ostringstream os;
  write_dot(os, state_transition_graph(fixture("net_b")));
  const std::string dot = os.str();
  EXPECT_EQ(dot.rfind("digraph", 0), 0u);
  EXPECT_NE(dot.find("\"0,0\" -> \"1,0\";"), std::string::npos);
  EXPECT_NE(dot.find("\"0,1\" -> \"0,0\";"), std::string::npos);
}

TEST(Report, NetBFields) {
  const auto b = fixture("net_b");
  const auto r = report_json(b, classify(b, CycleSpec::parse("00>10>11>01")));
  EXPECT_EQ(r["verdict"], "UniqueOrbit");
  EXPECT_EQ(r["cycle"], "00>10>11>01");
  EXPECT_EQ(r["base_wall"], "x2@1:down");
  EXPECT_EQ(r["network_digest"], network_digest(b));
  EXPECT_EQ(r["orbit_waypoints"].size(), 4u);
  EXPECT_EQ(r["certificates"]["cycle"].size(), 4u);
  EXPECT_NEAR(r["period"].get<double>(), std::log(16.0), 1e-12);
}
