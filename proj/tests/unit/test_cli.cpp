#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "rankbrittle/cli.hpp"
#include "rankbrittle/families.hpp"
#include "rankbrittle/graph6.hpp"
#include "rankbrittle/serialize.hpp"

using namespace rankbrittle;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

json report(const Run& r) { return json::parse(r.out); }

std::string without_timing(const std::string& text) {
  json j = json::parse(text);
  j.erase("timing_ms");
  return j.dump();
}

}  // namespace

TEST_CASE("param examples") {
  const Run lrw = run({"param", "lrw", "Bg"});
  CHECK(lrw.code == kExitOk);
  CHECK(report(lrw)["value"] == 1);
  CHECK(report(lrw)["witness"]["width"] == 1);
  CHECK(report(lrw)["command"] == "param lrw");

  const Run rb = run({"param", "rbrit", "--depth", "2", "--family", "path:4"});
  CHECK(rb.code == kExitOk);
  CHECK(report(rb)["value"] == 1);
  const Decomposition d = decomposition_from_json(report(rb)["witness"]);
  CHECK(decomposition_width(path(4), d) == 1);

  const Run cr = run({"param", "cutrank", "--set", "0,2", "--family", "path:4"});
  CHECK(cr.code == kExitOk);
  CHECK(report(cr)["value"] == 2);

  const Run rd = run({"param", "rankdepth", "Dhc"});
  CHECK(rd.code == kExitOk);
  CHECK(report(rd)["value"] == 2);

  const Run bk = run({"param", "betark", "--k", "2", "--family", "path:4"});
  CHECK(report(bk)["value"] == 1);
  CHECK(report(bk).contains("caps"));
  CHECK(report(bk).contains("timing_ms"));
}

TEST_CASE("construct examples") {
  CHECK(run({"construct", "path:3"}).out == "Bg\n");
  CHECK(run({"construct", "subdiv_star:3"}).out == to_graph6(subdivided_star(3)) + "\n");
  CHECK(run({"construct", "prod(half, edgeless:2, edgeless:2)"}).out == to_graph6(path(4).permuted({0, 2, 1, 3})) + "\n");
  CHECK(from_graph6("CY") == product(edgeless(2), edgeless(2), ProductKind::Half));
  const Run j = run({"construct", "path:3", "--format", "json"});
  CHECK(report(j)["graph6"] == "Bg");
  CHECK(run({"construct", "path:"}).code == kExitInput);
}

TEST_CASE("verify") {
  const Run r = run({"verify", "L4.6-1", "--n", "2"});
  CHECK(r.code == kExitOk);
  CHECK(report(r)["pass"] == true);
  CHECK(run({"verify", "P6.1", "--n", "6", "--samples", "20"}).code == kExitOk);
  CHECK(run({"verify", "L9.9"}).code == kExitInput);
  const Run list = run({"verify", "--list"});
  CHECK(list.out.find("S5-lower") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({"param", "rbrit", "Bg"}).code == kExitInput);               // missing --depth
  CHECK(run({"param", "betark", "Bg"}).code == kExitInput);              // missing --k
  CHECK(run({"param", "cutrank", "Bg"}).code == kExitInput);             // missing --set
  CHECK(run({"param", "lrw", "B!"}).code == kExitInput);                 // bad graph6
  CHECK(run({"param", "nonsense", "Bg"}).code == kExitInput);
  CHECK(run({"param", "lrw", "@/nonexistent/file"}).code == kExitInput);
  CHECK(run({}).code == kExitInput);
  const Run big = run({"param", "rbrit", "--depth", "2", "--family", "path:12"});
  CHECK(big.code == kExitResource);
  CHECK(report(big)["caps_hit"] == true);
  CHECK(run({"param", "rbrit", "--depth", "2", "--family", "path:12", "--caps", "rbrit2=12"}).code == kExitOk);
}

TEST_CASE("reports are deterministic and independent of the thread count") {
  const std::vector<std::string> base{"param", "rbrit", "--depth", "2", "--family", "prod(antimatch,complete:4,edgeless:4)"};
  const Run a = run(base);
  const Run b = run(base);
  auto threaded = base;
  threaded.push_back("--threads");
  threaded.push_back("3");
  const Run c = run(threaded);
  CHECK(without_timing(a.out) == without_timing(b.out));
  json ja = json::parse(a.out);
  json jc = json::parse(c.out);
  CHECK(ja["value"] == jc["value"]);
  CHECK(ja["witness"] == jc["witness"]);
  const std::vector<std::string> v{"verify", "L4.1", "--n", "6", "--samples", "20", "--seed", "5"};
  CHECK(without_timing(run(v).out) == without_timing(run(v).out));
}

TEST_CASE("graphs from files") {
  const std::string g6 = "cli_test_graph.g6";
  const std::string edges = "cli_test_graph.txt";
  {
    std::ofstream(g6) << "Bg\n";
    std::ofstream(edges) << "# path on four vertices\n4\n0 1\n1 2\n2 3\n";
  }
  CHECK(report(run({"param", "lrw", "@" + g6}))["value"] == 1);
  const Run e = run({"param", "cutrank", "--set", "0,2", "@" + edges});
  CHECK(e.code == kExitOk);
  CHECK(report(e)["value"] == 2);
  std::remove(g6.c_str());
  std::remove(edges.c_str());
}

TEST_CASE("table output") {
  const Run t = run({"param", "lrw", "Bg", "--format", "table"});
  CHECK(t.code == kExitOk);
  CHECK(t.out.find("value\t1") != std::string::npos);
}
