#include <doctest.h>

#include <sstream>

#include "clonewt/cli.hpp"

using namespace clonewt;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(CLONEWT_TEST_DATA) + "/" + name; }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("weigh") {
    const auto r = run({"weigh", "--input", data("three_points.json"), "--rule", "cu", "--alpha", "1", "--nu",
                        "uniform", "--exact"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::ordered_json::parse(r.out);
    CHECK(doc["weights"]["a"] == "17/60");
    CHECK(doc["weights"]["c"] == "13/30");
    const auto csv = run({"weigh", "-i", data("three_points.json"), "--format", "csv", "--exact"});
    CHECK(csv.out == "label,weight\na,17/60\nb,17/60\nc,13/30\n");
  }

  TEST_CASE("weights documents round trip") {
    const auto r = run({"weigh", "-i", data("three_points.json"), "--rule", "mccp", "--alpha", "1.7", "--exact"});
    REQUIRE(r.code == 0);
    const auto parsed = cli::parse_weights_document(nlohmann::ordered_json::parse(r.out));
    CHECK(parsed.weights.is_exact());
    CHECK(parsed.labels == std::vector<std::string>{"a", "b", "c"});
    const auto again = cli::weights_document(parsed.alpha, parsed.rule, "uniform", parsed.labels, parsed.weights);
    CHECK(again.dump(2) + "\n" == r.out);

    const auto f = run({"weigh", "-i", data("square.json"), "--rule", "entropy"});
    const auto approx = cli::parse_weights_document(nlohmann::ordered_json::parse(f.out));
    CHECK_FALSE(approx.weights.is_exact());
    CHECK(cli::weights_document(approx.alpha, approx.rule, "uniform", approx.labels, approx.weights).dump(2) + "\n" ==
          f.out);
  }

  TEST_CASE("output is byte-identical across runs") {
    const std::vector<std::string> args{"share", "-i", data("square.json"), "--r", "0.6", "--seed", "4", "--samples",
                                        "20000", "--threads", "3"};
    CHECK(run(args).out == run(args).out);
    CHECK(run({"audit", "conjecture", "--budget", "30", "--seed", "2"}).out ==
          run({"audit", "conjecture", "--budget", "30", "--seed", "2"}).out);
  }

  TEST_CASE("exit codes") {
    CHECK(run({"audit", "graph", "--rule", "cu", "--seeds", "50"}).code == 0);
    CHECK(run({"audit", "graph", "--rule", "degree", "--seeds", "50"}).code == 2);
    CHECK(run({"audit", "-i", data("paw.edges"), "--rule", "cu", "--axioms", "2"}).code == 2);
    CHECK(run({"audit", "-i", data("paw.edges"), "--rule", "cu", "--axioms", "1"}).code == 0);
    const auto unknown = run({"weigh", "-i", data("three_points.json"), "--rule", "nosuch"});
    CHECK(unknown.code == 1);
    CHECK(unknown.err.find("mccp") != std::string::npos);
    CHECK(run({"weigh", "-i", data("missing.json")}).code == 1);
    CHECK(run({"weigh", "-i", data("three_points.json"), "--alpha", "0"}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({}).code == 1);
    CHECK(run({"share", "-i", data("square.json"), "--r", "0.6"}).code == 1);
    CHECK(run({"attack", "-i", data("three_points.json"), "--target", "a", "--eps", "0.1"}).code == 1);
    CHECK(run({"sample", "-i", data("three_points.json"), "--k", "3"}).code == 1);
    CHECK(run({"weigh", "-i", data("three_points.json"), "--rule", "entropy", "--exact"}).code == 1);
  }

  TEST_CASE("caps name their flag") {
    const auto r = run({"cliques", "-i", data("paw.edges"), "--clique-cap", "1"});
    CHECK(r.code == 1);
    CHECK(r.err.find("--clique-cap") != std::string::npos);
    const auto e = run({"entropy", "-i", data("paw.edges"), "--partition-cap", "2"});
    CHECK(e.code == 1);
    CHECK(e.err.find("--partition-cap") != std::string::npos);
  }

  TEST_CASE("other commands") {
    const auto g = run({"graph", "-i", data("three_points.json"), "-r", "0.5"});
    CHECK(g.out == "# labels: a b c\n0 1\n");
    const auto c = nlohmann::ordered_json::parse(run({"cliques", "-i", data("paw.edges")}).out);
    CHECK(c["cliques"].size() == 2);
    CHECK(c["membership"]["b"] == 2);
    const auto h = nlohmann::ordered_json::parse(run({"entropy", "-i", data("paw.edges")}).out);
    CHECK(h["graph_entropy"].get<double>() == doctest::Approx(1.0).epsilon(1e-9));
    const auto atk = nlohmann::ordered_json::parse(
        run({"attack", "-i", data("three_points.json"), "--target", "c", "--clones", "5"}).out);
    CHECK(atk["uniform_family_after"] == "3/4");
    const auto s = nlohmann::ordered_json::parse(run({"sample", "-i", data("three_points.json"), "--k", "4",
                                                      "--seed", "8"}).out);
    CHECK(s["samples"].size() == 4);
    const auto demo = run({"audit", "demo"});
    CHECK(demo.code == 0);
    CHECK(demo.out.find("contradiction") != std::string::npos);
    const auto share = nlohmann::ordered_json::parse(
        run({"share", "-i", data("three_points.json"), "--r", "1", "--remove", "a"}).out);
    CHECK(share["removal"]["holds"] == true);
    CHECK(share["estimator"]["method"] == "exact-1d");
  }
}
