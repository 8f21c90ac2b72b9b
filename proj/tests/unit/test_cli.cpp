#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "cbn/cli.hpp"
#include "fixtures.hpp"

using namespace cbn;
using namespace cbn::testing;
using nlohmann::json;

namespace {

struct Outcome {
    int status;
    std::string out;
    std::string err;
    json doc() const { return json::parse(out); }
};

Outcome run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int status = cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

std::vector<std::string> strings(const json& j) { return j.get<std::vector<std::string>>(); }

}  // namespace

TEST_CASE("validate") {
    const auto ok = run_cli({"validate", data_path("two_cycle_unique.json")});
    CHECK(ok.status == cli::kExitOk);
    CHECK(ok.doc()["valid"] == true);
    const auto bad = run_cli({"validate", data_path("missing_row.json")});
    CHECK(bad.status == cli::kExitInvalid);
    CHECK(bad.doc()["issues"][0]["kind"] == "MissingCptRow");
    CHECK_FALSE(bad.err.empty());
    CHECK(run_cli({"validate", data_path("bad_iota.json")}).status == cli::kExitInvalid);
    CHECK(run_cli({"validate", data_path("nope.json")}).status == cli::kExitInvalid);
    CHECK(run_cli({}).status == cli::kExitInvalid);
}

TEST_CASE("semantics cpt reports the unique vector with its order") {
    const auto r = run_cli({"semantics", data_path("two_cycle_unique.json"), "--kind", "cpt"});
    REQUIRE(r.status == cli::kExitOk);
    const auto d = r.doc();
    CHECK(d["status"] == "Unique");
    CHECK(strings(d["vector"]) == std::vector<std::string>{"1/10", "3/10", "3/10", "3/10"});
    CHECK(strings(d["order"]["assignments"]) == std::vector<std::string>{"00", "01", "10", "11"});
    CHECK(strings(d["order"]["variables"]) == std::vector<std::string>{"X", "Y"});
    CHECK(run_cli({"semantics", data_path("two_cycle_empty.json"), "--kind", "cpt"}).doc()["status"] == "Empty");
    CHECK(run_cli({"semantics", data_path("two_cycle_infinite.json"), "--kind", "wcpt"}).doc()["status"] == "Infinite");
}

TEST_CASE("semantics mc with the four-state chain") {
    const auto r = run_cli({"semantics", data_path("two_cycle_chain.json"), "--kind", "mc", "--cutset", "X,Y", "--gamma0",
                            "uniform"});
    REQUIRE(r.status == cli::kExitOk);
    CHECK(strings(r.doc()["vector"]) == std::vector<std::string>{"48/121", "18/121", "40/121", "15/121"});
    const auto named = run_cli({"semantics", data_path("two_cycle_chain.json"), "--kind", "limavg", "--cutset", "X,Y",
                                "--gamma0", "dirac:X=T,Y=F"});
    CHECK(named.doc()["vector"] == r.doc()["vector"]);
}

TEST_CASE("lim on the periodic chain") {
    const auto f = data_path("two_cycle_cycle4.json");
    const auto tt = run_cli({"semantics", f, "--kind", "lim", "--cutset", "X,Y", "--gamma0", "dirac:11"});
    CHECK(tt.doc()["status"] == "UndefinedPeriodic");
    CHECK(tt.doc()["periods"][0] == 4);
    const auto u = run_cli({"semantics", f, "--kind", "lim", "--cutset", "X,Y"});
    CHECK(u.doc()["status"] == "Defined");
    CHECK(run_cli({"semantics", f, "--kind", "lim", "--cutset", "X,Y", "--gamma0", "dirac:1"}).status ==
          cli::kExitInvalid);
}

TEST_CASE("cpti exit codes") {
    const auto uni = run_cli({"semantics", data_path("two_cycle_unique.json"), "--kind", "cpti"});
    CHECK(uni.status == cli::kExitOk);
    CHECK(strings(uni.doc()["vector"]) == std::vector<std::string>{"1/10", "3/10", "3/10", "3/10"});
    const auto inf = run_cli({"semantics", data_path("two_cycle_infinite.json"), "--kind", "cpti"});
    CHECK(inf.status == cli::kExitUnsupported);
    CHECK_FALSE(inf.err.empty());
}

TEST_CASE("bn semantics") {
    CHECK(run_cli({"semantics", data_path("two_cycle_unique.json"), "--kind", "bn"}).doc()["status"] == "Empty");
    CHECK(run_cli({"semantics", data_path("bad_iota.json"), "--kind", "bn"}).status == cli::kExitInvalid);
}

TEST_CASE("chain, classify, cutsets, dsep, oracle") {
    const auto chain = run_cli({"chain", data_path("two_cycle_chain.json"), "--cutset", "X,Y"});
    REQUIRE(chain.status == cli::kExitOk);
    CHECK(strings(chain.doc()["matrix"][0]) == std::vector<std::string>{"3/8", "3/8", "1/8", "1/8"});
    CHECK(chain.doc()["bsccs"][0]["period"] == 1);
    CHECK(run_cli({"chain", data_path("three_node.json"), "--cutset", "X"}).status == cli::kExitInvalid);

    const auto cls = run_cli({"classify", data_path("two_cycle_unique.json"), "--cutset", "X"});
    CHECK(cls.doc()["cardinality"] == "1");
    CHECK(cls.doc()["smooth"] == true);

    const auto cuts = run_cli({"cutsets", data_path("three_node.json"), "--minimal"});
    CHECK(cuts.doc()["cutsets"] == json::parse(R"([["Y"], ["Z"]])"));

    const auto ds = run_cli({"dsep", data_path("three_node.json"), "--x", "X", "--y", "Y", "--given", "Z"});
    CHECK(ds.status == cli::kExitOk);
    CHECK(ds.doc().contains("d_separated"));

    const auto it = run_cli({"oracle", "iterate", data_path("two_cycle_cycle4.json"), "--cutset", "X,Y", "--steps", "4",
                             "--gamma0", "dirac:11"});
    REQUIRE(it.status == cli::kExitOk);
    CHECK(it.doc()["steps"][4] == it.doc()["steps"][0]);
}

TEST_CASE("pretty format") {
    const auto r = run_cli({"--format", "pretty", "semantics", data_path("two_cycle_unique.json"), "--kind", "cpt"});
    CHECK(r.status == cli::kExitOk);
    CHECK(r.out.find("vector: 1/10 3/10 3/10 3/10") != std::string::npos);
    CHECK(r.out.find("status: Unique") != std::string::npos);
}
