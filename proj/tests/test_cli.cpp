#include <doctest.h>

#include <sstream>

#include "bosonic/cli.hpp"
#include "bosonic/demazure.hpp"
#include "bosonic/json_io.hpp"

using namespace bosonic;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("hl-r emits canonical JSON") {
    CliResult res = run({"hl-r", "--rank", "2", "--lambda", "1,0"});
    CHECK(res.code == 0);
    CHECK(res.out == poly_to_json(r_polynomial({1, 0})).dump() + "\n");
    // deterministic across invocations
    CHECK(run({"hl-r", "--rank", "2", "--lambda", "1,0"}).out == res.out);
}

TEST_CASE("hl-p and tau") {
    CliResult res = run({"hl-p", "--lambda", "1,1"});
    CHECK(res.code == 0);
    CHECK(res.out == poly_to_json(p_polynomial({1, 1})).dump() + "\n");
    CliResult tau_res = run({"tau", "--lambda", "1,0", "--w", "2,1"});
    CHECK(tau_res.code == 0);
    CHECK(tau_res.out ==
          poly_to_json(tau({1, 0}, Permutation::simple(2, 1), Permutation::identity(2)))
                  .dump() +
              "\n");
}

TEST_CASE("partition-function subcommand") {
    CliResult res = run({"partition-function", "--model", "colored", "--family", "R",
                         "--rank", "3", "--lambda", "2,1,0", "--top-flag", "1,2,3",
                         "--right-flag", "2,1,3", "--json"});
    CHECK(res.code == 0);
    LaurentPoly expected = partition_function(
        SystemSpec::colored(Family::R, {2, 1, 0}, {1, 2, 3}, {2, 1, 3}));
    CHECK(res.out == poly_to_json(expected).dump() + "\n");

    CliResult viaTm = run({"partition-function", "--model", "uncolored", "--family", "P",
                           "--lambda", "2,0", "--method", "transfer"});
    CHECK(viaTm.code == 0);
    CHECK(viaTm.out ==
          poly_to_json(partition_function(SystemSpec::uncolored(Family::P, {2, 0}))).dump() +
              "\n");
    CliResult states =
        run({"partition-function", "--model", "uncolored", "--family", "R", "--lambda",
             "1,0", "--dump-states"});
    CHECK(states.code == 0);
    CHECK(states.out.find("\"states\"") != std::string::npos);
}

TEST_CASE("sigma methods produce byte-identical output") {
    for (const std::string& lam : {"1,0,-1", "2,1,0", "0,2,1"}) {
        CliResult via_tau = run({"sigma", "--rank", "3", "--lambda", lam, "--w", "2,1,3",
                                 "--method", "tau"});
        CliResult via_lat = run({"sigma", "--rank", "3", "--lambda", lam, "--w", "2,1,3",
                                 "--method", "lattice"});
        CHECK(via_tau.code == 0);
        CHECK(via_lat.code == 0);
        CHECK(via_tau.out == via_lat.out);
        CHECK(via_tau.out.find("half_q_exponent") != std::string::npos);
    }
}

TEST_CASE("verify monostatic from the command line") {
    CliResult res = run({"verify", "--check", "monostatic", "--lambda", "4,2,2",
                         "--top-flag", "1,3,2", "--text"});
    CHECK(res.code == 0);
    CHECK(res.out.find("PASS") != std::string::npos);
    CHECK(res.out.find("z1^4*z2^2*z3^2*t") != std::string::npos);
}

TEST_CASE("verify exit codes") {
    // P-family global lifting fails with exit code 1
    CliResult fail = run({"verify", "--check", "global-lifting", "--lambda", "0,0",
                          "--family", "P"});
    CHECK(fail.code == 1);
    Json rep = Json::parse(fail.out);
    CHECK(rep["pass"] == false);
    CHECK(rep["failures"].size() == 1);

    CliResult ok = run({"verify", "--check", "global-lifting", "--lambda", "1,0",
                        "--family", "R"});
    CHECK(ok.code == 0);

    CliResult props = run({"verify", "--check", "laurent-props", "--rank", "2",
                           "--trials", "20", "--seed", "7"});
    CHECK(props.code == 0);
}

TEST_CASE("every verify check dispatches") {
    CHECK(run({"verify", "--check", "ybe-uncolored", "--nmax", "2"}).code == 0);
    CHECK(run({"verify", "--check", "ybe-colored", "--rank", "2", "--mmax", "1"}).code ==
          0);
    CHECK(run({"verify", "--check", "ybe-aux", "--rank", "2", "--nmax", "2"}).code == 0);
    CHECK(run({"verify", "--check", "local-lifting", "--rank", "2", "--nmax", "2"}).code ==
          0);
    CHECK(run({"verify", "--check", "demeval", "--lambda", "1,0"}).code == 0);
    CHECK(run({"verify", "--check", "demtrain", "--lambda", "1,0", "--index", "1", "--w",
               "2,1"})
              .code == 0);
    CHECK(run({"verify", "--check", "uncolored-pf", "--lambda", "2,1"}).code == 0);
    CHECK(run({"verify", "--check", "k-biinvariance", "--lambda", "1,0"}).code == 0);
    CHECK(run({"verify", "--check", "sigma-consistency", "--rank", "2", "--max-abs",
               "1"})
              .code == 0);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({"no-such-command"}).code == 2);
    CHECK(run({"hl-r"}).code == 2);                                // missing lambda
    CHECK(run({"hl-r", "--lambda", "0,1"}).code == 2);             // not dominant
    CHECK(run({"verify", "--check", "bogus"}).code == 2);          // unknown check
    CHECK(run({"sigma", "--lambda", "1,0", "--w", "1,2", "--method", "psychic"}).code ==
          2);
    CHECK(run({}).code == 2);
}

TEST_CASE("demazure-apply reports op, input, output") {
    CliResult res = run({"demazure-apply", "--rank", "2", "--op", "dl", "--index", "1",
                         "--monomial", "1,0"});
    CHECK(res.code == 0);
    Json j = Json::parse(res.out);
    CHECK(j["op"] == "dl");
    CHECK(j["index"] == 1);
    CHECK(poly_from_json(j["output"]) == dl_apply(1, LaurentPoly::z(2, 1)));
    CliResult om =
        run({"demazure-apply", "--rank", "2", "--op", "omega", "--monomial", "1,0"});
    CHECK(Json::parse(om.out)["output"] ==
          poly_to_json(LaurentPoly::z(2, 1) + LaurentPoly::z(2, 2)));
}

TEST_CASE("dump-weights") {
    CliResult res = run({"dump-weights", "--table", "rmatrix-uncolored"});
    CHECK(res.code == 0);
    // golden file: the six nonzero crossing patterns, byte for byte
    const std::string golden =
        R"({"table":"rmatrix-uncolored","family":"R","entries":[)"
        R"({"config":{"sw":"+","nw":"+","ne":"+","se":"+"},"weight":{"rank":2,"terms":[{"z":[0,1],"t":1,"c":"-1"},{"z":[1,0],"t":0,"c":"1"}]}},)"
        R"({"config":{"sw":"+","nw":"-","ne":"+","se":"-"},"weight":{"rank":2,"terms":[{"z":[0,1],"t":1,"c":"-1"},{"z":[1,0],"t":1,"c":"1"}]}},)"
        R"({"config":{"sw":"+","nw":"-","ne":"-","se":"+"},"weight":{"rank":2,"terms":[{"z":[0,1],"t":0,"c":"1"},{"z":[0,1],"t":1,"c":"-1"}]}},)"
        R"({"config":{"sw":"-","nw":"+","ne":"+","se":"-"},"weight":{"rank":2,"terms":[{"z":[1,0],"t":0,"c":"1"},{"z":[1,0],"t":1,"c":"-1"}]}},)"
        R"({"config":{"sw":"-","nw":"+","ne":"-","se":"+"},"weight":{"rank":2,"terms":[{"z":[0,1],"t":0,"c":"-1"},{"z":[1,0],"t":0,"c":"1"}]}},)"
        R"({"config":{"sw":"-","nw":"-","ne":"-","se":"-"},"weight":{"rank":2,"terms":[{"z":[0,1],"t":1,"c":"-1"},{"z":[1,0],"t":0,"c":"1"}]}}]})"
        "\n";
    CHECK(res.out == golden);
    CliResult mono =
        run({"dump-weights", "--table", "monochrome", "--rank", "2", "--nmax", "1"});
    CHECK(mono.code == 0);
    CHECK(Json::parse(mono.out)["entries"].size() > 0);
    CliResult fused =
        run({"dump-weights", "--table", "fused", "--rank", "2", "--mmax", "1",
             "--family", "P"});
    CHECK(fused.code == 0);
    CHECK(Json::parse(fused.out)["family"] == "P");
}
