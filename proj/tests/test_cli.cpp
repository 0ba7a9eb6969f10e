#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

#include "kordered/constructions.hpp"
#include "kordered/graph6.hpp"

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args, const std::string& input = "") {
    Run r;
    std::string cmd = std::string(KORDERED_CLI) + " " + args + " 2>/dev/null";
    if (!input.empty()) {
        cmd = "printf '%s\\n' '" + input + "' | " + cmd;
    }
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        r.out.append(buf.data(), got);
    }
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

} // namespace

TEST_CASE("sharpness subcommand") {
    const Run r = run("sharpness --n 10 --format csv");
    CHECK(r.code == 0);
    CHECK(r.out.find("10,4,5,no-s-cycle,1 7 2 8") != std::string::npos);
    CHECK(run("sharpness --n-lo 8 --n-hi 40").code == 3);
}

TEST_CASE("gen writes graph6 and a sidecar") {
    const std::string sidecar = "cli_test_sidecar.json";
    const Run r = run("gen --type sharpness --n 10 --k 4 --sidecar " + sidecar);
    CHECK(r.code == 0);
    CHECK(r.out == kord::encode_graph6(kord::build_sharpness_graph(10, 4).graph) + "\n");
    std::ifstream in(sidecar);
    const auto j = nlohmann::json::parse(in);
    CHECK(j["witness"] == std::vector<int>{1, 7, 2, 8});
    std::remove(sidecar.c_str());
}

TEST_CASE("graphs flow through stdin") {
    const std::string g6 = kord::encode_graph6(kord::build_sharpness_graph(10, 4).graph);
    const Run none = run("scycle --seq 1,7,2,8", g6);
    CHECK(none.code == 0);
    CHECK(nlohmann::json::parse(none.out)["found"] == false);
    const Run some = run("scycle --seq 0,1,2,3 --format csv", g6);
    CHECK(some.out.rfind("n,sequence,found,cycle\n10,0 1 2 3,true,", 0) == 0);
    const Run ord = run("ordered --k 4", g6);
    const auto j = nlohmann::json::parse(ord.out);
    CHECK(j["ordered"] == false);
    CHECK(j["witness"].size() == 4);
    const Run reg = run("regular --a 0,1,2,3,4 --b 5,6,7,8,9 --eps 3/10", g6);
    CHECK(reg.code == 0);
    CHECK(nlohmann::json::parse(reg.out)["mode"] == "exact");
    CHECK(run("scycle --seq 0,0", g6).code == 3);
    CHECK(run("scycle --seq 0,1", "not-graph6").code == 1);
}

TEST_CASE("extremal subcommand exit codes") {
    CHECK(run("extremal --kind sparse --n 60 --k 4 --trials 2").code == 0);
    CHECK(run("extremal --kind dense --n 61 --k 3 --imbalance 0").code == 3);
    // d(A, B) reaches alpha here, so every row reports a hypothesis failure.
    CHECK(run("extremal --kind sparse --n 80 --k 8").code == 2);
}

TEST_CASE("timings are opt-in") {
    CHECK(run("scan --n 8 --k 3 --trials 2 --format csv").out.find("wall_ms") == std::string::npos);
    CHECK(run("scan --n 8 --k 3 --trials 2 --format csv --timings").out.find("wall_ms") != std::string::npos);
}
