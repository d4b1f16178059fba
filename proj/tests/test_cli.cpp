#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>

#include "edgeideal/suspension.hpp"

#ifndef EDGEIDEAL_CLI
#error "EDGEIDEAL_CLI must name the command-line binary"
#endif

namespace {

struct Run {
    int status = -1;
    std::string out;
};

// stdout only unless the command redirects itself
Run run(const std::string& args) {
    const std::string cmd = std::string(EDGEIDEAL_CLI) + " " + args;
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::string field(const std::string& text, const std::string& key) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (line.rfind(key + ": ", 0) == 0) return line.substr(key.size() + 2);
    return "<missing " + key + ">";
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) out.push_back(line);
    return out;
}

}  // namespace

TEST_CASE("invariants of the exceptional path suspension") {
    const auto r = run("invariants --path 4 --suspend 1,4");
    CHECK(r.status == 0);
    CHECK(field(r.out, "reg") == "2");
    CHECK(field(r.out, "pdim") == "3");
    CHECK(field(r.out, "a") == "0");
    CHECK(field(r.out, "indpoly_text") == "1 + 5*x + 5*x^2");
    // labels work as well as indices
    CHECK(run("invariants --path 4 --suspend x1,x4").out == r.out);
}

TEST_CASE("invariants of C6") {
    const auto r = run("invariants --cycle 6 --format json");
    CHECK(r.status == 0);
    const auto j = nlohmann::ordered_json::parse(r.out);
    CHECK(j.at("reg") == 2);
    CHECK(j.at("a") == 0);
    CHECK(j.at("pdim") == 4);
    CHECK(j.at("bight") == 4);
    CHECK(j.at("indpoly") == nlohmann::ordered_json::array({1, 6, 9, 2}));
    CHECK(j.at("indpoly_text") == "1 + 6*x + 9*x^2 + 2*x^3");
    // JSON re-emits byte for byte
    CHECK(j.dump() + "\n" == r.out);
}

TEST_CASE("verify exits 0 when every instance holds") {
    const auto r = run("verify cycle-suspension --n 3..9");
    CHECK(r.status == 0);
    CHECK(r.out == "cycle-suspension: 44 instances, 0 failed -> PASS\n");

    const auto json = run("verify path-suspension --format json");
    CHECK(json.status == 0);
    int fired = 0;
    for (const auto& line : lines_of(json.out)) {
        const auto record = edgeideal::InstanceRecord::from_json(line);
        CHECK(record.to_json() == line);
        for (const auto& [k, v] : record.tags)
            if (k == "fired" && v == "true") ++fired;
    }
    CHECK(fired == 3);
}

TEST_CASE("invalid input exits 2") {
    CHECK(run("invariants --path 0 2>/dev/null").status == 2);
    CHECK(run("invariants --path 3 --cycle 4 2>/dev/null").status == 2);
    CHECK(run("invariants 2>/dev/null").status == 2);
    CHECK(run("invariants --path 4 --suspend 9 2>/dev/null").status == 2);
    CHECK(run("invariants --path 4 --field gf:6 2>/dev/null").status == 2);
    CHECK(run("invariants --edges /nonexistent/graph.txt 2>/dev/null").status == 2);
    CHECK(run("verify no-such-theorem 2>/dev/null").status == 2);
    CHECK(run("verify cover-suspension --n 2..30 2>/dev/null").status == 2);
    CHECK(run("verify cover-suspension --n 9..3 2>/dev/null").status == 2);
    CHECK(run("frobnicate 2>/dev/null").status == 2);
    CHECK(run("2>/dev/null").status == 2);

    const auto diag = run("invariants --path 0 2>&1 >/dev/null");
    CHECK(diag.out.find("n >= 1") != std::string::npos);
}

TEST_CASE("edge-list input and suspend output") {
    const std::string path = "cli_test_graph.txt";
    {
        std::ofstream f(path);
        f << "# P4\n4\n1 2\n2 3\n3 4\n";
    }
    const auto from_file = run("invariants --edges " + path + " --suspend 1,4 --format json");
    const auto from_flag = run("invariants --path 4 --suspend 1,4 --format json");
    CHECK(from_file.status == 0);
    const auto a = nlohmann::json::parse(from_file.out);
    const auto b = nlohmann::json::parse(from_flag.out);
    CHECK(a.at("reg") == b.at("reg"));
    CHECK(a.at("indpoly") == b.at("indpoly"));

    const auto s = run("suspend --path 4 --suspend 1,4");
    CHECK(s.status == 0);
    const auto g = edgeideal::parse_edge_list(s.out);
    CHECK(g.order() == 5);
    CHECK(g.edge_count() == 5);
    std::remove(path.c_str());
}

TEST_CASE("betti output") {
    const auto t = run("betti --cycle 5 --format json");
    CHECK(t.status == 0);
    const auto j = nlohmann::json::parse(t.out);
    CHECK(j.at("reg") == 2);
    CHECK(j.at("pdim") == 3);
    const auto table = edgeideal::BettiTable::from_json(j.at("betti").dump(), 5, edgeideal::Field::rational());
    CHECK(table == edgeideal::hochster_betti_table(edgeideal::cycle_graph(5)));

    const auto csv = lines_of(run("betti --cycle 5 --format csv").out);
    REQUIRE(csv.size() == 5);
    CHECK(csv[0] == "graph,suspension,i,j,beta");
    CHECK(csv[4] == "cycle:5,,3,5,1");
    CHECK(run("betti --cycle 6").out.find("total: 1 6 9 6 2") != std::string::npos);
}

TEST_CASE("sweep and indpoly") {
    const auto sweep = lines_of(run("sweep --family path --n 2..12").out);
    REQUIRE(sweep.size() == 12);
    CHECK(sweep[0].rfind("graph,", 0) == 0);
    for (int n = 2; n <= 12; ++n) {
        const auto& row = sweep[n - 1];
        CHECK(row.rfind("path:" + std::to_string(n) + ",", 0) == 0);
    }
    const auto ip = run("indpoly --cycle 7 --format json");
    CHECK(ip.status == 0);
    const auto j = nlohmann::json::parse(ip.out);
    CHECK(j.at("indpoly") == nlohmann::json::array({1, 7, 14, 7}));
    CHECK_FALSE(j.contains("reg"));
}

TEST_CASE("identical configuration gives identical bytes") {
    for (const std::string args : {"verify ainv-cover --n 2..5 --format json --jobs 1",
                                   "verify morse-consistency --n 2..5 --format json --seed 7",
                                   "sweep --family cycle --n 3..10", "betti --cycle 8 --format json"}) {
        const auto a = run(args);
        const auto b = run(args);
        CHECK(a.status == 0);
        CHECK(a.out == b.out);
    }
    CHECK(run("verify ainv-cover --n 2..5 --format json --jobs 1").out ==
          run("verify ainv-cover --n 2..5 --format json --jobs 4").out);
}
