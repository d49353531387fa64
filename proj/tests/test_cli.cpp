// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#ifdef _WIN32
#error "the CLI tests assume a POSIX shell"
#endif
#include <sys/wait.h>
#include <unistd.h>

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

const std::string kCli = HETBLOCK_CLI_PATH;

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("hetblock_cli_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    static int& counter() {
        static int c = 0;
        return c;
    }
    std::string file(const std::string& name, const std::string& content) const {
        fs::path p = path / name;
        std::ofstream out(p);
        out << content;
        return p.string();
    }
    std::string at(const std::string& name) const { return (path / name).string(); }
};

int run(const std::string& args, const TempDir& dir) {
    std::string cmd = kCli + " " + args + " >" + dir.at("stdout.txt") + " 2>" +
                      dir.at("stderr.txt");
    int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    REQUIRE(WIFEXITED(status));
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json slurp_json(const std::string& path) { return json::parse(slurp(path)); }

const char* kC4Edges = "0 1\n1 2\n2 3\n3 0\n";
const char* kStarEdges = "# hub and three leaves\n0 1\n0 2\n0 3\n";

}  // namespace

TEST_CASE("cli usage errors exit with code 2") {
    TempDir dir;
    CHECK(run("", dir) == 2);
    CHECK(run("no-such-command", dir) == 2);
    CHECK(run("fit-alpha", dir) == 2);  // missing required argument
    CHECK(run("--help", dir) == 0);
}

TEST_CASE("cli parse errors exit with code 3") {
    TempDir dir;
    CHECK(run("fit-alpha " + dir.at("missing.txt"), dir) == 3);
    std::string loops = dir.file("loops.txt", "0 1\n2 2\n");
    CHECK(run("fit-alpha " + loops, dir) == 3);
    CHECK(slurp(dir.at("stderr.txt")).find(":2:") != std::string::npos);
    std::string dup = dir.file("dup.txt", "0 1\n1 2\n1 0\n");
    CHECK(run("fit-alpha " + dup, dir) == 3);
}

TEST_CASE("fit-alpha converges on the four-cycle") {
    TempDir dir;
    std::string edges = dir.file("c4.txt", kC4Edges);
    CHECK(run("fit-alpha " + edges + " --out-prefix " + dir.at("a"), dir) == 0);

    json report = slurp_json(dir.at("a_report.json"));
    CHECK(report["converged"] == true);
    CHECK(report["iterations"].get<int>() >= 1);
    CHECK(report["diverged"].empty());
    CHECK(report["residual"].get<double>() <= 1e-10);

    std::string csv = slurp(dir.at("a_params.csv"));
    CHECK(csv.rfind("vertex,degree,alpha,beta,flag\n", 0) == 0);
    std::istringstream ss(csv);
    std::string line;
    std::getline(ss, line);
    int rows = 0;
    while (std::getline(ss, line)) {
        ++rows;
        auto second_comma = line.find(',', line.find(',') + 1);
        double alpha = std::stod(line.substr(second_comma + 1));
        CHECK(alpha == doctest::Approx(1.4142135623730951).epsilon(1e-7));
    }
    CHECK(rows == 4);
}

TEST_CASE("fit-alpha reports boundary graphs with exit code 4") {
    TempDir dir;
    std::string edges = dir.file("star.txt", kStarEdges);
    CHECK(run("fit-alpha " + edges + " --out-prefix " + dir.at("s"), dir) == 4);
    json report = slurp_json(dir.at("s_report.json"));
    CHECK(report["converged"] == false);
    CHECK(report["diverged"].size() == 4);
    std::string csv = slurp(dir.at("s_params.csv"));
    CHECK(csv.find("to_infinity") != std::string::npos);
    CHECK(csv.find("to_zero") != std::string::npos);
    CHECK(csv.find("inf") != std::string::npos);
}

TEST_CASE("fit-rasch converges on an interior table") {
    TempDir dir;
    std::string table = dir.file("t.csv", "1,1,0\n0,1,1\n1,0,0\n");
    CHECK(run("fit-rasch " + table + " --out-prefix " + dir.at("r"), dir) == 0);
    json report = slurp_json(dir.at("r_report.json"));
    CHECK(report["converged"] == true);
    std::string rows = slurp(dir.at("r_rows.csv"));
    CHECK(rows.rfind("row,margin,b,beta,flag\n", 0) == 0);
    std::string cols = slurp(dir.at("r_cols.csv"));
    CHECK(cols.rfind("col,margin,g,gamma,flag\n", 0) == 0);
}

TEST_CASE("fit-rasch flags the all-ones table with exit code 4") {
    TempDir dir;
    std::string table = dir.file("ones.csv", "1,1\n1,1\n");
    CHECK(run("fit-rasch " + table + " --out-prefix " + dir.at("o"), dir) == 4);
    json report = slurp_json(dir.at("o_report.json"));
    CHECK(report["diverged"].size() == 2);
    std::string cols = slurp(dir.at("o_cols.csv"));
    CHECK(cols.find("undefined") != std::string::npos);
    CHECK(cols.find("nan") != std::string::npos);
}

TEST_CASE("fit-rasch accepts bipartite edge lists") {
    TempDir dir;
    std::string edges = dir.file("be.txt", "10 7\n10 8\n11 8\n11 9\n12 7\n");
    CHECK(run("fit-rasch " + edges + " --bipartite-edges --out-prefix " + dir.at("b"),
              dir) == 0);
    std::string rows = slurp(dir.at("b_rows.csv"));
    CHECK(rows.find("10,") != std::string::npos);
    CHECK(rows.find("12,") != std::string::npos);
}

TEST_CASE("check-seq prints verdicts") {
    TempDir dir;
    CHECK(run("check-seq \"2 2 2 2\" --json", dir) == 0);
    json j = json::parse(slurp(dir.at("stdout.txt")));
    CHECK(j["graphic"] == true);
    CHECK(j["boundary"] == false);

    CHECK(run("check-seq \"3 1 1 1\" --json", dir) == 0);
    j = json::parse(slurp(dir.at("stdout.txt")));
    CHECK(j["graphic"] == true);
    CHECK(j["boundary"] == true);

    CHECK(run("check-seq \"3 1 1\" --json", dir) == 0);
    j = json::parse(slurp(dir.at("stdout.txt")));
    CHECK(j["graphic"] == false);

    CHECK(run("check-seq --bipartite-rows 2,1 --bipartite-cols 2,1 --json", dir) == 0);
    j = json::parse(slurp(dir.at("stdout.txt")));
    CHECK(j["realizable"] == true);

    CHECK(run("check-seq --bipartite-rows 2,1 --bipartite-cols 1,1 --json", dir) == 0);
    j = json::parse(slurp(dir.at("stdout.txt")));
    CHECK(j["realizable"] == false);

    CHECK(run("check-seq", dir) == 2);
    CHECK(run("check-seq \"1 x\"", dir) == 3);
}

TEST_CASE("fit-blocks writes the partition, parameter table, and report") {
    TempDir dir;
    // Two 4-cycles joined by a two-edge matching in both directions.
    std::ostringstream edges;
    edges << "0 1\n1 2\n2 3\n3 0\n"
          << "4 5\n5 6\n6 7\n7 4\n"
          << "0 4\n1 5\n2 6\n3 7\n";
    std::string input = dir.file("g.txt", edges.str());
    std::string init = dir.file("init.csv",
                                "vertex,cluster\n0,1\n1,1\n2,1\n3,1\n4,2\n5,2\n6,2\n7,2\n");
    int code = run("fit-blocks " + input + " --k 2 --init file --init-file " + init +
                       " --out-prefix " + dir.at("blk"),
                   dir);
    CHECK((code == 0 || code == 4 || code == 5));

    std::string params = slurp(dir.at("blk_params.csv"));
    CHECK(params.rfind("vertex,label,degree,beta_1,beta_2\n", 0) == 0);
    std::string part = slurp(dir.at("blk_partition.csv"));
    CHECK(part.rfind("vertex,cluster\n", 0) == 0);
    int rows = static_cast<int>(std::count(part.begin(), part.end(), '\n'));
    CHECK(rows == 9);

    json report = slurp_json(dir.at("blk_report.json"));
    CHECK(report.contains("loglik_trace"));
    CHECK(report["loglik_trace"].size() >= 1);
    CHECK(report.contains("diverged"));
}

TEST_CASE("fit-blocks validates the initial partition") {
    TempDir dir;
    std::string input = dir.file("g.txt", "0 1\n1 2\n2 0\n3 4\n4 5\n5 3\n");
    std::string bad = dir.file("bad.csv", "vertex,cluster\n0,1\n1,1\n2,3\n3,2\n4,2\n5,2\n");
    CHECK(run("fit-blocks " + input + " --k 2 --init file --init-file " + bad +
                  " --out-prefix " + dir.at("x"),
              dir) == 3);
}

TEST_CASE("generate produces a round-trippable instance") {
    TempDir dir;
    std::string part = dir.file("p.csv", "vertex,cluster\n0,1\n1,1\n2,2\n3,2\n");
    std::string params = dir.file(
        "par.csv",
        "vertex,label,beta_1,beta_2\n0,1,2,0.5\n1,1,2,-0.5\n2,2,0.25,1.5\n3,2,-0.25,2\n");
    CHECK(run("generate --partition " + part + " --params " + params +
                  " --seed 5 --out-prefix " + dir.at("gen"),
              dir) == 0);
    CHECK(fs::exists(dir.at("gen_edges.txt")));
    std::string tp = slurp(dir.at("gen_true_params.csv"));
    CHECK(tp.rfind("vertex,label,degree,beta_1,beta_2\n", 0) == 0);
    std::string pcsv = slurp(dir.at("gen_partition.csv"));
    CHECK(std::count(pcsv.begin(), pcsv.end(), '\n') == 5);
}

TEST_CASE("generate --fig1 emits the benchmark instance") {
    TempDir dir;
    CHECK(run("generate --fig1 --seed 1 --out-prefix " + dir.at("f"), dir) == 0);
    std::string part = slurp(dir.at("f_partition.csv"));
    CHECK(std::count(part.begin(), part.end(), '\n') == 581);
    int c1 = 0, c2 = 0, c3 = 0;
    std::istringstream ss(part);
    std::string line;
    std::getline(ss, line);
    while (std::getline(ss, line)) {
        char c = line.back();
        if (c == '1') ++c1;
        else if (c == '2') ++c2;
        else if (c == '3') ++c3;
    }
    CHECK(c1 == 190);
    CHECK(c2 == 193);
    CHECK(c3 == 197);
}
