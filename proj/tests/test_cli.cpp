#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "udg/io.hpp"

namespace {

struct Run {
    int status;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(UDG_CLI_PATH) + " " + args + " 2>cli_stderr.txt";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe);
    std::string out;
    char buf[4096];
    while (const auto got = fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
    const int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write(const std::string& path, const std::string& text) {
    std::ofstream(path) << text;
}

std::string csv_digest(const std::string& out) {
    const auto line = out.substr(out.find('\n') + 1);
    const auto comma = line.rfind(',');
    return line.substr(comma + 1, 16);
}

std::size_t count(const std::string& hay, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
    return n;
}

const char* kPath = "udg 1\nn 3\ns 0.9 -1\nt 0.9 1\n0 0\n0.9 0\n1.8 0\n";
const char* kTriangle = "udg 1\nn 3\ns 0 0\nt 0 5\n0.4763 0.275\n-0.4763 0.275\n0 -0.55\n";
const char* kOneSided = "udg 1\nn 3\ns 0 0\nt 0 5\n-1 1\n-1.5 1.2\n-1.2 0.3\n";

}  // namespace

TEST_CASE("generate") {
    const std::string args = "generate --style large1 --width 32 --height 8 --n 5000 --seed 7 --out ";
    REQUIRE(run(args + "gen_a.udg").status == 0);
    REQUIRE(run(args + "gen_b.udg").status == 0);
    const auto a = slurp("gen_a.udg");
    CHECK(a == slurp("gen_b.udg"));
    CHECK(udg::load_instance("gen_a.udg").points.size() == 5000);

    REQUIRE(run("generate --n 0 --out gen_empty.udg").status == 0);
    CHECK(udg::load_instance("gen_empty.udg").points.empty());

    CHECK(run("generate --style huge --out x.udg").status != 0);
    CHECK(run("generate --width -1 --out x.udg").status != 0);
}

TEST_CASE("sssp") {
    write("path.udg", kPath);
    const auto r = run("sssp path.udg --root 0 --dump path_tree.txt");
    REQUIRE(r.status == 0);
    CHECK(r.out.rfind("algorithm,instance,n,preprocess_s,per_root_s,roots,answer_digest\n", 0) == 0);
    std::ifstream in("path_tree.txt");
    const auto tree = udg::read_result(in);
    CHECK(tree.tree.dist == std::vector<udg::hop_count>{0, 1, 2});

    REQUIRE(run("generate --style small1 --width 8 --height 2 --n 500 --seed 3 --out r500.udg").status == 0);
    CHECK(run("sssp r500.udg --verify").status == 0);
    CHECK(run("sssp r500.udg --verify --algorithm grid --no-hints").status == 0);

    const auto grid = run("sssp r500.udg --algorithm grid --roots 20 --root-seed 5");
    const auto bfs = run("sssp r500.udg --algorithm bfs --roots 20 --root-seed 5");
    const auto del = run("sssp r500.udg --algorithm delaunay --roots 20 --root-seed 5 --parallel-roots 4");
    REQUIRE(grid.status == 0);
    CHECK(csv_digest(grid.out) == csv_digest(bfs.out));
    CHECK(csv_digest(grid.out) == csv_digest(del.out));

    CHECK(run("sssp path.udg --root 3").status != 0);
    write("broken.udg", "udg 1\nn 2\ns 0 0\nt 1 1\n0 0\n");
    CHECK(run("sssp broken.udg").status != 0);
}

TEST_CASE("separate") {
    write("tri.udg", kTriangle);
    auto r = run("separate tri.udg --algorithm compact --verify --out tri_result.txt");
    REQUIRE(r.status == 0);
    CHECK(r.out.find("size 3\n") != std::string::npos);
    CHECK(r.out.find("witness root ") != std::string::npos);

    write("onesided.udg", kOneSided);
    r = run("separate onesided.udg --verify");
    CHECK(r.status == 0);
    CHECK(r.out.find("size INFEASIBLE") != std::string::npos);

    REQUIRE(run("generate --style small1 --width 8 --height 2 --n 200 --seed 11 --out r200.udg").status == 0);
    CHECK(run("separate r200.udg --verify").status == 0);
    CHECK(run("separate r200.udg --algorithm generic --verify --csv sep.csv").status == 0);
    CHECK(run("separate r200.udg --no-early-exit --verify").status == 0);

    write("covered.udg", "udg 1\nn 1\ns 0 0\nt 0 5\n0.1 0\n");
    CHECK(run("separate covered.udg").status != 0);
}

TEST_CASE("render") {
    write("path.udg", kPath);
    REQUIRE(run("sssp path.udg --root 0 --dump path_tree.txt").status == 0);
    REQUIRE(run("render path.udg --result path_tree.txt --out path.svg").status == 0);
    const auto svg = slurp("path.svg");
    CHECK(count(svg, "class=\"tree\"") == 2);
    REQUIRE(run("render path.udg --result path_tree.txt --out path2.svg").status == 0);
    CHECK(svg == slurp("path2.svg"));

    write("tri.udg", kTriangle);
    REQUIRE(run("separate tri.udg --out tri_result.txt").status == 0);
    REQUIRE(run("render tri.udg --result tri_result.txt --out tri.svg --disks").status == 0);
    const auto tri = slurp("tri.svg");
    CHECK(count(tri, "<polygon class=\"cycle\"") == 1);
    CHECK(count(tri, "class=\"disk\"") == 3);
    std::ifstream in("tri_result.txt");
    CHECK(udg::read_result(in).cycle.size() == 3);

    REQUIRE(run("generate --n 0 --out gen_empty.udg").status == 0);
    REQUIRE(run("render gen_empty.udg --out empty.svg").status == 0);
    const auto empty = slurp("empty.svg");
    CHECK(count(empty, "class=\"point\"") == 0);
    CHECK(count(empty, "class=\"st\"") == 1);
    CHECK(count(empty, "class=\"terminal\"") == 2);

    write("garbage.txt", "nonsense\n");
    CHECK(run("render path.udg --result garbage.txt --out x.svg").status != 0);
}
