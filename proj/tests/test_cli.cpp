#include <catch_amalgamated.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "acyclic/io.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string output;
};

Run run(const std::string& args, const std::string& env = "env -u ACYCLIC_SEED") {
    const std::string cmd = env + " " + std::string(ACYCLIC_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (const auto n = fread(buf, 1, sizeof buf, pipe)) {
        out.append(buf, n);
    }
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / ("acyclic-cli-" + std::to_string(getpid()))) { fs::create_directories(path); }
    ~TempDir() { fs::remove_all(path); }
    std::string operator/(const std::string& name) const { return (path / name).string(); }
};

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) {
        out.push_back(l);
    }
    return out;
}

}  // namespace

TEST_CASE("greedy output verifies") {
    TempDir dir;
    REQUIRE(run("color --mode greedy --generate petersen -o " + (dir / "p.json")).code == 0);
    const auto r = run("verify --generate petersen --coloring " + (dir / "p.json"));
    CHECK(r.code == 0);
    CHECK(r.output.find("acyclic") == 0);
}

TEST_CASE("verify reports a bichromatic 4-cycle") {
    TempDir dir;
    spit(dir / "c4.txt", "p edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n");
    spit(dir / "abab.json", R"({"palette_size": 2, "colors": [0, 1, 0, 1]})");
    const auto r = run("verify --graph " + (dir / "c4.txt") + " --coloring " + (dir / "abab.json"));
    CHECK(r.code == 5);
    CHECK(r.output.find("bichromatic cycle of length 4") != std::string::npos);
    CHECK(r.output.find("vertices: 1 2 3 4") != std::string::npos);

    spit(dir / "clash.json", R"({"palette_size": 3, "colors": [0, 0, 1, 2]})");
    CHECK(run("verify --graph " + (dir / "c4.txt") + " --coloring " + (dir / "clash.json")).code == 5);
    spit(dir / "short.json", R"({"palette_size": 3, "colors": [0, 1]})");
    CHECK(run("verify --graph " + (dir / "c4.txt") + " --coloring " + (dir / "short.json")).code == 3);
    spit(dir / "junk.json", "{palette");
    CHECK(run("verify --graph " + (dir / "c4.txt") + " --coloring " + (dir / "junk.json")).code == 2);
}

TEST_CASE("no-H bound sweep is non-increasing in Delta") {
    const auto r = run("bounds --mode no-H --k 2 --delta-grid 10..1e8");
    REQUIRE(r.code == 0);
    const auto ls = lines(r.output);
    REQUIRE(ls.size() == 2 + 8);
    CHECK(ls[0].rfind("# manifest: {", 0) == 0);
    CHECK(ls[1] == "delta,k,c,y,omega,palette_size,feasible");
    double prev = 1e300;
    for (std::size_t i = 2; i < ls.size(); ++i) {
        std::istringstream row(ls[i]);
        std::string delta, k, c;
        std::getline(row, delta, ',');
        std::getline(row, k, ',');
        std::getline(row, c, ',');
        CHECK(std::stod(c) <= prev);
        prev = std::stod(c);
    }
    CHECK(std::stod(lines(r.output)[2]) == 10.0);
}

TEST_CASE("other bound modes") {
    CHECK(run("bounds --mode short --delta-grid 1e4 --epsilon-grid 1 --r-grid 12").output.find("\n10000,1,12,67,") !=
          std::string::npos);
    CHECK(run("bounds --mode long --delta-grid 1e3 --epsilon-grid 0.05").code == 0);
    const auto g = run("bounds --mode girth --delta-grid 3 --epsilon-grid 0.1");
    CHECK(g.code == 0);
    CHECK(g.output.find(",0\n") != std::string::npos);
    CHECK(run("bounds --mode long --delta-grid 1e3 --epsilon-grid 0.1").code == 3);
    CHECK(run("bounds --mode no-H --delta-grid 10..x").code == 2);
}

TEST_CASE("parse errors exit with code 2") {
    TempDir dir;
    spit(dir / "loop.txt", "p edge 3 1\ne 1 1\n");
    const auto r = run("verify --graph " + (dir / "loop.txt") + " --coloring " + (dir / "none.json"));
    CHECK(r.code == 2);
    CHECK(r.output.find("line 2") != std::string::npos);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("color --mode sideways --generate petersen").code == 2);
    CHECK(run("color --generate \"wheel 5\"").code == 2);
}

TEST_CASE("seeded runs are byte-identical") {
    TempDir dir;
    const std::string args = "color --mode resample --generate \"random-regular 40 4 3\" --seed 11 -o ";
    REQUIRE(run(args + (dir / "a.json")).code == 0);
    const auto first = slurp(dir / "a.json");
    REQUIRE(run(args + (dir / "a.json")).code == 0);
    CHECK(slurp(dir / "a.json") == first);
    const auto doc = nlohmann::json::parse(slurp(dir / "a.json"));
    CHECK(doc["manifest"]["seed"] == 11);
    CHECK(doc["report"]["status"] == "success");

    const auto env = run("color --mode resample --generate \"cycle 9\"");
    CHECK(nlohmann::json::parse(env.output)["manifest"]["seed"] == 0);
    CHECK(run("color --mode resample --generate \"cycle 9\" --seed 0").output == env.output);
    const auto explicit_seed = run("color --mode resample --generate \"cycle 9\" --seed 7");
    CHECK(run("color --mode resample --generate \"cycle 9\"", "env ACYCLIC_SEED=7").output == explicit_seed.output);
    CHECK(run("color --mode resample --generate \"cycle 9\"", "env ACYCLIC_SEED=x").code == 2);

    const std::string sweep = "bounds --mode girth --delta-grid 3..1e6 --epsilon-grid 0.05,0.1 -o " + (dir / "g.csv");
    REQUIRE(run(sweep).code == 0);
    const auto csv = slurp(dir / "g.csv");
    REQUIRE(run(sweep).code == 0);
    CHECK(slurp(dir / "g.csv") == csv);
}

TEST_CASE("color failure classes") {
    CHECK(run("color --mode resample --generate \"complete 5\" --palette 3 --budget 20").code == 4);
    CHECK(run("color --mode two-phase --generate \"random-girth 60 3 8 1\" --epsilon 0.1").code == 3);
    TempDir dir;
    const auto ok = run("color --mode two-phase --experimental --generate \"cycle 50\" --seed 2 -o " + (dir / "c.json"));
    REQUIRE(ok.code == 0);
    CHECK(run("verify --generate \"cycle 50\" --coloring " + (dir / "c.json")).code == 0);
}

TEST_CASE("lcl-check prints exact rationals") {
    const auto r = run("lcl-check --generate \"cycle 3\" --palette 3 --omega 3 --omega 2.99");
    CHECK(r.code == 0);
    CHECK(r.output.find("Pr(E in A) = 2/9") != std::string::npos);
    CHECK(r.output.find("validate_cut: pass") != std::string::npos);
    CHECK(r.output.find("omega = 3: hypothesis pass (min slack 0") != std::string::npos);
    CHECK(r.output.find("omega = 299/100: hypothesis fail") != std::string::npos);
    CHECK(run("lcl-check --generate petersen --palette 3").code == 3);
    CHECK(run("lcl-check --generate \"cycle 3\" --omega 1/0").code == 2);

    TempDir dir;
    spit(dir / "psi.json", R"({"palette_size": 2, "colors": [0, 1, 0, 1]})");
    const auto rc = run("lcl-check --generate \"cycle 4\" --psi " + (dir / "psi.json") + " --p 1/4 --new-palette 2 --threshold 4");
    CHECK(rc.code == 0);
    CHECK(rc.output.find("instance: recolor, p 1/4") != std::string::npos);
}

TEST_CASE("census counts Petersen cycles") {
    const auto r = run("census --generate petersen --max-length 6");
    REQUIRE(r.code == 0);
    const auto ls = lines(r.output);
    REQUIRE(ls.size() == 2 + 4);
    CHECK(ls[4].rfind("\"petersen\",10,15,3,5,2,5,12,4,", 0) == 0);
    CHECK(ls[4].find("holds") != std::string::npos);
    CHECK(run("census").code == 2);
}
