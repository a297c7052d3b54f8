#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <gmpxx.h>
#include <json.hpp>

using nlohmann::json;

namespace {

struct Run {
    int code = -1;
    std::string out;
    std::string err;
};

Run run(const std::string& args) {
    const auto err_file = std::filesystem::temp_directory_path() / "commkappa_cli_err.txt";
    const std::string cmd = std::string(COMMKAPPA_CLI) + " " + args + " 2>" + err_file.string();
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(err_file);
    r.err.assign(std::istreambuf_iterator<char>(in), {});
    return r;
}

std::string write_temp(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << text;
    return path.string();
}

}  // namespace

TEST_CASE("group profile of L2(4) and Q8") {
    Run r = run("group --family L2 --k 2");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["order"] == 60);
    CHECK(j["class_count"] == 5);

    r = run("group --family quaternion --k 2");
    REQUIRE(r.code == 0);
    j = json::parse(r.out);
    CHECK(j["order"] == 8);
    CHECK(j["center_size"] == 2);
}

TEST_CASE("group from generators, with graph export") {
    const std::string spec = write_temp("s3.json", R"j({"generators": ["(0 1 2)", "(0 1)"]})j");
    const std::string edges = (std::filesystem::temp_directory_path() / "s3_edges.txt").string();
    Run r = run("group " + spec + " --dump-graph " + edges);
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["order"] == 6);
    std::ifstream in(edges);
    int lines = 0;
    for (std::string line; std::getline(in, line);) ++lines;
    // identity to five others, plus the 3-cycle pair
    CHECK(lines == 6);

    const std::string gl = write_temp("sl23.json", R"j({"generators": [[[1,1],[0,1]], [[0,1],[2,0]]], "field": {"p": 3}})j");
    r = run("group " + gl);
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["order"] == 24);  // both generators have determinant 1: SL(2,3)
}

TEST_CASE("error exit codes") {
    Run r = run("group " + write_temp("bad_gen.json", R"j({"generators": ["(0 1 2)", "(1 1)"]})j"));
    CHECK(r.code == 3);
    CHECK(r.err.find("generator 1") != std::string::npos);
    CHECK(r.out.empty());

    r = run("group " + write_temp("bad_json.json", R"j({"generators": [)j"));
    CHECK(r.code == 2);

    r = run("group " + write_temp("both.json", R"j({"family": "dihedral", "generators": ["(0 1)"]})j"));
    CHECK(r.code == 2);

    r = run("group --family nonsense");
    CHECK(r.code == 2);

    r = run("group --family dihedral --k 5 --bogus");
    CHECK(r.code == 2);

    r = run("kappa --family symmetric --d 4 --method ac");
    CHECK(r.code == 4);

    r = run("partition --family symmetric --d 5 --find exact");
    CHECK(r.code == 4);
}

TEST_CASE("kappa subcommand") {
    Run r = run("kappa --family dihedral --k 5");
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["value"] == "125");

    r = run("kappa --family symmetric --d 3 --cross-check");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["value"] == "3");
    CHECK(j["engines_agreed"] == true);
    CHECK(j["engines"].size() == 4);

    r = run("kappa --family L2 --k 3 --method modular");
    REQUIRE(r.code == 0);
    mpz_class a, b, c;
    mpz_ui_pow_ui(a.get_mpz_t(), 2, 162);
    mpz_ui_pow_ui(b.get_mpz_t(), 3, 392);
    mpz_ui_pow_ui(c.get_mpz_t(), 7, 180);
    const mpz_class expected = a * b * c;
    CHECK(json::parse(r.out)["value"] == expected.get_str());
}

TEST_CASE("partition subcommand") {
    Run r = run("partition --family quaternion --k 2 --find exact");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["result"] == "found");
    CHECK(j["n"] == 2);
    CHECK(j["verified"] == true);

    const std::string cert = write_temp("q8_cert.json", r.out);
    r = run("partition --family quaternion --k 2 --verify " + cert);
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["ok"] == true);

    const std::string broken = write_temp("q8_broken.json", R"j({"A": [0, 1], "blocks": [[2, 3]]})j");
    r = run("partition --family quaternion --k 2 --verify " + broken);
    CHECK(r.code == 1);
    CHECK(json::parse(r.out)["ok"] == false);

    r = run("partition --family symmetric --d 3 --find exact");
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["result"] == "not_found");

    r = run("partition --family alternating --d 5 --bound");
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["bound"] == 11);
}

TEST_CASE("verify subcommand is deterministic and passes") {
    Run a = run("verify");
    Run b = run("verify");
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    json j = json::parse(a.out);
    CHECK(j.size() >= 20);
    int expected = 0;
    for (const auto& e : j)
        if (e["classification"] == "expected-mismatch") ++expected;
    CHECK(expected == 2);
}
