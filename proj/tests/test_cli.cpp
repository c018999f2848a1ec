#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "padent/json_io.hpp"

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string& args, const std::string& stdin_text = "") {
    auto dir = std::filesystem::temp_directory_path();
    auto input = dir / ("padent_cli_" + std::to_string(::getpid()) + ".json");
    std::ofstream(input) << stdin_text;
    std::string cmd = std::string(PADENT_CLI_PATH) + " " + args + " < " + input.string() + " 2>&1";
    Run r;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), n);
    int raw = ::pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    std::filesystem::remove(input);
    return r;
}

padent::io::Json json_of(const Run& r) { return padent::io::Json::parse(r.out); }

} // namespace

TEST_CASE("entropy from standard input") {
    Run r = run("entropy", R"({"group": {"p": 3, "n1": 1, "n2": 1},
                               "endo": {"zp<-zp": [["1"]], "qp<-zp": [["2"]], "qp<-qp": [["1/9"]]}})");
    REQUIRE(r.status == 0);
    CHECK(json_of(r)["entropy"]["value"]["3"] == 2);
}

TEST_CASE("newton subcommand") {
    Run r = run("newton --poly \"X^2-10/3X+1\" --p 3");
    REQUIRE(r.status == 0);
    auto j = json_of(r);
    CHECK(j["segments"][0]["slope"] == "-1");
    CHECK(j["segments"][1]["length"] == 1);

    Run text = run("newton --poly \"X^2-1/3\" --p 3 --format text");
    CHECK(text.status == 0);
    CHECK(text.out.find("command: newton") != std::string::npos);
}

TEST_CASE("heisenberg subcommand") {
    Run r = run("heisenberg --ring qp --s 1/3 --t 1 --p 3 --oracle");
    REQUIRE(r.status == 0);
    auto j = json_of(r);
    CHECK(j["endomorphism"]["oracle"]["value"]["3"] == 2);
    CHECK(run("heisenberg --ring zp --s 1/3 --t 1 --p 3").status == 3);
}

TEST_CASE("classify, scale, oracle and check-at") {
    CHECK(json_of(run("classify", R"({"group": {"p": 5, "n1": 2, "n3": 1, "torsion": [2]}})"))["classification"]["value"] ==
          "E0");
    CHECK(run("scale", R"({"p": 3, "matrix": [["1/3"]]})").status == 0);
    CHECK(run("oracle --cap 60 --window 5", R"({"p": 3, "matrix": [["1/3", "1"], ["0", "2"]]})").status == 0);
    CHECK(json_of(run("check-at", R"({"p": 3, "A1": [["1/3"]], "B": [["1"]], "A2": [["3"]]})"))["holds"] == true);
}

TEST_CASE("exit codes") {
    CHECK(run("entropy", "{not json").status == 2);
    CHECK(run("bogus").status == 2);
    CHECK(run("newton --p 3").status == 2);
    CHECK(run("entropy -f /nonexistent/file.json").status == 2);
    CHECK(run("entropy", R"({"group": {"p": 3, "n1": 1, "n2": 1}, "endo": {"zp<-qp": [["1"]]}})").status == 3);
    CHECK(run("entropy", R"({"group": {"p": 4, "n2": 1}})").status == 3);
    CHECK(run("oracle --window 3 --cap 4",
              R"({"p": 3, "matrix": [["0","0","0"], ["1/59049","0","0"], ["0","1/59049","0"]]})")
              .status == 4);
}
