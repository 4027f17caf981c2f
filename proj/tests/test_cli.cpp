#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hookcomm/cli.hpp"
#include "hookcomm/errors.hpp"
#include "hookcomm/json_io.hpp"

using namespace hookcomm;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "hookcomm");
    std::vector<char*> argv;
    for (auto& a : args)
        argv.push_back(a.data());
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch_dir() {
    const fs::path dir = fs::temp_directory_path() / ("hookcomm_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    return dir;
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("argument parsing helpers") {
    CHECK(cli::parse_partition_arg("1,3,2") == make_partition({3, 2, 1}));
    CHECK(cli::parse_partition_arg(" 4 , 1 ") == make_partition({4, 1}));
    CHECK_THROWS_AS(cli::parse_partition_arg("3,,1"), InvalidInput);
    CHECK_THROWS_AS(cli::parse_partition_arg("a"), InvalidInput);
    CHECK(cli::parse_hook_arg("5,1") == std::pair{5, 1});
    CHECK_THROWS_AS(cli::parse_hook_arg("5"), InvalidInput);
    CHECK_THROWS_AS(cli::parse_hook_arg("5,1,1"), InvalidInput);
}

TEST_CASE("decide") {
    const Result no = run_cli({"decide", "--hook", "5,1", "--q", "3,3"});
    CHECK(no.code == cli::kDoesNotCommute);
    CHECK(no.out == "NO\n");

    const Result yes = run_cli({"decide", "--hook", "4,2", "--q", "1,2,3"});
    CHECK(yes.code == cli::kOk);
    CHECK(yes.out.find("case b k=2 mu=(3) delta=0") != std::string::npos);

    const Result json = run_cli({"--format", "json", "decide", "--hook", "3,3", "--q", "5,1"});
    CHECK(json.code == cli::kOk);
    const Json j = Json::parse(json.out);
    CHECK(j["commutes"] == true);
    CHECK(j["certificates"][0]["case"] == "c");
}

TEST_CASE("decide exit codes partition cleanly") {
    for (int total = 4; total <= 9; ++total)
        for (const auto& hook : hooks_of_size(total))
            for (const auto& q : enumerate_partitions(total)) {
                std::string q_text;
                for (int part : q.parts())
                    q_text += (q_text.empty() ? "" : ",") + std::to_string(part);
                const Result r = run_cli({"decide", "--hook",
                                          std::to_string(hook.n()) + "," + std::to_string(hook.m()),
                                          "--q", q_text});
                CHECK((r.code == cli::kOk || r.code == cli::kDoesNotCommute));
            }
}

TEST_CASE("input errors exit 2 with a one-line reason") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"decide", "--hook", "5,1", "--q", "3,3,1"},
             {"decide", "--hook", "2,4", "--q", "3,3"},
             {"decide", "--hook", "5,1"},
             {"table", "--N", "50"},
             {"jordan", "--matrix", "/nonexistent/file.json"},
             {"generic", "--p", "3,1", "--trials", "0"},
             {"bogus"},
         }) {
        const Result r = run_cli(args);
        CHECK(r.code == cli::kInputError);
        CHECK(r.err.rfind("error: ", 0) == 0);
        CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
    }
}

TEST_CASE("table") {
    const Result r = run_cli({"table", "--N", "6"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("the hook | type (a)") == 0);
    CHECK(r.out.find("(6), (4,2), (4,1^2), (3^2)\n") != std::string::npos);
    CHECK(r.out.find("(6), (5,1)\n") != std::string::npos);
    CHECK(r.out.find("| (6)\n") != std::string::npos);
    CHECK(r.out.find("(2^3)") == std::string::npos);

    const Result all = run_cli({"table", "--N", "6", "--include-universal"});
    CHECK(all.out.find("(2^3)") != std::string::npos);

    const Result json = run_cli({"--format", "json", "table", "--N", "6"});
    const Json j = Json::parse(json.out);
    REQUIRE(j.size() == 3);
    CHECK(j[2]["non_commuting"].dump() == "[[6]]");
    CHECK(j[1]["c"].dump() == "[[4,1,1]]");
}

TEST_CASE("enumerate") {
    const Result r = run_cli({"--format", "json", "enumerate", "--hook", "3,1"});
    CHECK(r.code == cli::kOk);
    CHECK(Json::parse(r.out).size() == 4);  // everything but (4)

    const Result text = run_cli({"enumerate", "--hook", "5,1", "--exclude-universal"});
    CHECK(text.out.find("type (a): (5,1), (3,2,1)\n") != std::string::npos);
    CHECK(text.out.find("(2^3)") == std::string::npos);

    CHECK(run_cli({"--max-n", "5", "enumerate", "--hook", "5,1"}).code == cli::kInputError);
}

TEST_CASE("witness and jordan") {
    const fs::path dir = scratch_dir();
    const fs::path out = dir / "w.json";
    const Result w = run_cli(
        {"witness", "--hook", "4,2", "--q", "3,2,1", "--case", "b", "--out", out.string()});
    CHECK(w.code == cli::kOk);
    const ExactMatrix m = matrix_from_json(Json::parse(read_file(out)));
    CHECK(jordan_type_of(m).jordan_type == make_partition({3, 2, 1}));

    const Result j = run_cli({"--format", "json", "jordan", "--matrix", out.string()});
    CHECK(j.code == cli::kOk);
    CHECK(Json::parse(j.out)["jordan_type"].dump() == "[3,2,1]");

    const fs::path zero = dir / "zero6.json";
    std::ofstream(zero) << to_json_value(ExactMatrix::zero(6, 6)).dump();
    const Result z = run_cli({"--format", "json", "jordan", "--matrix", zero.string()});
    CHECK(Json::parse(z.out)["jordan_type"].dump() == "[1,1,1,1,1,1]");

    const fs::path ident = dir / "id.json";
    std::ofstream(ident) << to_json_value(ExactMatrix::identity(3)).dump();
    const Result bad = run_cli({"jordan", "--matrix", ident.string()});
    CHECK(bad.code == cli::kInputError);
    CHECK(bad.err.find("not-nilpotent") != std::string::npos);

    CHECK(run_cli({"witness", "--hook", "5,1", "--q", "3,3"}).code == cli::kInputError);
    fs::remove_all(dir);
}

TEST_CASE("generic and oracle") {
    const Result g = run_cli({"generic", "--p", "8,1,1", "--trials", "20", "--seed", "3"});
    CHECK(g.code == cli::kOk);
    CHECK(g.out.rfind("D(8,1^2) = (8,2)\n", 0) == 0);

    const Result o = run_cli({"--format", "json", "oracle", "--hook", "5,1"});
    CHECK(o.code == cli::kOk);
    const Json j = Json::parse(o.out);
    CHECK(j["missing_vs_theorem"].empty());
    CHECK(j["extra_vs_theorem"].empty());
    CHECK(j["attained"].size() == 7);

    const Result too_big = run_cli({"oracle", "--hook", "3,4"});
    CHECK(too_big.code == cli::kInputError);
    CHECK(too_big.err.find("resource-limit") != std::string::npos);
}

TEST_CASE("json output is byte stable") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"--format", "json", "generic", "--p", "4,2,2,1", "--trials", "8", "--seed", "9"},
             {"--format", "json", "table", "--N", "7"},
             {"--format", "json", "oracle", "--hook", "4,2"},
             {"--format", "json", "decide", "--hook", "6,3", "--q", "3,3,2,1"},
         })
        CHECK(run_cli(args).out == run_cli(args).out);
}

TEST_CASE("installed binary") {
    const std::string cmd = std::string(HOOKCOMM_BINARY) +
                            " decide --hook 5,1 --q 3,3 > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    REQUIRE(WIFEXITED(status));
    CHECK(WEXITSTATUS(status) == cli::kDoesNotCommute);
}
