#include "heckeaf/afalg/export.hpp"
#include "heckeaf/cli/commands.hpp"
#include "heckeaf/cli/report.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace heckeaf;

namespace {

const std::string kData = HECKEAF_DATA_DIR;
const std::string kTestData = HECKEAF_TEST_DATA_DIR;

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli_run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / "heckeaf_cli_tests";
    std::filesystem::create_directories(dir);
    return dir / name;
}

nlohmann::json read_json(const std::filesystem::path& p) {
    std::ifstream in(p);
    return nlohmann::json::parse(in);
}

std::string fixture(int level) { return kData + "/fixtures/newform_" + std::to_string(level) + ".json"; }

}  // namespace

TEST_CASE("cf prints digits and convergents") {
    auto r = cli_run({"cf", "355/113"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.rfind("[3, 7, 16] (terminating)", 0) == 0);
    CHECK(r.out.find("355/113") != std::string::npos);

    r = cli_run({"cf", "0,1", "--poly", "x^2-2"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.rfind("preperiod [1], period [2]", 0) == 0);
    CHECK(r.out.find("1393/985") != std::string::npos);

    r = cli_run({"cf", "0,1", "--poly", "x^2-x-1"});
    CHECK(r.out.rfind("preperiod [], period [1]", 0) == 0);
}

TEST_CASE("cf errors map to exit codes") {
    CHECK(cli_run({"cf", "0/1"}).code == cli::kDomainError);
    CHECK(cli_run({"cf", "abc"}).code == cli::kInputError);
    CHECK(cli_run({"cf", "0,1", "--poly", "x^2-4"}).code == cli::kInputError);
    CHECK(cli_run({"cf", "0,1", "--poly", "2*x^2-1"}).code == cli::kInputError);
    CHECK(cli_run({}).code == cli::kInputError);
    CHECK(cli_run({"frobnicate"}).code == cli::kInputError);
}

TEST_CASE("jpa reports the period of the cube root of two") {
    auto r = cli_run({"jpa", "0,1,0", "0,0,1", "--poly", "x^3-2"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("period [(3, 3)]") != std::string::npos);

    r = cli_run({"jpa", "0,1,0", "0,0,1", "--poly", "x^3-2", "--max-steps", "1"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("no period detected within 1 steps") != std::string::npos);

    CHECK(cli_run({"jpa", "1,0", "--poly", "x^2+1"}).code == cli::kDomainError);
    CHECK(cli_run({"jpa", "0,1"}).code == cli::kInputError);
}

TEST_CASE("jpa export writes a stationary diagram") {
    const auto path = scratch("golden.json");
    auto r = cli_run({"jpa", "0,1", "--poly", "x^2+x-1", "--export", "json", path.string()});
    CHECK(r.code == cli::kOk);
    std::ifstream in(path);
    std::stringstream s;
    s << in.rdbuf();
    auto d = import_bratteli_json(s.str());
    REQUIRE(std::holds_alternative<StationaryAF>(d));
    CHECK(std::get<StationaryAF>(d).period_matrix == IntMatrix{{0, 1}, {1, 1}});

    r = cli_run({"jpa", "0,1", "--poly", "x^2+x-1", "--export", "dot"});
    CHECK(r.out.find("digraph bratteli") != std::string::npos);
    CHECK(cli_run({"jpa", "0,1", "--poly", "x^2+x-1", "--export", "svg"}).code == cli::kInputError);
}

TEST_CASE("factor") {
    auto r = cli_run({"factor", "[[0,1,3],[0,0,1],[1,1,3]]"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out == "[(0, 1), (0, 3)]\n");
    CHECK(cli_run({"factor", R"([["2","5"],["5","12"]])"}).out == "[(2), (2), (2)]\n");

    r = cli_run({"factor", "[[1,0,0],[0,0,1],[0,1,0]]"});
    CHECK(r.code == cli::kDomainError);
    CHECK(r.err.find("NotFactorizable") != std::string::npos);
    CHECK(r.err.find("remainder [[1, 0, 0], [0, 0, 1], [0, 1, 0]]") != std::string::npos);

    CHECK(cli_run({"factor", "[[1,0],[0,1]]"}).code == cli::kDomainError);
    CHECK(cli_run({"factor", "[[1,2]"}).code == cli::kInputError);
}

TEST_CASE("af on the bundled fixtures") {
    auto r = cli_run({"af", fixture(11)});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("type: trivial") != std::string::npos);

    const auto path = scratch("report_23.json");
    r = cli_run({"af", fixture(23), "--conjugates", "--report", path.string(), "--no-timings"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("char poly: x^2 - x - 1") != std::string::npos);
    auto j = read_json(path);
    CHECK(j["status"] == "ok");
    CHECK(j["level"] == "23");
    CHECK_FALSE(j.contains("timings_ms"));
    auto rep = cli::report_from_json(j);
    REQUIRE(rep.pipeline);
    CHECK(rep.pipeline->af_type == "stationary");
    REQUIRE(rep.companion);
    CHECK(rep.companion->char_polys_equal);

    // Serial and parallel runs write identical reports.
    const auto serial = scratch("report_23_serial.json");
    cli_run({"af", fixture(23), "--conjugates", "--report", serial.string(), "--no-timings", "--serial"});
    CHECK(read_json(serial) == j);
}

TEST_CASE("af on the corrupted fixture") {
    const auto path = scratch("report_corrupt.json");
    auto r = cli_run({"af", kTestData + "/newform_11_corrupt.json", "--report", path.string()});
    CHECK(r.code == cli::kInputError);
    auto j = read_json(path);
    CHECK(j["status"] == "error");
    CHECK(j["error"]["code"] == "HeckeRelationViolated");
    CHECK(j["error"]["relation"] == nlohmann::json::array({"2", "3"}));
    CHECK(j["label"] == "11.2.a.a-corrupt");
    CHECK(j["verification"]["first_failure"] == nlohmann::json::array({"2", "3"}));
    CHECK(cli_run({"af", kTestData + "/missing.json"}).code == cli::kInputError);
}

TEST_CASE("input error classification") {
    CHECK(cli::is_input_error(ErrorCode::SchemaError));
    CHECK(cli::is_input_error(ErrorCode::HeckeRelationViolated));
    CHECK(cli::is_input_error(ErrorCode::NotMonic));
    CHECK_FALSE(cli::is_input_error(ErrorCode::NotFactorizable));
    CHECK_FALSE(cli::is_input_error(ErrorCode::UnitNotFound));
}
