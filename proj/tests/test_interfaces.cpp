#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

#include "cli.hpp"
#include "specladder/config.hpp"
#include "specladder/models.hpp"
#include "specladder/oracle.hpp"
#include "specladder/render.hpp"

using namespace specladder;

namespace {

std::filesystem::path temp_file(const std::string& stem, const std::string& contents) {
    const std::filesystem::path path =
        std::filesystem::temp_directory_path() /
        (stem + "." + std::to_string(::getpid()) + ".tmp");
    std::ofstream out(path);
    out << contents;
    return path;
}

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    CliResult result;
    result.code = cli::run(args, out, err);
    result.out = out.str();
    result.err = err.str();
    return result;
}

}  // namespace

TEST_CASE("configuration defaults and overlays") {
    const Config cfg = Config::defaults();
    CHECK(cfg.get_double("consistency.tol_abs") == 1e-10);
    CHECK(cfg.get_count("ho1d.points") == 3000);
    CHECK(cfg.get_count("dirac.levels") == 2);
    CHECK(cfg.get_string("hydrogen2d.tol_rel") == "1e-2");
    CHECK(cfg.has("perturbed-ho.basis_dim"));
    CHECK_FALSE(cfg.has("no-such.key"));

    const Config overlay = Config::parse("# comment\n\nho1d.levels = 7\n");
    CHECK(overlay.get_count("ho1d.levels") == 7);
    // Everything not named keeps its default.
    CHECK(overlay.get_count("dirac.levels") == 2);
}

TEST_CASE("configuration parse errors carry line numbers") {
    try {
        Config::parse("ho1d.levels = 3\nho1d.points 4000\n");
        FAIL("expected a parse error");
    } catch (const InvalidParameter& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    CHECK_THROWS_AS(Config::parse("\n\nnodot = 3\n"), InvalidParameter);
    CHECK_THROWS_AS(Config::parse("a.b =\n"), InvalidParameter);
}

TEST_CASE("configuration value accessors") {
    Config cfg = Config::defaults();
    cfg.set("x.word", "abc");
    CHECK_THROWS_AS(cfg.get_double("x.word"), InvalidParameter);
    cfg.set("x.frac", "3.5");
    CHECK(cfg.get_double("x.frac") == 3.5);
    CHECK_THROWS_AS(cfg.get_count("x.frac"), InvalidParameter);
    cfg.set("x.neg", "-2");
    CHECK_THROWS_AS(cfg.get_count("x.neg"), InvalidParameter);
    CHECK_THROWS_AS(cfg.get_string("missing.key"), InvalidParameter);
}

TEST_CASE("checked-in config file mirrors the built-in defaults") {
    const std::string path = std::string(SPECLADDER_SOURCE_DIR) + "/specladder.cfg";
    CHECK(Config::load(path).raw() == Config::defaults().raw());
}

TEST_CASE("configuration resolution order") {
    const auto flag_path = temp_file("specladder_cfg_flag", "ho1d.levels = 9\n");
    const auto env_path = temp_file("specladder_cfg_env", "ho1d.levels = 11\n");
    ::setenv("SPECLADDER_CONFIG", env_path.c_str(), 1);

    CHECK(Config::resolve(flag_path.string()).get_count("ho1d.levels") == 9);
    CHECK(Config::resolve("").get_count("ho1d.levels") == 11);
    ::unsetenv("SPECLADDER_CONFIG");
    CHECK(Config::resolve("").get_count("ho1d.levels") == 3);
    CHECK_THROWS_AS(Config::resolve("/no/such/file.cfg"), InvalidParameter);

    std::filesystem::remove(flag_path);
    std::filesystem::remove(env_path);
}

TEST_CASE("spectrum rendering") {
    const ModelSpectrum spec = ho_1d(PhysicalUnits{}, 3);
    SUBCASE("csv") {
        CHECK(render_spectrum(spec, OutputFormat::Csv) ==
              "k,energy\n0,0.5\n1,1.5\n2,2.5\n");
    }
    SUBCASE("table carries the header and params") {
        const std::string text = render_spectrum(spec, OutputFormat::Table);
        CHECK(text.find("model: ho1d   units: hbar*omega") != std::string::npos);
        CHECK(text.find("params: hbar=1 omega=1") != std::string::npos);
        CHECK(text.find("energy") != std::string::npos);
    }
    SUBCASE("json keys keep insertion order") {
        const std::string text = render_spectrum(spec, OutputFormat::Json);
        const auto model_at = text.find("\"model\"");
        const auto units_at = text.find("\"units\"");
        const auto params_at = text.find("\"params\"");
        const auto levels_at = text.find("\"levels\"");
        REQUIRE(model_at != std::string::npos);
        CHECK(model_at < units_at);
        CHECK(units_at < params_at);
        CHECK(params_at < levels_at);
    }
    SUBCASE("json round trip is exact") {
        const ModelSpectrum back = parse_spectrum_json(render_spectrum(spec, OutputFormat::Json));
        CHECK(back.model_name == spec.model_name);
        CHECK(back.unit == spec.unit);
        REQUIRE(back.params.size() == spec.params.size());
        REQUIRE(back.levels.size() == spec.levels.size());
        for (std::size_t k = 0; k < spec.levels.size(); ++k) {
            CHECK(back.levels[k].energy == spec.levels[k].energy);
            CHECK(back.levels[k].labels == spec.levels[k].labels);
        }
    }
    SUBCASE("twelve significant digits in csv") {
        ModelSpectrum third;
        third.model_name = "custom";
        third.unit = "x";
        Level lv;
        lv.labels = {{"k", 0.0}};
        lv.energy = 1.0 / 3.0;
        third.levels.push_back(lv);
        CHECK(render_spectrum(third, OutputFormat::Csv) == "k,energy\n0,0.333333333333\n");
    }
}

TEST_CASE("report rendering") {
    const ModelSpectrum mu = angular_momentum(2);
    const OracleReport report = compare(mu, {-1.0, 0.1, 1.0}, "hbar", 0.2, 0.0, "exact ladder");
    SUBCASE("infinite relative error survives the json round trip as null") {
        const std::string text = render_report(report, OutputFormat::Json);
        CHECK(text.find("null") != std::string::npos);
        const OracleReport back = parse_report_json(text);
        CHECK(back.model_name == report.model_name);
        CHECK(back.pass == report.pass);
        CHECK(back.tol_abs == report.tol_abs);
        CHECK(back.grid_info == "exact ladder");
        REQUIRE(back.rel_err.size() == 3);
        CHECK(back.rel_err[0] == report.rel_err[0]);
        CHECK(std::isinf(back.rel_err[1]));
        CHECK(back.algebraic == report.algebraic);
        CHECK(back.numeric == report.numeric);
        CHECK(back.abs_err == report.abs_err);
    }
    SUBCASE("table states the verdict") {
        const std::string text = render_report(report, OutputFormat::Table);
        CHECK(text.find("result: PASS") != std::string::npos);
        OracleReport failed = report;
        failed.pass = false;
        failed.warnings.push_back("numeric levels drifted");
        const std::string bad = render_report(failed, OutputFormat::Table);
        CHECK(bad.find("result: FAIL") != std::string::npos);
        CHECK(bad.find("warning: numeric levels drifted") != std::string::npos);
    }
    SUBCASE("csv header") {
        const std::string text = render_report(report, OutputFormat::Csv);
        CHECK(text.rfind("k,algebraic,numeric,abs_err,rel_err\n", 0) == 0);
    }
}

TEST_CASE("format and document parsing errors") {
    CHECK(parse_format("json") == OutputFormat::Json);
    CHECK_THROWS_AS(parse_format("yaml"), InvalidParameter);

    CHECK_THROWS_AS(parse_spectrum_json("{not json"), InvalidParameter);
    CHECK_THROWS_AS(parse_spectrum_json("{\"levels\": []}"), InvalidParameter);
    CHECK_THROWS_AS(parse_spectrum_json("{\"model\": \"x\", \"levels\": 3}"), InvalidParameter);
    CHECK_THROWS_AS(parse_spectrum_json("{\"model\": \"x\", \"levels\": [{\"k\": 0}]}"),
                    InvalidParameter);
    CHECK_THROWS_AS(
        parse_spectrum_json(
            "{\"model\": \"x\", \"params\": {\"a\": \"word\"}, \"levels\": []}"),
        InvalidParameter);

    CHECK_THROWS_AS(parse_report_json("{}"), InvalidParameter);
    CHECK_THROWS_AS(parse_report_json("{\"levels\": [{\"algebraic\": 1.0}]}"),
                    InvalidParameter);
}

TEST_CASE("consistency input parsing") {
    SUBCASE("explicit pair") {
        const ConsistencyInput input =
            parse_consistency_input("{\"s\": [1, 2], \"a\": [1, 0.5]}");
        CHECK(input.has_pair);
        CHECK(input.pair.s == std::vector<double>{1.0, 2.0});
        CHECK(input.pair.a == std::vector<double>{1.0, 0.5});
        CHECK_FALSE(input.pair.finite);
    }
    SUBCASE("finite marker") {
        const ConsistencyInput input =
            parse_consistency_input("{\"s\": [1], \"a\": [1], \"finite\": true}");
        CHECK(input.pair.finite);
    }
    SUBCASE("real and complex coefficients") {
        const ConsistencyInput input =
            parse_consistency_input("{\"coeffs\": [1, [0, 1], 2.5]}");
        CHECK_FALSE(input.has_pair);
        REQUIRE(input.spec.coeffs.size() == 3);
        CHECK(input.spec.coeffs[0] == std::complex<double>(1.0, 0.0));
        CHECK(input.spec.coeffs[1] == std::complex<double>(0.0, 1.0));
        CHECK(input.spec.coeffs[2] == std::complex<double>(2.5, 0.0));
    }
    SUBCASE("rejections") {
        CHECK_THROWS_AS(parse_consistency_input("[1, 2]"), InvalidParameter);
        CHECK_THROWS_AS(parse_consistency_input("{\"s\": [1]}"), InvalidParameter);
        CHECK_THROWS_AS(
            parse_consistency_input("{\"s\": [1], \"a\": [1], \"coeffs\": [1]}"),
            InvalidParameter);
        CHECK_THROWS_AS(parse_consistency_input("{\"x\": 1}"), InvalidParameter);
        CHECK_THROWS_AS(parse_consistency_input("{\"s\": [1, 2], \"a\": [1]}"),
                        DimensionError);
        CHECK_THROWS_AS(parse_consistency_input("{\"coeffs\": [\"one\"]}"), InvalidParameter);
        CHECK_THROWS_AS(parse_consistency_input("{\"coeffs\": [[1, 2, 3]]}"), InvalidParameter);
        CHECK_THROWS_AS(parse_consistency_input("{\"coeffs\": [1], \"finite\": 1}"),
                        InvalidParameter);
    }
}

TEST_CASE("command line spectrum queries") {
    SUBCASE("oscillator csv") {
        const CliResult res = run_cli({"spectrum", "ho1d", "--format", "csv"});
        CHECK(res.code == 0);
        CHECK(res.out == "k,energy\n0,0.5\n1,1.5\n2,2.5\n3,3.5\n4,4.5\n");
    }
    SUBCASE("hydrogen ground energy in json") {
        const CliResult res =
            run_cli({"spectrum", "hydrogen", "--levels", "2", "--format", "json"});
        CHECK(res.code == 0);
        const ModelSpectrum spec = parse_spectrum_json(res.out);
        CHECK(spec.model_name == "hydrogen");
        REQUIRE(spec.levels.size() == 2);
        CHECK(spec.levels[0].energy == -0.5);
        CHECK(spec.levels[1].energy == -0.125);
    }
    SUBCASE("angular ladder csv") {
        const CliResult res =
            run_cli({"spectrum", "angular", "--two-j", "2", "--format", "csv"});
        CHECK(res.code == 0);
        CHECK(res.out == "k,c_sq,energy\n0,1,-1\n1,1,0\n2,0,1\n");
    }
    SUBCASE("perturb is an alias for the perturbed oscillator spectrum") {
        const CliResult direct =
            run_cli({"spectrum", "perturbed-ho", "--levels", "3", "--format", "csv"});
        const CliResult alias = run_cli({"perturb", "--levels", "3", "--format", "csv"});
        CHECK(direct.code == 0);
        CHECK(alias.code == 0);
        CHECK(alias.out == direct.out);
    }
}

TEST_CASE("command line verification") {
    SUBCASE("square well inside tolerance") {
        const CliResult res = run_cli({"verify", "square-well"});
        CHECK(res.code == 0);
        CHECK(res.out.find("result: PASS") != std::string::npos);
    }
    SUBCASE("an impossible tolerance fails with exit 1") {
        const CliResult res = run_cli({"verify", "square-well", "--tol-abs", "1e-12"});
        CHECK(res.code == 1);
        CHECK(res.out.find("result: FAIL") != std::string::npos);
    }
    SUBCASE("zero levels pass vacuously with a warning") {
        const CliResult res = run_cli({"verify", "ho1d", "--levels", "0"});
        CHECK(res.code == 0);
        CHECK(res.err.find("warning: no levels compared") != std::string::npos);
    }
    SUBCASE("config file overrides the level count") {
        const auto cfg =
            temp_file("specladder_cfg_sw", "square-well.levels = 2\n");
        const CliResult res = run_cli(
            {"verify", "square-well", "--config", cfg.string(), "--format", "csv"});
        CHECK(res.code == 0);
        // Header plus one row per level.
        const std::size_t rows =
            static_cast<std::size_t>(std::count(res.out.begin(), res.out.end(), '\n'));
        CHECK(rows == 3);
        std::filesystem::remove(cfg);
    }
    SUBCASE("the environment variable feeds the same override") {
        const auto cfg =
            temp_file("specladder_cfg_env_sw", "square-well.levels = 1\n");
        ::setenv("SPECLADDER_CONFIG", cfg.string().c_str(), 1);
        const CliResult res = run_cli({"verify", "square-well", "--format", "csv"});
        ::unsetenv("SPECLADDER_CONFIG");
        CHECK(res.code == 0);
        const std::size_t rows =
            static_cast<std::size_t>(std::count(res.out.begin(), res.out.end(), '\n'));
        CHECK(rows == 2);
        std::filesystem::remove(cfg);
    }
}

TEST_CASE("command line consistency checks") {
    SUBCASE("a valid infinite pair") {
        const auto input = temp_file("specladder_pair_ok",
                                     "{\"s\": [0.5, 1.5], \"a\": [0.5, 0.5]}");
        const CliResult res = run_cli({"consistency", "--input", input.string()});
        CHECK(res.code == 0);
        CHECK(res.out == "consistent\n");
        std::filesystem::remove(input);
    }
    SUBCASE("a tampered pair names the level") {
        const auto input =
            temp_file("specladder_pair_bad", "{\"s\": [1, 2], \"a\": [1, 0.5]}");
        const CliResult res = run_cli({"consistency", "--input", input.string()});
        CHECK(res.code == 1);
        CHECK(res.out.find("violation at k=0") != std::string::npos);
        std::filesystem::remove(input);
    }
    SUBCASE("finite amplitude input reports the top closure") {
        const auto input = temp_file("specladder_coeffs_finite",
                                     "{\"coeffs\": [1, 1, 0], \"finite\": true}");
        const CliResult res = run_cli({"consistency", "--input", input.string()});
        CHECK(res.code == 0);
        CHECK(res.out == "consistent (top closure s_top = -a_top satisfied)\n");
        std::filesystem::remove(input);
    }
    SUBCASE("malformed input is a usage error") {
        const auto input = temp_file("specladder_bad_json", "{oops");
        const CliResult res = run_cli({"consistency", "--input", input.string()});
        CHECK(res.code == 2);
        std::filesystem::remove(input);
    }
    SUBCASE("a missing file is a usage error") {
        const CliResult res = run_cli({"consistency", "--input", "/no/such/input.json"});
        CHECK(res.code == 2);
        CHECK(res.err.find("cannot read") != std::string::npos);
    }
}

TEST_CASE("command line rejects out-of-schema requests") {
    CHECK(run_cli({"spectrum", "hydrogen", "--N", "5"}).code == 2);
    CHECK(run_cli({"spectrum", "ho1d", "--two-j", "2"}).code == 2);
    CHECK(run_cli({"spectrum", "angular"}).code == 2);
    CHECK(run_cli({"spectrum", "nosuchmodel"}).code == 2);
    CHECK(run_cli({"spectrum"}).code == 2);
    CHECK(run_cli({"spectrum", "ho1d", "--format", "yaml"}).code == 2);
    CHECK(run_cli({"verify", "angular"}).code == 2);
    CHECK(run_cli({"verify"}).code == 2);
    CHECK(run_cli({"verify", "ho1d", "--all"}).code == 2);
    CHECK(run_cli({"verify", "--all", "--levels", "2"}).code == 2);
    CHECK(run_cli({"verify", "ho1d", "--basis-dim", "30"}).code == 2);
    CHECK(run_cli({"perturb", "--N", "3"}).code == 2);

    const CliResult named = run_cli({"spectrum", "square-well", "--omega", "3"});
    CHECK(named.code == 2);
    CHECK(named.err.find("--omega") != std::string::npos);
    CHECK(named.err.find("square-well") != std::string::npos);
}

TEST_CASE("command line help") {
    const CliResult bare = run_cli({});
    CHECK(bare.code == 0);
    CHECK(bare.out.find("spectrum") != std::string::npos);
    CHECK(bare.out.find("verify") != std::string::npos);

    const CliResult help = run_cli({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("consistency") != std::string::npos);
}

TEST_CASE("installed binary answers a smoke query") {
    const char* bin = std::getenv("SPECLADDER_BIN");
    if (bin == nullptr || *bin == '\0') {
        MESSAGE("SPECLADDER_BIN not set; skipping the subprocess check");
        return;
    }
    const std::string cmd =
        std::string("\"") + bin + "\" spectrum ho1d --levels 2 --format csv";
    FILE* pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string captured;
    char chunk[256];
    while (std::fgets(chunk, sizeof(chunk), pipe) != nullptr) captured += chunk;
    const int status = ::pclose(pipe);
    REQUIRE(status != -1);
    CHECK(WIFEXITED(status));
    CHECK(WEXITSTATUS(status) == 0);
    CHECK(captured == "k,energy\n0,0.5\n1,1.5\n");
}
