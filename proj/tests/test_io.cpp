#include <catch2/catch_amalgamated.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "acfbands/cli.hpp"
#include "acfbands/csv.hpp"
#include "acfbands/report.hpp"
#include "acfbands/simulation.hpp"
#include "acfbands/svg.hpp"
#include "test_support.hpp"

using namespace acfbands;

namespace {

namespace fs = std::filesystem;

fs::path temp_file(const std::string& name, const std::string& content) {
    const fs::path p = fs::temp_directory_path() / name;
    std::ofstream f(p, std::ios::binary);
    f << content;
    return p;
}

std::string read_file(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

int run(const std::vector<std::string>& args, std::string* out_text = nullptr,
        std::string* err_text = nullptr) {
    std::vector<const char*> argv{"acfbands"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    if (out_text) *out_text = out.str();
    if (err_text) *err_text = err.str();
    return code;
}

BandReport fixture_report() {
    BandReport report;
    report.acf.T = 200;
    report.acf.H = 6;
    report.acf.mean = 0.125;
    report.acf.gamma = {1.0, 0.45, 0.2, 0.09, 0.05, 0.01, -0.02};
    report.acf.rho = {1.0, 0.45, 0.2, 0.09, 0.05, 0.01, -0.02};
    Band sig = significance_band_simultaneous(200, 6, 0.1);
    Band pw = significance_band_pointwise(200, 6, 0.1);
    report.decisions.push_back({to_string(sig.kind), "rejects_white_noise", true});
    report.decisions.push_back({to_string(pw.kind), "rejects_white_noise", true});
    report.bands.push_back(std::move(sig));
    report.bands.push_back(std::move(pw));
    report.meta["command"] = "acf";
    report.meta["alpha"] = 0.1;
    return report;
}

} // namespace

TEST_CASE("csv header detection and column selection", "[io]") {
    const std::string csv = "date,value\n2020-01,1.5\n2020-02,2.5\n2020-03,-0.25\n";
    std::istringstream in(csv);
    const CsvTable table = parse_csv(in);
    CHECK(table.has_header);
    const auto by_name = table.numeric_column("value");
    const auto by_index = table.numeric_column("1");
    CHECK(by_name == std::vector<double>{1.5, 2.5, -0.25});
    CHECK(by_index == by_name);
    CHECK_THROWS_AS(table.numeric_column("nope"), CsvError);
    CHECK_THROWS_AS(table.numeric_column("7"), CsvError);
}

TEST_CASE("headerless csv and error positions", "[io]") {
    std::istringstream in("1.0\n2.0\nbad\n4.0\n");
    const CsvTable table = parse_csv(in);
    CHECK_FALSE(table.has_header);
    try {
        table.numeric_column("0");
        FAIL("expected CsvError");
    } catch (const CsvError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("row 3") != std::string::npos);
        CHECK(msg.find("bad") != std::string::npos);
    }

    std::istringstream nan_in("x\n1.0\nnan\n");
    const CsvTable nan_table = parse_csv(nan_in);
    CHECK_THROWS_AS(nan_table.numeric_column("x"), CsvError);

    std::istringstream short_in("y\n3.25\n");
    CHECK_THROWS_AS(parse_csv(short_in).numeric_column("y"), CsvError);
}

TEST_CASE("band report JSON round trip is lossless", "[io]") {
    RngStream rng(404);
    BandReport report = fixture_report();
    for (auto& b : report.bands) {
        for (auto& v : b.lower) v += 1e-17 * rng.next_normal(); // exercise full precision
    }
    const ordered_json j = to_json(report);
    const std::string text = j.dump();
    const BandReport back = band_report_from_json(ordered_json::parse(text));
    CHECK(back.acf.mean == report.acf.mean);
    CHECK(back.acf.gamma == report.acf.gamma);
    CHECK(back.acf.rho == report.acf.rho);
    REQUIRE(back.bands.size() == report.bands.size());
    for (std::size_t i = 0; i < report.bands.size(); ++i) {
        CHECK(back.bands[i].kind == report.bands[i].kind);
        CHECK(back.bands[i].scaling_c == report.bands[i].scaling_c);
        CHECK(back.bands[i].lower == report.bands[i].lower);
        CHECK(back.bands[i].upper == report.bands[i].upper);
    }
    REQUIRE(back.decisions.size() == report.decisions.size());
    CHECK(back.decisions[0].value == report.decisions[0].value);
    CHECK(back.meta == report.meta);
}

TEST_CASE("report csv has one row per lag", "[io]") {
    const BandReport report = fixture_report();
    std::ostringstream out;
    write_report_csv(report, out);
    const std::string text = out.str();
    int lines = 0;
    for (char c : text) {
        if (c == '\n') ++lines;
    }
    CHECK(lines == 1 + report.acf.H);
    CHECK(text.find("h,rho_hat,sig_simultaneous_lower,sig_simultaneous_upper") == 0);
}

TEST_CASE("svg rendering is deterministic and structurally sound", "[io]") {
    BandReport report = fixture_report();
    const std::string svg = render_svg(report);
    CHECK(svg == render_svg(report));

    std::size_t spikes = 0, pos = 0;
    while ((pos = svg.find("class=\"spike\"", pos)) != std::string::npos) {
        ++spikes;
        pos += 10;
    }
    CHECK(spikes == 6);

    std::size_t polylines = 0;
    pos = 0;
    while ((pos = svg.find("<polyline class=\"band\"", pos)) != std::string::npos) {
        ++polylines;
        pos += 10;
    }
    CHECK(polylines == 2 * report.bands.size());

    report.bands.clear();
    const std::string bare = render_svg(report);
    CHECK(bare.find("<polyline") == std::string::npos);
    CHECK(bare.find("class=\"spike\"") != std::string::npos);
}

TEST_CASE("svg golden file", "[io]") {
    const fs::path golden = fs::path(ACFBANDS_TEST_DATA_DIR) / "golden_plot.svg";
    const std::string svg = render_svg(fixture_report());
    if (std::getenv("ACFBANDS_REGEN_GOLDEN")) {
        std::ofstream f(golden, std::ios::binary);
        f << svg;
        SUCCEED("golden regenerated");
        return;
    }
    REQUIRE(fs::exists(golden));
    CHECK(svg == read_file(golden));
}

TEST_CASE("cli acf end to end", "[io]") {
    std::ostringstream csv;
    csv << "value\n";
    RngStream rng(2020);
    for (int t = 0; t < 200; ++t) csv << rng.next_normal() << "\n";
    const fs::path input = temp_file("acfbands_series.csv", csv.str());

    std::string out;
    const int code = run({"acf", "--input", input.string(), "--column", "value", "--max-lag",
                          "10", "--bands", "sig-sim,sig-pw", "--json", "-"},
                         &out);
    REQUIRE(code == 0);
    const auto j = ordered_json::parse(out);
    CHECK(j.at("acf").at("T") == 200);
    CHECK(j.at("acf").at("H") == 10);
    REQUIRE(j.at("bands").size() == 2);
    const auto& band = j.at("bands")[0];
    const double width =
        band.at("upper")[0].get<double>() - band.at("lower")[0].get<double>();
    CHECK(std::fabs(width - 0.362) <= 1e-3); // tabulated simultaneous width at T=200, H=10

    // unknown column exits with the data-error code
    std::string err;
    CHECK(run({"acf", "--input", input.string(), "--column", "missing"}, nullptr, &err) == 2);
    CHECK_FALSE(err.empty());

    // a constant column is a data error as well
    const fs::path flat = temp_file("acfbands_flat.csv", "v\n1\n1\n1\n1\n");
    CHECK(run({"acf", "--input", flat.string(), "--column", "v"}, nullptr, &err) == 2);
}

TEST_CASE("cli residual-bands flag contract", "[io]") {
    std::ostringstream csv;
    csv << "y,x\n";
    RngStream rng(2021);
    double prev = 0.0;
    for (int t = 0; t < 150; ++t) {
        const double y = 0.5 * prev + rng.next_normal();
        csv << y << "," << rng.next_normal() << "\n";
        prev = y;
    }
    const fs::path input = temp_file("acfbands_reg.csv", csv.str());

    std::string out, err;
    REQUIRE(run({"residual-bands", "--input", input.string(), "--y-column", "y", "--lags-endog",
                 "1", "--max-lag", "6", "--json", "-"},
                &out) == 0);
    const auto j = ordered_json::parse(out);
    CHECK(j.at("meta").at("effective_T") == 149);
    bool has_exact = false, has_naive = false;
    for (const auto& b : j.at("bands")) {
        if (b.at("kind") == "sig_dynamic_exact") has_exact = true;
        if (b.at("kind") == "sig_dynamic_naive") has_naive = true;
    }
    CHECK(has_exact);
    CHECK(has_naive);

    CHECK(run({"residual-bands", "--input", input.string(), "--y-column", "y", "--lags-endog",
               "1", "--naive", "--mode", "het"},
              nullptr, &err) == 2);
    CHECK(err.find("--naive") != std::string::npos);

    // static path exposes the plain significance bands
    REQUIRE(run({"residual-bands", "--input", input.string(), "--y-column", "y", "--x-columns",
                 "x", "--max-lag", "6", "--json", "-"},
                &out) == 0);
    const auto js = ordered_json::parse(out);
    CHECK(js.at("bands")[0].at("kind") == "sig_simultaneous");
}

TEST_CASE("cli residual-bands aligns extra regressors under differencing", "[io]") {
    // Delta y_t = 2 x_t + 1.5 w_t + noise: both coefficients are recovered
    // only if every column is aligned with the differenced sample.
    std::ostringstream csv;
    csv << "y,x,w\n";
    RngStream rng(2022);
    double y = 0.0;
    for (int t = 0; t < 160; ++t) {
        const double x = rng.next_normal();
        const double w = rng.next_normal();
        y += 2.0 * x + 1.5 * w + 0.1 * rng.next_normal();
        csv << y << "," << x << "," << w << "\n";
    }
    const fs::path input = temp_file("acfbands_diff.csv", csv.str());
    std::string out;
    REQUIRE(run({"residual-bands", "--input", input.string(), "--y-column", "y", "--x-columns",
                 "x,w", "--difference", "--max-lag", "6", "--json", "-"},
                &out) == 0);
    const auto j = ordered_json::parse(out);
    const auto coeffs = j.at("meta").at("coeffs").get<std::vector<double>>();
    REQUIRE(coeffs.size() == 2);
    CHECK(std::fabs(coeffs[0] - 2.0) < 0.1);
    CHECK(std::fabs(coeffs[1] - 1.5) < 0.1);
    CHECK(j.at("meta").at("effective_T") == 159);
}

TEST_CASE("cli simulate determinism and validation", "[io]") {
    std::string first, second, err;
    const std::vector<std::string> args{"simulate", "--study", "significance", "--phi", "0.25",
                                        "--T",      "80",      "--H",          "4",
                                        "--reps",   "30",      "--seed",       "7"};
    REQUIRE(run(args, &first) == 0);
    REQUIRE(run(args, &second) == 0);
    CHECK(first == second); // byte-identical output for identical invocations
    CHECK(first.find("rejection") != std::string::npos);

    CHECK(run({"simulate", "--study", "significance", "--reps", "0"}, nullptr, &err) == 2);
    CHECK(run({"simulate", "--study", "unknown"}, nullptr, &err) == 2);
}

TEST_CASE("cli plot writes svg and rejects malformed reports", "[io]") {
    const BandReport report = fixture_report();
    const fs::path rp = temp_file("acfbands_report.json", to_json(report).dump(2));
    const fs::path svg_path = fs::temp_directory_path() / "acfbands_plot.svg";
    REQUIRE(run({"plot", "--report", rp.string(), "--output", svg_path.string()}) == 0);
    const std::string svg = read_file(svg_path);
    CHECK(svg.find("<svg") == 0);
    CHECK(svg.find("class=\"spike\"") != std::string::npos);

    const fs::path bad = temp_file("acfbands_bad.json", "{not json");
    std::string err;
    CHECK(run({"plot", "--report", bad.string(), "--output", "-"}, nullptr, &err) == 2);
}

TEST_CASE("environment seed is the fallback default", "[io]") {
    std::ostringstream csv;
    csv << "v\n";
    RngStream rng(9);
    for (int t = 0; t < 60; ++t) csv << rng.next_normal() << "\n";
    const fs::path input = temp_file("acfbands_env.csv", csv.str());

    setenv("ACFBANDS_SEED", "12345", 1);
    std::string out;
    REQUIRE(run({"acf", "--input", input.string(), "--max-lag", "5", "--json", "-"}, &out) == 0);
    CHECK(ordered_json::parse(out).at("meta").at("seed") == 12345);
    setenv("ACFBANDS_SEED", "not-a-number", 1);
    std::string err;
    CHECK(run({"acf", "--input", input.string(), "--max-lag", "5"}, nullptr, &err) == 2);
    unsetenv("ACFBANDS_SEED");
}
