#ifndef ACFBANDS_CLI_HPP
#define ACFBANDS_CLI_HPP

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "acfbands/acfbands_core.hpp"
#include "acfbands/csv.hpp"
#include "acfbands/report.hpp"
#include "acfbands/svg.hpp"

namespace acfbands::cli {

namespace detail {

inline std::uint64_t default_seed_from_env() {
    if (const char* env = std::getenv("ACFBANDS_SEED")) {
        try {
            return std::stoull(env);
        } catch (...) {
            throw InvalidArgument("ACFBANDS_SEED is not a valid unsigned integer: " +
                                  std::string(env));
        }
    }
    return kDefaultSeed;
}

inline BandwidthRule parse_bandwidth(const std::string& spec) {
    if (spec == "sqrt") return BandwidthRule::sqrt_T();
    auto colon = spec.find(':');
    if (colon != std::string::npos) {
        const std::string head = spec.substr(0, colon);
        const std::string tail = spec.substr(colon + 1);
        double v = 0.0;
        if (!acfbands::detail::parse_double(tail, v)) {
            throw InvalidArgument("bandwidth: cannot parse parameter in '" + spec + "'");
        }
        if (head == "msqrt") return BandwidthRule::m_sqrt(v);
        if (head == "cuberoot") return BandwidthRule::c_cuberoot(v);
        if (head == "fixed") return BandwidthRule::fixed(v);
    }
    throw InvalidArgument("bandwidth: expected sqrt | msqrt:<m> | cuberoot:<c> | fixed:<L>, got '" +
                          spec + "'");
}

inline std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw CsvError("cannot open output file: " + path);
    f << content;
    if (!f) throw CsvError("failed writing output file: " + path);
}

inline void emit_report(const BandReport& report, const std::string& json_dest,
                        const std::string& csv_dest, std::ostream& out) {
    const std::string json_text = to_json(report).dump(2) + "\n";
    if (json_dest.empty() || json_dest == "-") {
        out << json_text;
    } else {
        write_text_file(json_dest, json_text);
    }
    if (!csv_dest.empty()) {
        std::ostringstream csv;
        write_report_csv(report, csv);
        if (csv_dest == "-") {
            out << csv.str();
        } else {
            write_text_file(csv_dest, csv.str());
        }
    }
}

struct AcfArgs {
    std::string input;
    std::string column = "0";
    std::string date_column;
    double alpha = 0.1;
    int max_lag = 0; // 0 = floor(10 log10 T)
    std::string bands = "sig-sim,sig-pw";
    std::string bandwidth = "sqrt";
    double prob_tol = kDefaultProbTol;
    std::uint64_t seed = kDefaultSeed;
    std::string json_dest;
    std::string csv_dest;
};

inline int cmd_acf(const AcfArgs& args, std::ostream& out) {
    const CsvTable table = read_csv(args.input);
    if (!args.date_column.empty()) table.resolve_column(args.date_column); // validated, ignored
    const std::vector<double> values = table.numeric_column(args.column);
    const TimeSeriesData series{values};
    const int T = series.length();
    const int H = (args.max_lag > 0) ? args.max_lag : default_max_lag(T);

    const BandwidthRule rule = parse_bandwidth(args.bandwidth);
    const KernelBandwidth kb{KernelKind::bartlett_triangular, rule};

    const AcfEstimate acf = compute_acf(series, H);

    BandReport report;
    report.acf = acf;
    std::optional<CovMatrix> bhat;
    auto melard = [&]() -> const CovMatrix& {
        if (!bhat) bhat = melard_roy_estimate(series, H, kb);
        return *bhat;
    };

    const std::vector<double> zeros(static_cast<std::size_t>(H), 0.0);
    for (const std::string& token : split_list(args.bands)) {
        Band band;
        if (token == "sig-sim") {
            band = significance_band_simultaneous(T, H, args.alpha);
        } else if (token == "sig-pw") {
            band = significance_band_pointwise(T, H, args.alpha);
        } else if (token == "conf-supt") {
            band = confidence_band(acf, melard(), args.alpha, ConfidenceKind::supt,
                                   {args.prob_tol, args.seed});
        } else if (token == "conf-bonf") {
            band = confidence_band(acf, melard(), args.alpha, ConfidenceKind::bonferroni);
        } else if (token == "conf-pw") {
            band = confidence_band(acf, melard(), args.alpha, ConfidenceKind::pointwise);
        } else {
            throw InvalidArgument("unknown band kind '" + token +
                                  "' (use sig-sim, sig-pw, conf-supt, conf-bonf, conf-pw)");
        }
        if (is_significance_kind(band.kind)) {
            report.decisions.push_back(
                {to_string(band.kind), "rejects_white_noise", rejects_white_noise(acf, band)});
        } else {
            report.decisions.push_back(
                {to_string(band.kind), "covers_zero", covers_path(band, zeros)});
        }
        report.bands.push_back(std::move(band));
    }

    report.meta["command"] = "acf";
    report.meta["input"] = args.input;
    report.meta["column"] = args.column;
    report.meta["T"] = T;
    report.meta["H"] = H;
    report.meta["alpha"] = args.alpha;
    report.meta["bandwidth"] = rule.describe();
    report.meta["bandwidth_L"] = resolve_bandwidth(rule, T);
    report.meta["prob_tol"] = args.prob_tol;
    report.meta["seed"] = args.seed;

    emit_report(report, args.json_dest, args.csv_dest, out);
    return 0;
}

struct ResidualArgs {
    std::string input;
    std::string y_column;
    std::string x_columns;
    int lags_endog = 0;
    int lags_exog = 0;
    bool difference = false;
    std::string mode = "hom";
    bool naive = false;
    bool mode_given = false;
    double alpha = 0.1;
    int max_lag = 0;
    double prob_tol = kDefaultProbTol;
    std::uint64_t seed = kDefaultSeed;
    std::string json_dest;
    std::string csv_dest;
};

inline int cmd_residual_bands(const ResidualArgs& args, std::ostream& out) {
    if (args.naive && args.mode_given) {
        throw InvalidArgument("--naive conflicts with --mode: the naive band ignores the "
                              "estimated residual covariance");
    }
    const SigmaRhoMode mode = (args.mode == "het") ? SigmaRhoMode::het : SigmaRhoMode::hom;

    const CsvTable table = read_csv(args.input);
    const std::vector<double> y = table.numeric_column(args.y_column);
    std::optional<std::vector<double>> exog;
    const auto x_names = split_list(args.x_columns);
    Eigen::MatrixXd x_extra; // additional exogenous columns beyond the first
    if (!x_names.empty()) {
        exog = table.numeric_column(x_names[0]);
        if (x_names.size() > 1) {
            x_extra.resize(static_cast<Eigen::Index>(exog->size()),
                           static_cast<Eigen::Index>(x_names.size() - 1));
            for (std::size_t j = 1; j < x_names.size(); ++j) {
                const auto col = table.numeric_column(x_names[j]);
                for (std::size_t t = 0; t < col.size(); ++t) {
                    x_extra(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(j - 1)) = col[t];
                }
            }
        }
    }

    RegressionData data = lagged_design(y, exog, args.lags_endog, args.lags_exog, args.difference);
    if (x_extra.size() > 0) {
        // contemporaneous values of the extra exogenous columns; the
        // effective sample is the tail of the original rows, so alignment is
        // the last T() rows in both the level and differenced cases
        if (static_cast<int>(x_extra.rows()) < data.T()) {
            throw DimensionMismatch("extra exogenous columns shorter than design");
        }
        Eigen::MatrixXd joined(data.T(), data.K() + x_extra.cols());
        joined.leftCols(data.K()) = data.X;
        joined.rightCols(x_extra.cols()) = x_extra.bottomRows(data.T());
        data.X = std::move(joined);
        data.validate();
    }

    const OlsFit fit = ols_fit(data);
    const int T = fit.T;
    const int H = (args.max_lag > 0) ? args.max_lag : default_max_lag(T);
    const AcfEstimate racf = residual_acf(fit, H);

    BandReport report;
    report.acf = racf;
    const bool dynamic = args.lags_endog > 0;

    std::optional<int> k_star;
    if (dynamic) {
        if (!args.naive) {
            const SigmaRhoEstimate est = shrink_sigma_rho(sigma_rho_plugin(fit, H, mode));
            k_star = est.k_star;
            Band exact = significance_band_dynamic(fit, H, args.alpha, mode, false,
                                                   {args.prob_tol, args.seed});
            report.decisions.push_back({to_string(exact.kind), "rejects_white_noise",
                                        rejects_white_noise(racf, exact)});
            report.bands.push_back(std::move(exact));
        }
        Band naive = significance_band_dynamic(fit, H, args.alpha, mode, true);
        report.decisions.push_back(
            {to_string(naive.kind), "rejects_white_noise", rejects_white_noise(racf, naive)});
        report.bands.push_back(std::move(naive));
    } else {
        Band sim = significance_band_simultaneous(T, H, args.alpha);
        report.decisions.push_back(
            {to_string(sim.kind), "rejects_white_noise", rejects_white_noise(racf, sim)});
        report.bands.push_back(std::move(sim));
    }
    Band pw = significance_band_pointwise(T, H, args.alpha);
    report.decisions.push_back(
        {to_string(pw.kind), "rejects_white_noise", rejects_white_noise(racf, pw)});
    report.bands.push_back(std::move(pw));

    report.meta["command"] = "residual-bands";
    report.meta["input"] = args.input;
    report.meta["y_column"] = args.y_column;
    report.meta["x_columns"] = args.x_columns;
    report.meta["lags_endog"] = args.lags_endog;
    report.meta["lags_exog"] = args.lags_exog;
    report.meta["difference"] = args.difference;
    report.meta["effective_T"] = T;
    report.meta["K"] = fit.K;
    report.meta["H"] = H;
    report.meta["alpha"] = args.alpha;
    report.meta["mode"] = args.mode;
    report.meta["naive"] = args.naive;
    report.meta["intercept"] = fit.intercept;
    report.meta["coeffs"] = std::vector<double>(fit.coeffs.data(), fit.coeffs.data() + fit.K);
    report.meta["sigma2_eps"] = fit.sigma2_eps;
    report.meta["seed"] = args.seed;
    if (k_star) report.meta["shrinkage_k_star"] = *k_star;

    emit_report(report, args.json_dest, args.csv_dest, out);
    return 0;
}

struct SimulateArgs {
    std::string study;
    double phi = 0.0;
    double phi1 = 0.5;
    double phi2 = 0.0;
    bool ar2 = false;
    int T = 800;
    int H = 10;
    double alpha = 0.1;
    int reps = 1000;
    std::uint64_t seed = kDefaultSeed;
    std::string bandwidth = "sqrt";
    int burn_in = 200;
    double prob_tol = 1e-3;
    int threads = 0;
    std::string json_dest;
};

inline int cmd_simulate(const SimulateArgs& args, std::ostream& out) {
    SimConfig cfg;
    if (args.study == "significance") {
        cfg.study = StudyKind::significance;
    } else if (args.study == "confidence") {
        cfg.study = StudyKind::confidence;
    } else if (args.study == "dynamic") {
        cfg.study = StudyKind::dynamic;
    } else if (args.study == "bandwidth-sweep") {
        cfg.study = StudyKind::bandwidth_sweep;
    } else {
        throw InvalidArgument("unknown study '" + args.study +
                              "' (significance|confidence|dynamic|bandwidth-sweep)");
    }
    cfg.dgp = (cfg.study == StudyKind::dynamic || args.ar2) ? Dgp::ar2(args.phi1, args.phi2)
                                                            : Dgp::ar1(args.phi);
    cfg.T = args.T;
    cfg.H = args.H;
    cfg.alpha = args.alpha;
    cfg.reps = args.reps;
    cfg.seed = args.seed;
    cfg.bandwidth = parse_bandwidth(args.bandwidth);
    cfg.burn_in = args.burn_in;
    cfg.prob_tol = args.prob_tol;
    cfg.threads = args.threads;

    const SimResult res = run_study(cfg);
    out << render_table(res);
    const std::string json_text = to_json(res).dump(2) + "\n";
    if (args.json_dest.empty() || args.json_dest == "-") {
        out << json_text;
    } else {
        write_text_file(args.json_dest, json_text);
    }
    return 0;
}

struct PlotArgs {
    std::string report_path;
    std::string output;
};

inline int cmd_plot(const PlotArgs& args, std::ostream& out) {
    std::ifstream f(args.report_path);
    if (!f) throw CsvError("cannot open report: " + args.report_path);
    ordered_json j;
    try {
        f >> j;
    } catch (const std::exception& e) {
        throw InvalidArgument("malformed report JSON: " + std::string(e.what()));
    }
    BandReport report;
    try {
        report = band_report_from_json(j);
    } catch (const std::exception& e) {
        throw InvalidArgument("malformed report: " + std::string(e.what()));
    }
    const std::string svg = render_svg(report);
    if (args.output.empty() || args.output == "-") {
        out << svg;
    } else {
        write_text_file(args.output, svg);
    }
    return 0;
}

} // namespace detail

/// Full command-line driver. Exit codes: 0 success, 2 data/usage errors,
/// 3 numerical failures.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Autocorrelation functions with simultaneous significance and confidence bands"};
    app.require_subcommand(1);

    std::uint64_t env_seed = kDefaultSeed;
    try {
        env_seed = detail::default_seed_from_env();
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    detail::AcfArgs acf_args;
    acf_args.seed = env_seed;
    auto* acf_cmd = app.add_subcommand("acf", "Sample ACF and inference bands for a series");
    acf_cmd->add_option("--input", acf_args.input, "Input CSV file")->required();
    acf_cmd->add_option("--column", acf_args.column, "Value column (name or 0-based index)");
    acf_cmd->add_option("--date-column", acf_args.date_column, "Date column (ignored for math)");
    acf_cmd->add_option("--alpha", acf_args.alpha, "Significance level (default 0.1)");
    acf_cmd->add_option("--max-lag", acf_args.max_lag, "Maximum lag H (default: 10*log10(T))");
    acf_cmd->add_option("--bands", acf_args.bands,
                        "Comma list: sig-sim,sig-pw,conf-supt,conf-bonf,conf-pw");
    acf_cmd->add_option("--bandwidth", acf_args.bandwidth,
                        "Kernel bandwidth: sqrt | msqrt:<m> | cuberoot:<c> | fixed:<L>");
    acf_cmd->add_option("--prob-tol", acf_args.prob_tol, "Quantile probability tolerance");
    acf_cmd->add_option("--seed", acf_args.seed, "RNG seed (default: ACFBANDS_SEED or 24301)");
    acf_cmd->add_option("--json", acf_args.json_dest, "JSON output path ('-' = stdout)");
    acf_cmd->add_option("--csv", acf_args.csv_dest, "CSV output path ('-' = stdout)");

    detail::ResidualArgs res_args;
    res_args.seed = env_seed;
    auto* res_cmd = app.add_subcommand(
        "residual-bands", "Significance bands for OLS residual autocorrelations");
    res_cmd->add_option("--input", res_args.input, "Input CSV file")->required();
    res_cmd->add_option("--y-column", res_args.y_column, "Dependent-variable column")->required();
    res_cmd->add_option("--x-columns", res_args.x_columns, "Comma list of exogenous columns");
    res_cmd->add_option("--lags-endog", res_args.lags_endog, "Lags p of the dependent variable");
    res_cmd->add_option("--lags-exog", res_args.lags_exog, "Lags r of the exogenous variable");
    res_cmd->add_flag("--difference", res_args.difference, "First-difference the dependent variable");
    auto* mode_opt = res_cmd->add_option("--mode", res_args.mode, "Covariance estimator: hom|het")
                         ->check(CLI::IsMember({"hom", "het"}));
    res_cmd->add_flag("--naive", res_args.naive, "Only the naive (uncorrected) band");
    res_cmd->add_option("--alpha", res_args.alpha, "Significance level (default 0.1)");
    res_cmd->add_option("--max-lag", res_args.max_lag, "Maximum lag H");
    res_cmd->add_option("--prob-tol", res_args.prob_tol, "Quantile probability tolerance");
    res_cmd->add_option("--seed", res_args.seed, "RNG seed");
    res_cmd->add_option("--json", res_args.json_dest, "JSON output path ('-' = stdout)");
    res_cmd->add_option("--csv", res_args.csv_dest, "CSV output path ('-' = stdout)");

    detail::SimulateArgs sim_args;
    sim_args.seed = env_seed;
    auto* sim_cmd = app.add_subcommand("simulate", "Monte-Carlo studies of the inference bands");
    sim_cmd->add_option("--study", sim_args.study,
                        "significance | confidence | dynamic | bandwidth-sweep")->required();
    sim_cmd->add_option("--phi", sim_args.phi, "AR(1) coefficient");
    auto* phi1_opt = sim_cmd->add_option("--phi1", sim_args.phi1, "AR(2) coefficient phi1");
    auto* phi2_opt = sim_cmd->add_option("--phi2", sim_args.phi2, "AR(2) coefficient phi2");
    sim_cmd->add_option("--T", sim_args.T, "Sample size");
    sim_cmd->add_option("--H", sim_args.H, "Band length");
    sim_cmd->add_option("--alpha", sim_args.alpha, "Significance level");
    sim_cmd->add_option("--reps", sim_args.reps, "Replications (default 1000)");
    sim_cmd->add_option("--seed", sim_args.seed, "RNG seed");
    sim_cmd->add_option("--bandwidth", sim_args.bandwidth, "Kernel bandwidth rule");
    sim_cmd->add_option("--burn-in", sim_args.burn_in, "Discarded initial draws (default 200)");
    sim_cmd->add_option("--prob-tol", sim_args.prob_tol, "Quantile probability tolerance");
    sim_cmd->add_option("--threads", sim_args.threads, "Worker threads (0 = auto)");
    sim_cmd->add_option("--json", sim_args.json_dest, "JSON output path ('-' = stdout)");

    detail::PlotArgs plot_args;
    auto* plot_cmd = app.add_subcommand("plot", "Render a band report as SVG");
    plot_cmd->add_option("--report", plot_args.report_path, "BandReport JSON file")->required();
    plot_cmd->add_option("--output", plot_args.output, "SVG output path ('-' = stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    res_args.mode_given = mode_opt->count() > 0;
    sim_args.ar2 = phi1_opt->count() > 0 || phi2_opt->count() > 0;

    try {
        if (acf_cmd->parsed()) return detail::cmd_acf(acf_args, out);
        if (res_cmd->parsed()) return detail::cmd_residual_bands(res_args, out);
        if (sim_cmd->parsed()) return detail::cmd_simulate(sim_args, out);
        if (plot_cmd->parsed()) return detail::cmd_plot(plot_args, out);
    } catch (const NumericalError& e) {
        err << "numerical failure: " << e.what() << '\n';
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    err << "error: no subcommand given\n";
    return 2;
}

} // namespace acfbands::cli

#endif
